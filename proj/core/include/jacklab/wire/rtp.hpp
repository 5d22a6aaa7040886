#pragma once

#include <cstdint>

#include "jacklab/bytes.hpp"

namespace jacklab::wire {

inline constexpr std::size_t kRtpHeaderBytes = 12;

// One real-time audio datagram. The testbed never sets padding, extension,
// CSRC or marker bits, so only the fields below are modelled.
struct RtpPacket {
    std::uint8_t version = 2;      // always 2 on the wire
    std::uint8_t payload_type = 0; // 7 bits
    std::uint16_t seq = 0;         // wraps modulo 2^16
    std::uint32_t timestamp = 0;   // audio-sample units
    std::uint32_t ssrc = 0;
    Bytes payload;

    bool operator==(const RtpPacket&) const = default;
};

// 12-byte header, big-endian seq/timestamp/ssrc, then the payload.
Bytes encode_rtp(const RtpPacket& pkt);

// Throws TooShort (< 12 bytes) or BadVersion (version bits != 2).
RtpPacket decode_rtp(ByteView raw);

} // namespace jacklab::wire
