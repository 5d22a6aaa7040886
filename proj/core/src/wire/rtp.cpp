#include "jacklab/wire/rtp.hpp"

#include "jacklab/errors.hpp"

namespace jacklab::wire {

Bytes encode_rtp(const RtpPacket& pkt) {
    Bytes out;
    out.reserve(kRtpHeaderBytes + pkt.payload.size());
    out.push_back(static_cast<std::uint8_t>((pkt.version & 0x3) << 6));
    out.push_back(static_cast<std::uint8_t>(pkt.payload_type & 0x7F));
    out.push_back(static_cast<std::uint8_t>(pkt.seq >> 8));
    out.push_back(static_cast<std::uint8_t>(pkt.seq & 0xFF));
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>((pkt.timestamp >> shift) & 0xFF));
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>((pkt.ssrc >> shift) & 0xFF));
    append(out, ByteView(pkt.payload));
    return out;
}

RtpPacket decode_rtp(ByteView raw) {
    if (raw.size() < kRtpHeaderBytes)
        throw TooShort("RTP datagram shorter than 12 bytes");
    RtpPacket pkt;
    pkt.version = static_cast<std::uint8_t>(raw[0] >> 6);
    if (pkt.version != 2)
        throw BadVersion("RTP version bits decode to " + std::to_string(pkt.version));
    pkt.payload_type = static_cast<std::uint8_t>(raw[1] & 0x7F);
    pkt.seq = static_cast<std::uint16_t>(raw[2] << 8 | raw[3]);
    pkt.timestamp = static_cast<std::uint32_t>(raw[4]) << 24 |
                    static_cast<std::uint32_t>(raw[5]) << 16 |
                    static_cast<std::uint32_t>(raw[6]) << 8 | static_cast<std::uint32_t>(raw[7]);
    pkt.ssrc = static_cast<std::uint32_t>(raw[8]) << 24 | static_cast<std::uint32_t>(raw[9]) << 16 |
               static_cast<std::uint32_t>(raw[10]) << 8 | static_cast<std::uint32_t>(raw[11]);
    pkt.payload.assign(raw.begin() + kRtpHeaderBytes, raw.end());
    return pkt;
}

} // namespace jacklab::wire
