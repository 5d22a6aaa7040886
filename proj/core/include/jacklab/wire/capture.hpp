#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "jacklab/addr.hpp"
#include "jacklab/bytes.hpp"

namespace jacklab::wire {

enum class Transport { Tcp, Udp };

std::string_view transport_name(Transport t);

// One observed datagram or stream chunk; the substrate for all sniffing,
// replay and defense operations.
struct CaptureRecord {
    std::int64_t ts_micros = 0; // since capture start, non-decreasing per file
    Transport transport = Transport::Udp;
    IpPort src;
    IpPort dst;
    Mac src_mac;
    Mac dst_mac;
    Bytes payload;

    bool operator==(const CaptureRecord&) const = default;
};

inline constexpr std::string_view kCaptureHeaderLine = "#jacklab-capture v1";

// Line-delimited text capture: header line, then per record the tab-separated
// fields ts_micros, transport, src_ip:port, dst_ip:port, src_mac, dst_mac,
// base64(payload).
void write_capture(const std::filesystem::path& path, const std::vector<CaptureRecord>& records);
std::vector<CaptureRecord> read_capture(const std::filesystem::path& path);

// Same format, off the filesystem; used by the file functions and the tests.
std::string format_capture(const std::vector<CaptureRecord>& records);
std::vector<CaptureRecord> parse_capture(std::string_view text);

std::string encode_base64(ByteView data);
Bytes decode_base64(std::string_view text); // throws jacklab::Error on bad input

} // namespace jacklab::wire
