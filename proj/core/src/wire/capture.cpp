#include "jacklab/wire/capture.hpp"

#include <array>
#include <fstream>

#include "jacklab/errors.hpp"

namespace jacklab::wire {

namespace {

constexpr std::string_view kB64Alphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::array<std::int8_t, 256> b64_reverse() {
    std::array<std::int8_t, 256> table{};
    table.fill(-1);
    for (std::size_t i = 0; i < kB64Alphabet.size(); ++i)
        table[static_cast<unsigned char>(kB64Alphabet[i])] = static_cast<std::int8_t>(i);
    return table;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = line.find(sep, pos);
        out.push_back(line.substr(pos, next == line.npos ? line.npos : next - pos));
        if (next == line.npos)
            break;
        pos = next + 1;
    }
    return out;
}

} // namespace

std::string_view transport_name(Transport t) {
    return t == Transport::Tcp ? "tcp" : "udp";
}

std::string encode_base64(ByteView data) {
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 3 <= data.size(); i += 3) {
        std::uint32_t n = static_cast<std::uint32_t>(data[i]) << 16 |
                          static_cast<std::uint32_t>(data[i + 1]) << 8 | data[i + 2];
        out.push_back(kB64Alphabet[n >> 18 & 0x3F]);
        out.push_back(kB64Alphabet[n >> 12 & 0x3F]);
        out.push_back(kB64Alphabet[n >> 6 & 0x3F]);
        out.push_back(kB64Alphabet[n & 0x3F]);
    }
    if (i + 1 == data.size()) {
        std::uint32_t n = static_cast<std::uint32_t>(data[i]) << 16;
        out.push_back(kB64Alphabet[n >> 18 & 0x3F]);
        out.push_back(kB64Alphabet[n >> 12 & 0x3F]);
        out.append("==");
    } else if (i + 2 == data.size()) {
        std::uint32_t n = static_cast<std::uint32_t>(data[i]) << 16 |
                          static_cast<std::uint32_t>(data[i + 1]) << 8;
        out.push_back(kB64Alphabet[n >> 18 & 0x3F]);
        out.push_back(kB64Alphabet[n >> 12 & 0x3F]);
        out.push_back(kB64Alphabet[n >> 6 & 0x3F]);
        out.push_back('=');
    }
    return out;
}

Bytes decode_base64(std::string_view text) {
    static const auto reverse = b64_reverse();
    if (text.size() % 4 != 0)
        throw Error("base64 length not a multiple of 4");
    Bytes out;
    out.reserve(text.size() / 4 * 3);
    for (std::size_t i = 0; i < text.size(); i += 4) {
        int pad = 0;
        std::uint32_t n = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            char c = text[i + j];
            if (c == '=') {
                if (i + 4 != text.size() || j < 2)
                    throw Error("bad base64 padding");
                ++pad;
                n <<= 6;
                continue;
            }
            if (pad > 0)
                throw Error("bad base64 padding");
            std::int8_t v = reverse[static_cast<unsigned char>(c)];
            if (v < 0)
                throw Error("bad base64 character");
            n = n << 6 | static_cast<std::uint32_t>(v);
        }
        out.push_back(static_cast<std::uint8_t>(n >> 16));
        if (pad < 2)
            out.push_back(static_cast<std::uint8_t>(n >> 8 & 0xFF));
        if (pad < 1)
            out.push_back(static_cast<std::uint8_t>(n & 0xFF));
    }
    return out;
}

std::string format_capture(const std::vector<CaptureRecord>& records) {
    std::string out(kCaptureHeaderLine);
    out.push_back('\n');
    std::int64_t last_ts = 0;
    bool first = true;
    for (const CaptureRecord& r : records) {
        if (!first && r.ts_micros < last_ts)
            throw NonMonotonic("capture timestamps decrease at ts=" +
                               std::to_string(r.ts_micros));
        first = false;
        last_ts = r.ts_micros;
        out.append(std::to_string(r.ts_micros));
        out.push_back('\t');
        out.append(transport_name(r.transport));
        out.push_back('\t');
        out.append(r.src.str());
        out.push_back('\t');
        out.append(r.dst.str());
        out.push_back('\t');
        out.append(r.src_mac.str());
        out.push_back('\t');
        out.append(r.dst_mac.str());
        out.push_back('\t');
        out.append(encode_base64(ByteView(r.payload)));
        out.push_back('\n');
    }
    return out;
}

std::vector<CaptureRecord> parse_capture(std::string_view text) {
    std::vector<CaptureRecord> out;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == text.npos ? text.npos : nl - pos);
        pos = nl == text.npos ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line_no == 1) {
            if (line != kCaptureHeaderLine)
                throw CorruptCapture("line 1: missing capture header");
            saw_header = true;
            continue;
        }
        if (line.empty())
            continue;
        auto fields = split(line, '\t');
        if (fields.size() != 7)
            throw CorruptCapture("line " + std::to_string(line_no) + ": expected 7 fields");
        CaptureRecord r;
        try {
            std::size_t used = 0;
            r.ts_micros = std::stoll(std::string(fields[0]), &used);
            if (used != fields[0].size() || r.ts_micros < 0)
                throw Error("bad timestamp");
            if (fields[1] == "tcp")
                r.transport = Transport::Tcp;
            else if (fields[1] == "udp")
                r.transport = Transport::Udp;
            else
                throw Error("bad transport");
            r.src = IpPort::parse(fields[2]);
            r.dst = IpPort::parse(fields[3]);
            r.src_mac = Mac::parse(fields[4]);
            r.dst_mac = Mac::parse(fields[5]);
            r.payload = decode_base64(fields[6]);
        } catch (const NonMonotonic&) {
            throw;
        } catch (const std::exception& e) {
            throw CorruptCapture("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!out.empty() && r.ts_micros < out.back().ts_micros)
            throw NonMonotonic("line " + std::to_string(line_no) + ": timestamps decrease");
        out.push_back(std::move(r));
    }
    if (!saw_header)
        throw CorruptCapture("missing capture header");
    return out;
}

void write_capture(const std::filesystem::path& path, const std::vector<CaptureRecord>& records) {
    std::string text = format_capture(records); // NonMonotonic raised before the file is touched
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open capture file for writing: " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw Error("short write to capture file: " + path.string());
}

std::vector<CaptureRecord> read_capture(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open capture file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_capture(text);
}

} // namespace jacklab::wire
