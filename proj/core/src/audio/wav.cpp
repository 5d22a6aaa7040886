#include "jacklab/audio/wav.hpp"

#include <cstring>
#include <fstream>

#include "jacklab/errors.hpp"

namespace jacklab::audio {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>(v >> 8 & 0xFF));
    out.push_back(static_cast<char>(v >> 16 & 0xFF));
    out.push_back(static_cast<char>(v >> 24 & 0xFF));
}

void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>(v >> 8 & 0xFF));
}

std::uint32_t get_u32(const std::string& s, std::size_t at) {
    return static_cast<std::uint8_t>(s[at]) | static_cast<std::uint32_t>(static_cast<std::uint8_t>(s[at + 1])) << 8 |
           static_cast<std::uint32_t>(static_cast<std::uint8_t>(s[at + 2])) << 16 |
           static_cast<std::uint32_t>(static_cast<std::uint8_t>(s[at + 3])) << 24;
}

std::uint16_t get_u16(const std::string& s, std::size_t at) {
    return static_cast<std::uint16_t>(static_cast<std::uint8_t>(s[at]) |
                                      static_cast<std::uint8_t>(s[at + 1]) << 8);
}

} // namespace

void write_wav(const std::filesystem::path& path, const std::vector<std::int16_t>& samples,
               int sample_rate_hz) {
    const std::uint32_t data_bytes = static_cast<std::uint32_t>(samples.size() * 2);
    std::string out;
    out.reserve(44 + data_bytes);
    out.append("RIFF");
    put_u32(out, 36 + data_bytes);
    out.append("WAVEfmt ");
    put_u32(out, 16);                                        // fmt chunk size
    put_u16(out, 1);                                         // PCM
    put_u16(out, 1);                                         // mono
    put_u32(out, static_cast<std::uint32_t>(sample_rate_hz));
    put_u32(out, static_cast<std::uint32_t>(sample_rate_hz * 2)); // byte rate
    put_u16(out, 2);                                         // block align
    put_u16(out, 16);                                        // bits per sample
    out.append("data");
    put_u32(out, data_bytes);
    for (std::int16_t s : samples) {
        out.push_back(static_cast<char>(s & 0xFF));
        out.push_back(static_cast<char>(static_cast<std::uint16_t>(s) >> 8 & 0xFF));
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw Error("cannot open wav for writing: " + path.string());
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f)
        throw Error("short write: " + path.string());
}

std::vector<std::int16_t> read_wav(const std::filesystem::path& path, int* sample_rate_hz) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw Error("cannot open wav: " + path.string());
    std::string all((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (all.size() < 44 || all.compare(0, 4, "RIFF") != 0 || all.compare(8, 4, "WAVE") != 0)
        throw Error("not a RIFF/WAVE file: " + path.string());
    // walk chunks for fmt and data
    std::size_t pos = 12;
    int rate = 0;
    std::size_t data_at = 0, data_len = 0;
    while (pos + 8 <= all.size()) {
        std::string id = all.substr(pos, 4);
        std::uint32_t len = get_u32(all, pos + 4);
        if (id == "fmt ") {
            if (get_u16(all, pos + 8) != 1 || get_u16(all, pos + 10) != 1 ||
                get_u16(all, pos + 22) != 16)
                throw Error("unsupported wav encoding: " + path.string());
            rate = static_cast<int>(get_u32(all, pos + 12));
        } else if (id == "data") {
            data_at = pos + 8;
            data_len = len;
        }
        pos += 8 + len + (len & 1);
    }
    if (rate == 0 || data_at == 0 || data_at + data_len > all.size())
        throw Error("truncated wav: " + path.string());
    if (sample_rate_hz)
        *sample_rate_hz = rate;
    std::vector<std::int16_t> samples(data_len / 2);
    for (std::size_t i = 0; i < samples.size(); ++i)
        samples[i] = static_cast<std::int16_t>(get_u16(all, data_at + i * 2));
    return samples;
}

} // namespace jacklab::audio
