#include "jacklab/addr.hpp"

#include <charconv>
#include <cstdio>

#include "jacklab/errors.hpp"

namespace jacklab {

namespace {

bool parse_u16(std::string_view text, std::uint16_t& out) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value > 0xFFFF)
        return false;
    out = static_cast<std::uint16_t>(value);
    return true;
}

} // namespace

bool valid_ipv4(std::string_view ip) {
    int dots = 0;
    std::size_t pos = 0;
    while (pos <= ip.size()) {
        std::size_t dot = ip.find('.', pos);
        std::string_view part = ip.substr(pos, dot == ip.npos ? ip.npos : dot - pos);
        if (part.empty() || part.size() > 3)
            return false;
        unsigned value = 0;
        for (char c : part) {
            if (c < '0' || c > '9')
                return false;
            value = value * 10 + static_cast<unsigned>(c - '0');
        }
        if (value > 255)
            return false;
        if (dot == ip.npos)
            break;
        ++dots;
        pos = dot + 1;
    }
    return dots == 3;
}

std::string IpPort::str() const {
    return ip + ":" + std::to_string(port);
}

IpPort IpPort::parse(std::string_view text) {
    std::size_t colon = text.rfind(':');
    if (colon == text.npos)
        throw Error("bad endpoint (missing ':'): " + std::string(text));
    IpPort out;
    out.ip = std::string(text.substr(0, colon));
    if (!valid_ipv4(out.ip))
        throw Error("bad IPv4 address: " + out.ip);
    if (!parse_u16(text.substr(colon + 1), out.port))
        throw Error("bad port: " + std::string(text));
    return out;
}

std::string Mac::str() const {
    char buf[18];
    std::snprintf(buf, sizeof buf, "%02x:%02x:%02x:%02x:%02x:%02x", octets[0], octets[1],
                  octets[2], octets[3], octets[4], octets[5]);
    return buf;
}

Mac Mac::parse(std::string_view text) {
    Mac out;
    if (text.size() != 17)
        throw Error("bad MAC address: " + std::string(text));
    auto hex = [&](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        if (c >= 'A' && c <= 'F')
            return c - 'A' + 10;
        return -1;
    };
    for (int i = 0; i < 6; ++i) {
        int hi = hex(text[static_cast<std::size_t>(i * 3)]);
        int lo = hex(text[static_cast<std::size_t>(i * 3 + 1)]);
        if (hi < 0 || lo < 0)
            throw Error("bad MAC address: " + std::string(text));
        if (i < 5 && text[static_cast<std::size_t>(i * 3 + 2)] != ':')
            throw Error("bad MAC address: " + std::string(text));
        out.octets[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return out;
}

} // namespace jacklab
