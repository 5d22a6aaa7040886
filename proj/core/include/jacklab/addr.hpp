#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace jacklab {

// IPv4 endpoint, kept as text plus port; the whole testbed lives on dotted quads.
struct IpPort {
    std::string ip;
    std::uint16_t port = 0;

    auto operator<=>(const IpPort&) const = default;

    std::string str() const; // "10.0.0.1:5060"

    // Parses "ip:port". Throws jacklab::Error on bad syntax.
    static IpPort parse(std::string_view text);
};

struct Mac {
    std::array<std::uint8_t, 6> octets{};

    auto operator<=>(const Mac&) const = default;

    std::string str() const; // "02:4a:00:00:00:01"

    static Mac parse(std::string_view text);
};

bool valid_ipv4(std::string_view ip);

} // namespace jacklab
