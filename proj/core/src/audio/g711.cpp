#include "jacklab/audio/g711.hpp"

namespace jacklab::audio {

namespace {

constexpr std::int16_t kBias = 0x84;
constexpr std::int16_t kClip = 8159; // in quarter-sample units (14-bit domain)

constexpr std::int16_t kSegmentEnd[8] = {0x3F, 0x7F, 0xFF, 0x1FF, 0x3FF, 0x7FF, 0xFFF, 0x1FFF};

} // namespace

std::uint8_t linear_to_ulaw(std::int16_t pcm) {
    int value = pcm >> 2; // 14-bit domain
    std::uint8_t mask;
    if (value < 0) {
        value = -value;
        mask = 0x7F;
    } else {
        mask = 0xFF;
    }
    if (value > kClip)
        value = kClip;
    value += kBias >> 2;

    int segment = 8;
    for (int i = 0; i < 8; ++i) {
        if (value <= kSegmentEnd[i]) {
            segment = i;
            break;
        }
    }
    if (segment >= 8)
        return static_cast<std::uint8_t>(0x7F ^ mask);
    std::uint8_t uval =
        static_cast<std::uint8_t>(segment << 4 | ((value >> (segment + 1)) & 0x0F));
    return static_cast<std::uint8_t>(uval ^ mask);
}

std::int16_t ulaw_to_linear(std::uint8_t ulaw) {
    std::uint8_t inverted = static_cast<std::uint8_t>(~ulaw);
    std::int16_t magnitude =
        static_cast<std::int16_t>(((inverted & 0x0F) << 3) + kBias);
    magnitude = static_cast<std::int16_t>(magnitude << ((inverted & 0x70) >> 4));
    return (inverted & 0x80) ? static_cast<std::int16_t>(kBias - magnitude)
                             : static_cast<std::int16_t>(magnitude - kBias);
}

Bytes ulaw_encode(const std::vector<std::int16_t>& pcm) {
    Bytes out;
    out.reserve(pcm.size());
    for (std::int16_t s : pcm)
        out.push_back(linear_to_ulaw(s));
    return out;
}

std::vector<std::int16_t> ulaw_decode(ByteView ulaw) {
    std::vector<std::int16_t> out;
    out.reserve(ulaw.size());
    for (std::uint8_t b : ulaw)
        out.push_back(ulaw_to_linear(b));
    return out;
}

} // namespace jacklab::audio
