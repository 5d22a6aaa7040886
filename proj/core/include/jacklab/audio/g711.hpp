#pragma once

#include <cstdint>
#include <vector>

#include "jacklab/bytes.hpp"

namespace jacklab::audio {

inline constexpr std::uint8_t kUlawSilence = 0xFF; // encodes linear 0

// G.711 mu-law companding, payload type 0 at 8000 Hz.
std::uint8_t linear_to_ulaw(std::int16_t pcm);
std::int16_t ulaw_to_linear(std::uint8_t ulaw);

Bytes ulaw_encode(const std::vector<std::int16_t>& pcm);
std::vector<std::int16_t> ulaw_decode(ByteView ulaw);

} // namespace jacklab::audio
