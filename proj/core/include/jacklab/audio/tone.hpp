#pragma once

#include <cstdint>
#include <vector>

namespace jacklab::audio {

inline constexpr int kSampleRateHz = 8000;
inline constexpr int kSamplesPerPacket = 160; // 20 ms at 8 kHz

struct ToneSpec {
    double freq_hz = 440.0;
    double amplitude = 0.5; // of full scale
};

// Deterministic sine tone; sample n of a longer stream is obtained by passing
// the absolute sample offset.
std::vector<std::int16_t> generate_tone(const ToneSpec& tone, std::size_t n_samples,
                                        std::size_t sample_offset = 0);

// Normalized cross-correlation at zero lag; 1.0 for identical, 0 for empty or
// silent input.
double normalized_cross_correlation(const std::vector<std::int16_t>& a,
                                    const std::vector<std::int16_t>& b);

} // namespace jacklab::audio
