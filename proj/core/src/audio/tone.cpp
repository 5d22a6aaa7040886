#include "jacklab/audio/tone.hpp"

#include <cmath>

namespace jacklab::audio {

std::vector<std::int16_t> generate_tone(const ToneSpec& tone, std::size_t n_samples,
                                        std::size_t sample_offset) {
    std::vector<std::int16_t> out(n_samples);
    const double scale = tone.amplitude * 32767.0;
    const double step = 2.0 * M_PI * tone.freq_hz / kSampleRateHz;
    for (std::size_t i = 0; i < n_samples; ++i) {
        double s = scale * std::sin(step * static_cast<double>(sample_offset + i));
        out[i] = static_cast<std::int16_t>(std::lround(s));
    }
    return out;
}

double normalized_cross_correlation(const std::vector<std::int16_t>& a,
                                    const std::vector<std::int16_t>& b) {
    std::size_t n = std::min(a.size(), b.size());
    if (n == 0)
        return 0.0;
    double dot = 0.0, ea = 0.0, eb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double x = a[i], y = b[i];
        dot += x * y;
        ea += x * x;
        eb += y * y;
    }
    if (ea == 0.0 || eb == 0.0)
        return 0.0;
    return dot / std::sqrt(ea * eb);
}

} // namespace jacklab::audio
