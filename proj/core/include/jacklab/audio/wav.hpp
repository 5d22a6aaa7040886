#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace jacklab::audio {

// Mono 16-bit PCM RIFF/WAVE, 8000 Hz unless told otherwise.
void write_wav(const std::filesystem::path& path, const std::vector<std::int16_t>& samples,
               int sample_rate_hz = 8000);

std::vector<std::int16_t> read_wav(const std::filesystem::path& path,
                                   int* sample_rate_hz = nullptr);

} // namespace jacklab::audio
