#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "jacklab/wire/capture.hpp"

namespace jacklab::net {

// A passive observer clipped onto one simulated link. Every datagram or
// stream chunk the owning component moves past the tap becomes one
// CaptureRecord; timestamps are monotone within the tap.
class LinkTap {
public:
    using MacResolver = std::function<Mac(const std::string& ip)>;

    LinkTap();

    void set_mac_resolver(MacResolver resolver);

    void record(wire::Transport transport, const IpPort& src, const IpPort& dst,
                ByteView payload);

    std::vector<wire::CaptureRecord> snapshot() const;
    std::size_t size() const;
    void save(const std::filesystem::path& path) const;
    void clear();

private:
    mutable std::mutex mu_;
    std::chrono::steady_clock::time_point start_;
    std::int64_t last_ts_ = 0;
    MacResolver resolver_;
    std::vector<wire::CaptureRecord> records_;
};

using TapPtr = std::shared_ptr<LinkTap>;

} // namespace jacklab::net
