#include "jacklab/net/tap.hpp"

namespace jacklab::net {

LinkTap::LinkTap() : start_(std::chrono::steady_clock::now()) {}

void LinkTap::set_mac_resolver(MacResolver resolver) {
    std::lock_guard lock(mu_);
    resolver_ = std::move(resolver);
}

void LinkTap::record(wire::Transport transport, const IpPort& src, const IpPort& dst,
                     ByteView payload) {
    std::lock_guard lock(mu_);
    auto now = std::chrono::steady_clock::now();
    auto ts = std::chrono::duration_cast<std::chrono::microseconds>(now - start_).count();
    if (ts < last_ts_)
        ts = last_ts_;
    last_ts_ = ts;

    wire::CaptureRecord r;
    r.ts_micros = ts;
    r.transport = transport;
    r.src = src;
    r.dst = dst;
    if (resolver_) {
        r.src_mac = resolver_(src.ip);
        r.dst_mac = resolver_(dst.ip);
    }
    r.payload.assign(payload.begin(), payload.end());
    records_.push_back(std::move(r));
}

std::vector<wire::CaptureRecord> LinkTap::snapshot() const {
    std::lock_guard lock(mu_);
    return records_;
}

std::size_t LinkTap::size() const {
    std::lock_guard lock(mu_);
    return records_.size();
}

void LinkTap::save(const std::filesystem::path& path) const {
    wire::write_capture(path, snapshot());
}

void LinkTap::clear() {
    std::lock_guard lock(mu_);
    records_.clear();
    last_ts_ = 0;
}

} // namespace jacklab::net
