#pragma once

#include <chrono>
#include <optional>

#include "jacklab/addr.hpp"
#include "jacklab/bytes.hpp"

namespace jacklab::net {

struct Datagram {
    IpPort src;
    IpPort dst;
    Bytes payload;
};

// Thin RAII wrappers over AF_INET sockets. All receive paths poll with a
// timeout so service loops can watch a stop flag.

class UdpSocket {
public:
    UdpSocket(); // unbound; the kernel picks an address on first send
    explicit UdpSocket(const IpPort& bind_addr); // throws PortInUse / Error
    ~UdpSocket();
    UdpSocket(UdpSocket&& other) noexcept;
    UdpSocket& operator=(UdpSocket&& other) noexcept;
    UdpSocket(const UdpSocket&) = delete;
    UdpSocket& operator=(const UdpSocket&) = delete;

    const IpPort& local() const { return local_; }
    int fd() const { return fd_; }

    void send_to(const IpPort& dst, ByteView payload); // throws Error on failure
    std::optional<Datagram> recv(std::chrono::milliseconds timeout);

    void close();

private:
    int fd_ = -1;
    IpPort local_;
};

class TcpConn {
public:
    TcpConn() = default;
    ~TcpConn();
    TcpConn(TcpConn&& other) noexcept;
    TcpConn& operator=(TcpConn&& other) noexcept;
    TcpConn(const TcpConn&) = delete;
    TcpConn& operator=(const TcpConn&) = delete;

    static TcpConn connect(const IpPort& dst,
                           std::chrono::milliseconds timeout = std::chrono::milliseconds(2000));

    bool valid() const { return fd_ >= 0; }
    const IpPort& local() const { return local_; }
    const IpPort& peer() const { return peer_; }

    void send(ByteView payload);
    // One chunk, up to 64 KiB; nullopt on timeout, empty Bytes on EOF.
    std::optional<Bytes> recv_some(std::chrono::milliseconds timeout);
    Bytes read_to_eof(std::chrono::milliseconds idle_timeout);
    void shutdown_send();
    void close();

private:
    friend class TcpListener;
    TcpConn(int fd, IpPort local, IpPort peer);
    int fd_ = -1;
    IpPort local_;
    IpPort peer_;
};

class TcpListener {
public:
    explicit TcpListener(const IpPort& bind_addr); // throws PortInUse / Error
    ~TcpListener();
    TcpListener(TcpListener&& other) noexcept;
    TcpListener& operator=(TcpListener&& other) noexcept;
    TcpListener(const TcpListener&) = delete;
    TcpListener& operator=(const TcpListener&) = delete;

    const IpPort& local() const { return local_; }
    std::optional<TcpConn> accept(std::chrono::milliseconds timeout);
    void close();

private:
    int fd_ = -1;
    IpPort local_;
};

// True if the address is free to bind right now (used by scenario cleanup checks).
bool udp_port_free(const IpPort& addr);
bool tcp_port_free(const IpPort& addr);

} // namespace jacklab::net
