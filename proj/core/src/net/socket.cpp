#include "jacklab/net/socket.hpp"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "jacklab/errors.hpp"

namespace jacklab::net {

namespace {

sockaddr_in to_sockaddr(const IpPort& addr) {
    sockaddr_in sa{};
    sa.sin_family = AF_INET;
    sa.sin_port = htons(addr.port);
    if (inet_pton(AF_INET, addr.ip.c_str(), &sa.sin_addr) != 1)
        throw Error("bad IPv4 address: " + addr.ip);
    return sa;
}

IpPort from_sockaddr(const sockaddr_in& sa) {
    char buf[INET_ADDRSTRLEN];
    inet_ntop(AF_INET, &sa.sin_addr, buf, sizeof buf);
    return {buf, ntohs(sa.sin_port)};
}

IpPort local_of(int fd) {
    sockaddr_in sa{};
    socklen_t len = sizeof sa;
    if (getsockname(fd, reinterpret_cast<sockaddr*>(&sa), &len) != 0)
        throw Error("getsockname: " + std::string(std::strerror(errno)));
    return from_sockaddr(sa);
}

bool wait_readable(int fd, std::chrono::milliseconds timeout) {
    pollfd pfd{fd, POLLIN, 0};
    int rc = ::poll(&pfd, 1, static_cast<int>(timeout.count()));
    return rc > 0 && (pfd.revents & (POLLIN | POLLHUP));
}

[[noreturn]] void throw_bind_error(const IpPort& addr) {
    if (errno == EADDRINUSE)
        throw PortInUse("port in use: " + addr.str());
    throw Error("bind " + addr.str() + ": " + std::strerror(errno));
}

} // namespace

UdpSocket::UdpSocket() {
    fd_ = ::socket(AF_INET, SOCK_DGRAM, 0);
    if (fd_ < 0)
        throw Error("socket: " + std::string(std::strerror(errno)));
}

UdpSocket::UdpSocket(const IpPort& bind_addr) : UdpSocket() {
    sockaddr_in sa = to_sockaddr(bind_addr);
    if (::bind(fd_, reinterpret_cast<sockaddr*>(&sa), sizeof sa) != 0) {
        int saved = errno;
        ::close(fd_);
        fd_ = -1;
        errno = saved;
        throw_bind_error(bind_addr);
    }
    local_ = local_of(fd_);
}

UdpSocket::~UdpSocket() {
    close();
}

UdpSocket::UdpSocket(UdpSocket&& other) noexcept : fd_(other.fd_), local_(std::move(other.local_)) {
    other.fd_ = -1;
}

UdpSocket& UdpSocket::operator=(UdpSocket&& other) noexcept {
    if (this != &other) {
        close();
        fd_ = other.fd_;
        local_ = std::move(other.local_);
        other.fd_ = -1;
    }
    return *this;
}

void UdpSocket::close() {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

void UdpSocket::send_to(const IpPort& dst, ByteView payload) {
    sockaddr_in sa = to_sockaddr(dst);
    ssize_t n = ::sendto(fd_, payload.data(), payload.size(), 0,
                         reinterpret_cast<sockaddr*>(&sa), sizeof sa);
    if (n < 0 || static_cast<std::size_t>(n) != payload.size())
        throw Error("sendto " + dst.str() + ": " + std::strerror(errno));
    if (local_.ip.empty())
        local_ = local_of(fd_);
}

std::optional<Datagram> UdpSocket::recv(std::chrono::milliseconds timeout) {
    if (fd_ < 0 || !wait_readable(fd_, timeout))
        return std::nullopt;
    Bytes buf(65536);
    sockaddr_in from{};
    socklen_t from_len = sizeof from;
    ssize_t n = ::recvfrom(fd_, buf.data(), buf.size(), 0, reinterpret_cast<sockaddr*>(&from),
                           &from_len);
    if (n < 0)
        return std::nullopt;
    buf.resize(static_cast<std::size_t>(n));
    return Datagram{from_sockaddr(from), local_, std::move(buf)};
}

TcpConn::TcpConn(int fd, IpPort local, IpPort peer)
    : fd_(fd), local_(std::move(local)), peer_(std::move(peer)) {}

TcpConn::~TcpConn() {
    close();
}

TcpConn::TcpConn(TcpConn&& other) noexcept
    : fd_(other.fd_), local_(std::move(other.local_)), peer_(std::move(other.peer_)) {
    other.fd_ = -1;
}

TcpConn& TcpConn::operator=(TcpConn&& other) noexcept {
    if (this != &other) {
        close();
        fd_ = other.fd_;
        local_ = std::move(other.local_);
        peer_ = std::move(other.peer_);
        other.fd_ = -1;
    }
    return *this;
}

TcpConn TcpConn::connect(const IpPort& dst, std::chrono::milliseconds timeout) {
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0)
        throw Error("socket: " + std::string(std::strerror(errno)));
    sockaddr_in sa = to_sockaddr(dst);
    // non-blocking connect with poll so dead targets do not stall floods
    int flags = fcntl(fd, F_GETFL, 0);
    fcntl(fd, F_SETFL, flags | O_NONBLOCK);
    int rc = ::connect(fd, reinterpret_cast<sockaddr*>(&sa), sizeof sa);
    if (rc != 0 && errno != EINPROGRESS) {
        ::close(fd);
        throw Error("connect " + dst.str() + ": " + std::strerror(errno));
    }
    if (rc != 0) {
        pollfd pfd{fd, POLLOUT, 0};
        if (::poll(&pfd, 1, static_cast<int>(timeout.count())) <= 0) {
            ::close(fd);
            throw Error("connect " + dst.str() + ": timeout");
        }
        int err = 0;
        socklen_t len = sizeof err;
        getsockopt(fd, SOL_SOCKET, SO_ERROR, &err, &len);
        if (err != 0) {
            ::close(fd);
            throw Error("connect " + dst.str() + ": " + std::strerror(err));
        }
    }
    fcntl(fd, F_SETFL, flags);
    return TcpConn(fd, local_of(fd), dst);
}

void TcpConn::send(ByteView payload) {
    std::size_t sent = 0;
    while (sent < payload.size()) {
        ssize_t n = ::send(fd_, payload.data() + sent, payload.size() - sent, MSG_NOSIGNAL);
        if (n <= 0)
            throw Error("send to " + peer_.str() + ": " + std::strerror(errno));
        sent += static_cast<std::size_t>(n);
    }
}

std::optional<Bytes> TcpConn::recv_some(std::chrono::milliseconds timeout) {
    if (fd_ < 0 || !wait_readable(fd_, timeout))
        return std::nullopt;
    Bytes buf(65536);
    ssize_t n = ::recv(fd_, buf.data(), buf.size(), 0);
    if (n < 0)
        return std::nullopt;
    buf.resize(static_cast<std::size_t>(n));
    return buf; // empty == EOF
}

Bytes TcpConn::read_to_eof(std::chrono::milliseconds idle_timeout) {
    Bytes all;
    while (true) {
        auto chunk = recv_some(idle_timeout);
        if (!chunk)
            break; // idle too long; treat as end of job
        if (chunk->empty())
            break; // orderly EOF
        append(all, ByteView(*chunk));
    }
    return all;
}

void TcpConn::shutdown_send() {
    if (fd_ >= 0)
        ::shutdown(fd_, SHUT_WR);
}

void TcpConn::close() {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

TcpListener::TcpListener(const IpPort& bind_addr) {
    fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd_ < 0)
        throw Error("socket: " + std::string(std::strerror(errno)));
    int one = 1;
    setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    sockaddr_in sa = to_sockaddr(bind_addr);
    if (::bind(fd_, reinterpret_cast<sockaddr*>(&sa), sizeof sa) != 0) {
        int saved = errno;
        ::close(fd_);
        fd_ = -1;
        errno = saved;
        throw_bind_error(bind_addr);
    }
    if (::listen(fd_, 64) != 0) {
        ::close(fd_);
        fd_ = -1;
        throw Error("listen " + bind_addr.str() + ": " + std::strerror(errno));
    }
    local_ = local_of(fd_);
}

TcpListener::~TcpListener() {
    close();
}

TcpListener::TcpListener(TcpListener&& other) noexcept
    : fd_(other.fd_), local_(std::move(other.local_)) {
    other.fd_ = -1;
}

TcpListener& TcpListener::operator=(TcpListener&& other) noexcept {
    if (this != &other) {
        close();
        fd_ = other.fd_;
        local_ = std::move(other.local_);
        other.fd_ = -1;
    }
    return *this;
}

std::optional<TcpConn> TcpListener::accept(std::chrono::milliseconds timeout) {
    if (fd_ < 0 || !wait_readable(fd_, timeout))
        return std::nullopt;
    sockaddr_in from{};
    socklen_t from_len = sizeof from;
    int fd = ::accept(fd_, reinterpret_cast<sockaddr*>(&from), &from_len);
    if (fd < 0)
        return std::nullopt;
    return TcpConn(fd, local_, from_sockaddr(from));
}

void TcpListener::close() {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

bool udp_port_free(const IpPort& addr) {
    try {
        UdpSocket probe(addr);
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool tcp_port_free(const IpPort& addr) {
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0)
        return false;
    sockaddr_in sa = to_sockaddr(addr);
    bool free = ::bind(fd, reinterpret_cast<sockaddr*>(&sa), sizeof sa) == 0;
    ::close(fd);
    return free;
}

} // namespace jacklab::net
