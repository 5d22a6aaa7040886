#include "jacklab/wire/sip.hpp"

#include <algorithm>
#include <cctype>

#include "jacklab/errors.hpp"

namespace jacklab::wire {

namespace {

constexpr std::string_view kSipVersion = "SIP/2.0";

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::optional<SipMethod> method_of(std::string_view name) {
    if (name == "INVITE")
        return SipMethod::Invite;
    if (name == "ACK")
        return SipMethod::Ack;
    if (name == "BYE")
        return SipMethod::Bye;
    if (name == "REGISTER")
        return SipMethod::Register;
    return std::nullopt;
}

// Splits the head section into lines, accepting CRLF or bare LF. Returns the
// byte offset where the body starts, or npos when no blank line terminates
// the headers.
std::size_t split_head(ByteView raw, std::vector<std::string_view>& lines) {
    std::string_view text(reinterpret_cast<const char*>(raw.data()), raw.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == text.npos)
            return std::string_view::npos; // head never terminated
        std::size_t end = nl;
        if (end > pos && text[end - 1] == '\r')
            --end;
        std::string_view line = text.substr(pos, end - pos);
        pos = nl + 1;
        if (line.empty())
            return pos; // blank line: body starts here
        lines.push_back(line);
    }
    return std::string_view::npos;
}

} // namespace

std::string_view method_name(SipMethod m) {
    switch (m) {
    case SipMethod::Invite:
        return "INVITE";
    case SipMethod::Ack:
        return "ACK";
    case SipMethod::Bye:
        return "BYE";
    case SipMethod::Register:
        return "REGISTER";
    }
    return "INVITE";
}

std::string_view reason_for(int status_code) {
    switch (status_code) {
    case 100:
        return "Trying";
    case 180:
        return "Ringing";
    case 200:
        return "OK";
    }
    return "";
}

std::optional<std::string_view> SipMessage::header(std::string_view name) const {
    for (const auto& [n, v] : headers)
        if (iequals(n, name))
            return std::string_view(v);
    return std::nullopt;
}

void SipMessage::set_header(std::string_view name, std::string_view value) {
    for (auto& [n, v] : headers) {
        if (iequals(n, name)) {
            v = std::string(value);
            return;
        }
    }
    headers.emplace_back(std::string(name), std::string(value));
}

std::string number_of_uri(std::string_view uri) {
    std::size_t scheme = uri.find("sip:");
    if (scheme == uri.npos)
        return {};
    std::size_t start = scheme + 4;
    std::size_t at = uri.find('@', start);
    if (at == uri.npos)
        return {};
    return std::string(uri.substr(start, at - start));
}

std::string host_of_uri(std::string_view uri) {
    std::size_t at = uri.find('@');
    if (at == uri.npos)
        return {};
    std::size_t end = uri.find_first_of(">;", at + 1);
    return std::string(uri.substr(at + 1, end == uri.npos ? uri.npos : end - at - 1));
}

std::string SipMessage::to_number() const {
    auto h = header("To");
    return h ? number_of_uri(*h) : std::string{};
}

std::string SipMessage::from_number() const {
    auto h = header("From");
    return h ? number_of_uri(*h) : std::string{};
}

std::string SipMessage::call_id() const {
    auto h = header("Call-ID");
    return h ? std::string(*h) : std::string{};
}

SipMessage parse_sip(ByteView raw) {
    std::vector<std::string_view> lines;
    std::size_t body_at = split_head(raw, lines);
    if (body_at == std::string_view::npos)
        throw MalformedMessage("no blank-line separator");
    if (lines.empty())
        throw MalformedMessage("empty start line");

    SipMessage msg;
    std::string_view start = lines[0];
    if (start.substr(0, kSipVersion.size()) == kSipVersion) {
        // status line: SIP/2.0 <code> <reason>
        msg.kind = SipKind::Response;
        std::string_view rest = start.substr(kSipVersion.size());
        if (rest.empty() || rest.front() != ' ')
            throw MalformedMessage("bad status line");
        rest.remove_prefix(1);
        std::size_t sp = rest.find(' ');
        std::string_view code = rest.substr(0, sp);
        if (code.size() != 3 || !std::all_of(code.begin(), code.end(), [](char c) {
                return c >= '0' && c <= '9';
            }))
            throw MalformedMessage("bad status code");
        msg.status_code = (code[0] - '0') * 100 + (code[1] - '0') * 10 + (code[2] - '0');
        if (msg.status_code != 100 && msg.status_code != 180 && msg.status_code != 200)
            throw MalformedMessage("status outside testbed subset: " + std::string(code));
        msg.reason = sp == rest.npos ? std::string{} : std::string(rest.substr(sp + 1));
    } else {
        // request line: <METHOD> <uri> SIP/2.0
        std::size_t sp1 = start.find(' ');
        if (sp1 == start.npos)
            throw MalformedMessage("bad request line");
        std::size_t sp2 = start.rfind(' ');
        if (sp2 == sp1 || start.substr(sp2 + 1) != kSipVersion)
            throw MalformedMessage("missing SIP version");
        auto m = method_of(start.substr(0, sp1));
        if (!m)
            throw MalformedMessage("unknown method: " + std::string(start.substr(0, sp1)));
        msg.kind = SipKind::Request;
        msg.method = *m;
        msg.request_uri = std::string(trim(start.substr(sp1 + 1, sp2 - sp1 - 1)));
        if (msg.request_uri.empty())
            throw MalformedMessage("empty request URI");
    }

    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::size_t colon = lines[i].find(':');
        if (colon == std::string_view::npos || colon == 0)
            throw MalformedMessage("bad header line: " + std::string(lines[i]));
        msg.headers.emplace_back(std::string(trim(lines[i].substr(0, colon))),
                                 std::string(trim(lines[i].substr(colon + 1))));
    }

    for (std::string_view required : {"From", "To", "Call-ID", "CSeq"})
        if (!msg.header(required))
            throw MalformedMessage("missing header: " + std::string(required));

    auto content_length = msg.header("Content-Length");
    if (!content_length)
        throw MalformedMessage("missing Content-Length");
    std::size_t want = 0;
    for (char c : *content_length) {
        if (c < '0' || c > '9')
            throw MalformedMessage("bad Content-Length");
        want = want * 10 + static_cast<std::size_t>(c - '0');
    }
    std::size_t have = raw.size() - body_at;
    if (have < want)
        throw MalformedMessage("body shorter than Content-Length");
    if (have > want)
        throw MalformedMessage("trailing bytes after body");
    msg.body.assign(raw.begin() + static_cast<std::ptrdiff_t>(body_at), raw.end());
    return msg;
}

Bytes serialize_sip(const SipMessage& msg) {
    std::string head;
    if (msg.is_request()) {
        head.append(method_name(msg.method));
        head.push_back(' ');
        head.append(msg.request_uri);
        head.push_back(' ');
        head.append(kSipVersion);
    } else {
        head.append(kSipVersion);
        head.push_back(' ');
        head.append(std::to_string(msg.status_code));
        head.push_back(' ');
        head.append(msg.reason);
    }
    head.append("\r\n");
    for (const auto& [name, value] : msg.headers) {
        head.append(name);
        head.append(": ");
        head.append(value);
        head.append("\r\n");
    }
    head.append("\r\n");

    Bytes out = to_bytes(head);
    append(out, ByteView(msg.body));
    return out;
}

SipMessage make_request(const SipRequestSpec& spec) {
    SipMessage msg;
    msg.kind = SipKind::Request;
    msg.method = spec.method;
    msg.request_uri = "sip:" + spec.to_number + "@" + spec.to_host;
    msg.headers.emplace_back("Via", "SIP/2.0/UDP " + spec.via_host);
    msg.headers.emplace_back("From", "<sip:" + spec.from_number + "@" + spec.from_host + ">");
    msg.headers.emplace_back("To", "<sip:" + spec.to_number + "@" + spec.to_host + ">");
    msg.headers.emplace_back("Call-ID", spec.call_id);
    msg.headers.emplace_back("CSeq",
                             std::to_string(spec.cseq) + " " + std::string(method_name(spec.method)));
    if (!spec.contact.empty())
        msg.headers.emplace_back("Contact", "<" + spec.contact + ">");
    for (const auto& h : spec.extra_headers)
        msg.headers.push_back(h);
    msg.headers.emplace_back("Content-Length", std::to_string(spec.body.size()));
    msg.body = spec.body;
    return msg;
}

SipMessage make_response(int status_code, const SipMessage& req, Bytes body) {
    SipMessage msg;
    msg.kind = SipKind::Response;
    msg.status_code = status_code;
    msg.reason = std::string(reason_for(status_code));
    for (std::string_view name : {"Via", "From", "To", "Call-ID", "CSeq"})
        if (auto v = req.header(name))
            msg.headers.emplace_back(std::string(name), std::string(*v));
    msg.headers.emplace_back("Content-Length", std::to_string(body.size()));
    msg.body = std::move(body);
    return msg;
}

} // namespace jacklab::wire
