#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jacklab/bytes.hpp"

namespace jacklab::wire {

enum class SipMethod { Invite, Ack, Bye, Register };
enum class SipKind { Request, Response };

std::string_view method_name(SipMethod m);
std::string_view reason_for(int status_code); // Trying / Ringing / OK

// The signaling unit of the testbed: a SIP request or response restricted to
// the INVITE/ACK/BYE/REGISTER and 100/180/200 subset. Headers keep their
// on-the-wire order and spelling.
struct SipMessage {
    SipKind kind = SipKind::Request;

    // request fields
    SipMethod method = SipMethod::Invite;
    std::string request_uri; // "sip:<number>@<host>"

    // response fields
    int status_code = 0;
    std::string reason;

    std::vector<std::pair<std::string, std::string>> headers;
    Bytes body;

    bool operator==(const SipMessage&) const = default;

    bool is_request() const { return kind == SipKind::Request; }
    bool is_response() const { return kind == SipKind::Response; }

    // First header whose name matches case-insensitively; empty if absent.
    std::optional<std::string_view> header(std::string_view name) const;
    void set_header(std::string_view name, std::string_view value); // replace or append

    // Number carved out of "sip:<number>@<host>" in the given header (To/From).
    std::string to_number() const;
    std::string from_number() const;
    std::string call_id() const;
};

// Extracts <number> from a "sip:<number>@<host>" URI, with or without angle
// brackets or a display name around it. Empty string when it does not parse.
std::string number_of_uri(std::string_view uri);
std::string host_of_uri(std::string_view uri);

// Parses one testbed SIP message. Accepts bare-LF line endings; throws
// MalformedMessage when there is no blank-line separator, the method or
// status is outside the subset, a mandatory header (From, To, Call-ID, CSeq,
// Content-Length) is missing, or the body does not match Content-Length.
SipMessage parse_sip(ByteView raw);
inline SipMessage parse_sip(const Bytes& raw) { return parse_sip(ByteView(raw)); }

// Emits the canonical CRLF form. Output reparses to an equal SipMessage.
Bytes serialize_sip(const SipMessage& msg);

// Builders used by the simulated devices; they fill the mandatory headers
// and keep Content-Length consistent with the body.
struct SipRequestSpec {
    SipMethod method = SipMethod::Invite;
    std::string to_number;
    std::string to_host;
    std::string from_number;
    std::string from_host;
    std::string call_id;
    int cseq = 1;
    std::string via_host;
    std::string contact; // full "sip:number@ip:port", may be empty
    Bytes body;
    std::vector<std::pair<std::string, std::string>> extra_headers;
};

SipMessage make_request(const SipRequestSpec& spec);

// Response to `req` carrying the request's dialog headers, per the 8-step flow.
SipMessage make_response(int status_code, const SipMessage& req, Bytes body = {});

} // namespace jacklab::wire
