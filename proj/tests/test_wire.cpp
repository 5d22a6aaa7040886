#include <filesystem>
#include <random>

#include "doctest.h"
#include "jacklab/errors.hpp"
#include "jacklab/wire/capture.hpp"
#include "jacklab/wire/metadata.hpp"
#include "jacklab/wire/rtp.hpp"
#include "jacklab/wire/sip.hpp"

using namespace jacklab;
using namespace jacklab::wire;

namespace {

// Independent bit-packing oracle: assembles the 12-byte header field by field
// through a bit cursor, unrelated to the encoder's shift/byte logic.
Bytes rtp_header_oracle(const RtpPacket& pkt) {
    std::uint8_t bits[96] = {};
    std::size_t cursor = 0;
    auto put = [&](std::uint64_t value, int width) {
        for (int i = width - 1; i >= 0; --i)
            bits[cursor++] = static_cast<std::uint8_t>(value >> i & 1);
    };
    put(pkt.version, 2);
    put(0, 1); // padding
    put(0, 1); // extension
    put(0, 4); // CSRC count
    put(0, 1); // marker
    put(pkt.payload_type, 7);
    put(pkt.seq, 16);
    put(pkt.timestamp, 32);
    put(pkt.ssrc, 32);
    Bytes out(12, 0);
    for (std::size_t i = 0; i < 96; ++i)
        out[i / 8] = static_cast<std::uint8_t>(out[i / 8] << 1 | bits[i]);
    return out;
}

Bytes random_payload(std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> byte(0, 255);
    Bytes out(len(rng));
    for (auto& b : out)
        b = static_cast<std::uint8_t>(byte(rng));
    return out;
}

SipMessage random_sip(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> number(100, 999);
    SipRequestSpec spec;
    spec.method = std::array{SipMethod::Invite, SipMethod::Ack, SipMethod::Bye,
                             SipMethod::Register}[rng() % 4];
    spec.to_number = std::to_string(number(rng));
    spec.to_host = "10.0.0." + std::to_string(rng() % 250 + 1);
    spec.from_number = std::to_string(number(rng));
    spec.from_host = spec.to_host;
    spec.call_id = "cid-" + std::to_string(rng());
    spec.cseq = static_cast<int>(rng() % 100 + 1);
    spec.via_host = spec.from_host + ":5060";
    if (coin(rng))
        spec.contact = "sip:" + spec.from_number + "@" + spec.from_host + ":5060";
    spec.body = random_payload(rng, 64);
    SipMessage msg = make_request(spec);
    if (coin(rng))
        msg = make_response(std::array{100, 180, 200}[rng() % 3], msg, random_payload(rng, 32));
    return msg;
}

CaptureRecord random_record(std::mt19937_64& rng, std::int64_t ts) {
    CaptureRecord r;
    r.ts_micros = ts;
    r.transport = rng() % 2 ? Transport::Udp : Transport::Tcp;
    r.src = {"192.168." + std::to_string(rng() % 256) + "." + std::to_string(rng() % 256),
             static_cast<std::uint16_t>(rng() % 65535 + 1)};
    r.dst = {"10." + std::to_string(rng() % 256) + ".0." + std::to_string(rng() % 256),
             static_cast<std::uint16_t>(rng() % 65535 + 1)};
    for (auto& o : r.src_mac.octets)
        o = static_cast<std::uint8_t>(rng());
    for (auto& o : r.dst_mac.octets)
        o = static_cast<std::uint8_t>(rng());
    r.payload = random_payload(rng, 200);
    return r;
}

} // namespace

TEST_CASE("sip: parse INVITE request") {
    std::string raw = "INVITE sip:201@10.0.0.1 SIP/2.0\r\n"
                      "Via: SIP/2.0/UDP 10.0.0.2:5060\r\n"
                      "From: <sip:200@10.0.0.1>\r\n"
                      "To: <sip:201@10.0.0.1>\r\n"
                      "Call-ID: abc123\r\n"
                      "CSeq: 1 INVITE\r\n"
                      "Contact: <sip:200@10.0.0.2:5060>\r\n"
                      "Content-Length: 0\r\n"
                      "\r\n";
    SipMessage msg = parse_sip(to_bytes(raw));
    CHECK(msg.is_request());
    CHECK(msg.method == SipMethod::Invite);
    CHECK(msg.request_uri == "sip:201@10.0.0.1");
    CHECK(msg.to_number() == "201");
    CHECK(msg.from_number() == "200");
    CHECK(msg.call_id() == "abc123");
    CHECK(msg.body.empty());
    // canonical round trip
    CHECK(serialize_sip(msg) == to_bytes(raw));
}

TEST_CASE("sip: parse 180 Ringing response") {
    std::string raw = "SIP/2.0 180 Ringing\r\n"
                      "Via: SIP/2.0/UDP 10.0.0.2:5060\r\n"
                      "From: <sip:200@10.0.0.1>\r\n"
                      "To: <sip:201@10.0.0.1>\r\n"
                      "Call-ID: abc123\r\n"
                      "CSeq: 1 INVITE\r\n"
                      "Content-Length: 0\r\n"
                      "\r\n";
    SipMessage msg = parse_sip(to_bytes(raw));
    CHECK(msg.is_response());
    CHECK(msg.status_code == 180);
    CHECK(msg.reason == "Ringing");
    CHECK(msg.body.empty());
}

TEST_CASE("sip: bare-LF input canonicalizes to CRLF") {
    std::string raw = "BYE sip:201@10.0.0.1 SIP/2.0\n"
                      "From: <sip:200@10.0.0.1>\n"
                      "To: <sip:201@10.0.0.1>\n"
                      "Call-ID: x\n"
                      "CSeq: 2 BYE\n"
                      "Content-Length: 0\n"
                      "\n";
    SipMessage msg = parse_sip(to_bytes(raw));
    std::string canonical = to_string(ByteView(serialize_sip(msg)));
    CHECK(canonical.find("\r\n") != std::string::npos);
    CHECK(parse_sip(serialize_sip(msg)) == msg);
}

TEST_CASE("sip: malformed inputs") {
    // no blank-line separator
    CHECK_THROWS_AS(parse_sip(to_bytes("INVITE sip:1@h SIP/2.0\r\nTo: <sip:1@h>\r\n")),
                    MalformedMessage);
    // unknown method
    CHECK_THROWS_AS(
        parse_sip(to_bytes("OPTIONS sip:1@h SIP/2.0\r\nFrom: a\r\nTo: b\r\nCall-ID: c\r\n"
                           "CSeq: 1 OPTIONS\r\nContent-Length: 0\r\n\r\n")),
        MalformedMessage);
    // body shorter than Content-Length
    CHECK_THROWS_AS(
        parse_sip(to_bytes("INVITE sip:1@h SIP/2.0\r\nFrom: a\r\nTo: b\r\nCall-ID: c\r\n"
                           "CSeq: 1 INVITE\r\nContent-Length: 10\r\n\r\nabc")),
        MalformedMessage);
    // status outside the subset
    CHECK_THROWS_AS(parse_sip(to_bytes("SIP/2.0 404 Not Found\r\nFrom: a\r\nTo: b\r\n"
                                       "Call-ID: c\r\nCSeq: 1 INVITE\r\nContent-Length: 0\r\n\r\n")),
                    MalformedMessage);
}

TEST_CASE("sip: serialized Content-Length tracks the body") {
    SipRequestSpec spec;
    spec.method = SipMethod::Invite;
    spec.to_number = "201";
    spec.to_host = "10.0.0.1";
    spec.from_number = "200";
    spec.from_host = "10.0.0.1";
    spec.call_id = "cl-test";
    spec.via_host = "10.0.0.2:5060";
    spec.body = to_bytes("abcd");
    std::string raw = to_string(ByteView(serialize_sip(make_request(spec))));
    CHECK(raw.find("Content-Length: 4\r\n") != std::string::npos);

    SipMessage trying = make_response(100, make_request(spec));
    std::string trying_raw = to_string(ByteView(serialize_sip(trying)));
    CHECK(trying_raw.find("SIP/2.0 100 Trying\r\n") == 0);
    CHECK(trying_raw.rfind("Content-Length: 0\r\n\r\n") == trying_raw.size() - 21);
}

TEST_CASE("sip: round-trip property, 10k randomized messages") {
    std::mt19937_64 rng(0xC0FFEE);
    for (int i = 0; i < 10000; ++i) {
        SipMessage msg = random_sip(rng);
        Bytes raw = serialize_sip(msg);
        SipMessage back = parse_sip(raw);
        REQUIRE(back == msg);
        REQUIRE(serialize_sip(back) == raw);
    }
}

TEST_CASE("sip: never panics on arbitrary bytes") {
    std::mt19937_64 rng(42);
    int parsed = 0, rejected = 0;
    for (int i = 0; i < 10000; ++i) {
        Bytes junk = random_payload(rng, 300);
        try {
            parse_sip(junk);
            ++parsed;
        } catch (const MalformedMessage&) {
            ++rejected;
        }
        // anything else escapes and fails the test
    }
    CHECK(rejected > 0);
    CHECK(parsed + rejected == 10000);
}

TEST_CASE("rtp: all-zero packet encodes to 12 bytes with first byte 0x80") {
    RtpPacket pkt;
    pkt.payload_type = 0;
    pkt.seq = 0;
    pkt.timestamp = 0;
    pkt.ssrc = 0;
    Bytes raw = encode_rtp(pkt);
    REQUIRE(raw.size() == 12);
    CHECK(raw[0] == 0x80);
    CHECK(raw == rtp_header_oracle(pkt));
}

TEST_CASE("rtp: encoder matches the bit-packing oracle on random packets") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        RtpPacket pkt;
        pkt.payload_type = static_cast<std::uint8_t>(rng() % 128);
        pkt.seq = static_cast<std::uint16_t>(rng());
        pkt.timestamp = static_cast<std::uint32_t>(rng());
        pkt.ssrc = static_cast<std::uint32_t>(rng());
        Bytes raw = encode_rtp(pkt);
        REQUIRE(Bytes(raw.begin(), raw.begin() + 12) == rtp_header_oracle(pkt));
    }
}

TEST_CASE("rtp: round-trip property, 10k randomized packets") {
    std::mt19937_64 rng(0xAB);
    for (int i = 0; i < 10000; ++i) {
        RtpPacket pkt;
        pkt.payload_type = static_cast<std::uint8_t>(rng() % 128);
        pkt.seq = static_cast<std::uint16_t>(rng());
        pkt.timestamp = static_cast<std::uint32_t>(rng());
        pkt.ssrc = static_cast<std::uint32_t>(rng());
        pkt.payload = random_payload(rng, 180);
        Bytes raw = encode_rtp(pkt);
        RtpPacket back = decode_rtp(raw);
        REQUIRE(back == pkt);
        REQUIRE(encode_rtp(back) == raw);
    }
}

TEST_CASE("rtp: error cases") {
    Bytes short_raw(11, 0);
    CHECK_THROWS_AS(decode_rtp(short_raw), TooShort);
    Bytes v1(12, 0);
    v1[0] = 0x40; // version bits = 1
    CHECK_THROWS_AS(decode_rtp(v1), BadVersion);
}

TEST_CASE("capture: empty list round-trips through an empty file") {
    auto path = std::filesystem::temp_directory_path() / "jl_cap_empty.cap";
    write_capture(path, {});
    CHECK(read_capture(path).empty());
    std::filesystem::remove(path);
}

TEST_CASE("capture: out-of-order write raises NonMonotonic") {
    std::mt19937_64 rng(3);
    std::vector<CaptureRecord> recs{random_record(rng, 100), random_record(rng, 50)};
    auto path = std::filesystem::temp_directory_path() / "jl_cap_bad.cap";
    CHECK_THROWS_AS(write_capture(path, recs), NonMonotonic);
}

TEST_CASE("capture: round-trip property with randomized records") {
    std::mt19937_64 rng(0xDEAD);
    auto path = std::filesystem::temp_directory_path() / "jl_cap_rt.cap";
    for (int round = 0; round < 200; ++round) {
        std::vector<CaptureRecord> recs;
        std::int64_t ts = 0;
        std::size_t n = rng() % 20;
        for (std::size_t i = 0; i < n; ++i) {
            ts += static_cast<std::int64_t>(rng() % 1000);
            recs.push_back(random_record(rng, ts));
        }
        write_capture(path, recs);
        REQUIRE(read_capture(path) == recs);
    }
    std::filesystem::remove(path);
}

TEST_CASE("capture: corrupt lines are reported with their line number") {
    std::string text = std::string(kCaptureHeaderLine) + "\n" + "not\ta\tvalid\trecord\n";
    try {
        parse_capture(text);
        FAIL("expected CorruptCapture");
    } catch (const CorruptCapture& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_capture("no header\n"), CorruptCapture);
}

TEST_CASE("capture: decreasing timestamps on read raise NonMonotonic") {
    std::mt19937_64 rng(5);
    std::vector<CaptureRecord> recs{random_record(rng, 100), random_record(rng, 200)};
    std::string good = format_capture(recs);
    // swap the two record lines
    auto first_nl = good.find('\n');
    auto second_nl = good.find('\n', first_nl + 1);
    std::string swapped = good.substr(0, first_nl + 1) +
                          good.substr(second_nl + 1) +
                          good.substr(first_nl + 1, second_nl - first_nl);
    CHECK_THROWS_AS(parse_capture(swapped), NonMonotonic);
}

TEST_CASE("base64: known vectors and random round trips") {
    CHECK(encode_base64(as_view("")) == "");
    CHECK(encode_base64(as_view("f")) == "Zg==");
    CHECK(encode_base64(as_view("fo")) == "Zm8=");
    CHECK(encode_base64(as_view("foo")) == "Zm9v");
    CHECK(encode_base64(as_view("foobar")) == "Zm9vYmFy");
    CHECK(decode_base64("Zm9vYmFy") == to_bytes("foobar"));
    CHECK_THROWS_AS(decode_base64("!!!!"), Error);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        Bytes data = random_payload(rng, 100);
        REQUIRE(decode_base64(encode_base64(data)) == data);
    }
}

TEST_CASE("metadata: record encode/parse") {
    PrintJobMetadata meta{"alice", "1000", "10.0.0.2", "job-7", "JL-9100"};
    std::string wire = encode_metadata(meta);
    CHECK(wire.find("USERNAME=alice\n") != std::string::npos);
    CHECK(wire.find("MODEL=JL-9100\n") != std::string::npos);
    auto parsed = parse_metadata_stream(wire + encode_metadata(meta));
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0] == meta);
    CHECK(parsed[1] == meta);
    CHECK(parsed[0].complete());
}
