#include "doctest.h"

#include <random>

#include "lwasim/headers.hpp"

using namespace lwasim;

namespace {
template <class H> H roundtrip(const H& h) {
    auto bytes = h.encode();
    REQUIRE(bytes.size() == H::kEncodedSize);
    ByteReader in(bytes);
    H back = H::decode(in);
    CHECK(in.consumed() == H::kEncodedSize);
    return back;
}
} // namespace

TEST_CASE("LwaHeader layout: activate then bearer id") {
    LwaHeader h{1, 1};
    CHECK(h.encode() == std::vector<std::uint8_t>{0x01, 0x01});

    std::vector<std::uint8_t> raw{0x02, 0x05};
    ByteReader in(raw);
    LwaHeader d = LwaHeader::decode(in);
    CHECK(d.activate == 2);
    CHECK(d.bearer_id == 5);
}

TEST_CASE("SeqTsHeader zero case is 12 zero bytes") {
    SeqTsHeader h{};
    CHECK(h.encode() == std::vector<std::uint8_t>(12, 0));
}

TEST_CASE("SeqTsHeader is big-endian seq then timestamp") {
    SeqTsHeader h{0x01020304, SimTime{0x05060708090a0b0cull}};
    CHECK(h.encode() ==
          std::vector<std::uint8_t>{0x01, 0x02, 0x03, 0x04, 0x05, 0x06, 0x07, 0x08, 0x09, 0x0a, 0x0b, 0x0c});
}

TEST_CASE("out-of-range activation values are rejected") {
    CHECK_THROWS_AS(LwipHeader{2, 0}.encode(), EncodeError);
    CHECK_THROWS_AS(LwaHeader{3, 0}.encode(), EncodeError);
    CHECK_NOTHROW(LwaHeader{2, 0}.encode());
}

TEST_CASE("truncated input raises a decode error") {
    std::vector<std::uint8_t> one{0x01};
    ByteReader in(one);
    CHECK_THROWS_AS(LwaHeader::decode(in), DecodeError);

    std::vector<std::uint8_t> eleven(11, 0);
    ByteReader in2(eleven);
    CHECK_THROWS_AS(SeqTsHeader::decode(in2), DecodeError);
}

TEST_CASE("codec round-trips at fixed sizes") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 10000; ++i) {
        LwaHeader lwa{static_cast<std::uint8_t>(rng() % 3), static_cast<std::uint8_t>(rng() % 256)};
        CHECK(roundtrip(lwa) == lwa);

        LwipHeader lwip{static_cast<std::uint8_t>(rng() % 2), static_cast<std::uint8_t>(rng() % 256)};
        CHECK(roundtrip(lwip) == lwip);

        SeqTsHeader seqts{static_cast<std::uint32_t>(rng()), SimTime{rng()}};
        CHECK(roundtrip(seqts) == seqts);

        IpUdpHeader ip{static_cast<std::uint32_t>(rng()), static_cast<std::uint32_t>(rng()),
                       static_cast<std::uint16_t>(rng()), static_cast<std::uint16_t>(rng()),
                       static_cast<std::uint16_t>(rng())};
        CHECK(roundtrip(ip) == ip);
    }
}

TEST_CASE("IpUdpHeader encodes a self-consistent IPv4+UDP block") {
    IpUdpHeader h{parse_ipv4("10.0.0.2"), parse_ipv4("7.0.0.2"), 49153, 9, 628};
    auto bytes = h.encode();
    REQUIRE(bytes.size() == 28);
    CHECK(bytes[0] == 0x45);           // IPv4, 20-byte header
    CHECK(bytes[9] == 17);             // UDP
    CHECK(bytes[2] == 0x02);           // total length 628 = 0x0274
    CHECK(bytes[3] == 0x74);
    CHECK(bytes[24] == 0x02);          // UDP length 608 = 0x0260
    CHECK(bytes[25] == 0x60);
}

TEST_CASE("rbid is lcid minus two") {
    CHECK(rbid_from_lcid(3) == 1);
    CHECK(rbid_from_lcid(2) == 0);
    CHECK_THROWS(rbid_from_lcid(1));
}

TEST_CASE("dotted-quad parsing") {
    CHECK(parse_ipv4("11.0.0.254") == ((11u << 24) | 254u));
    CHECK(ipv4_to_string(parse_ipv4("192.168.1.2")) == "192.168.1.2");
    CHECK_THROWS_AS(parse_ipv4("11.0.0"), ConfigError);
    CHECK_THROWS_AS(parse_ipv4("300.0.0.1"), ConfigError);
}
