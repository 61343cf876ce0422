#include "doctest.h"

#include <random>

#include "lwasim/packet.hpp"

using namespace lwasim;

TEST_CASE("wire length is payload plus header blocks; tags add nothing") {
    Packet p(0, 588);
    CHECK(p.wire_length() == 588);
    p.add_header(SeqTsHeader{0, SimTime{0}});
    CHECK(p.wire_length() == 600);
    p.add_header(IpUdpHeader{1, 2, 3, 4, 628});
    CHECK(p.wire_length() == 628);

    std::size_t before = p.wire_length();
    p.set_lwa_tag(LwaTag{1});
    p.set_lcid_tag(LcidTag{3});
    CHECK(p.wire_length() == before);
    p.clear_tags();
    CHECK(p.wire_length() == before);
    // Attach/detach again: still no effect.
    p.set_lwa_tag(LwaTag{1});
    p.set_lwa_tag(LwaTag{1});
    CHECK(p.wire_length() == before);
}

TEST_CASE("header stack is LIFO") {
    Packet p(1, 10);
    p.add_header(SeqTsHeader{7, SimTime::ms(5)});
    p.add_header(IpUdpHeader{0xa, 0xb, 1, 2, 50});

    CHECK(p.outermost() == HeaderKind::IpUdp);
    CHECK_THROWS_AS(p.remove_header<SeqTsHeader>(), DecodeError);

    IpUdpHeader ip = p.remove_header<IpUdpHeader>();
    CHECK(ip.src == 0xa);
    SeqTsHeader st = p.remove_header<SeqTsHeader>();
    CHECK(st.seq == 7);
    CHECK(p.wire_length() == 10);
    CHECK_THROWS_AS(p.remove_header<SeqTsHeader>(), DecodeError);
}

TEST_CASE("extract_header pulls a buried block out of the stack") {
    Packet p(2, 588);
    p.add_header(SeqTsHeader{3, SimTime{0}});
    p.add_header(IpUdpHeader{1, 2, 3, 4, 628});
    p.add_framing(28);
    p.add_header(LwaHeader{1, 1});
    CHECK(p.wire_length() == 658);

    IpUdpHeader orig = p.extract_header<IpUdpHeader>();
    CHECK(orig.dst == 2);
    CHECK(p.wire_length() == 630);
    CHECK(p.outermost() == HeaderKind::Lwa);
    CHECK(!p.has_header(HeaderKind::IpUdp));
    CHECK_THROWS_AS(p.extract_header<IpUdpHeader>(), DecodeError);
}

TEST_CASE("serialize emits outermost header first, then seeded filler") {
    Packet p(5, 8);
    p.add_header(SeqTsHeader{1, SimTime{2}});
    p.add_header(LwaHeader{2, 1});
    auto bytes = p.serialize(99);
    REQUIRE(bytes.size() == 22);
    CHECK(bytes[0] == 0x02); // LwaHeader outermost
    CHECK(bytes[1] == 0x01);
    CHECK(bytes[2] == 0x00); // SeqTs seq = 1 big-endian
    CHECK(bytes[5] == 0x01);

    // Filler is a pure function of (seed, uid).
    auto again = Packet(5, 8);
    again.add_header(SeqTsHeader{1, SimTime{2}});
    again.add_header(LwaHeader{2, 1});
    CHECK(again.serialize(99) == bytes);
    CHECK(Packet(6, 8).serialize(99) != Packet(5, 8).serialize(99));
}

TEST_CASE("auth trailer replaces the last four payload bytes only") {
    Packet p(9, 16);
    auto plain = p.serialize(1);
    p.set_auth_trailer(0xdeadbeef);
    auto tagged = p.serialize(1);
    REQUIRE(tagged.size() == plain.size());
    CHECK(std::equal(plain.begin(), plain.end() - 4, tagged.begin()));
    CHECK(tagged[12] == 0xde);
    CHECK(tagged[13] == 0xad);
    CHECK(tagged[14] == 0xbe);
    CHECK(tagged[15] == 0xef);
}

TEST_CASE("random stacks round-trip in LIFO order") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        Packet p(trial, rng() % 100);
        std::vector<int> kinds;
        for (int i = 0; i < 6; ++i) {
            switch (rng() % 3) {
            case 0:
                p.add_header(SeqTsHeader{static_cast<std::uint32_t>(rng()), SimTime{rng()}});
                kinds.push_back(0);
                break;
            case 1:
                p.add_header(LwaHeader{static_cast<std::uint8_t>(rng() % 3), static_cast<std::uint8_t>(rng())});
                kinds.push_back(1);
                break;
            case 2:
                p.add_framing(rng() % 40);
                kinds.push_back(2);
                break;
            }
        }
        for (auto it = kinds.rbegin(); it != kinds.rend(); ++it) {
            switch (*it) {
            case 0:
                CHECK_NOTHROW(p.remove_header<SeqTsHeader>());
                break;
            case 1:
                CHECK_NOTHROW(p.remove_header<LwaHeader>());
                break;
            case 2:
                CHECK_NOTHROW(p.remove_framing());
                break;
            }
        }
        CHECK(p.header_count() == 0);
    }
}
