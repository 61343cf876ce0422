#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lwasim/bytes.hpp"
#include "lwasim/errors.hpp"
#include "lwasim/sim_time.hpp"

namespace lwasim {

/// Kinds of header blocks a packet can carry. Framing is an opaque block
/// modelling PDCP/RRC overhead bytes; the rest have fixed codecs below.
enum class HeaderKind : std::uint8_t { SeqTs, Lwa, Lwip, IpUdp, Framing };

std::string header_kind_name(HeaderKind k);

/// 12-byte sequence/timestamp header stamped on every application packet:
/// 4-byte sequence number then 8-byte nanosecond send timestamp, both
/// big-endian.
struct SeqTsHeader {
    static constexpr HeaderKind kKind = HeaderKind::SeqTs;
    static constexpr std::size_t kEncodedSize = 12;

    std::uint32_t seq = 0;
    SimTime ts{};

    bool operator==(const SeqTsHeader&) const = default;

    std::vector<std::uint8_t> encode() const;
    static SeqTsHeader decode(ByteReader& in);
};

/// 2-byte LWA adaptation header: byte 0 is the activation value (0 LTE
/// only, 1 split, 2 Wi-Fi only), byte 1 the radio bearer id.
struct LwaHeader {
    static constexpr HeaderKind kKind = HeaderKind::Lwa;
    static constexpr std::size_t kEncodedSize = 2;

    std::uint8_t activate = 0; // 0..2
    std::uint8_t bearer_id = 0;

    bool operator==(const LwaHeader&) const = default;

    std::vector<std::uint8_t> encode() const;
    static LwaHeader decode(ByteReader& in);
};

/// 2-byte LWIP encapsulation header: byte 0 activation (0 off, 1 on),
/// byte 1 the radio bearer id.
struct LwipHeader {
    static constexpr HeaderKind kKind = HeaderKind::Lwip;
    static constexpr std::size_t kEncodedSize = 2;

    std::uint8_t activate = 0; // 0..1
    std::uint8_t bearer_id = 0;

    bool operator==(const LwipHeader&) const = default;

    std::vector<std::uint8_t> encode() const;
    static LwipHeader decode(ByteReader& in);
};

/// Combined 28-byte IPv4 + UDP header (20 + 8). Checksums are written as
/// zero and no options are modelled. total_length covers the whole IP
/// datagram so emitted traces stay self-consistent.
struct IpUdpHeader {
    static constexpr HeaderKind kKind = HeaderKind::IpUdp;
    static constexpr std::size_t kEncodedSize = 28;

    std::uint32_t src = 0;
    std::uint32_t dst = 0;
    std::uint16_t src_port = 0;
    std::uint16_t dst_port = 0;
    std::uint16_t total_length = 0;

    bool operator==(const IpUdpHeader&) const = default;

    std::vector<std::uint8_t> encode() const;
    static IpUdpHeader decode(ByteReader& in);
};

/// Radio bearer id from logical channel id. LCIDs 0 and 1 carry
/// signalling, data bearers start at 2.
std::uint8_t rbid_from_lcid(std::uint8_t lcid);

/// Dotted-quad helpers for config files and reports.
std::uint32_t parse_ipv4(const std::string& dotted);
std::string ipv4_to_string(std::uint32_t addr);

} // namespace lwasim
