#pragma once

#include <cstdint>

#include "lwasim/packet.hpp"

namespace lwasim {

/// One authenticated (not encrypted) IP/UDP tunnel per station. The
/// inner header carries the virtual tunnel endpoints; the outer header
/// carries the delivery network addresses and adds exactly 28 bytes. The
/// keyed 32-bit tag rides in the last four payload bytes so published
/// packet sizes are unaffected.
struct TunnelConfig {
    std::uint32_t inner_src = 0;
    std::uint32_t inner_dst = 0;
    std::uint16_t inner_src_port = 0;
    std::uint16_t inner_dst_port = 0;
    std::uint32_t outer_src = 0;
    std::uint32_t outer_dst = 0;
    std::uint16_t outer_src_port = 0;
    std::uint16_t outer_dst_port = 0;
    std::uint64_t auth_key = 0;
    std::uint8_t expected_activate = 1;
    std::uint8_t expected_bearer = 1;
};

/// Reads the activation and LCID tags and prepends the 2-byte LWIP
/// encapsulation header. Missing tags abort the run (pipeline bug).
LwipHeader lwipep_encapsulate(Packet& p);

/// Wraps an LWIPEP PDU for the tunnel: the original IP/UDP header is
/// replaced by the inner (virtual-address) header, the keyed auth tag is
/// stamped into the payload trailer, and the outer delivery header is
/// added on top (+28 bytes).
void tunnel_send(Packet& p, const TunnelConfig& t);

enum class TunnelRx {
    Delivered, // outer stripped, authentication passed
    AuthFail,  // activation/bearer/keyed-tag mismatch; drop
    Ignored,   // not addressed to this tunnel endpoint
};

/// Strips the outer header and authenticates the inner packet. On
/// Delivered the packet is the 28-byte-smaller inner datagram, ready for
/// the station sink.
TunnelRx tunnel_receive(Packet& p, const TunnelConfig& t);

} // namespace lwasim
