#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lwasim/config.hpp"
#include "lwasim/packet.hpp"
#include "lwasim/scenario.hpp"

namespace lwasim {

/// Datagram layout for the dual-process mode, one offloaded PDU per
/// datagram, all fields big-endian:
///   LWA:  LwaHeader(2) | SeqTsHeader(12) | payload filler
///   LWIP: IpUdpHeader(28, outer) | LwipHeader(2) | SeqTsHeader(12) | filler
/// A 2-byte all-ones datagram (an invalid LwaHeader) marks end of run.
std::vector<std::uint8_t> sentinel_frame();
bool is_sentinel(std::span<const std::uint8_t> datagram);

/// Serializes an adaptation-layer PDU into its wire frame. The PDU must
/// already carry its Lwa/Lwip header (and the outer delivery header under
/// LWIP).
std::vector<std::uint8_t> encode_wire_frame(const Packet& pdu, bool lwip, std::uint64_t seed);

struct WireFrame {
    std::optional<IpUdpHeader> outer; // LWIP only
    std::uint8_t activate = 0;
    std::uint8_t bearer_id = 0;
    std::uint32_t seq = 0;
    SimTime ts{};
    std::vector<std::uint8_t> payload;
};

/// Inverse of encode_wire_frame; truncated or malformed input throws
/// DecodeError.
WireFrame decode_wire_frame(std::span<const std::uint8_t> datagram, bool lwip);

/// Checks the seeded filler (and, under LWIP, the keyed auth trailer).
bool verify_frame_payload(const WireFrame& frame, bool lwip, std::uint64_t seed, std::uint64_t auth_key);

/// Minimal RAII IPv4/UDP datagram socket.
class UdpSocket {
  public:
    UdpSocket();
    ~UdpSocket();
    UdpSocket(const UdpSocket&) = delete;
    UdpSocket& operator=(const UdpSocket&) = delete;

    void bind(std::uint16_t port); // 0 picks an ephemeral port
    std::uint16_t local_port() const;

    void set_destination(const std::string& host, std::uint16_t port);
    bool send(std::span<const std::uint8_t> datagram);

    /// Blocks up to timeout_ms; std::nullopt on timeout.
    std::optional<std::vector<std::uint8_t>> recv(int timeout_ms);

  private:
    int fd_ = -1;
};

/// "host:port" -> (host, port).
std::pair<std::string, std::uint16_t> parse_host_port(const std::string& peer);

/// eNB-side process: runs the pipeline with offloaded PDUs emitted as
/// real datagrams (paced per config), then a sentinel. Returns exit code.
int run_enb(const ScenarioConfig& cfg, std::ostream& out);

/// Station-side process: receives datagrams until the sentinel or an idle
/// timeout, feeding aggregation and telemetry like in-process deliveries.
int run_sta(const ScenarioConfig& cfg, std::ostream& out);

} // namespace lwasim
