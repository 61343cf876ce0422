#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lwasim/packet.hpp"
#include "lwasim/sim_time.hpp"

namespace lwasim {

/// Constant-bitrate VoIP-style source. The application packet size is the
/// UDP payload including the 12-byte SeqTs header; in saturation the
/// on/off pattern degenerates to one packet every
/// app_packet_bytes*8/rate_bps seconds.
struct OnOffConfig {
    std::uint64_t rate_bps = 64000;
    std::size_t app_packet_bytes = 600;
    SimTime start{};
    SimTime stop{};
};

/// Packet period; integer nanoseconds (exact for the default 64 kbps /
/// 600 B combination: 75 ms).
SimTime emission_period(const OnOffConfig& cfg);

/// Emission instants: start, start+P, ... while <= stop. Empty when
/// stop < start.
std::vector<SimTime> emission_schedule(const OnOffConfig& cfg);

/// Application packet number `seq` stamped at time `now`: filler payload
/// of app_packet_bytes-12 plus the SeqTs header.
Packet make_app_packet(const OnOffConfig& cfg, std::uint32_t seq, SimTime now);

/// One accepted delivery at a sink.
struct DeliveryRecord {
    std::string path;    // "lte" or "wifi"
    std::uint32_t seq = 0;
    int bearer_id = -1;  // -1 when the path adds no adaptation header
    int activate = -1;
    std::size_t size_bytes = 0;
    SimTime app_sent{}; // SeqTs timestamp at the source
    SimTime flow_tx{};  // when the packet entered this path's flow
    SimTime recv{};

    SimTime latency() const { return recv - app_sent; }
};

/// Strips a received packet's headers in stack order and produces a
/// delivery record. A packet missing its SeqTs header (or failing any
/// decode) is counted as corrupt and the run continues.
class PacketSink {
  public:
    explicit PacketSink(std::string path_name) : path_(std::move(path_name)) {}

    std::optional<DeliveryRecord> receive(Packet packet, SimTime now);

    std::uint64_t corrupt() const { return corrupt_; }

  private:
    std::string path_;
    std::uint64_t corrupt_ = 0;
};

} // namespace lwasim
