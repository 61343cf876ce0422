#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lwasim/headers.hpp"
#include "lwasim/sim_time.hpp"

namespace lwasim {

/// Five-tuple flow identity with the protocol fixed to UDP.
struct FlowKey {
    std::uint32_t src = 0;
    std::uint32_t dst = 0;
    std::uint16_t src_port = 0;
    std::uint16_t dst_port = 0;

    auto operator<=>(const FlowKey&) const = default;
};

struct FlowStats {
    std::uint64_t tx_packets = 0;
    std::uint64_t rx_packets = 0;
    std::uint64_t tx_bytes = 0;
    std::uint64_t rx_bytes = 0;
    SimTime time_first_tx{};
    SimTime time_last_rx{};
    std::vector<SimTime> delays;
    std::uint64_t lost_packets = 0;
};

/// rx_bytes * 8 / (last_rx - first_tx seconds) / 1024. A zero interval
/// has no defined throughput.
double throughput_kbps(const FlowStats& s);

SimTime mean_delay(const FlowStats& s);
SimTime min_delay(const FlowStats& s);
SimTime max_delay(const FlowStats& s);

/// Per-flow counters in deterministic (key-ordered) iteration order.
class FlowTable {
  public:
    void record_tx(const FlowKey& key, std::size_t bytes, SimTime now);
    void record_rx(const FlowKey& key, std::size_t bytes, SimTime now, SimTime delay);

    /// Fills lost_packets (tx - rx) on every flow.
    void finalize();

    const std::map<FlowKey, FlowStats>& flows() const { return flows_; }
    bool empty() const { return flows_.empty(); }

  private:
    std::map<FlowKey, FlowStats> flows_;
};

} // namespace lwasim
