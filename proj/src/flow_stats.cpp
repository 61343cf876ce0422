#include "lwasim/flow_stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace lwasim {

double throughput_kbps(const FlowStats& s) {
    if (s.time_last_rx <= s.time_first_tx)
        throw std::domain_error("throughput undefined: zero or negative rx/tx interval");
    const double dt = (s.time_last_rx - s.time_first_tx).seconds();
    return static_cast<double>(s.rx_bytes) * 8.0 / dt / 1024.0;
}

SimTime mean_delay(const FlowStats& s) {
    if (s.delays.empty())
        return SimTime{0};
    std::uint64_t sum = 0;
    for (SimTime d : s.delays)
        sum += d.nanos;
    return SimTime{sum / s.delays.size()};
}

SimTime min_delay(const FlowStats& s) {
    if (s.delays.empty())
        return SimTime{0};
    return *std::min_element(s.delays.begin(), s.delays.end());
}

SimTime max_delay(const FlowStats& s) {
    if (s.delays.empty())
        return SimTime{0};
    return *std::max_element(s.delays.begin(), s.delays.end());
}

void FlowTable::record_tx(const FlowKey& key, std::size_t bytes, SimTime now) {
    FlowStats& s = flows_[key];
    if (s.tx_packets == 0)
        s.time_first_tx = now;
    ++s.tx_packets;
    s.tx_bytes += bytes;
}

void FlowTable::record_rx(const FlowKey& key, std::size_t bytes, SimTime now, SimTime delay) {
    FlowStats& s = flows_[key];
    ++s.rx_packets;
    s.rx_bytes += bytes;
    s.time_last_rx = std::max(s.time_last_rx, now);
    s.delays.push_back(delay);
}

void FlowTable::finalize() {
    for (auto& [key, s] : flows_)
        s.lost_packets = s.tx_packets >= s.rx_packets ? s.tx_packets - s.rx_packets : 0;
}

} // namespace lwasim
