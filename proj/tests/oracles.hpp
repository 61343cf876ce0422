#pragma once

// Independent oracles used to derive expected test values. These stay
// deliberately naive (enumeration, plain arithmetic) and must not share
// code with the implementation they check.

#include <cstdint>
#include <vector>

namespace oracle {

// Emission instants of a constant-bitrate source: start, start+P, ... <= stop
// with P = bytes*8/rate seconds, enumerated in integer nanoseconds.
inline std::vector<std::uint64_t> emission_times_ns(std::uint64_t rate_bps, std::uint64_t packet_bytes,
                                                    std::uint64_t start_ns, std::uint64_t stop_ns) {
    std::vector<std::uint64_t> times;
    if (stop_ns < start_ns || rate_bps == 0)
        return times;
    const std::uint64_t period_ns = packet_bytes * 8ull * 1000000000ull / rate_bps;
    for (std::uint64_t t = start_ns; t <= stop_ns; t += period_ns) {
        times.push_back(t);
        if (period_ns == 0)
            break;
    }
    return times;
}

// Number of firings of a recurring timer with the first firing one period
// after start, counted by enumeration.
inline std::uint64_t recurring_firings(std::uint64_t period_ns, std::uint64_t start_ns, std::uint64_t end_ns) {
    std::uint64_t count = 0;
    for (std::uint64_t t = start_ns + period_ns; t <= end_ns; t += period_ns)
        ++count;
    return count;
}

// Routing of sequence numbers 0..total-1 under the modulo split rule
// (remainder 0 goes to LTE). Returns {lte_seqs, offload_seqs}.
struct SplitOutcome {
    std::vector<std::uint32_t> lte;
    std::vector<std::uint32_t> offload;
};
inline SplitOutcome modulo_split(std::uint32_t total, std::uint32_t modulus) {
    SplitOutcome out;
    for (std::uint32_t c = 0; c < total; ++c) {
        if (c % modulus == 0)
            out.lte.push_back(c);
        else
            out.offload.push_back(c);
    }
    return out;
}

// FlowMonitor throughput formula, recomputed from raw quantities.
inline double throughput_kbps(std::uint64_t rx_bytes, std::uint64_t first_tx_ns, std::uint64_t last_rx_ns) {
    double dt = (static_cast<double>(last_rx_ns) - static_cast<double>(first_tx_ns)) / 1e9;
    return static_cast<double>(rx_bytes) * 8.0 / dt / 1024.0;
}

} // namespace oracle
