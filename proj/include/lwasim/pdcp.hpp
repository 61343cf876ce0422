#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "lwasim/packet.hpp"
#include "lwasim/sim_time.hpp"

namespace lwasim {

/// PDCP routing state, fixed before the run starts.
/// lwa: 0 = LTE only, 1 = split (LTE+Wi-Fi), 2 = Wi-Fi only.
/// lwip: 0 = off, 1 = on (switched; LWIP cannot split).
struct ActivationMode {
    std::uint8_t lwa = 0;
    std::uint8_t lwip = 0;
};

/// Per-bearer PDU counter driving the modulo-N split.
struct SplitState {
    std::uint64_t counter = 0;
    std::uint32_t modulus = 2;
};

struct BearerConfig {
    std::uint8_t rbid = 1;
    std::size_t pdcp_rrc_overhead_bytes = 30;

    std::uint8_t lcid() const { return static_cast<std::uint8_t>(rbid + 2); }
};

enum class RouteDecision { Lte, Offload };

/// Routing decision for one PDCP PDU. The counter advances exactly once
/// per call regardless of mode. Under split (lwa=1) a zero remainder
/// stays on LTE, everything else is offloaded.
RouteDecision pdcp_route(const ActivationMode& mode, SplitState& split);

/// Marks a packet bound for the offload path: attaches the activation and
/// LCID tags (no wire-length change) and the opaque PDCP/RRC framing
/// block. The adaptation layer adds its 2-byte header later, bringing the
/// total offload overhead to pdcp_rrc_overhead_bytes.
void tag_for_offload(Packet& p, const BearerConfig& bearer, const ActivationMode& mode);

/// FIFO buffer between PDCP and the adaptation layer, drained completely
/// at every poll.
class OffloadQueue {
  public:
    struct Entry {
        Packet packet;
        SimTime enqueued;
    };

    void enqueue(Packet p, SimTime now) {
        queue_.push_back(Entry{std::move(p), now});
        ++enqueued_total_;
    }

    std::vector<Entry> drain() {
        std::vector<Entry> batch(std::make_move_iterator(queue_.begin()), std::make_move_iterator(queue_.end()));
        queue_.clear();
        return batch;
    }

    std::size_t size() const { return queue_.size(); }
    std::uint64_t enqueued_total() const { return enqueued_total_; }

  private:
    std::deque<Entry> queue_;
    std::uint64_t enqueued_total_ = 0;
};

} // namespace lwasim
