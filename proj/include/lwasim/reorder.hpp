#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "lwasim/engine.hpp"
#include "lwasim/traffic.hpp"

namespace lwasim {

struct ReorderStats {
    std::uint64_t delivered = 0;
    std::uint64_t lost = 0;
    std::uint64_t duplicates = 0;
    std::uint64_t timeouts = 0;
    std::size_t max_held = 0;
};

/// In-sequence aggregation buffer at the UE application layer. Packets
/// arriving over the LTE and Wi-Fi paths are merged into one stream with
/// strictly increasing sequence numbers.
///
/// A single reordering timer covers the buffer. It is armed when the
/// first out-of-order packet is held, restarted whenever the head of the
/// stream makes progress while packets are still held, and cancelled
/// once nothing is held. When it expires the stream skips to the
/// smallest held sequence number; the skipped numbers are recorded as
/// lost.
class ReorderBuffer {
  public:
    using DeliverFn = std::function<void(const DeliveryRecord&, SimTime)>;
    using LossFn = std::function<void(std::uint32_t seq, SimTime)>;

    ReorderBuffer(Engine& eng, SimTime t_reordering) : eng_(eng), t_reordering_(t_reordering) {}

    void set_deliver_handler(DeliverFn fn) { deliver_ = std::move(fn); }
    void set_loss_handler(LossFn fn) { loss_ = std::move(fn); }

    void ingest(const DeliveryRecord& rec);

    /// Shutdown drain: everything still held is delivered in sequence
    /// order and the remaining gaps are recorded as lost.
    void final_flush();

    const ReorderStats& stats() const { return stats_; }
    std::size_t held() const { return held_.size(); }
    std::uint32_t next_expected() const { return next_expected_; }
    bool timer_running() const { return deadline_.has_value(); }

  private:
    void deliver(const DeliveryRecord& rec);
    void drain_consecutive();
    void update_timer(bool progressed);
    void on_timer(SimTime deadline);

    Engine& eng_;
    SimTime t_reordering_;
    DeliverFn deliver_;
    LossFn loss_;

    std::uint32_t next_expected_ = 0;
    std::map<std::uint32_t, DeliveryRecord> held_;
    std::optional<SimTime> deadline_;
    ReorderStats stats_;
};

} // namespace lwasim
