#pragma once

#include <cstdint>
#include <functional>

#include "lwasim/engine.hpp"
#include "lwasim/packet.hpp"

namespace lwasim {

/// Abstract rate/delay/overhead link. framing_overhead_bytes models the
/// air-interface framing counted only in traces and stripped at the
/// receiver. rate_bps == 0 means instantaneous serialization.
struct LinkModel {
    std::uint64_t rate_bps = 0;
    SimTime delay{};
    std::size_t framing_overhead_bytes = 0;

    SimTime tx_time(std::size_t frame_bytes) const {
        if (rate_bps == 0)
            return SimTime{0};
        return SimTime{frame_bytes * 8ull * 1000000000ull / rate_bps};
    }
};

/// FIFO transmitter over a LinkModel: a frame occupies the transmitter
/// for its serialization time, so per-link ordering is preserved.
class Link {
  public:
    Link(Engine& eng, LinkModel model) : eng_(eng), model_(model) {}

    const LinkModel& model() const { return model_; }

    /// Schedules on_arrival at send + queueing + serialization + delay.
    void transmit(std::size_t frame_bytes, std::function<void()> on_arrival) {
        SimTime start = std::max(eng_.now(), busy_until_);
        busy_until_ = start + model_.tx_time(frame_bytes);
        eng_.schedule(busy_until_ + model_.delay, std::move(on_arrival));
    }

  private:
    Engine& eng_;
    LinkModel model_;
    SimTime busy_until_{};
};

/// Reads the activation and LCID tags and prepends the 2-byte LWA
/// adaptation header carrying the bearer id (lcid - 2). A missing tag is
/// a pipeline bug, not a traffic error, and aborts the run.
LwaHeader lwaap_encapsulate(Packet& p);

/// Re-addresses an offloaded PDU for the delivery network: the buried
/// source IP/UDP header is removed and a fresh outermost one addressed
/// to the station takes its place, so the wire length does not change.
void readdress_for_delivery(Packet& p, std::uint32_t src, std::uint32_t dst, std::uint16_t src_port,
                            std::uint16_t dst_port);

} // namespace lwasim
