#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "lwasim/errors.hpp"
#include "lwasim/sim_time.hpp"

namespace lwasim {

using EventId = std::uint64_t;

/// Deterministic single-threaded discrete-event loop.
///
/// Events fire in timestamp order; equal timestamps fire in insertion
/// order (FIFO tie-break). The clock never moves backward, and an
/// attempt to schedule behind the clock is rejected as a causality
/// violation. The whole simulation state lives on the thread that calls
/// run_until(); the engine may be moved between threads but never
/// shared concurrently.
class Engine {
  public:
    using Action = std::function<void()>;

    SimTime now() const { return now_; }

    /// Number of events executed so far.
    std::uint64_t executed() const { return executed_; }

    bool empty() const { return queue_.empty(); }

    std::optional<SimTime> next_event_time() const {
        if (queue_.empty())
            return std::nullopt;
        return queue_.top().at;
    }

    EventId schedule(SimTime at, Action action);

    EventId schedule_in(SimTime delay, Action action) { return schedule(now_ + delay, std::move(action)); }

    /// Execute the earliest pending event. Returns false on an empty queue.
    bool run_one();

    /// Execute every event with fire time <= end (including events those
    /// events schedule), then advance the clock to end.
    void run_until(SimTime end);

  private:
    struct Event {
        SimTime at;
        EventId id;
        Action action;
    };
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            if (a.at != b.at)
                return a.at > b.at;
            return a.id > b.id;
        }
    };

    std::priority_queue<Event, std::vector<Event>, Later> queue_;
    SimTime now_{};
    EventId next_id_ = 0;
    std::uint64_t executed_ = 0;
};

} // namespace lwasim
