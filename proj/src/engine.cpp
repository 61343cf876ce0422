#include "lwasim/engine.hpp"

#include <string>

namespace lwasim {

EventId Engine::schedule(SimTime at, Action action) {
    if (at < now_) {
        throw CausalityError("causality: cannot schedule at t=" + std::to_string(at.nanos) +
                             "ns, clock already at t=" + std::to_string(now_.nanos) + "ns");
    }
    EventId id = next_id_++;
    queue_.push(Event{at, id, std::move(action)});
    return id;
}

bool Engine::run_one() {
    if (queue_.empty())
        return false;
    // priority_queue::top() is const; the event is popped right after the
    // move, so stealing the action here is safe.
    Event ev = std::move(const_cast<Event&>(queue_.top()));
    queue_.pop();
    now_ = ev.at;
    ++executed_;
    ev.action();
    return true;
}

void Engine::run_until(SimTime end) {
    while (!queue_.empty() && queue_.top().at <= end)
        run_one();
    if (now_ < end)
        now_ = end;
}

} // namespace lwasim
