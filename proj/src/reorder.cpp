#include "lwasim/reorder.hpp"

namespace lwasim {

void ReorderBuffer::deliver(const DeliveryRecord& rec) {
    ++stats_.delivered;
    if (deliver_)
        deliver_(rec, eng_.now());
}

void ReorderBuffer::drain_consecutive() {
    for (auto it = held_.find(next_expected_); it != held_.end(); it = held_.find(next_expected_)) {
        deliver(it->second);
        held_.erase(it);
        ++next_expected_;
    }
}

void ReorderBuffer::ingest(const DeliveryRecord& rec) {
    bool progressed = false;
    if (rec.seq < next_expected_ || held_.count(rec.seq)) {
        ++stats_.duplicates;
        return;
    }
    if (rec.seq == next_expected_) {
        deliver(rec);
        ++next_expected_;
        drain_consecutive();
        progressed = true;
    } else {
        held_.emplace(rec.seq, rec);
        stats_.max_held = std::max(stats_.max_held, held_.size());
    }
    update_timer(progressed);
}

void ReorderBuffer::update_timer(bool progressed) {
    if (held_.empty()) {
        deadline_.reset();
        return;
    }
    if (!deadline_ || progressed) {
        SimTime dl = eng_.now() + t_reordering_;
        deadline_ = dl;
        eng_.schedule(dl, [this, dl] { on_timer(dl); });
    }
}

void ReorderBuffer::on_timer(SimTime deadline) {
    if (!deadline_ || *deadline_ != deadline)
        return; // superseded or cancelled
    ++stats_.timeouts;
    deadline_.reset();
    const std::uint32_t skip_to = held_.begin()->first;
    for (std::uint32_t s = next_expected_; s < skip_to; ++s) {
        ++stats_.lost;
        if (loss_)
            loss_(s, eng_.now());
    }
    next_expected_ = skip_to;
    drain_consecutive();
    update_timer(false);
}

void ReorderBuffer::final_flush() {
    deadline_.reset();
    while (!held_.empty()) {
        const std::uint32_t skip_to = held_.begin()->first;
        for (std::uint32_t s = next_expected_; s < skip_to; ++s) {
            ++stats_.lost;
            if (loss_)
                loss_(s, eng_.now());
        }
        next_expected_ = skip_to;
        drain_consecutive();
    }
}

} // namespace lwasim
