#pragma once

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "injectsim/core.hpp"

namespace injectsim {

/// Min-heap keyed lexicographically on (time, insertion sequence). Equal-time
/// events dequeue in the order they were scheduled, which pins the whole
/// simulation order given a seed.
template <class Event>
class EventQueue {
public:
    void schedule(SimTime t, Event ev) {
        if (t < now_) {
            throw ScenarioError("schedule: event at " + t.str() + " is in the past (now " +
                                now_.str() + ")");
        }
        heap_.push(Entry{t, next_seq_++, std::move(ev)});
    }

    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }
    SimTime next_time() const { return heap_.top().time; }
    SimTime now() const { return now_; }

    std::pair<SimTime, Event> pop() {
        Entry e = heap_.top();
        heap_.pop();
        now_ = e.time;
        return {e.time, std::move(e.event)};
    }

private:
    struct Entry {
        SimTime time;
        std::uint64_t seq;
        Event event;
    };
    struct Later {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.time != b.time) return a.time > b.time;
            return a.seq > b.seq;
        }
    };

    std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
    std::uint64_t next_seq_ = 0;
    SimTime now_;
};

}  // namespace injectsim
