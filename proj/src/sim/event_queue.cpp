#include "mihx/sim/event_queue.hpp"

#include <stdexcept>
#include <string>

namespace mihx::sim {

void EventQueue::schedule_at(double t, Action action) {
  if (t < now_) {
    throw std::logic_error("event scheduled in the past: t=" + std::to_string(t) +
                           " now=" + std::to_string(now_));
  }
  queue_.push(Entry{t, next_seq_++, std::move(action)});
}

bool EventQueue::step() {
  if (queue_.empty()) return false;
  // priority_queue::top is const; the action is moved out through a copy of the entry.
  Entry e = queue_.top();
  queue_.pop();
  now_ = e.t;
  ++executed_;
  e.action();
  return true;
}

void EventQueue::run(double until) {
  while (!queue_.empty() && queue_.top().t <= until) step();
}

}  // namespace mihx::sim
