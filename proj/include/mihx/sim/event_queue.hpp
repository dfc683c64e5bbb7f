#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

namespace mihx::sim {

/// Single-threaded discrete-event queue. Events at equal times fire in
/// scheduling order.
class EventQueue {
 public:
  using Action = std::function<void()>;

  double now() const { return now_; }

  /// Throws std::logic_error when `t` is earlier than now().
  void schedule_at(double t, Action action);
  void schedule_in(double delay, Action action) { schedule_at(now_ + delay, std::move(action)); }

  /// Runs one event; false when the queue is empty.
  bool step();
  /// Runs until the queue is empty or the next event lies after `until`.
  void run(double until = std::numeric_limits<double>::infinity());

  std::size_t pending() const { return queue_.size(); }
  std::uint64_t executed() const { return executed_; }

 private:
  struct Entry {
    double t;
    std::uint64_t seq;
    Action action;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      return a.t != b.t ? a.t > b.t : a.seq > b.seq;
    }
  };

  std::priority_queue<Entry, std::vector<Entry>, Later> queue_;
  double now_ = 0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t executed_ = 0;
};

}  // namespace mihx::sim
