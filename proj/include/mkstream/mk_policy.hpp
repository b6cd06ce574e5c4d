#ifndef MKSTREAM_MK_POLICY_HPP
#define MKSTREAM_MK_POLICY_HPP

#include <vector>

#include "mkstream/stream_model.hpp"

namespace mkstream {

// At least m of any k consecutive frames must meet their deadline.
// m = 0 expresses a fully shed class (nothing guaranteed).
struct MkConstraint {
    int m = 1;
    int k = 1;

    bool valid() const { return 0 <= m && m <= k && k >= 1; }
};

// Per-class constraints. I frames are never shed, so i.m == i.k. The
// criticality ordering I > P > B is enforced on the guarantee ratio m/k;
// the published examples order that way (absolute m counts do not, since a
// GoP holds far more B than I frames).
struct ClassConstraintSet {
    MkConstraint i;
    MkConstraint p;
    MkConstraint b;

    bool valid(bool strict_ordering = false) const;
    int total_m() const { return i.m + p.m + b.m; }
    int total_k() const { return i.k + p.k + b.k; }
};

struct RemovalCounts {
    int i = 0;
    int p = 0;
    int b = 0;

    int total() const { return i + p + b; }
};

// Sliding record of the most recent deadline outcomes for one frame class
// of one stream (true = met).
class OutcomeWindow {
public:
    OutcomeWindow() = default;
    explicit OutcomeWindow(MkConstraint c);

    // Appends an outcome, evicting the oldest beyond k. Returns the
    // dynamic-failure flag for the stored window.
    bool record(bool met);

    bool in_dynamic_failure() const;
    int size() const { return size_; }
    int misses() const { return misses_; }
    MkConstraint constraint() const { return constraint_; }

private:
    MkConstraint constraint_{1, 1};
    std::vector<bool> ring_;
    int head_ = 0;
    int size_ = 0;
    int misses_ = 0;
};

enum class Action : uint8_t { Send, Reject };
enum class ServerAfter : uint8_t { Occupied, Available };

struct ScheduleDecision {
    Action action = Action::Send;
    ServerAfter server_state_after = ServerAfter::Occupied;
};

// True iff some window of k consecutive outcomes holds more than (k - m)
// misses. Histories shorter than k contain no full window and cannot fail.
bool dynamic_failure(const std::vector<bool>& history, MkConstraint c);

// Per-class shed counts (k - m); the I component is always zero.
RemovalCounts frames_to_remove(const ClassConstraintSet& classes);

// Picks n positions from a sorted candidate list maximizing the minimum
// gap between consecutive picks; ties resolve to the lexicographically
// smallest set. Exposed for the degradation planner and its tests.
std::vector<int> select_evenly_spaced(const std::vector<int>& positions, int n);

// Positions to drop from one pattern instance: removal.b O-positions and
// removal.p H-positions, each set spaced as evenly as possible. M positions
// are never selected. Throws when a count exceeds the available positions
// or removal.i != 0. Result is sorted ascending.
std::vector<int> plan_degradation(const KFramePattern& pattern,
                                  const RemovalCounts& removal);

// Algorithm-1 send/reject rule. M frames always go out; O frames drop once
// late; H frames drop only when late and every optional frame of the
// current window was already rejected.
ScheduleDecision schedule_frame(PatternLabel label, bool deadline_missed,
                                bool all_optional_rejected);
ScheduleDecision schedule_frame(const Frame& frame, bool deadline_missed,
                                bool all_optional_rejected);

}  // namespace mkstream

#endif
