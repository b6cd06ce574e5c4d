#include "mkstream/mk_policy.hpp"

#include <algorithm>
#include <stdexcept>

namespace mkstream {

bool ClassConstraintSet::valid(bool strict_ordering) const {
    if (!i.valid() || !p.valid() || !b.valid()) return false;
    if (i.m != i.k) return false;
    const double ri = static_cast<double>(i.m) / i.k;
    const double rp = static_cast<double>(p.m) / p.k;
    const double rb = static_cast<double>(b.m) / b.k;
    if (strict_ordering) return ri > rp && rp > rb;
    return ri >= rp && rp >= rb;
}

OutcomeWindow::OutcomeWindow(MkConstraint c) : constraint_(c) {
    if (!c.valid())
        throw std::invalid_argument("OutcomeWindow: constraint must satisfy 0 <= m <= k");
    ring_.assign(static_cast<size_t>(c.k), false);
}

bool OutcomeWindow::record(bool met) {
    const int k = constraint_.k;
    if (size_ == k) {
        // evict oldest
        if (!ring_[static_cast<size_t>(head_)]) --misses_;
        ring_[static_cast<size_t>(head_)] = met;
        head_ = (head_ + 1) % k;
    } else {
        ring_[static_cast<size_t>((head_ + size_) % k)] = met;
        ++size_;
    }
    if (!met) ++misses_;
    return in_dynamic_failure();
}

bool OutcomeWindow::in_dynamic_failure() const {
    if (size_ < constraint_.k) return false;
    return misses_ > constraint_.k - constraint_.m;
}

bool dynamic_failure(const std::vector<bool>& history, MkConstraint c) {
    if (!c.valid())
        throw std::invalid_argument("dynamic_failure: constraint must satisfy 0 <= m <= k");
    const int n = static_cast<int>(history.size());
    const int k = c.k;
    if (n < k) return false;
    int misses = 0;
    for (int idx = 0; idx < k; ++idx)
        if (!history[static_cast<size_t>(idx)]) ++misses;
    if (misses > k - c.m) return true;
    for (int start = 1; start + k <= n; ++start) {
        if (!history[static_cast<size_t>(start - 1)]) --misses;
        if (!history[static_cast<size_t>(start + k - 1)]) ++misses;
        if (misses > k - c.m) return true;
    }
    return false;
}

RemovalCounts frames_to_remove(const ClassConstraintSet& classes) {
    if (!classes.valid())
        throw std::invalid_argument("frames_to_remove: invalid class constraint set");
    RemovalCounts r;
    r.i = classes.i.k - classes.i.m;  // zero by the i.m == i.k invariant
    r.p = classes.p.k - classes.p.m;
    r.b = classes.b.k - classes.b.m;
    return r;
}

namespace {

// Greedy feasibility: n picks with pairwise gap >= g, anchored at the
// first candidate. Shifting the leftmost pick left never shrinks a gap,
// so anchoring is lossless.
bool gap_feasible(const std::vector<int>& pos, int n, int g) {
    int taken = 1;
    int last = pos.front();
    for (size_t idx = 1; idx < pos.size() && taken < n; ++idx) {
        if (pos[idx] - last >= g) {
            last = pos[idx];
            ++taken;
        }
    }
    return taken >= n;
}

// Can `need` more picks with gap >= g be made from pos[from..] given the
// previous pick at `last`?
bool suffix_feasible(const std::vector<int>& pos, size_t from, int last, int need, int g) {
    for (size_t idx = from; idx < pos.size() && need > 0; ++idx) {
        if (pos[idx] - last >= g) {
            last = pos[idx];
            --need;
        }
    }
    return need == 0;
}

}  // namespace

std::vector<int> select_evenly_spaced(const std::vector<int>& positions, int n) {
    if (n < 0) throw std::invalid_argument("select_evenly_spaced: negative count");
    if (n > static_cast<int>(positions.size()))
        throw std::invalid_argument("select_evenly_spaced: count exceeds candidates");
    if (n == 0) return {};
    if (n == 1) return {positions.front()};

    int best_gap = 1;
    for (int g = positions.back() - positions.front(); g >= 1; --g) {
        if (gap_feasible(positions, n, g)) {
            best_gap = g;
            break;
        }
    }

    // Lexicographically smallest set achieving best_gap: take the smallest
    // feasible candidate at each slot.
    std::vector<int> picked;
    picked.reserve(static_cast<size_t>(n));
    picked.push_back(positions.front());
    size_t idx = 1;
    while (static_cast<int>(picked.size()) < n) {
        while (idx < positions.size()) {
            const int cand = positions[idx];
            if (cand - picked.back() >= best_gap &&
                suffix_feasible(positions, idx + 1, cand,
                                n - static_cast<int>(picked.size()) - 1, best_gap)) {
                picked.push_back(cand);
                ++idx;
                break;
            }
            ++idx;
        }
    }
    return picked;
}

std::vector<int> plan_degradation(const KFramePattern& pattern,
                                  const RemovalCounts& removal) {
    if (removal.i != 0)
        throw std::invalid_argument("plan_degradation: I frames cannot be dropped");
    if (removal.p < 0 || removal.b < 0)
        throw std::invalid_argument("plan_degradation: negative removal count");

    const std::vector<int> o_pos = pattern.positions(PatternLabel::O);
    const std::vector<int> h_pos = pattern.positions(PatternLabel::H);
    if (removal.b > static_cast<int>(o_pos.size()))
        throw std::invalid_argument("plan_degradation: more O drops than O positions");
    if (removal.p > static_cast<int>(h_pos.size()))
        throw std::invalid_argument("plan_degradation: more H drops than H positions");

    std::vector<int> drops = select_evenly_spaced(o_pos, removal.b);
    const std::vector<int> h_drops = select_evenly_spaced(h_pos, removal.p);
    drops.insert(drops.end(), h_drops.begin(), h_drops.end());
    std::sort(drops.begin(), drops.end());
    return drops;
}

ScheduleDecision schedule_frame(PatternLabel label, bool deadline_missed,
                                bool all_optional_rejected) {
    bool reject = false;
    switch (label) {
        case PatternLabel::M:
            reject = false;
            break;
        case PatternLabel::O:
            reject = deadline_missed;
            break;
        case PatternLabel::H:
            reject = all_optional_rejected && deadline_missed;
            break;
    }
    if (reject) return {Action::Reject, ServerAfter::Available};
    return {Action::Send, ServerAfter::Occupied};
}

ScheduleDecision schedule_frame(const Frame& frame, bool deadline_missed,
                                bool all_optional_rejected) {
    return schedule_frame(frame.label, deadline_missed, all_optional_rejected);
}

}  // namespace mkstream
