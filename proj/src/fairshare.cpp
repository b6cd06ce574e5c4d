#include "mkstream/fairshare.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mkstream {

namespace {

int64_t total_demand(const std::vector<CapacityDemand>& demands) {
    if (demands.empty())
        throw std::invalid_argument("fairshare: demand list is empty");
    int64_t sum = 0;
    for (const CapacityDemand& d : demands) {
        if (d.required_capacity <= 0)
            throw std::invalid_argument("fairshare: required capacity must be > 0");
        sum += d.required_capacity;
    }
    return sum;
}

}  // namespace

double congestion_ratio(int64_t network_capacity,
                        const std::vector<CapacityDemand>& demands) {
    if (network_capacity <= 0)
        throw std::invalid_argument("fairshare: network capacity must be > 0");
    const int64_t sum = total_demand(demands);
    if (network_capacity >= sum) return 1.0;
    return static_cast<double>(network_capacity) / static_cast<double>(sum);
}

std::vector<Allocation> apportion(int64_t network_capacity,
                                  const std::vector<CapacityDemand>& demands) {
    if (network_capacity <= 0)
        throw std::invalid_argument("fairshare: network capacity must be > 0");
    const int64_t sum = total_demand(demands);

    std::vector<Allocation> out;
    out.reserve(demands.size());

    if (sum <= network_capacity) {
        for (const CapacityDemand& d : demands)
            out.push_back({d.server_id, d.required_capacity});
        return out;
    }

    // Largest-remainder apportionment on the exact rational quotas
    // RC_i * N / sum: floors first, then one extra unit per largest
    // remainder, ties toward the lower server_id.
    struct Part {
        size_t idx;
        int64_t rem;
    };
    std::vector<Part> parts;
    parts.reserve(demands.size());
    int64_t assigned = 0;
    for (size_t idx = 0; idx < demands.size(); ++idx) {
        const int64_t num = demands[idx].required_capacity * network_capacity;
        const int64_t floor_q = num / sum;
        out.push_back({demands[idx].server_id, floor_q});
        parts.push_back({idx, num % sum});
        assigned += floor_q;
    }
    int64_t leftover = network_capacity - assigned;
    std::sort(parts.begin(), parts.end(), [&](const Part& a, const Part& b) {
        if (a.rem != b.rem) return a.rem > b.rem;
        return demands[a.idx].server_id < demands[b.idx].server_id;
    });
    for (size_t idx = 0; idx < parts.size() && leftover > 0; ++idx, --leftover)
        out[parts[idx].idx].granted_capacity += 1;
    return out;
}

ClassConstraintSet allocation_to_constraints(const ClassConstraintSet& full,
                                             int64_t granted, int64_t required,
                                             const DegradationFloors& floors) {
    if (!full.valid())
        throw std::invalid_argument("allocation_to_constraints: invalid full-quality set");
    if (full.i.m != full.i.k || full.p.m != full.p.k || full.b.m != full.b.k)
        throw std::invalid_argument(
            "allocation_to_constraints: full-quality set must have m = k per class");
    if (required != full.total_k())
        throw std::invalid_argument(
            "allocation_to_constraints: required must equal the set's total k");
    if (granted > required)
        throw std::invalid_argument("allocation_to_constraints: granted exceeds required");

    const int64_t floor_total = full.i.m + std::min(floors.min_p, full.p.k) +
                                std::min(floors.min_b, full.b.k);
    if (granted < floor_total)
        throw std::invalid_argument(
            "allocation_to_constraints: granted capacity below the mandatory floor");

    ClassConstraintSet degraded = full;
    int64_t deficit = required - granted;

    const int b_room = full.b.k - std::min(floors.min_b, full.b.k);
    const int b_cut = static_cast<int>(std::min<int64_t>(deficit, b_room));
    degraded.b.m -= b_cut;
    deficit -= b_cut;

    const int p_room = full.p.k - std::min(floors.min_p, full.p.k);
    const int p_cut = static_cast<int>(std::min<int64_t>(deficit, p_room));
    degraded.p.m -= p_cut;
    deficit -= p_cut;

    // floor check above guarantees the deficit is exhausted
    return degraded;
}

}  // namespace mkstream
