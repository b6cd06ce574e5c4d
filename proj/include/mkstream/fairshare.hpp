#ifndef MKSTREAM_FAIRSHARE_HPP
#define MKSTREAM_FAIRSHARE_HPP

#include <cstdint>
#include <vector>

#include "mkstream/mk_policy.hpp"

namespace mkstream {

struct CapacityDemand {
    int32_t server_id = 0;
    int64_t required_capacity = 0;  // RC_i, frames per time unit
};

struct Allocation {
    int32_t server_id = 0;
    int64_t granted_capacity = 0;  // frames per time unit
};

// R = min(1, network_capacity / sum RC_i). Throws on an empty demand list,
// nonpositive network capacity, or a nonpositive demand.
double congestion_ratio(int64_t network_capacity,
                        const std::vector<CapacityDemand>& demands);

// Proportional capacity split. Under congestion the grants are the
// largest-remainder rounding of RC_i * R and sum exactly to
// network_capacity; fractional-part ties break toward the lower server_id.
// With headroom every server gets its full demand.
std::vector<Allocation> apportion(int64_t network_capacity,
                                  const std::vector<CapacityDemand>& demands);

struct DegradationFloors {
    int min_b = 0;  // lowest m_b per window
    int min_p = 1;  // lowest m_p per window
};

// Scales a full-quality constraint set (m = k per class, total k = required)
// down to total m = granted, shedding B first, then P, never I. Throws when
// granted cannot be reached without dropping below m_i + floors.
ClassConstraintSet allocation_to_constraints(const ClassConstraintSet& full,
                                             int64_t granted, int64_t required,
                                             const DegradationFloors& floors = {});

}  // namespace mkstream

#endif
