#ifndef MKSTREAM_REPLICATION_HPP
#define MKSTREAM_REPLICATION_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "mkstream/server_state.hpp"

namespace mkstream {

struct NeighborReport {
    int32_t server_id = 0;
    bool has_video = false;
    bool saturated = false;
};

enum class SaturationAction : uint8_t { Redirect, Replicate, NoAction };

struct SaturationDecision {
    SaturationAction action = SaturationAction::NoAction;
    int32_t target = -1;
};

// Three-scenario rule for a saturated holder. A non-saturated neighbor
// that already holds the video serves directly (Redirect); otherwise the
// best non-saturated non-holder receives a copy (Replicate); with every
// neighbor saturated nothing can be done. Candidates are ranked by their
// expected-QoS score, ties toward the lower server_id. Throws on an empty
// report list or a candidate missing from qos_scores.
SaturationDecision handle_saturation(const std::vector<NeighborReport>& reports,
                                     const std::map<int32_t, double>& qos_scores);

// Registers video_id as an inbound replica on the target and returns the
// transfer duration (video_frames / source speed). The copy becomes
// servable only once the caller completes it after that delay. Throws when
// the source lacks the video, the target already has or is receiving it,
// or the target catalog is full.
double apply_replication(const ServerState& source, ServerState& target,
                         int32_t video_id, int64_t video_frames);

// Moves a finished inbound copy into the target catalog.
void complete_replication(ServerState& target, int32_t video_id);

}  // namespace mkstream

#endif
