#include "mkstream/replication.hpp"

#include <stdexcept>

namespace mkstream {

namespace {

double score_of(const std::map<int32_t, double>& qos_scores, int32_t server_id) {
    auto it = qos_scores.find(server_id);
    if (it == qos_scores.end())
        throw std::invalid_argument("handle_saturation: candidate missing from qos_scores");
    return it->second;
}

}  // namespace

SaturationDecision handle_saturation(const std::vector<NeighborReport>& reports,
                                     const std::map<int32_t, double>& qos_scores) {
    if (reports.empty())
        throw std::invalid_argument("handle_saturation: empty report list");

    const NeighborReport* best_holder = nullptr;
    double best_holder_score = 0.0;
    const NeighborReport* best_free = nullptr;
    double best_free_score = 0.0;

    for (const NeighborReport& r : reports) {
        if (r.saturated) continue;
        const double score = score_of(qos_scores, r.server_id);
        if (r.has_video) {
            if (!best_holder || score > best_holder_score ||
                (score == best_holder_score && r.server_id < best_holder->server_id)) {
                best_holder = &r;
                best_holder_score = score;
            }
        } else {
            if (!best_free || score > best_free_score ||
                (score == best_free_score && r.server_id < best_free->server_id)) {
                best_free = &r;
                best_free_score = score;
            }
        }
    }

    if (best_holder) return {SaturationAction::Redirect, best_holder->server_id};
    if (best_free) return {SaturationAction::Replicate, best_free->server_id};
    return {SaturationAction::NoAction, -1};
}

double apply_replication(const ServerState& source, ServerState& target,
                         int32_t video_id, int64_t video_frames) {
    if (!source.has_video(video_id))
        throw std::invalid_argument("apply_replication: source does not hold the video");
    if (target.has_video(video_id) || target.replica_pending(video_id))
        throw std::invalid_argument("apply_replication: target already has the video");
    if (target.catalog_load() >= target.capacity_c)
        throw std::invalid_argument("apply_replication: target catalog is full");
    if (source.speed <= 0.0)
        throw std::invalid_argument("apply_replication: source speed must be > 0");

    target.pending_replicas.push_back(video_id);
    return static_cast<double>(video_frames) / source.speed;
}

void complete_replication(ServerState& target, int32_t video_id) {
    auto it = std::find(target.pending_replicas.begin(), target.pending_replicas.end(),
                        video_id);
    if (it == target.pending_replicas.end())
        throw std::invalid_argument("complete_replication: no pending copy of the video");
    target.pending_replicas.erase(it);
    target.catalog.push_back(video_id);
}

}  // namespace mkstream
