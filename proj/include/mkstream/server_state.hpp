#ifndef MKSTREAM_SERVER_STATE_HPP
#define MKSTREAM_SERVER_STATE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <vector>

#include "mkstream/stream_model.hpp"

namespace mkstream {

// Pending frames of one video server. FIFO by default; in priority mode
// mandatory frames go out first, then hard optional, then optional
// (FIFO within each label).
class FrameQueue {
public:
    explicit FrameQueue(bool label_priority = false)
        : label_priority_(label_priority) {}

    void push(const Frame& f) {
        if (label_priority_)
            by_label_[static_cast<size_t>(f.label)].push_back(f);
        else
            fifo_.push_back(f);
        ++size_;
    }

    bool empty() const { return size_ == 0; }
    int64_t size() const { return size_; }

    Frame pop() {
        --size_;
        if (!label_priority_) {
            Frame f = fifo_.front();
            fifo_.pop_front();
            return f;
        }
        for (auto& dq : by_label_) {
            if (!dq.empty()) {
                Frame f = dq.front();
                dq.pop_front();
                return f;
            }
        }
        return {};  // unreachable while size_ is kept consistent
    }

    void clear() {
        fifo_.clear();
        for (auto& dq : by_label_) dq.clear();
        size_ = 0;
    }

private:
    bool label_priority_;
    std::deque<Frame> fifo_;
    // indexed by PatternLabel: M=0, H=1, O=2
    std::array<std::deque<Frame>, 3> by_label_;
    int64_t size_ = 0;
};

struct ServerState {
    int32_t server_id = 0;
    std::vector<int32_t> catalog;           // videos ready to serve
    std::vector<int32_t> pending_replicas;  // inbound copies, not yet usable
    double speed = 0.0;                     // beta, frames per time unit
    int capacity_c = 0;                     // catalog slots
    FrameQueue queue;
    bool occupied = false;
    bool saturated = false;

    bool has_video(int32_t video_id) const {
        return std::find(catalog.begin(), catalog.end(), video_id) != catalog.end();
    }
    bool replica_pending(int32_t video_id) const {
        return std::find(pending_replicas.begin(), pending_replicas.end(), video_id) !=
               pending_replicas.end();
    }
    int catalog_load() const {
        return static_cast<int>(catalog.size() + pending_replicas.size());
    }
};

}  // namespace mkstream

#endif
