#ifndef MKSTREAM_STREAM_MODEL_HPP
#define MKSTREAM_STREAM_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mkstream {

// MPEG frame classes, criticality I > P > B.
enum class FrameClass : uint8_t { I, P, B };

// Per-frame importance labels: Mandatory, Hard optional, Optional.
enum class PatternLabel : uint8_t { M, H, O };

PatternLabel label_for_class(FrameClass c);
char class_char(FrameClass c);
char label_char(PatternLabel l);

// Cyclic GoP layout: I, then nb_p repetitions of (B^b_per_group, P),
// then one trailing group of b_per_group B frames.
struct GoPTemplate {
    int nb_p = 0;
    int b_per_group = 0;
    std::vector<FrameClass> frames;

    int length() const { return static_cast<int>(frames.size()); }
    std::string to_string() const;
};

// Label string over {M,H,O}, same length as the GoP it classifies.
struct KFramePattern {
    std::vector<PatternLabel> labels;

    int length() const { return static_cast<int>(labels.size()); }
    std::string to_string() const;
    int count(PatternLabel l) const;
    // Positions within the pattern carrying the given label, ascending.
    std::vector<int> positions(PatternLabel l) const;
};

struct Frame {
    int32_t stream_id = 0;
    int32_t gop_index = 0;
    int16_t seq_in_gop = 0;
    FrameClass cls = FrameClass::I;
    PatternLabel label = PatternLabel::M;
    double release_time = 0.0;
    double deadline = 0.0;
};

struct VideoStream {
    int32_t video_id = 0;
    int nb_gop = 0;
    GoPTemplate gop;
    KFramePattern pattern;
    double required_rate = 0.0;

    int total_frames() const { return nb_gop * gop.length(); }
};

// Throws std::invalid_argument when nb_p < 1 or b_per_group < 0.
GoPTemplate build_gop_template(int nb_p, int b_per_group = 2);

KFramePattern classify_gop(const GoPTemplate& tpl);

// Frames spaced 1/required_rate apart starting at start_time; deadline is
// release_time + deadline_slack (in time units).
std::vector<Frame> generate_stream(int32_t stream_id, int nb_gop,
                                   const GoPTemplate& tpl,
                                   double required_rate, double start_time,
                                   double deadline_slack);

}  // namespace mkstream

#endif
