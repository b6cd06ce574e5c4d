#include "mkstream/stream_model.hpp"

#include <stdexcept>

namespace mkstream {

PatternLabel label_for_class(FrameClass c) {
    switch (c) {
        case FrameClass::I: return PatternLabel::M;
        case FrameClass::P: return PatternLabel::H;
        case FrameClass::B: return PatternLabel::O;
    }
    return PatternLabel::O;
}

char class_char(FrameClass c) {
    switch (c) {
        case FrameClass::I: return 'I';
        case FrameClass::P: return 'P';
        case FrameClass::B: return 'B';
    }
    return '?';
}

char label_char(PatternLabel l) {
    switch (l) {
        case PatternLabel::M: return 'M';
        case PatternLabel::H: return 'H';
        case PatternLabel::O: return 'O';
    }
    return '?';
}

std::string GoPTemplate::to_string() const {
    std::string s;
    s.reserve(frames.size());
    for (FrameClass c : frames) s.push_back(class_char(c));
    return s;
}

std::string KFramePattern::to_string() const {
    std::string s;
    s.reserve(labels.size());
    for (PatternLabel l : labels) s.push_back(label_char(l));
    return s;
}

int KFramePattern::count(PatternLabel l) const {
    int n = 0;
    for (PatternLabel x : labels)
        if (x == l) ++n;
    return n;
}

std::vector<int> KFramePattern::positions(PatternLabel l) const {
    std::vector<int> pos;
    for (int i = 0; i < length(); ++i)
        if (labels[i] == l) pos.push_back(i);
    return pos;
}

GoPTemplate build_gop_template(int nb_p, int b_per_group) {
    if (nb_p < 1)
        throw std::invalid_argument("build_gop_template: nb_p must be >= 1");
    if (b_per_group < 0)
        throw std::invalid_argument("build_gop_template: b_per_group must be >= 0");

    GoPTemplate tpl;
    tpl.nb_p = nb_p;
    tpl.b_per_group = b_per_group;
    tpl.frames.reserve(1 + nb_p + (nb_p + 1) * b_per_group);
    tpl.frames.push_back(FrameClass::I);
    for (int p = 0; p < nb_p; ++p) {
        for (int b = 0; b < b_per_group; ++b) tpl.frames.push_back(FrameClass::B);
        tpl.frames.push_back(FrameClass::P);
    }
    for (int b = 0; b < b_per_group; ++b) tpl.frames.push_back(FrameClass::B);
    return tpl;
}

KFramePattern classify_gop(const GoPTemplate& tpl) {
    KFramePattern pat;
    pat.labels.reserve(tpl.frames.size());
    for (FrameClass c : tpl.frames) pat.labels.push_back(label_for_class(c));
    return pat;
}

std::vector<Frame> generate_stream(int32_t stream_id, int nb_gop,
                                   const GoPTemplate& tpl,
                                   double required_rate, double start_time,
                                   double deadline_slack) {
    if (nb_gop < 1)
        throw std::invalid_argument("generate_stream: nb_gop must be >= 1");
    if (required_rate <= 0.0)
        throw std::invalid_argument("generate_stream: required_rate must be > 0");

    const KFramePattern pat = classify_gop(tpl);
    const int gop_len = tpl.length();
    const double interval = 1.0 / required_rate;

    std::vector<Frame> out;
    out.reserve(static_cast<size_t>(nb_gop) * gop_len);
    int64_t n = 0;
    for (int g = 0; g < nb_gop; ++g) {
        for (int s = 0; s < gop_len; ++s, ++n) {
            Frame f;
            f.stream_id = stream_id;
            f.gop_index = g;
            f.seq_in_gop = static_cast<int16_t>(s);
            f.cls = tpl.frames[s];
            f.label = pat.labels[s];
            f.release_time = start_time + static_cast<double>(n) * interval;
            f.deadline = f.release_time + deadline_slack;
            out.push_back(f);
        }
    }
    return out;
}

}  // namespace mkstream
