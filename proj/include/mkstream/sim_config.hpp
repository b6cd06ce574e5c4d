#ifndef MKSTREAM_SIM_CONFIG_HPP
#define MKSTREAM_SIM_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mkstream {

enum class Strategy : uint8_t { Baseline, Mk, MkKframes, MkKframesRepl };

const char* strategy_name(Strategy s);
// Throws std::invalid_argument on an unknown name.
Strategy strategy_from_name(const std::string& name);

// Test/embedding hook: a session already streaming at t = 0, optionally
// starting from a degraded constraint level.
struct PreloadSession {
    int32_t video_id = 0;
    double rate = 30.0;
    int initial_m_total = -1;  // -1 = full quality
};

struct SimConfig {
    // system
    double t_sim = 100.0;
    int nb_measure = 57;
    // video streams
    int nb_video = 102;
    int nb_gop = 60;
    int nb_p = 6;
    // client demands
    double lambda = 1.05;
    double qos = 30.0;
    double tm_service = 10.0;
    // video servers
    int nb_vs = 52;
    double beta = 150.0;
    int capacity_c = 10;
    // network
    int64_t net_capacity = 500;
    double p_loss = 0.01;
    double net_latency = 0.5;
    // control
    Strategy strategy = Strategy::MkKframes;
    uint64_t seed = 1;
    double deadline_slack_multiplier = 60.0;
    double sampling_period = 1.0;
    int floor_b = 0;
    int floor_p = 1;
    int restore_hold_periods = 2;

    // not config-file keys; used by embedding code and tests
    std::vector<PreloadSession> preload;
    bool record_constraint_trace = false;

    // Throws std::invalid_argument naming the offending field and its
    // accepted range.
    void validate() const;
};

}  // namespace mkstream

#endif
