#ifndef MKSTREAM_RNG_HPP
#define MKSTREAM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace mkstream {

// mt19937_64 with hand-rolled samplers. The standard distributions are
// implementation-defined, which would break byte-identical golden outputs
// across toolchains.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, n)
    int64_t uniform_int(int64_t n) {
        return static_cast<int64_t>(engine_() % static_cast<uint64_t>(n));
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // exponential inter-arrival gap with the given rate
    double exponential(double rate) {
        return -std::log1p(-uniform01()) / rate;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t idx = v.size(); idx > 1; --idx) {
            const size_t j = static_cast<size_t>(uniform_int(static_cast<int64_t>(idx)));
            std::swap(v[idx - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace mkstream

#endif
