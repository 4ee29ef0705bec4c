#pragma once

#include <cstdint>
#include <vector>

namespace rcm {

// All randomness in the library flows from a (master seed, stream) pair.
// Streams index replicates (or batches), so replicate-parallel runs are
// reproducible independently of scheduling.
struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

// SplitMix64 finalizer. Used both as a stream generator and as a keyed hash
// for order-independent per-pair coins.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Domain-separation tags so different consumers of the same RngSpec never
// collide on the underlying counter sequence.
enum class RngPurpose : std::uint64_t {
    point_count = 0x706f6973736f6eULL,  // background Poisson count
    point_coords = 0x636f6f7264ULL,     // point positions
    pair_coin = 0x70616972ULL,          // adjacency coins
    proposal = 0x70726f70ULL,           // importance-sampling proposals
};

// Counter-based uniform stream: the k-th output is a pure function of
// (seed, stream, purpose, k), so sequences are reproducible bit-for-bit.
class CounterRng {
  public:
    CounterRng(RngSpec spec, RngPurpose purpose)
        : key_(mix64(mix64(spec.seed) ^ mix64(spec.stream ^ 0x9d8f3afce71bc021ULL)) ^
               static_cast<std::uint64_t>(purpose)) {}

    std::uint64_t next_u64() { return mix64(key_ ^ mix64(counter_++)); }

    // uniform on [0, 1)
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // standard normal (Box-Muller; consumes two uniforms per pair)
    double next_normal();

    // Poisson(mean) by chunked inversion; exact for any mean >= 0.
    std::uint64_t next_poisson(double mean);

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

// Order-independent coin for the unordered pair {i, j}: the same value is
// produced no matter how candidate pairs are enumerated.
inline double pair_unit(RngSpec spec, std::uint64_t i, std::uint64_t j) {
    if (i > j) { const auto t = i; i = j; j = t; }
    std::uint64_t h = mix64(spec.seed ^ static_cast<std::uint64_t>(RngPurpose::pair_coin));
    h = mix64(h ^ mix64(spec.stream));
    h = mix64(h ^ mix64(i ^ 0x517cc1b727220a95ULL));
    h = mix64(h ^ mix64(j));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace rcm
