#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>

namespace iurlab {

/// Deterministic random stream.
///
/// The engine is std::mt19937_64 seeded with the 64-bit seed, whose output
/// sequence is fixed by the C++ standard. The transforms on top of it are
/// implemented here rather than with <random> distributions, whose outputs
/// differ between standard libraries:
///
///   uniform()  = (next_u64() >> 11) * 2^-53, in [0, 1)
///   index(n)   = rejection sampling on next_u64() below the largest multiple of n
///   normal()   = Marsaglia polar method on 2*uniform()-1 pairs; the second
///                deviate of each accepted pair is cached and returned next
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t index(std::size_t n);
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }
    double cauchy(double location, double scale);

    Eigen::VectorXd normal_vector(Eigen::Index n);
    Eigen::VectorXd uniform_vector(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

inline Rng seeded_rng(std::uint64_t seed) { return Rng(seed); }

/// SplitMix64 finalizer, used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace iurlab
