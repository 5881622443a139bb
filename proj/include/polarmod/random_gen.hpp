#pragma once

#include <cstdint>
#include <random>

#include "polarmod/hilbmod.hpp"

namespace polarmod {

// Seeded generator for the randomized suites.  Deterministic for a fixed
// seed across platforms (mt19937_64 plus explicit scaling only).
class InstanceGen {
public:
    explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi);
    std::size_t index(std::size_t bound);  // in [0, bound)

    // One of [1], [2], [1,2], [2,3].
    BlockProfile profile();

    AlgElement element(const BlockProfile& p);
    AlgElement hermitian_element(const BlockProfile& p);
    ModuleVector vector(const BlockProfile& p, std::size_t rank);
    OperatorMatrix op(const BlockProfile& p, std::size_t domain_rank, std::size_t codomain_rank);
    // Random operator with ranks drawn in [1, max_rank].
    OperatorMatrix op(const BlockProfile& p, std::size_t max_rank = 3);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace polarmod
