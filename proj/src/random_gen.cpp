#include "polarmod/random_gen.hpp"

namespace polarmod {

double InstanceGen::uniform(double lo, double hi) {
    // Fixed-width mantissa draw keeps results identical across libstdc++
    // versions; std::uniform_real_distribution is not portable bit-for-bit.
    const std::uint64_t r = rng_() >> 11;  // 53 bits
    const double u = double(r) * (1.0 / 9007199254740992.0);
    return lo + (hi - lo) * u;
}

std::size_t InstanceGen::index(std::size_t bound) {
    return std::size_t(rng_() % bound);
}

BlockProfile InstanceGen::profile() {
    static const std::vector<std::vector<std::size_t>> choices = {{1}, {2}, {1, 2}, {2, 3}};
    return BlockProfile(choices[index(choices.size())]);
}

AlgElement InstanceGen::element(const BlockProfile& p) {
    std::vector<CMat> blocks;
    for (std::size_t n : p.sizes) {
        CMat b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                b(i, j) = Complex(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
        blocks.push_back(std::move(b));
    }
    return AlgElement(p, std::move(blocks));
}

AlgElement InstanceGen::hermitian_element(const BlockProfile& p) {
    const AlgElement a = element(p);
    std::vector<CMat> blocks;
    for (std::size_t i = 0; i < p.block_count(); ++i)
        blocks.push_back((a.block(i) + a.block(i).adjoint()) * Complex(0.5, 0.0));
    return AlgElement(p, std::move(blocks));
}

ModuleVector InstanceGen::vector(const BlockProfile& p, std::size_t rank) {
    std::vector<AlgElement> e;
    for (std::size_t j = 0; j < rank; ++j) e.push_back(element(p));
    return ModuleVector(p, std::move(e));
}

OperatorMatrix InstanceGen::op(const BlockProfile& p, std::size_t domain_rank,
                               std::size_t codomain_rank) {
    std::vector<AlgElement> e;
    for (std::size_t i = 0; i < domain_rank * codomain_rank; ++i) e.push_back(element(p));
    return OperatorMatrix(p, domain_rank, codomain_rank, std::move(e));
}

OperatorMatrix InstanceGen::op(const BlockProfile& p, std::size_t max_rank) {
    const std::size_t k = 1 + index(max_rank);
    const std::size_t m = 1 + index(max_rank);
    return op(p, k, m);
}

}  // namespace polarmod
