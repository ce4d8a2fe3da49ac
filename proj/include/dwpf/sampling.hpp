#pragma once

// Seeded random rational points. Numerators are drawn uniformly from [1,50]
// and denominators from [1,20], which keeps bignum growth bounded; draws are
// rejected until the spectral variables are collision-free (distinct u's,
// distinct v's, q != 1, u_i not in {v_j, v_j/q}). All randomness comes from
// one mt19937_64 stream, so a seed fully determines the point.

#include <dwpf/rational.hpp>
#include <dwpf/sixvertex.hpp>

#include <cstdint>
#include <random>

namespace dwpf {

class RationalSampler {
  public:
    explicit RationalSampler(std::uint64_t seed) : gen_(seed) {}

    Rational positive_rational();
    RapidityPoint rapidity_point(int n);

    // Uniform index in [0, bound); used for deterministic permutations.
    std::uint64_t index(std::uint64_t bound);

    // In-place Fisher-Yates driven by this sampler (std::shuffle is not
    // reproducible across standard libraries).
    template <class T>
    void shuffle(std::vector<T>& items) {
        for (size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[index(i)]);
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace dwpf
