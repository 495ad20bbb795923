#pragma once

#include "lie3/coeff.hpp"

#include <random>

namespace lie3::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240917);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational small_rational() {
    return Rational(uniform(-7, 7), uniform(1, 5));
}

inline CycQ random_cycq() { return CycQ(small_rational(), small_rational()); }

}  // namespace lie3::testing
