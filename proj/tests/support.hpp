#pragma once

// Small random generators shared by the property tests.

#include <random>
#include <vector>

#include "pogcat/int_matrix.hpp"
#include "pogcat/rational.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline int64_t integer(Rng& rng, int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

inline pogcat::Rational rational(Rng& rng, int64_t max_num, int64_t max_den) {
    return pogcat::Rational(integer(rng, -max_num, max_num), integer(rng, 1, max_den));
}

inline pogcat::Rational nonneg_rational(Rng& rng, int64_t max_num, int64_t max_den) {
    return pogcat::Rational(integer(rng, 0, max_num), integer(rng, 1, max_den));
}

inline pogcat::IntMatrix matrix(Rng& rng, size_t rows, size_t cols, int64_t bound) {
    pogcat::IntMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = integer(rng, -bound, bound);
    return m;
}

}  // namespace testgen
