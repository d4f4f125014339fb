#ifndef CONSERVA_RANDOMGEN_HPP
#define CONSERVA_RANDOMGEN_HPP

#include <cstdint>

#include "algebra.hpp"

namespace conserva {

/// splitmix64 — tiny, fully deterministic across platforms (the standard
/// distributions are not), which the seeded verification runs rely on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Small rational: numerator in [-max_num, max_num], denominator 1 or 2.
    Rational rational(long max_num) {
        return Rational(range(-max_num, max_num), below(4) == 0 ? 2 : 1);
    }

private:
    std::uint64_t state_;
};

/// Random structure constants with roughly one in three entries nonzero.
Algebra random_algebra(Rng& rng, std::size_t dim);

/// Graded structure constants (three weight blocks, products climb strictly),
/// so every product of four elements vanishes.
Algebra random_four_nilpotent_algebra(Rng& rng, std::size_t dim);

/// The algebra with every product zero.
Algebra zero_product_algebra(std::size_t dim);

RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

Element random_element(Rng& rng, std::size_t dim);

} // namespace conserva

#endif
