#ifndef COMPLEXFORGE_RANDOM_FIELDS_HPP
#define COMPLEXFORGE_RANDOM_FIELDS_HPP

#include "complexforge/calculus.hpp"
#include "complexforge/poly.hpp"

#include <cstdint>
#include <random>

namespace complexforge {

/// Seeded generator for random polynomial fields. Coefficients are drawn
/// uniformly from {-9,...,9}\{0} over denominators {1,2,3}; a term is
/// kept with probability 1/2 so fields stay sparse but nontrivial.
class FieldSampler {
  public:
    explicit FieldSampler(std::uint64_t seed, int max_degree = 4)
        : rng_(seed), max_degree_(max_degree) {}

    Rational coefficient() {
        static constexpr int nums[] = {-9, -8, -7, -6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6, 7, 8, 9};
        std::uniform_int_distribution<int> num(0, 17);
        std::uniform_int_distribution<int> den(1, 3);
        return Rational(nums[num(rng_)], den(rng_));
    }

    PolyScalarField scalar() {
        PolyScalarField f;
        std::uniform_int_distribution<int> keep(0, 1);
        for (std::uint32_t a = 0; a <= static_cast<std::uint32_t>(max_degree_); ++a)
            for (std::uint32_t b = 0; a + b <= static_cast<std::uint32_t>(max_degree_); ++b)
                for (std::uint32_t c = 0; a + b + c <= static_cast<std::uint32_t>(max_degree_); ++c)
                    if (keep(rng_)) f.add_term(Monomial{{a, b, c}}, coefficient());
        return f;
    }

    PolyVectorField vector() {
        PolyVectorField v;
        for (int i = 0; i < 3; ++i) v[i] = scalar();
        return v;
    }

    PolyTensorField tensor() {
        PolyTensorField t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t(i, j) = scalar();
        return t;
    }

    PolyTensorField symmetric_tensor() { return sym(tensor()); }

  private:
    std::mt19937_64 rng_;
    int max_degree_;
};

} // namespace complexforge

#endif
