#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symchar/errors.hpp"
#include "symchar/exact.hpp"

namespace symchar {

// Univariate polynomial in the stability parameter n with exact rational
// coefficients, stored ascending with no trailing zeros. The zero polynomial
// is the empty coefficient sequence.
class RatPoly {
  public:
    RatPoly() = default; // zero
    explicit RatPoly(std::vector<Rat> ascending_coeffs);

    static RatPoly constant(const Rat& c);
    static RatPoly variable(); // p(n) = n

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int i) const;
    Rat leading_coeff() const;

    Rat evaluate(const Int& n) const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;

    bool operator==(const RatPoly&) const = default;

    // Ascending rendering "c0 + c1*n + c2*n^2" with zero terms skipped, unit
    // coefficients elided and rationals as "p/q"; "0" for the zero polynomial.
    std::string to_string() const;

  private:
    void trim();

    std::vector<Rat> coeffs_;
};

// C(n + offset, b) as a degree-b polynomial in n; agrees with
// binomial(n + offset, b) at every integer n. b < 0 yields the zero
// polynomial, mirroring the binomial convention.
RatPoly binomial_poly(int offset, int b);

// Unique polynomial of degree < #points through the given points, by Lagrange
// interpolation in exact arithmetic. Duplicate abscissae are an error.
RatPoly ratpoly_interpolate(const std::vector<std::pair<Int, Rat>>& points);

} // namespace symchar
