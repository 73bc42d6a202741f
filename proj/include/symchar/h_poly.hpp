#pragma once

#include <map>
#include <string>
#include <vector>

#include "symchar/exact.hpp"

namespace symchar {

// Term order for canonical output: higher total exponent degree first, ties
// broken lexicographically on the exponent vector, descending.
struct GradedLexGreater {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse integer-coefficient polynomial in the commuting generators
// h_1, h_2, .... Exponent vectors are dense up to the last nonzero generator
// (no trailing zeros); zero coefficients are never stored.
class HPoly {
  public:
    using Exponents = std::vector<int>; // e[i] = exponent of h_{i+1}
    using TermMap = std::map<Exponents, Int, GradedLexGreater>;

    HPoly() = default; // zero
    static HPoly zero() { return HPoly(); }
    static HPoly one();
    static HPoly constant(const Int& c);

    // h_r as a ring element: the single generator for r >= 1, the unit for
    // r = 0 and zero for r < 0. The conventions make Jacobi-Trudi matrix
    // entries uniform.
    static HPoly generator(int r);

    static HPoly term(Exponents exps, const Int& coeff);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Int coefficient(const Exponents& exps) const;

    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    HPoly operator+(const HPoly& o) const;
    HPoly operator-(const HPoly& o) const;
    HPoly operator-() const;
    HPoly operator*(const HPoly& o) const;
    HPoly operator*(const Int& s) const;

    bool operator==(const HPoly& o) const { return terms_ == o.terms_; }

    // Graded-lex rendering, e.g. "h1*h2 - h3"; unit exponents and unit
    // coefficient magnitudes are elided; "0" and "1" for the constants.
    std::string to_string() const;

  private:
    void add_term(const Exponents& exps, const Int& coeff);

    TermMap terms_;
};

// Exact determinant over the h-ring by recursive cofactor expansion with
// minors memoized on column subsets; no division. The 0x0 determinant is 1.
HPoly hpoly_det(const std::vector<std::vector<HPoly>>& matrix);

} // namespace symchar
