#pragma once

#include <map>
#include <vector>

#include "symchar/cycle_type.hpp"
#include "symchar/exact.hpp"
#include "symchar/partition.hpp"

namespace symchar {

// Brute-force reference implementations used only for verification. They are
// deliberately independent of the production evaluators: no border strips, no
// hook lengths, no h-ring, no shared index conventions.

// Polynomial in a fixed number of variables x_1..x_N with integer
// coefficients and arbitrary non-negative exponents.
class MonomialPoly {
  public:
    explicit MonomialPoly(int num_vars) : num_vars_(num_vars) {}

    int num_vars() const { return num_vars_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const std::vector<int>& exps, const Int& coeff);
    Int coefficient(const std::vector<int>& exps) const;

    // Product, dropping any result term whose exponents exceed cap
    // componentwise. Sound when later factors only raise exponents and a
    // single capped coefficient is read at the end.
    MonomialPoly multiply_capped(const MonomialPoly& other,
                                 const std::vector<int>& cap) const;

  private:
    int num_vars_;
    std::map<std::vector<int>, Int> terms_;
};

// Number of standard Young tableaux of the skew shape, by recursive
// enumeration over removable corners (intermediate shapes are cached, no
// counting formulas). Empty shape -> 1. Guard: at most 25 cells.
Int count_syt(const SkewShape& shape);

// chi^lam(alpha) extracted as the coefficient of x^(lam+delta) in the product
// of the expanded Vandermonde alternant and the power sums of alpha, with
// N = length(lam) variables. Guard: |lam| <= 8.
Int frobenius_char_value(const Partition& lam, const CycleType& alpha);

} // namespace symchar
