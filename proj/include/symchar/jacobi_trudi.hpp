#pragma once

#include <string>
#include <vector>

#include "symchar/h_poly.hpp"
#include "symchar/partition.hpp"
#include "symchar/report.hpp"

namespace symchar {

// The Jacobi-Trudi matrix of a skew shape: dimension length(outer), entry
// (i,j) = h_{outer_i - i - inner_j + j}. Every entry is a single generator,
// 1, or 0.
struct JTMatrix {
    SkewShape shape;
    std::vector<std::vector<HPoly>> entries;

    int dimension() const { return static_cast<int>(entries.size()); }
};

JTMatrix jt_matrix(const SkewShape& shape);

// The skew Schur function in the h-basis: det of the Jacobi-Trudi matrix.
// The empty shape gives 1.
HPoly skew_schur_h(const SkewShape& shape);

struct IdentityCheck {
    bool ok = false;
    std::string witness; // differing terms, graded-lex, capped; empty when ok
};

// Checks s_{(n,lam)} = sum_{j=0..t} (-1)^j h_{n+j} s_{lam/(1^j)} as exact
// HPoly values. Requires n >= max(lam_1, 1).
IdentityCheck verify_schur_identity(const Partition& lam, int n);

// Checks that the minor of H^{(n,lam)} obtained by deleting row 1 and column
// j+1 (which does not depend on n) equals s_{lam/(1^j)}. Requires nonempty
// lam and 0 <= j <= length(lam).
IdentityCheck verify_minor_identity(const Partition& lam, int j);

// One record per (lam, n) pair for the h-ring identity plus one per (lam, j)
// for the minor identity, over all lam |- k <= k_max and n <= n_max.
VerifyReport verify_jt_sweep(int k_max, int n_max, int threads = 1);

} // namespace symchar
