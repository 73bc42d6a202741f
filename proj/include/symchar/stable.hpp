#pragma once

#include <vector>

#include "symchar/characters.hpp"
#include "symchar/cycle_type.hpp"
#include "symchar/exact.hpp"
#include "symchar/partition.hpp"
#include "symchar/rat_poly.hpp"
#include "symchar/report.hpp"

namespace symchar {

// f^{(n,lam)} via the alternating binomial expansion over column strips:
// sum_{j=0..t} (-1)^j C(n+k, k-j) f^{lam/(1^j)}. Requires n >= max(lam_1, 1).
Int cz_degree(const Partition& lam, int n);

// The same expansion with C(n+k, k-j) kept as a polynomial in n. Degree k,
// leading coefficient f^lam / k!.
RatPoly cz_degree_poly(const Partition& lam);

// chi^{(n,lam)} at the rectangular class r^{(n+k)/r}:
// sum over j with r | (k-j) of (-1)^j C((n+k)/r, (k-j)/r) chi^{lam/(1^j)}
// at r^{(k-j)/r}. Requires n >= max(lam_1, 1), r >= 1 and r | (n+k).
Int rect_class_value(const Partition& lam, int n, int r);

// The family of classes (nu, 1^{n+k-m}) inside S_{n+k}, for fixed lam |- k
// and nu |- m.
struct StableClassSpec {
    Partition lam;
    Partition nu;
};

struct StableCharPoly {
    RatPoly poly;
    int valid_from = 0; // conservative threshold max(lam_1, m)
};

// The polynomial p with p(n) = chi^{(n,lam)} at (nu, 1^{n+k-m}) for every
// n >= valid_from, built from the double convolution sum over column strips
// and sub-cycle-types. Construction always cross-checks the result against
// Lagrange interpolation of direct Murnaghan-Nakayama samples and throws
// InternalError on any discrepancy.
StableCharPoly stable_char_poly(const StableClassSpec& spec);

// Degree expansion sweep: cz_degree(lam, n) against degree_hook((n,lam)) for
// every lam |- k <= k_max and n <= n_max, with a third count_syt leg on
// instances with n+k <= 20. Guards: k_max <= 8, n_max <= 20.
VerifyReport verify_cz(int k_max, int n_max, int threads = 1);

// rect_class_value against direct evaluation at r^{(n+k)/r}, for each r in
// rs and all valid n <= n_max. shared_cache reuses one memo table across the
// sweep.
VerifyReport verify_rclass_sweep(int k_max, int n_max, const std::vector<int>& rs,
                                 int threads = 1, bool shared_cache = false);

// Builds stable_char_poly for every lam |- k <= k_max, nu |- m <= m_max and
// checks it against direct evaluation at every n from the first valid sample
// through valid_from + k + extra_beyond (the last extra_beyond points lie
// past the interpolation nodes). Records the smallest tested n from which
// agreement holds without interruption.
VerifyReport verify_stablepoly_sweep(int k_max, int m_max, int extra_beyond = 9,
                                     int threads = 1);

} // namespace symchar
