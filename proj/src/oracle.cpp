#include "symchar/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "symchar/errors.hpp"

namespace symchar {

void MonomialPoly::add_term(const std::vector<int>& exps, const Int& coeff) {
    if (static_cast<int>(exps.size()) != num_vars_)
        throw DomainError("monomial exponent vector has wrong length");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int MonomialPoly::coefficient(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Int(0) : it->second;
}

MonomialPoly MonomialPoly::multiply_capped(const MonomialPoly& other,
                                           const std::vector<int>& cap) const {
    MonomialPoly out(num_vars_);
    std::vector<int> sum(num_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            bool keep = true;
            for (int i = 0; i < num_vars_; ++i) {
                sum[i] = ea[i] + eb[i];
                if (sum[i] > cap[i]) {
                    keep = false;
                    break;
                }
            }
            if (keep) out.add_term(sum, ca * cb);
        }
    }
    return out;
}

namespace {

Int count_syt_rec(std::vector<int> outer, const std::vector<int>& inner,
                  std::map<std::vector<int>, Int>& memo) {
    while (!outer.empty() && outer.back() == 0) outer.pop_back();
    int cells = std::accumulate(outer.begin(), outer.end(), 0) -
                std::accumulate(inner.begin(), inner.end(), 0);
    if (cells == 0) return 1;
    auto it = memo.find(outer);
    if (it != memo.end()) return it->second;
    Int acc = 0;
    int len = static_cast<int>(outer.size());
    for (int i = 0; i < len; ++i) {
        // cell at the end of row i is removable if the result is still a
        // partition containing the inner shape
        int below = i + 1 < len ? outer[i + 1] : 0;
        int floor = i < static_cast<int>(inner.size()) ? inner[i] : 0;
        if (outer[i] - 1 >= below && outer[i] - 1 >= floor) {
            std::vector<int> next = outer;
            --next[i];
            acc += count_syt_rec(std::move(next), inner, memo);
        }
    }
    memo.emplace(std::move(outer), acc);
    return acc;
}

} // namespace

Int count_syt(const SkewShape& shape) {
    if (shape.size() > 25)
        throw GuardError("count_syt limited to 25 cells, got " + std::to_string(shape.size()));
    std::map<std::vector<int>, Int> memo;
    return count_syt_rec(shape.outer().parts(), shape.inner().parts(), memo);
}

namespace {

// Expanded Vandermonde alternant: sum over permutations sigma of
// delta = (N-1, ..., 1, 0) of sign(sigma) * x^sigma(delta).
MonomialPoly alternant(int num_vars) {
    MonomialPoly out(num_vars);
    std::vector<int> perm(num_vars);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < num_vars; ++i)
            for (int j = i + 1; j < num_vars; ++j)
                if (perm[i] < perm[j]) ++inversions; // descending start is identity
        std::vector<int> exps(num_vars);
        for (int i = 0; i < num_vars; ++i) exps[i] = perm[i];
        out.add_term(exps, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

MonomialPoly power_sum(int num_vars, int k) {
    MonomialPoly p(num_vars);
    for (int v = 0; v < num_vars; ++v) {
        std::vector<int> exps(num_vars, 0);
        exps[v] = k;
        p.add_term(exps, 1);
    }
    return p;
}

} // namespace

Int frobenius_char_value(const Partition& lam, const CycleType& alpha) {
    int n = lam.size();
    if (n != alpha.total())
        throw DomainError("character argument size mismatch: |lam| = " + std::to_string(n) +
                          ", |alpha| = " + std::to_string(alpha.total()));
    if (n > 8) throw GuardError("frobenius_char_value limited to n <= 8");
    int num_vars = lam.length();
    if (num_vars == 0) return 1;

    std::vector<int> target(num_vars);
    for (int i = 0; i < num_vars; ++i) target[i] = lam.parts()[i] + (num_vars - 1 - i);

    // Terms above the target in any coordinate can never come back down, so
    // every product is capped at the target.
    MonomialPoly acc = alternant(num_vars);
    for (int k = 1; k <= alpha.max_part(); ++k) {
        MonomialPoly pk = power_sum(num_vars, k);
        for (int rep = 0; rep < alpha.multiplicity(k); ++rep)
            acc = acc.multiply_capped(pk, target);
    }
    return acc.coefficient(target);
}

} // namespace symchar
