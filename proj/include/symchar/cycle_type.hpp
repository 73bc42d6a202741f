#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "symchar/errors.hpp"

namespace symchar {

// Conjugacy-class label of S_n: the multiplicity vector (a_1, ..., a_n) with
// a_i parts of size i and n = sum i*a_i. Trailing zero multiplicities are
// trimmed; total() is kept alongside.
class CycleType {
  public:
    CycleType() = default;
    explicit CycleType(std::vector<int> multiplicities);

    static CycleType from_parts(const std::vector<int>& parts);
    static CycleType identity(int n); // 1^n
    static CycleType rectangular(int r, int s); // r^s

    int total() const { return total_; }
    bool empty() const { return mult_.empty(); }
    int max_part() const { return static_cast<int>(mult_.size()); }

    // 1-based part size; 0 beyond max_part().
    int multiplicity(int i) const;
    const std::vector<int>& multiplicities() const { return mult_; }

    // The class (this, 1^d): adds d fixed points.
    CycleType with_added_fixed_points(int d) const;

    bool operator==(const CycleType&) const = default;

    // Multiplicative form, ascending part size, unit exponents elided:
    // "1^2,3". The empty type renders as "0".
    std::string to_string() const;

    // Accepts a plain part list "3,1,1" or the multiplicative form "1^2,3^1"
    // (tokens may be mixed); both normalize to the multiplicity vector.
    static CycleType parse(const std::string& text);

  private:
    std::vector<int> mult_;
    int total_ = 0;
};

// Enumerates every beta with 0 <= beta_i <= alpha_i and |beta| = m, paired
// with the complement gamma = alpha - beta. Deterministic order.
void for_each_sub_cycle_type(
    const CycleType& alpha, int m,
    const std::function<void(const CycleType& beta, const CycleType& gamma)>& fn);

std::vector<std::pair<CycleType, CycleType>> sub_cycle_types(const CycleType& alpha, int m);

} // namespace symchar
