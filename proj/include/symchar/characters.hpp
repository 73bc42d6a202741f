#pragma once

#include <cstdint>
#include <functional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "symchar/cycle_type.hpp"
#include "symchar/exact.hpp"
#include "symchar/partition.hpp"

namespace symchar {

// |lam|! divided by the product of all hook lengths; 1 for the empty shape.
Int degree_hook(const Partition& lam);

// Number of SYT of a skew shape via the determinant of inverse factorials,
// computed over exact rationals. The result is checked to be a non-negative
// integer; anything else raises InternalError.
Int degree_skew(const SkewShape& shape);

// Thread-safe memo table shared between Murnaghan-Nakayama evaluations.
// Results are identical with and without sharing.
class MnCache {
  public:
    MnCache() = default;
    MnCache(const MnCache&) = delete;
    MnCache& operator=(const MnCache&) = delete;

    bool lookup(const std::vector<int>& key, Int& out) const;
    void store(const std::vector<int>& key, const Int& value);
    std::size_t size() const;

  private:
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const;
    };

    mutable std::shared_mutex mutex_;
    std::unordered_map<std::vector<int>, Int, VecHash> map_;
};

// chi^{lam/mu}(alpha) by the Murnaghan-Nakayama recursion: peel a border
// strip of the largest remaining cycle length in all valid ways, sign
// (-1)^(height-1), recurse. Memoized on (canonical shape, remaining type);
// the one-argument form uses a cache scoped to the call. `calls`, when given,
// counts recursion entries.
Int mn_value(const SkewShape& shape, const CycleType& alpha);
Int mn_value(const SkewShape& shape, const CycleType& alpha, MnCache& cache,
             std::uint64_t* calls = nullptr);

// Same recursion without memoization; reference point for the benchmarks.
Int mn_value_naive(const SkewShape& shape, const CycleType& alpha,
                   std::uint64_t* calls = nullptr);

// An evaluatable character of S_m: carrier size plus an exact evaluation map
// on cycle types of m.
class CharacterFn {
  public:
    static CharacterFn irreducible(const Partition& lam);
    static CharacterFn skew(const SkewShape& shape);

    int carrier_size() const { return m_; }
    Int operator()(const CycleType& alpha) const;
    Int degree() const; // evaluation at 1^m

  private:
    CharacterFn(int m, std::function<Int(const CycleType&)> eval);

    int m_;
    std::function<Int(const CycleType&)> eval_;
};

// Value of (psi x phi) induced from S_m x S_{n-m} to S_n at alpha: the
// convolution over sub-cycle-types beta |= m with binomial weights
// prod C(a_i, b_i).
Int induced_value(const CharacterFn& psi, const CharacterFn& phi, const CycleType& alpha);

// Degree of the induced character: C(n, m) * f_psi * f_phi.
Int induced_degree(int m, int n, const Int& f_psi, const Int& f_phi);

} // namespace symchar
