#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symchar/exact.hpp"
#include "symchar/partition.hpp"

namespace symchar {

struct BenchStrategyResult {
    std::string name;
    std::uint64_t calls = 0; // recursion entries; 0 where not meaningful
    std::int64_t micros = 0;
};

struct BenchRecord {
    std::string instance;
    Int value; // common value of all strategies
    std::vector<BenchStrategyResult> strategies;
};

struct BenchReport {
    std::string family;
    std::string params;
    std::int64_t poly_build_micros = 0;
    std::vector<BenchRecord> records;
};

// Evaluates chi^{(n,lam)} at (nu, 1^{n+k-m}) for each n in [n_lo, n_hi] by
// plain recursion, memoized recursion, and evaluation of the stable
// polynomial (built once). All strategies are checked to agree before any
// timing is reported; disagreement raises InternalError. Each strategy runs
// a warm-up pass.
BenchReport bench_stable(const Partition& lam, const Partition& nu, int n_lo, int n_hi);

// Computes f^{(n,lam)} for every lam |- k by hook lengths, the binomial
// expansion, and the expansion's polynomial evaluated at n.
BenchReport bench_degree(int k, int n);

} // namespace symchar
