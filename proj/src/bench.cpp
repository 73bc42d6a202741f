#include "symchar/bench.hpp"

#include <chrono>

#include "symchar/characters.hpp"
#include "symchar/errors.hpp"
#include "symchar/stable.hpp"

namespace symchar {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

// Warm-up pass first (also produces the value), then the timed pass.
template <class F>
BenchStrategyResult run_strategy(const std::string& name, Int& value, bool& first, F&& body) {
    std::uint64_t warm_calls = 0;
    Int result = body(&warm_calls);
    if (first) {
        value = result;
        first = false;
    } else if (result != value) {
        throw InternalError("benchmark strategies disagree: " + name + " produced " +
                            to_string(result) + ", expected " + to_string(value));
    }
    BenchStrategyResult out;
    out.name = name;
    out.calls = warm_calls;
    auto start = Clock::now();
    std::uint64_t timed_calls = 0;
    Int repeat = body(&timed_calls);
    out.micros = micros_since(start);
    if (repeat != value)
        throw InternalError("benchmark strategy is not deterministic: " + name);
    return out;
}

} // namespace

BenchReport bench_stable(const Partition& lam, const Partition& nu, int n_lo, int n_hi) {
    int k = lam.size();
    int m = nu.size();
    if (k > 6 || m > 6 || n_hi > 100)
        throw GuardError("bench stable guards: |lambda| <= 6, |nu| <= 6, n <= 100");
    BenchReport report;
    report.family = "stable";
    report.params = "lambda=" + lam.to_string() + " nu=" + nu.to_string();

    auto build_start = Clock::now();
    StableCharPoly stable = stable_char_poly({lam, nu});
    report.poly_build_micros = micros_since(build_start);

    CycleType nu_type = CycleType::from_parts(nu.parts());
    int first_valid = std::max({lam.part(1), m - k, 1});
    for (int n = std::max(n_lo, first_valid); n <= n_hi; ++n) {
        BenchRecord rec;
        rec.instance = "n=" + std::to_string(n);
        SkewShape shape(first_row_extend(lam, n));
        CycleType klass = nu_type.with_added_fixed_points(n + k - m);
        bool first = true;
        rec.strategies.push_back(run_strategy("mn_naive", rec.value, first, [&](std::uint64_t* c) {
            return mn_value_naive(shape, klass, c);
        }));
        rec.strategies.push_back(run_strategy("mn_memo", rec.value, first, [&](std::uint64_t* c) {
            MnCache cache;
            return mn_value(shape, klass, cache, c);
        }));
        if (n >= stable.valid_from)
            rec.strategies.push_back(run_strategy("poly", rec.value, first, [&](std::uint64_t*) {
                Rat v = stable.poly.evaluate(Int(n));
                if (denominator(v) != 1)
                    throw InternalError("stable polynomial evaluated to a non-integer");
                return Int(numerator(v));
            }));
        report.records.push_back(std::move(rec));
    }
    return report;
}

BenchReport bench_degree(int k, int n) {
    if (k < 0 || k > 8) throw GuardError("bench degree guard: 0 <= k <= 8");
    BenchReport report;
    report.family = "degree";
    report.params = "k=" + std::to_string(k) + " n=" + std::to_string(n);
    for (const Partition& lam : partitions_of(k)) {
        if (n < std::max(lam.part(1), 1)) continue;
        BenchRecord rec;
        rec.instance = "lambda=" + lam.to_string();
        bool first = true;
        rec.strategies.push_back(run_strategy("hook", rec.value, first, [&](std::uint64_t*) {
            return degree_hook(first_row_extend(lam, n));
        }));
        rec.strategies.push_back(run_strategy("binomial_expansion", rec.value, first,
                                              [&](std::uint64_t*) { return cz_degree(lam, n); }));
        rec.strategies.push_back(run_strategy("poly", rec.value, first, [&](std::uint64_t*) {
            Rat v = cz_degree_poly(lam).evaluate(Int(n));
            if (denominator(v) != 1)
                throw InternalError("degree polynomial evaluated to a non-integer");
            return Int(numerator(v));
        }));
        report.records.push_back(std::move(rec));
    }
    return report;
}

} // namespace symchar
