#include "symchar/stable.hpp"

#include <algorithm>

#include "symchar/errors.hpp"
#include "symchar/oracle.hpp"

namespace symchar {

Int cz_degree(const Partition& lam, int n) {
    if (n < std::max(lam.part(1), 1))
        throw DomainError("cz_degree requires n >= max(lam_1, 1)");
    int k = lam.size();
    Int acc = 0;
    for (int j = 0; j <= lam.length(); ++j) {
        Int term = binomial(Int(n + k), k - j) * degree_skew(SkewShape(lam, column_strip(j)));
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

RatPoly cz_degree_poly(const Partition& lam) {
    int k = lam.size();
    RatPoly acc;
    for (int j = 0; j <= lam.length(); ++j) {
        RatPoly term =
            binomial_poly(k, k - j) * Rat(degree_skew(SkewShape(lam, column_strip(j))));
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Int rect_class_value(const Partition& lam, int n, int r) {
    if (n < std::max(lam.part(1), 1))
        throw DomainError("rect_class_value requires n >= max(lam_1, 1)");
    if (r < 1) throw DomainError("rect_class_value requires r >= 1");
    int k = lam.size();
    if ((n + k) % r != 0)
        throw DomainError("rect_class_value requires r | (n + k)");
    MnCache cache;
    Int acc = 0;
    for (int j = 0; j <= lam.length(); ++j) {
        if ((k - j) % r != 0) continue;
        int s = (k - j) / r;
        Int term = binomial(Int((n + k) / r), s) *
                   mn_value(SkewShape(lam, column_strip(j)), CycleType::rectangular(r, s), cache);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

namespace {

// Direct evaluation of chi^{(n,lam)} at (nu, 1^{n+k-m}).
Int stable_direct_value(const Partition& lam, const CycleType& nu_type, int n, MnCache& cache) {
    int k = lam.size();
    int d = n + k - nu_type.total();
    return mn_value(SkewShape(first_row_extend(lam, n)), nu_type.with_added_fixed_points(d),
                    cache);
}

// Multiplicity choices b_i <= a_i for part sizes i >= 2 with sum i*b_i =
// target, visited with the product of binomial weights C(a_i, b_i).
void higher_choices(const CycleType& nu_type, int i, int target, std::vector<int>& beta,
                    const Int& weight,
                    const std::function<void(const std::vector<int>&, const Int&)>& fn) {
    if (i < 2) {
        if (target == 0) fn(beta, weight);
        return;
    }
    int hi = std::min(nu_type.multiplicity(i), target / i);
    for (int b = hi; b >= 0; --b) {
        beta[i - 1] = b;
        higher_choices(nu_type, i - 1, target - b * i, beta,
                       weight * binomial(Int(nu_type.multiplicity(i)), b), fn);
    }
    beta[i - 1] = 0;
}

} // namespace

StableCharPoly stable_char_poly(const StableClassSpec& spec) {
    const Partition& lam = spec.lam;
    int k = lam.size();
    int t = lam.length();
    int m = spec.nu.size();
    CycleType nu_type = CycleType::from_parts(spec.nu.parts());
    int a1 = nu_type.multiplicity(1);

    MnCache cache;
    RatPoly poly;
    for (int j = 0; j <= t; ++j) {
        SkewShape shape(lam, column_strip(j));
        Rat sign = j % 2 == 0 ? Rat(1) : Rat(-1);
        // In the stable regime b_1 runs over 0..k-j; the 1-cycle weight
        // C(n+k-m+a_1, b_1) stays a polynomial in n.
        for (int b1 = 0; b1 <= k - j; ++b1) {
            std::vector<int> beta(std::max(nu_type.max_part(), 1), 0);
            beta[0] = b1;
            Rat coeff = 0;
            higher_choices(nu_type, nu_type.max_part(), k - j - b1, beta,
                           Int(1), [&](const std::vector<int>& b, const Int& weight) {
                               Int contribution = weight * mn_value(shape, CycleType(b), cache);
                               coeff += Rat(contribution);
                           });
            if (coeff != 0) poly += binomial_poly(k - m + a1, b1) * (sign * coeff);
        }
    }

    int valid_from = std::max(lam.part(1), m);

    // Mandatory cross-check: the same polynomial must fall out of Lagrange
    // interpolation of direct Murnaghan-Nakayama samples.
    int n0 = std::max(valid_from, 1);
    std::vector<std::pair<Int, Rat>> samples;
    for (int n = n0; n <= n0 + k; ++n)
        samples.emplace_back(Int(n), Rat(stable_direct_value(lam, nu_type, n, cache)));
    RatPoly interpolated = ratpoly_interpolate(samples);
    if (!(interpolated == poly))
        throw InternalError("stable character polynomial disagrees with interpolated samples "
                            "for lambda=" + lam.to_string() + " nu=" + spec.nu.to_string() +
                            ": formula " + poly.to_string() + " vs interpolation " +
                            interpolated.to_string());

    return {poly, valid_from};
}

VerifyReport verify_cz(int k_max, int n_max, int threads) {
    if (k_max < 0 || k_max > 8 || n_max < 1 || n_max > 20)
        throw GuardError("verify cz guards: 0 <= k_max <= 8, 1 <= n_max <= 20");
    struct Task {
        Partition lam;
        int n;
    };
    std::vector<Task> tasks;
    for (int k = 0; k <= k_max; ++k)
        for (const Partition& lam : partitions_of(k))
            for (int n = std::max(lam.part(1), 1); n <= n_max; ++n) tasks.push_back({lam, n});
    VerifyReport report;
    report.suite = "cz";
    report.records = make_records(tasks.size(), threads, [&](std::size_t idx) {
        const auto& [lam, n] = tasks[idx];
        VerifyRecord rec;
        rec.instance = "lambda=" + lam.to_string() + " n=" + std::to_string(n);
        Partition extended = first_row_extend(lam, n);
        Int lhs = cz_degree(lam, n);
        Int rhs = degree_hook(extended);
        rec.lhs = to_string(lhs);
        rec.rhs = to_string(rhs);
        rec.ok = lhs == rhs;
        if (rec.ok && extended.size() <= 20) {
            Int syt = count_syt(SkewShape(extended));
            if (syt != lhs) {
                rec.ok = false;
                rec.note = "count_syt disagrees: " + to_string(syt);
            }
        }
        return rec;
    });
    return report;
}

VerifyReport verify_rclass_sweep(int k_max, int n_max, const std::vector<int>& rs, int threads,
                                 bool shared_cache) {
    if (k_max < 0 || k_max > 6 || n_max < 1 || n_max > 20)
        throw GuardError("verify rclass guards: 0 <= k_max <= 6, 1 <= n_max <= 20");
    for (int r : rs)
        if (r < 1 || r > 8) throw GuardError("verify rclass guards: 1 <= r <= 8");
    struct Task {
        Partition lam;
        int n;
        int r;
    };
    std::vector<Task> tasks;
    for (int k = 0; k <= k_max; ++k)
        for (const Partition& lam : partitions_of(k))
            for (int r : rs)
                for (int n = std::max(lam.part(1), 1); n <= n_max; ++n)
                    if ((n + k) % r == 0) tasks.push_back({lam, n, r});
    MnCache shared;
    VerifyReport report;
    report.suite = "rclass";
    report.records = make_records(tasks.size(), threads, [&](std::size_t idx) {
        const auto& [lam, n, r] = tasks[idx];
        int k = lam.size();
        VerifyRecord rec;
        rec.instance = "lambda=" + lam.to_string() + " n=" + std::to_string(n) +
                       " r=" + std::to_string(r);
        Int lhs = rect_class_value(lam, n, r);
        MnCache local;
        Int rhs = mn_value(SkewShape(first_row_extend(lam, n)),
                           CycleType::rectangular(r, (n + k) / r),
                           shared_cache ? shared : local);
        rec.lhs = to_string(lhs);
        rec.rhs = to_string(rhs);
        rec.ok = lhs == rhs;
        return rec;
    });
    return report;
}

VerifyReport verify_stablepoly_sweep(int k_max, int m_max, int extra_beyond, int threads) {
    if (k_max < 0 || k_max > 5 || m_max < 0 || m_max > 5 || extra_beyond < 0 ||
        extra_beyond > 20)
        throw GuardError("verify stablepoly guards: k_max <= 5, m_max <= 5, extra <= 20");
    struct Task {
        Partition lam;
        Partition nu;
    };
    std::vector<Task> tasks;
    for (int k = 0; k <= k_max; ++k)
        for (const Partition& lam : partitions_of(k))
            for (int m = 0; m <= m_max; ++m)
                for (const Partition& nu : partitions_of(m)) tasks.push_back({lam, nu});
    VerifyReport report;
    report.suite = "stablepoly";
    report.records = make_records(tasks.size(), threads, [&](std::size_t idx) {
        const auto& [lam, nu] = tasks[idx];
        int k = lam.size();
        int m = nu.size();
        VerifyRecord rec;
        rec.instance = "lambda=" + lam.to_string() + " nu=" + nu.to_string();
        try {
            StableCharPoly result = stable_char_poly({lam, nu});
            rec.lhs = result.poly.to_string();
            CycleType nu_type = CycleType::from_parts(nu.parts());
            MnCache cache;
            // every n with a valid class and shape, through extra_beyond
            // points past the interpolation nodes
            int n_lo = std::max({lam.part(1), m - k, 1});
            int n_hi = std::max(result.valid_from, 1) + k + extra_beyond;
            int agree_from = n_hi + 1;
            bool failed_in_stable_range = false;
            for (int n = n_hi; n >= n_lo; --n) {
                Int direct = stable_direct_value(lam, nu_type, n, cache);
                if (Rat(direct) == result.poly.evaluate(Int(n))) {
                    agree_from = n;
                    continue;
                }
                if (n >= result.valid_from) failed_in_stable_range = true;
                break; // the uninterrupted agreement run ends here
            }
            rec.rhs = "direct values on n=" + std::to_string(n_lo) + ".." + std::to_string(n_hi);
            rec.ok = !failed_in_stable_range;
            rec.note = "valid_from=" + std::to_string(result.valid_from) +
                       " observed_valid_from=" + std::to_string(agree_from);
        } catch (const InternalError& e) {
            rec.ok = false;
            rec.note = e.what();
        }
        return rec;
    });
    return report;
}

} // namespace symchar
