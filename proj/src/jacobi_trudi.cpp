#include "symchar/jacobi_trudi.hpp"

#include <sstream>
#include <utility>

#include "symchar/errors.hpp"

namespace symchar {

JTMatrix jt_matrix(const SkewShape& shape) {
    int d = shape.outer().length();
    std::vector<std::vector<HPoly>> entries(d, std::vector<HPoly>(d));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            entries[i - 1][j - 1] =
                HPoly::generator(shape.outer().part(i) - i - shape.inner().part(j) + j);
    return JTMatrix{shape, std::move(entries)};
}

HPoly skew_schur_h(const SkewShape& shape) { return hpoly_det(jt_matrix(shape).entries); }

namespace {

std::string diff_witness(const HPoly& lhs, const HPoly& rhs) {
    HPoly diff = lhs - rhs;
    std::ostringstream os;
    os << "difference has " << diff.term_count() << " terms:";
    std::size_t shown = 0;
    for (const auto& [exps, coeff] : diff.terms()) {
        if (shown++ == 20) {
            os << " ...";
            break;
        }
        os << ' ' << HPoly::term(exps, coeff).to_string();
    }
    return os.str();
}

std::string digest(const HPoly& p) { return std::to_string(p.term_count()) + " terms"; }

// LHS s_{(n,lam)} and RHS sum_{j} (-1)^j h_{n+j} s_{lam/(1^j)}.
std::pair<HPoly, HPoly> schur_identity_sides(const Partition& lam, int n) {
    if (n < std::max(lam.part(1), 1))
        throw DomainError("schur identity requires n >= max(lam_1, 1)");
    HPoly lhs = skew_schur_h(SkewShape(first_row_extend(lam, n)));
    HPoly rhs;
    for (int j = 0; j <= lam.length(); ++j) {
        HPoly term = HPoly::generator(n + j) * skew_schur_h(SkewShape(lam, column_strip(j)));
        if (j % 2 == 0)
            rhs += term;
        else
            rhs -= term;
    }
    return {std::move(lhs), std::move(rhs)};
}

// Minor of H^{(n,lam)} with row 1 and column j+1 deleted, and s_{lam/(1^j)}.
// The minor drops row 1, so its entries involve lam only; any concrete
// n >= lam_1 builds the same minor.
std::pair<HPoly, HPoly> minor_identity_sides(const Partition& lam, int j) {
    int t = lam.length();
    if (lam.empty()) throw DomainError("minor identity requires a nonempty partition");
    if (j < 0 || j > t) throw DomainError("minor column index out of range");
    JTMatrix full = jt_matrix(SkewShape(first_row_extend(lam, lam.part(1))));
    std::vector<std::vector<HPoly>> minor(t, std::vector<HPoly>(t));
    for (int row = 1; row <= t; ++row) {
        int out_col = 0;
        for (int col = 0; col <= t; ++col) {
            if (col == j) continue;
            minor[row - 1][out_col++] = full.entries[row][col];
        }
    }
    return {hpoly_det(minor), skew_schur_h(SkewShape(lam, column_strip(j)))};
}

IdentityCheck check_sides(const std::pair<HPoly, HPoly>& sides) {
    if (sides.first == sides.second) return {true, ""};
    return {false, diff_witness(sides.first, sides.second)};
}

} // namespace

IdentityCheck verify_schur_identity(const Partition& lam, int n) {
    return check_sides(schur_identity_sides(lam, n));
}

IdentityCheck verify_minor_identity(const Partition& lam, int j) {
    return check_sides(minor_identity_sides(lam, j));
}

VerifyReport verify_jt_sweep(int k_max, int n_max, int threads) {
    if (k_max < 0 || k_max > 7 || n_max < 1 || n_max > 12)
        throw GuardError("verify jt guards: 0 <= k_max <= 7, 1 <= n_max <= 12");
    struct Task {
        Partition lam;
        int n; // -1 marks a minor-identity task on column j
        int j;
    };
    std::vector<Task> tasks;
    for (int k = 0; k <= k_max; ++k) {
        for (const Partition& lam : partitions_of(k)) {
            for (int n = std::max(lam.part(1), 1); n <= n_max; ++n)
                tasks.push_back({lam, n, -1});
            if (!lam.empty())
                for (int j = 0; j <= lam.length(); ++j) tasks.push_back({lam, -1, j});
        }
    }
    VerifyReport report;
    report.suite = "jt";
    report.records = make_records(tasks.size(), threads, [&](std::size_t idx) {
        const Task& task = tasks[idx];
        VerifyRecord rec;
        std::pair<HPoly, HPoly> sides =
            task.n >= 0 ? schur_identity_sides(task.lam, task.n)
                        : minor_identity_sides(task.lam, task.j);
        rec.instance = task.n >= 0
                           ? "eq lambda=" + task.lam.to_string() + " n=" + std::to_string(task.n)
                           : "minor lambda=" + task.lam.to_string() + " j=" + std::to_string(task.j);
        rec.lhs = digest(sides.first);
        rec.rhs = digest(sides.second);
        rec.ok = sides.first == sides.second;
        if (!rec.ok) rec.note = diff_witness(sides.first, sides.second);
        return rec;
    });
    return report;
}

} // namespace symchar
