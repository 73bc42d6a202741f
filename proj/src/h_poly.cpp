#include "symchar/h_poly.hpp"

#include <numeric>
#include <optional>
#include <sstream>

#include "symchar/errors.hpp"

namespace symchar {

bool GradedLexGreater::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int av = i < a.size() ? a[i] : 0;
        int bv = i < b.size() ? b[i] : 0;
        if (av != bv) return av > bv;
    }
    return false;
}

namespace {

void trim_exponents(std::vector<int>& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

} // namespace

HPoly HPoly::one() { return constant(1); }

HPoly HPoly::constant(const Int& c) { return term({}, c); }

HPoly HPoly::generator(int r) {
    if (r < 0) return zero();
    if (r == 0) return one();
    Exponents e(r, 0);
    e[r - 1] = 1;
    return term(std::move(e), 1);
}

HPoly HPoly::term(Exponents exps, const Int& coeff) {
    HPoly p;
    trim_exponents(exps);
    for (int e : exps)
        if (e < 0) throw DomainError("negative generator exponent");
    if (coeff != 0) p.terms_.emplace(std::move(exps), coeff);
    return p;
}

Int HPoly::coefficient(const Exponents& exps) const {
    Exponents key = exps;
    trim_exponents(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? Int(0) : it->second;
}

void HPoly::add_term(const Exponents& exps, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

HPoly& HPoly::operator+=(const HPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

HPoly HPoly::operator+(const HPoly& o) const {
    HPoly r = *this;
    r += o;
    return r;
}

HPoly HPoly::operator-(const HPoly& o) const {
    HPoly r = *this;
    r -= o;
    return r;
}

HPoly HPoly::operator-() const {
    HPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

HPoly HPoly::operator*(const HPoly& o) const {
    HPoly r;
    Exponents sum;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            sum.assign(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) sum[i] = ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) sum[i] += eb[i];
            r.add_term(sum, ca * cb);
        }
    }
    return r;
}

HPoly HPoly::operator*(const Int& s) const {
    if (s == 0) return zero();
    HPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

std::string HPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        bool negative = coeff < 0;
        Int mag = negative ? Int(-coeff) : coeff;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "h" + std::to_string(i + 1);
            if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
        }
        if (mono.empty())
            os << mag.str();
        else if (mag == 1)
            os << mono;
        else
            os << mag.str() << '*' << mono;
    }
    return os.str();
}

namespace {

// Cofactor expansion along the top remaining row; minors are memoized by the
// set of surviving columns (the row set is determined by the popcount).
HPoly minor_det(const std::vector<std::vector<HPoly>>& m, unsigned mask,
                std::vector<std::optional<HPoly>>& memo) {
    if (mask == 0) return HPoly::one();
    if (memo[mask]) return *memo[mask];
    int d = static_cast<int>(m.size());
    int row = d - __builtin_popcount(mask);
    HPoly acc;
    int sign = 1;
    for (int j = 0; j < d; ++j) {
        if (!(mask & (1u << j))) continue;
        if (!m[row][j].is_zero()) {
            HPoly sub = minor_det(m, mask & ~(1u << j), memo);
            HPoly prod = m[row][j] * sub;
            if (sign > 0)
                acc += prod;
            else
                acc -= prod;
        }
        sign = -sign;
    }
    memo[mask] = acc;
    return acc;
}

} // namespace

HPoly hpoly_det(const std::vector<std::vector<HPoly>>& matrix) {
    std::size_t d = matrix.size();
    if (d == 0) return HPoly::one();
    if (d > 24) throw DomainError("determinant dimension too large");
    for (const auto& row : matrix)
        if (row.size() != d) throw DomainError("determinant requires a square matrix");
    std::vector<std::optional<HPoly>> memo(1u << d);
    return minor_det(matrix, (1u << d) - 1, memo);
}

} // namespace symchar
