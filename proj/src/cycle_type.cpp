#include "symchar/cycle_type.hpp"

#include <algorithm>
#include <sstream>

namespace symchar {

namespace {

void trim_trailing_zeros(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

} // namespace

CycleType::CycleType(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
    trim_trailing_zeros(mult_);
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] < 0) throw DomainError("cycle multiplicities must be non-negative");
        total_ += static_cast<int>(i + 1) * mult_[i];
    }
}

CycleType CycleType::from_parts(const std::vector<int>& parts) {
    std::vector<int> mult;
    for (int p : parts) {
        if (p < 1) throw DomainError("cycle lengths must be positive");
        if (static_cast<std::size_t>(p) > mult.size()) mult.resize(p, 0);
        ++mult[p - 1];
    }
    return CycleType(std::move(mult));
}

CycleType CycleType::identity(int n) {
    if (n < 0) throw DomainError("negative identity class size");
    if (n == 0) return CycleType();
    return CycleType(std::vector<int>{n});
}

CycleType CycleType::rectangular(int r, int s) {
    if (r < 1 || s < 0) throw DomainError("bad rectangular class r^s");
    if (s == 0) return CycleType();
    std::vector<int> mult(r, 0);
    mult[r - 1] = s;
    return CycleType(std::move(mult));
}

int CycleType::multiplicity(int i) const {
    if (i < 1) throw DomainError("cycle lengths are 1-based");
    return i <= max_part() ? mult_[i - 1] : 0;
}

CycleType CycleType::with_added_fixed_points(int d) const {
    if (d < 0) throw DomainError("cannot add a negative number of fixed points");
    std::vector<int> mult = mult_;
    if (mult.empty()) mult.resize(1, 0);
    mult[0] += d;
    return CycleType(std::move(mult));
}

std::string CycleType::to_string() const {
    if (mult_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] == 0) continue;
        if (!first) os << ',';
        first = false;
        os << (i + 1);
        if (mult_[i] > 1) os << '^' << mult_[i];
    }
    return os.str();
}

CycleType CycleType::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty cycle type text");
    if (s == "0") return CycleType();
    std::vector<int> mult;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t caret = tok.find('^');
        std::string part = tok.substr(0, caret == std::string::npos ? std::string::npos : caret);
        std::string count = caret == std::string::npos ? "1" : tok.substr(caret + 1);
        if (part.empty() || count.empty() ||
            part.find_first_not_of("0123456789") != std::string::npos ||
            count.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad cycle-type token '" + tok + "' in '" + text + "'");
        long p = std::stol(part);
        long c = std::stol(count);
        if (p < 1 || p > 1000000 || c < 0 || c > 1000000)
            throw ParseError("cycle-type token out of range in '" + text + "'");
        if (static_cast<std::size_t>(p) > mult.size()) mult.resize(p, 0);
        mult[p - 1] += static_cast<int>(c);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return CycleType(std::move(mult));
}

namespace {

// DFS over part sizes, largest first, choosing b_i <= a_i with sum i*b_i = m.
void sub_type_rec(const std::vector<int>& alpha, int i, int remaining, std::vector<int>& beta,
                  const std::function<void(const CycleType&, const CycleType&)>& fn) {
    if (remaining == 0) {
        for (int q = i - 1; q >= 0; --q) beta[q] = 0;
        std::vector<int> gamma(alpha.size());
        for (std::size_t q = 0; q < alpha.size(); ++q) gamma[q] = alpha[q] - beta[q];
        fn(CycleType(beta), CycleType(gamma));
        return;
    }
    if (i == 0) return;
    int size = i;
    int hi = std::min(alpha[i - 1], remaining / size);
    for (int b = hi; b >= 0; --b) {
        beta[i - 1] = b;
        sub_type_rec(alpha, i - 1, remaining - b * size, beta, fn);
    }
    beta[i - 1] = 0;
}

} // namespace

void for_each_sub_cycle_type(
    const CycleType& alpha, int m,
    const std::function<void(const CycleType&, const CycleType&)>& fn) {
    if (m < 0 || m > alpha.total())
        throw DomainError("sub-cycle-type size out of range");
    std::vector<int> beta(alpha.multiplicities().size(), 0);
    sub_type_rec(alpha.multiplicities(), alpha.max_part(), m, beta, fn);
}

std::vector<std::pair<CycleType, CycleType>> sub_cycle_types(const CycleType& alpha, int m) {
    std::vector<std::pair<CycleType, CycleType>> out;
    for_each_sub_cycle_type(alpha, m, [&](const CycleType& beta, const CycleType& gamma) {
        out.emplace_back(beta, gamma);
    });
    return out;
}

} // namespace symchar
