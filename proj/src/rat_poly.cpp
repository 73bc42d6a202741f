#include "symchar/rat_poly.hpp"

#include <set>
#include <sstream>

namespace symchar {

RatPoly::RatPoly(std::vector<Rat> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

RatPoly RatPoly::variable() { return RatPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

Rat RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

Rat RatPoly::leading_coeff() const {
    return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

Rat RatPoly::evaluate(const Int& n) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
    return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    RatPoly r = *this;
    r += o;
    return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    RatPoly r = *this;
    r -= o;
    return r;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    RatPoly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    r.trim();
    return r;
}

std::string RatPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        bool negative = c < 0;
        Rat mag = negative ? Rat(-c) : c;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string var = i == 0 ? "" : (i == 1 ? "n" : "n^" + std::to_string(i));
        if (var.empty())
            os << symchar::to_string(mag);
        else if (mag == 1)
            os << var;
        else
            os << symchar::to_string(mag) << '*' << var;
    }
    return os.str();
}

RatPoly binomial_poly(int offset, int b) {
    if (b < 0) return RatPoly();
    RatPoly p = RatPoly::constant(Rat(1));
    for (int i = 0; i < b; ++i)
        p = p * RatPoly(std::vector<Rat>{Rat(offset - i), Rat(1)}); // (n + offset - i)
    return p * make_rat(Int(1), factorial(b));
}

RatPoly ratpoly_interpolate(const std::vector<std::pair<Int, Rat>>& points) {
    if (points.empty()) throw DomainError("interpolation requires at least one point");
    std::set<Int> seen;
    for (const auto& [x, y] : points)
        if (!seen.insert(x).second)
            throw DomainError("interpolation abscissae must be distinct");
    RatPoly acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RatPoly basis = RatPoly::constant(points[i].second);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * RatPoly(std::vector<Rat>{Rat(-points[j].first), Rat(1)});
            Int gap = points[i].first - points[j].first;
            basis = basis * make_rat(Int(1), gap);
        }
        acc += basis;
    }
    return acc;
}

} // namespace symchar
