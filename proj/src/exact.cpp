#include "symchar/exact.hpp"

#include "symchar/errors.hpp"

namespace symchar {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
    Int num = numerator(v);
    Int den = denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) return Rat(Int(-num), Int(-den));
    return Rat(num, den);
}

Int factorial(int n) {
    if (n < 0) throw DomainError("factorial of negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(const Int& a, long long b) {
    if (b < 0) return 0;
    Int num = 1;
    for (long long i = 0; i < b; ++i) num *= a - i;
    return num / factorial(static_cast<int>(b));
}

} // namespace symchar
