#include "symchar/characters.hpp"

#include <algorithm>
#include <mutex>

#include "symchar/errors.hpp"

namespace symchar {

Int degree_hook(const Partition& lam) {
    Int denom = 1;
    for (const auto& row : hook_lengths(lam))
        for (int h : row) denom *= h;
    return factorial(lam.size()) / denom;
}

namespace {

// Exact determinant by Gaussian elimination with rational arithmetic.
Rat rat_det(std::vector<std::vector<Rat>> m) {
    int d = static_cast<int>(m.size());
    Rat det = 1;
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int row = col; row < d; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int row = col + 1; row < d; ++row) {
            if (m[row][col] == 0) continue;
            Rat f = m[row][col] / m[col][col];
            for (int j = col; j < d; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

} // namespace

Int degree_skew(const SkewShape& shape) {
    int cells = shape.size();
    if (cells == 0) return 1;
    int d = shape.outer().length();
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d));
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            int e = (shape.outer().part(i) - i) - (shape.inner().part(j) - j);
            m[i - 1][j - 1] = e < 0 ? Rat(0) : make_rat(Int(1), factorial(e));
        }
    }
    Rat value = rat_det(std::move(m)) * factorial(cells);
    if (denominator(value) != 1 || value < 0)
        throw InternalError("skew degree determinant is not a non-negative integer for " +
                            shape.to_string());
    return numerator(value);
}

std::size_t MnCache::VecHash::operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

bool MnCache::lookup(const std::vector<int>& key, Int& out) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
}

void MnCache::store(const std::vector<int>& key, const Int& value) {
    std::unique_lock lock(mutex_);
    map_.emplace(key, value);
}

std::size_t MnCache::size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
}

namespace {

// Translates the skew diagram to the origin: drops leading and trailing rows
// fully covered by the inner shape and the columns shared by every row. Pure
// translations, so the character is unchanged.
void canonicalize_skew(std::vector<int>& outer, std::vector<int>& inner) {
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    auto inner_at = [&](std::size_t i) {
        return i < inner.size() ? inner[i] : 0;
    };
    while (!outer.empty() && inner_at(outer.size() - 1) == outer.back()) {
        if (inner.size() == outer.size()) inner.pop_back();
        outer.pop_back();
    }
    std::size_t lead = 0;
    while (lead < outer.size() && inner_at(lead) == outer[lead]) ++lead;
    if (lead > 0) {
        outer.erase(outer.begin(), outer.begin() + lead);
        inner.erase(inner.begin(), inner.begin() + std::min(lead, inner.size()));
    }
    if (!outer.empty() && inner.size() == outer.size()) {
        int shift = *std::min_element(inner.begin(), inner.end());
        if (shift > 0) {
            for (auto& p : outer) p -= shift;
            for (auto& p : inner) p -= shift;
            while (!inner.empty() && inner.back() == 0) inner.pop_back();
        }
    }
}

struct MnEvaluator {
    MnCache* cache = nullptr;
    std::uint64_t* calls = nullptr;

    Int eval(std::vector<int> outer, std::vector<int> inner, std::vector<int> mult) {
        if (calls) ++*calls;
        canonicalize_skew(outer, inner);
        if (outer.empty()) return 1;

        std::vector<int> key;
        if (cache) {
            key.reserve(outer.size() + inner.size() + mult.size() + 2);
            key.insert(key.end(), outer.begin(), outer.end());
            key.push_back(-1);
            key.insert(key.end(), inner.begin(), inner.end());
            key.push_back(-1);
            key.insert(key.end(), mult.begin(), mult.end());
            Int hit;
            if (cache->lookup(key, hit)) return hit;
        }

        // peel the largest remaining cycle length
        int r = static_cast<int>(mult.size());
        std::vector<int> rest = mult;
        --rest[r - 1];
        while (!rest.empty() && rest.back() == 0) rest.pop_back();

        Int acc = 0;
        int len = static_cast<int>(outer.size());
        auto inner_at = [&](int q) {
            return q < static_cast<int>(inner.size()) ? inner[q] : 0;
        };
        for (int i = 0; i < len; ++i) {
            for (int j = i; j < len; ++j) {
                // remove the border strip occupying rows i..j
                int last = outer[i] - r + (j - i);
                if (last < 0) continue;
                if (last > outer[j] - 1) continue; // must take a cell in row j
                if (last < (j + 1 < len ? outer[j + 1] : 0)) continue;
                bool fits = last >= inner_at(j);
                for (int q = i; fits && q < j; ++q)
                    fits = outer[q + 1] - 1 >= inner_at(q);
                if (!fits) continue;
                std::vector<int> next = outer;
                for (int q = i; q < j; ++q) next[q] = outer[q + 1] - 1;
                next[j] = last;
                Int sub = eval(std::move(next), inner, rest);
                if ((j - i) % 2 == 0)
                    acc += sub;
                else
                    acc -= sub;
            }
        }
        if (cache) cache->store(key, acc);
        return acc;
    }
};

Int mn_dispatch(const SkewShape& shape, const CycleType& alpha, MnCache* cache,
                std::uint64_t* calls) {
    if (shape.size() != alpha.total())
        throw DomainError("character argument size mismatch: |" + shape.to_string() +
                          "| = " + std::to_string(shape.size()) + ", |alpha| = " +
                          std::to_string(alpha.total()));
    MnEvaluator ev{cache, calls};
    return ev.eval(shape.outer().parts(), shape.inner().parts(), alpha.multiplicities());
}

} // namespace

Int mn_value(const SkewShape& shape, const CycleType& alpha) {
    MnCache local;
    return mn_dispatch(shape, alpha, &local, nullptr);
}

Int mn_value(const SkewShape& shape, const CycleType& alpha, MnCache& cache,
             std::uint64_t* calls) {
    return mn_dispatch(shape, alpha, &cache, calls);
}

Int mn_value_naive(const SkewShape& shape, const CycleType& alpha, std::uint64_t* calls) {
    return mn_dispatch(shape, alpha, nullptr, calls);
}

CharacterFn::CharacterFn(int m, std::function<Int(const CycleType&)> eval)
    : m_(m), eval_(std::move(eval)) {}

CharacterFn CharacterFn::irreducible(const Partition& lam) {
    return CharacterFn(lam.size(), [lam](const CycleType& alpha) {
        return mn_value(SkewShape(lam), alpha);
    });
}

CharacterFn CharacterFn::skew(const SkewShape& shape) {
    return CharacterFn(shape.size(), [shape](const CycleType& alpha) {
        return mn_value(shape, alpha);
    });
}

Int CharacterFn::operator()(const CycleType& alpha) const {
    if (alpha.total() != m_)
        throw DomainError("character of S_" + std::to_string(m_) + " evaluated at a class of " +
                          std::to_string(alpha.total()));
    return eval_(alpha);
}

Int CharacterFn::degree() const { return (*this)(CycleType::identity(m_)); }

Int induced_value(const CharacterFn& psi, const CharacterFn& phi, const CycleType& alpha) {
    int m = psi.carrier_size();
    if (alpha.total() != m + phi.carrier_size())
        throw DomainError("induced character size mismatch");
    Int acc = 0;
    for_each_sub_cycle_type(alpha, m, [&](const CycleType& beta, const CycleType& gamma) {
        Int weight = 1;
        for (int i = 1; i <= alpha.max_part(); ++i)
            weight *= binomial(Int(alpha.multiplicity(i)), beta.multiplicity(i));
        acc += weight * psi(beta) * phi(gamma);
    });
    return acc;
}

Int induced_degree(int m, int n, const Int& f_psi, const Int& f_phi) {
    if (m < 0 || m > n) throw DomainError("induced_degree requires 0 <= m <= n");
    return binomial(Int(n), m) * f_psi * f_phi;
}

} // namespace symchar
