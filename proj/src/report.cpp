#include "symchar/report.hpp"

namespace symchar {

std::size_t VerifyReport::passed() const {
    std::size_t n = 0;
    for (const auto& r : records)
        if (r.ok) ++n;
    return n;
}

const VerifyRecord* VerifyReport::first_failure() const {
    for (const auto& r : records)
        if (!r.ok) return &r;
    return nullptr;
}

} // namespace symchar
