#pragma once

#include <atomic>
#include <cstddef>
#include <string>
#include <thread>
#include <vector>

namespace symchar {

struct VerifyRecord {
    std::string instance;
    std::string lhs;
    std::string rhs;
    bool ok = false;
    std::string note; // witness / diagnostics, empty when unused
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyRecord> records;

    std::size_t total() const { return records.size(); }
    std::size_t passed() const;
    std::size_t failed() const { return total() - passed(); }
    bool all_ok() const { return passed() == total(); }
    const VerifyRecord* first_failure() const;
};

// Evaluates make(i) for i in [0, count) across `threads` workers; the result
// vector is ordered by index, so output is deterministic regardless of the
// parallelism degree. make must be pure.
template <class F>
std::vector<VerifyRecord> make_records(std::size_t count, int threads, F&& make) {
    std::vector<VerifyRecord> out(count);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = make(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) out[i] = make(i);
    };
    std::vector<std::thread> pool;
    int degree = std::min<std::size_t>(threads, count);
    pool.reserve(degree);
    for (int t = 0; t < degree; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

} // namespace symchar
