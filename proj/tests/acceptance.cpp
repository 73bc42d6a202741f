// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact arithmetic, so every comparison is equality.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "symchar/bench.hpp"
#include "symchar/characters.hpp"
#include "symchar/jacobi_trudi.hpp"
#include "symchar/oracle.hpp"
#include "symchar/stable.hpp"

using namespace symchar;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(SYMCHAR_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

int main() {
    criterion(1, "degree expansion sweep k<=6 n<=12 with triple agreement", [](std::string& d) {
        if (run_cli("verify cz --k-max 6 --n-max 12") != 0) {
            d = "cli sweep failed";
            return false;
        }
        VerifyReport report = verify_cz(6, 12);
        d = std::to_string(report.total()) + " instances";
        return report.all_ok() && report.total() == 312;
    });

    criterion(2, "h-ring identity and minor identity sweep k<=5 n<=8", [](std::string& d) {
        if (run_cli("verify jt --k-max 5 --n-max 8") != 0) {
            d = "cli sweep failed";
            return false;
        }
        VerifyReport report = verify_jt_sweep(5, 8);
        d = std::to_string(report.total()) + " instances";
        return report.all_ok();
    });

    criterion(3, "induced character degrees n<=7 exhaustive", [](std::string& d) {
        int checked = 0;
        for (int n = 0; n <= 7; ++n)
            for (int m = 0; m <= n; ++m)
                for (const Partition& nu : partitions_of(m))
                    for (const Partition& tau : partitions_of(n - m)) {
                        Int expected = induced_degree(m, n, degree_hook(nu), degree_hook(tau));
                        Int got = induced_value(CharacterFn::irreducible(nu),
                                                CharacterFn::irreducible(tau),
                                                CycleType::identity(n));
                        if (got != expected) {
                            d = "mismatch at nu=" + nu.to_string() + " tau=" + tau.to_string();
                            return false;
                        }
                        ++checked;
                    }
        d = std::to_string(checked) + " pairs";
        return checked > 0;
    });

    criterion(4, "rectangular class sweep k<=5 r<=4 n<=14", [](std::string& d) {
        if (run_cli("verify rclass --k-max 5 --n-max 14 --cache shared") != 0) {
            d = "cli sweep failed";
            return false;
        }
        VerifyReport report = verify_rclass_sweep(5, 14, {1, 2, 3, 4});
        d = std::to_string(report.total()) + " instances";
        return report.all_ok();
    });

    criterion(5, "stable polynomials k<=4 m<=4 vs interpolation and 9 points beyond",
              [](std::string& d) {
                  VerifyReport report = verify_stablepoly_sweep(4, 4, 9);
                  d = std::to_string(report.total()) + " families";
                  if (const VerifyRecord* f = report.first_failure()) d += "; first: " + f->instance;
                  return report.all_ok() && report.total() == 144;
              });

    criterion(6, "oracle independence: mn vs frobenius n<=6, three degree routes n<=8",
              [](std::string& d) {
                  int checked = 0;
                  for (int n = 0; n <= 6; ++n)
                      for (const Partition& lam : partitions_of(n))
                          for (const Partition& alpha : partitions_of(n)) {
                              CycleType klass = CycleType::from_parts(alpha.parts());
                              if (mn_value(SkewShape(lam), klass) !=
                                  frobenius_char_value(lam, klass)) {
                                  d = "mn/frobenius mismatch at lam=" + lam.to_string() +
                                      " alpha=" + klass.to_string();
                                  return false;
                              }
                              ++checked;
                          }
                  for (int n = 0; n <= 8; ++n)
                      for (const Partition& lam : partitions_of(n)) {
                          Int hook = degree_hook(lam);
                          if (degree_skew(SkewShape(lam)) != hook ||
                              count_syt(SkewShape(lam)) != hook) {
                              d = "degree route mismatch at lam=" + lam.to_string();
                              return false;
                          }
                          ++checked;
                      }
                  d = std::to_string(checked) + " checks";
                  return checked > 0;
              });

    criterion(7, "spot values for the standard-representation families", [](std::string& d) {
        for (int n = 1; n <= 10; ++n) {
            if (cz_degree(Partition({1}), n) != n) {
                d = "degree of (n,1) wrong at n=" + std::to_string(n);
                return false;
            }
        }
        for (int n = 2; n <= 10; ++n) {
            CycleType klass = CycleType::from_parts({2}).with_added_fixed_points(n - 1);
            if (mn_value(SkewShape(first_row_extend(Partition({1}), n)), klass) != n - 2) {
                d = "chi^(n,1) at (2,1^(n-1)) wrong at n=" + std::to_string(n);
                return false;
            }
        }
        for (int n = 2; n <= 12; n += 2) {
            Int expected = (n + 2) / 2;
            Int direct = mn_value(SkewShape(first_row_extend(Partition({2}), n)),
                                  CycleType::rectangular(2, (n + 2) / 2));
            Int via_expansion = rect_class_value(Partition({2}), n, 2);
            if (direct != expected || via_expansion != expected) {
                d = "chi^(n,2) at 2^((n+2)/2) wrong at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(8, "memoized evaluation under 5s at n=30 with calls <= naive", [](std::string& d) {
        std::int64_t worst_memo_us = 0;
        for (const Partition& lam : partitions_of(4)) {
            for (const Partition& nu : partitions_of(4)) {
                BenchReport report = bench_stable(lam, nu, 30, 30);
                if (report.records.size() != 1) {
                    d = "missing bench record";
                    return false;
                }
                std::uint64_t naive_calls = 0, memo_calls = 0;
                std::int64_t memo_us = -1;
                for (const auto& s : report.records[0].strategies) {
                    if (s.name == "mn_naive") naive_calls = s.calls;
                    if (s.name == "mn_memo") {
                        memo_calls = s.calls;
                        memo_us = s.micros;
                    }
                }
                if (memo_us < 0 || memo_us >= 5000000) {
                    d = "memoized run too slow for lambda=" + lam.to_string() +
                        " nu=" + nu.to_string();
                    return false;
                }
                if (memo_calls > naive_calls) {
                    d = "memoized calls exceed naive for lambda=" + lam.to_string() +
                        " nu=" + nu.to_string();
                    return false;
                }
                worst_memo_us = std::max(worst_memo_us, memo_us);
            }
        }
        d = "worst memoized time " + std::to_string(worst_memo_us) + "us over 25 instances";
        return true;
    });

    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << (8 - failures) << "/8)" << std::endl;
    return failures == 0 ? 0 : 1;
}
