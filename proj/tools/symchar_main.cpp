#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "symchar/bench.hpp"
#include "symchar/characters.hpp"
#include "symchar/errors.hpp"
#include "symchar/jacobi_trudi.hpp"
#include "symchar/oracle.hpp"
#include "symchar/stable.hpp"

using Json = nlohmann::ordered_json;
using namespace symchar;

namespace {

struct GlobalOptions {
    bool json = false;
    bool oracle = false;
    int threads = 1;
    std::string cache = "per-call";
};

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int print_report(const VerifyReport& report, const GlobalOptions& opts) {
    if (opts.json) {
        Json j;
        j["command"] = "verify";
        j["suite"] = report.suite;
        Json records = Json::array();
        for (const auto& rec : report.records) {
            Json jr;
            jr["instance"] = rec.instance;
            jr["lhs"] = rec.lhs;
            jr["rhs"] = rec.rhs;
            jr["status"] = rec.ok ? "ok" : "fail";
            if (!rec.note.empty()) jr["note"] = rec.note;
            records.push_back(std::move(jr));
        }
        j["records"] = std::move(records);
        Json summary;
        summary["total"] = std::to_string(report.total());
        summary["passed"] = std::to_string(report.passed());
        summary["failed"] = std::to_string(report.failed());
        j["summary"] = std::move(summary);
        emit(j);
    } else {
        for (const auto& rec : report.records) {
            if (rec.ok)
                std::cout << "OK " << rec.instance;
            else
                std::cout << "FAIL " << rec.instance << " lhs=" << rec.lhs
                          << " rhs=" << rec.rhs;
            if (!rec.note.empty()) std::cout << " [" << rec.note << "]";
            std::cout << "\n";
        }
        std::cout << report.suite << ": " << report.passed() << "/" << report.total()
                  << " passed\n";
        if (const VerifyRecord* f = report.first_failure())
            std::cout << "first failure: " << f->instance << "\n";
    }
    return report.all_ok() ? 0 : 1;
}

int cmd_degree(const std::string& outer_text, const std::optional<std::string>& inner_text,
               const GlobalOptions& opts) {
    Partition outer = Partition::parse(outer_text);
    Partition inner = inner_text ? Partition::parse(*inner_text) : Partition();
    SkewShape shape(outer, inner);
    Int value = inner.empty() ? degree_hook(outer) : degree_skew(shape);
    std::optional<Int> oracle;
    if (opts.oracle) oracle = count_syt(shape);
    if (opts.json) {
        Json j;
        j["command"] = "degree";
        j["outer"] = outer.to_string();
        j["inner"] = inner.to_string();
        j["value"] = to_string(value);
        if (oracle) {
            j["oracle"] = to_string(*oracle);
            j["oracle_agree"] = *oracle == value;
        }
        emit(j);
    } else {
        std::cout << to_string(value) << "\n";
        if (oracle)
            std::cout << "oracle: count_syt=" << to_string(*oracle)
                      << " agree=" << (*oracle == value ? "yes" : "no") << "\n";
    }
    return oracle && *oracle != value ? 1 : 0;
}

int cmd_char(const std::string& outer_text, const std::string& class_text,
             const std::optional<std::string>& inner_text, const GlobalOptions& opts) {
    Partition outer = Partition::parse(outer_text);
    Partition inner = inner_text ? Partition::parse(*inner_text) : Partition();
    CycleType alpha = CycleType::parse(class_text);
    SkewShape shape(outer, inner);
    Int value = mn_value(shape, alpha);
    std::optional<Int> oracle;
    if (opts.oracle) {
        if (!inner.empty())
            throw GuardError("the character oracle covers straight shapes only");
        oracle = frobenius_char_value(outer, alpha);
    }
    if (opts.json) {
        Json j;
        j["command"] = "char";
        j["outer"] = outer.to_string();
        j["inner"] = inner.to_string();
        j["class"] = alpha.to_string();
        j["value"] = to_string(value);
        if (oracle) {
            j["oracle"] = to_string(*oracle);
            j["oracle_agree"] = *oracle == value;
        }
        emit(j);
    } else {
        std::cout << to_string(value) << "\n";
        if (oracle)
            std::cout << "oracle: frobenius=" << to_string(*oracle)
                      << " agree=" << (*oracle == value ? "yes" : "no") << "\n";
    }
    return oracle && *oracle != value ? 1 : 0;
}

int cmd_charpoly(const std::string& lam_text, const std::string& nu_text,
                 const GlobalOptions& opts) {
    Partition lam = Partition::parse(lam_text);
    Partition nu = Partition::parse(nu_text);
    StableCharPoly result = stable_char_poly({lam, nu});
    if (opts.json) {
        Json j;
        j["command"] = "charpoly";
        j["lambda"] = lam.to_string();
        j["nu"] = nu.to_string();
        j["poly"] = result.poly.to_string();
        Json coeffs = Json::array();
        for (const Rat& c : result.poly.coeffs()) coeffs.push_back(to_string(c));
        j["coefficients"] = std::move(coeffs);
        j["valid_from"] = std::to_string(result.valid_from);
        emit(j);
    } else {
        std::cout << result.poly.to_string() << "\n";
        std::cout << "valid_from: " << result.valid_from << "\n";
    }
    return 0;
}

// "A..B" inclusive, or a single "A".
std::pair<int, int> parse_range(const std::string& text) {
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("bad range '" + text + "', expected N or A..B");
    }
}

int print_bench(const BenchReport& report, const GlobalOptions& opts) {
    if (opts.json) {
        Json j;
        j["command"] = "bench";
        j["family"] = report.family;
        j["params"] = report.params;
        j["poly_build_micros"] = std::to_string(report.poly_build_micros);
        Json records = Json::array();
        for (const auto& rec : report.records) {
            Json jr;
            jr["instance"] = rec.instance;
            jr["value"] = to_string(rec.value);
            Json strategies = Json::array();
            for (const auto& s : rec.strategies) {
                Json js;
                js["name"] = s.name;
                js["calls"] = std::to_string(s.calls);
                js["micros"] = std::to_string(s.micros);
                strategies.push_back(std::move(js));
            }
            jr["strategies"] = std::move(strategies);
            records.push_back(std::move(jr));
        }
        j["records"] = std::move(records);
        emit(j);
    } else {
        std::cout << "bench family=" << report.family << " " << report.params;
        if (report.family == "stable")
            std::cout << " poly_build_us=" << report.poly_build_micros;
        std::cout << "\n";
        for (const auto& rec : report.records) {
            std::cout << rec.instance << " value=" << to_string(rec.value);
            for (const auto& s : rec.strategies) {
                std::cout << " " << s.name << "_us=" << s.micros;
                if (s.calls) std::cout << " " << s.name << "_calls=" << s.calls;
            }
            std::cout << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symmetric-group character computations"};
    app.fallthrough();
    GlobalOptions opts;
    app.add_flag("--json", opts.json, "machine-readable output");
    app.add_flag("--oracle", opts.oracle, "cross-check against the brute-force oracle");
    app.add_option("--threads", opts.threads, "parallelism degree for verification sweeps")
        ->check(CLI::Range(1, 64));
    app.add_option("--cache", opts.cache, "memo cache policy for verify rclass")
        ->check(CLI::IsMember({"per-call", "shared"}));
    app.require_subcommand(1);

    std::string outer_text, class_text, lam_text, nu_text = "0";
    std::optional<std::string> inner_text;

    CLI::App* degree = app.add_subcommand("degree", "number of standard Young tableaux");
    degree->add_option("partition", outer_text, "outer partition, e.g. 3,1")->required();
    degree->add_option("--inner", inner_text, "inner partition of a skew shape");

    CLI::App* chr = app.add_subcommand("char", "character value at a cycle type");
    chr->add_option("partition", outer_text, "outer partition")->required();
    chr->add_option("class", class_text, "cycle type, e.g. 2,1,1 or 1^2,2")->required();
    chr->add_option("--inner", inner_text, "inner partition of a skew shape");

    CLI::App* verify = app.add_subcommand("verify", "verification sweeps");
    verify->require_subcommand(1);
    int k_max = 4, n_max = 10, m_max = 4, extra = 9;
    std::vector<int> rs;
    CLI::App* vcz = verify->add_subcommand("cz", "degree expansion against hook lengths");
    vcz->add_option("--k-max", k_max, "largest |lambda|");
    vcz->add_option("--n-max", n_max, "largest first row");
    CLI::App* vjt = verify->add_subcommand("jt", "h-ring expansion and minor identities");
    vjt->add_option("--k-max", k_max, "largest |lambda|");
    vjt->add_option("--n-max", n_max, "largest first row");
    CLI::App* vrc = verify->add_subcommand("rclass", "rectangular class values");
    vrc->add_option("--k-max", k_max, "largest |lambda|");
    vrc->add_option("--n-max", n_max, "largest first row");
    vrc->add_option("--r", rs, "cycle lengths to check (default 1 2 3 4)");
    CLI::App* vsp = verify->add_subcommand("stablepoly", "stable character polynomials");
    vsp->add_option("--k-max", k_max, "largest |lambda|");
    vsp->add_option("--m-max", m_max, "largest |nu|");
    vsp->add_option("--extra", extra, "checked points beyond the interpolation nodes");

    CLI::App* charpoly = app.add_subcommand("charpoly", "stable character polynomial in n");
    charpoly->add_option("--lambda", lam_text, "fixed partition")->required();
    charpoly->add_option("--nu", nu_text, "fixed class part (default identity family)");

    CLI::App* bench = app.add_subcommand("bench", "evaluation strategy timings");
    std::string family, n_range;
    int bench_k = 3;
    bench->add_option("--family", family, "stable or degree")
        ->required()
        ->check(CLI::IsMember({"stable", "degree"}));
    bench->add_option("--lambda", lam_text, "fixed partition (stable family)");
    bench->add_option("--nu", nu_text, "fixed class part (stable family)");
    bench->add_option("--n", n_range, "first-row value or range A..B")->required();
    bench->add_option("--k", bench_k, "|lambda| sweep (degree family)");

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            app.exit(e);
            return 2;
        }

        if (degree->parsed()) return cmd_degree(outer_text, inner_text, opts);
        if (chr->parsed()) return cmd_char(outer_text, class_text, inner_text, opts);
        if (charpoly->parsed()) return cmd_charpoly(lam_text, nu_text, opts);
        if (verify->parsed()) {
            VerifyReport report;
            if (vcz->parsed())
                report = verify_cz(k_max, n_max, opts.threads);
            else if (vjt->parsed())
                report = verify_jt_sweep(k_max, n_max, opts.threads);
            else if (vrc->parsed())
                report = verify_rclass_sweep(k_max, n_max, rs.empty() ? std::vector<int>{1, 2, 3, 4} : rs,
                                             opts.threads, opts.cache == "shared");
            else
                report = verify_stablepoly_sweep(k_max, m_max, extra, opts.threads);
            return print_report(report, opts);
        }
        if (bench->parsed()) {
            auto [n_lo, n_hi] = parse_range(n_range);
            BenchReport report;
            if (family == "stable") {
                if (lam_text.empty()) throw ParseError("bench --family stable needs --lambda");
                report = bench_stable(Partition::parse(lam_text), Partition::parse(nu_text),
                                      n_lo, n_hi);
            } else {
                if (n_lo != n_hi) throw ParseError("bench --family degree takes a single --n");
                report = bench_degree(bench_k, n_lo);
            }
            return print_bench(report, opts);
        }
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "guard error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
