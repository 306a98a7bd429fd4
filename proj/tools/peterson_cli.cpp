#include "CLI11.hpp"
#include "json.hpp"

#include "peterson/bikelock.hpp"
#include "peterson/oracle.hpp"
#include "peterson/parallel.hpp"
#include "peterson/records.hpp"
#include "peterson/restriction.hpp"
#include "peterson/structure.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <string>
#include <vector>

namespace {

using namespace peterson;

struct FormatFlags {
    bool json = false, csv = false, latex = false;

    OutputFormat pick() const {
        if (json) return OutputFormat::Json;
        if (csv) return OutputFormat::Csv;
        if (latex) return OutputFormat::Latex;
        return OutputFormat::Text;
    }
};

void add_format_flags(CLI::App* cmd, FormatFlags& fmt) {
    auto* j = cmd->add_flag("--json", fmt.json, "emit JSON lines");
    auto* c = cmd->add_flag("--csv", fmt.csv, "emit CSV with a header row");
    auto* l = cmd->add_flag("--latex", fmt.latex, "emit a LaTeX tabular");
    j->excludes(c)->excludes(l);
    c->excludes(l);
}

struct CachePlumbing {
    std::string path;

    void load_into(StructureConstants& calc) const {
        if (!path.empty() && std::filesystem::exists(path)) calc.load_cache(path);
    }
    void save_from(const StructureConstants& calc) const {
        if (!path.empty()) calc.save_cache(path);
    }
};

int emit_single(const IndexSet& a, const IndexSet& b, const IndexSet& c, const Monomial& value,
                const FormatFlags& fmt) {
    if (fmt.pick() == OutputFormat::Text) {
        std::cout << value.str() << "\n";
    } else {
        write_records(std::cout, {OutputRecord::make(a, b, c, value)}, fmt.pick());
    }
    return 0;
}

std::uint64_t rank_mask(unsigned n) {
    return n >= 2 ? ((~std::uint64_t{0}) >> (64 - (n - 1))) << 1 : 0;
}

struct SweepReport {
    std::string mode;
    size_t checked = 0;
    std::vector<std::string> mismatches;
    double elapsed_ms = 0;

    int finish(bool as_json) const {
        if (as_json) {
            nlohmann::json j{{"mode", mode},
                             {"checked", checked},
                             {"mismatches", mismatches.size()},
                             {"elapsed_ms", elapsed_ms}};
            if (!mismatches.empty()) j["first_mismatches"] = mismatches;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "checked " << checked << " " << mode << " cases, " << mismatches.size()
                      << " mismatches (" << elapsed_ms / 1000.0 << "s)\n";
            for (const auto& m : mismatches) std::cout << "  mismatch: " << m << "\n";
        }
        return mismatches.empty() ? 0 : 1;
    }

    void record(std::mutex& mu, const std::string& what) {
        std::lock_guard<std::mutex> lock(mu);
        if (mismatches.size() < 20) mismatches.push_back(what);
    }
};

int run_verify_formula(int max_n, const CachePlumbing& cache, bool as_json) {
    const auto t0 = std::chrono::steady_clock::now();
    struct Case {
        unsigned n;
        std::uint64_t a, b;
    };
    std::vector<Case> cases;
    for (unsigned n = 2; n <= static_cast<unsigned>(max_n); ++n) {
        const std::uint64_t all = rank_mask(n);
        for (std::uint64_t a = 0; a <= all; ++a) {
            if ((a & ~all) != 0) continue;
            for (std::uint64_t b = 0; b <= all; ++b) {
                if ((b & ~all) != 0) continue;
                cases.push_back({n, a, b});
            }
        }
    }

    const unsigned workers = worker_count();
    std::vector<StructureConstants> calcs(workers);
    cache.load_into(calcs[0]);
    SweepReport report;
    report.mode = "formula-vs-oracle";
    report.checked = cases.size();
    std::mutex mu;
    parallel_for(cases.size(), workers, [&](size_t idx, unsigned wid) {
        const Case& cs = cases[idx];
        IndexSet a = IndexSet::from_bits(cs.n, cs.a);
        IndexSet b = IndexSet::from_bits(cs.n, cs.b);
        Expansion table = calcs[wid].expand(a, b);
        auto oracle = localize_product(a, b);
        if (table.rows != oracle) {
            report.record(mu, "A={" + a.str() + "} B={" + b.str() + "} n=" +
                                  std::to_string(cs.n));
        }
    });
    cache.save_from(calcs[0]);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report.finish(as_json);
}

int run_verify_oracle(int max_n, bool as_json) {
    const auto t0 = std::chrono::steady_clock::now();
    struct Case {
        unsigned n;
        std::uint64_t a, c;
    };
    std::vector<Case> cases;
    for (unsigned n = 2; n <= static_cast<unsigned>(max_n); ++n) {
        const std::uint64_t all = rank_mask(n);
        for (std::uint64_t c = 0; c <= all; ++c) {
            if ((c & ~all) != 0) continue;
            // submasks of c, including empty and c itself
            std::uint64_t a = c;
            for (;;) {
                cases.push_back({n, a, c});
                if (a == 0) break;
                a = (a - 1) & c;
            }
        }
    }
    SweepReport report;
    report.mode = "restriction-vs-subword";
    report.checked = cases.size();
    std::mutex mu;
    parallel_for(cases.size(), worker_count(), [&](size_t idx, unsigned) {
        const Case& cs = cases[idx];
        IndexSet a = IndexSet::from_bits(cs.n, cs.a);
        IndexSet c = IndexSet::from_bits(cs.n, cs.c);
        if (restriction(a, c) != subword_restriction(a, c))
            report.record(mu, "A={" + a.str() + "} C={" + c.str() + "} n=" +
                                  std::to_string(cs.n));
    });
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report.finish(as_json);
}

int run_verify_identity(long grid_m, long grid_n, long grid_max, bool counts_only,
                        bool as_json) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<bikelock::Params> points;
    for (long m = 0; m <= grid_m; ++m)
        for (long n = 0; n <= grid_n; ++n)
            for (long w = 0; w <= grid_max; ++w)
                for (long x = 0; x <= grid_max; ++x)
                    for (long y = 0; y <= grid_max; ++y)
                        for (long z = 0; z <= grid_max; ++z) {
                            bikelock::Params p{m, n, w, x, y, z};
                            if (!p.balanced() || p.width() > 12) continue;
                            points.push_back(p);
                        }
    // Large points first so a parallel run stays balanced.
    std::sort(points.begin(), points.end(),
              [](const bikelock::Params& a, const bikelock::Params& b) {
                  return bikelock::lhs_count(a) > bikelock::lhs_count(b);
              });
    SweepReport report;
    report.mode = counts_only ? "identity-counts" : "identity-bijection";
    report.checked = points.size();
    std::mutex mu;
    parallel_for(points.size(), worker_count(), [&](size_t idx, unsigned) {
        const bikelock::Params& p = points[idx];
        bikelock::Certificate cert = bikelock::verify_identity(p, !counts_only);
        bool ok = cert.counts_equal && (!cert.bijection_checked || cert.bijection_ok);
        if (!ok) report.record(mu, p.str() + ": " + cert.failure);
    });
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report.finish(as_json);
}

nlohmann::json certificate_json(const bikelock::Certificate& cert) {
    nlohmann::json j{{"params",
                      {{"m", cert.params.m},
                       {"n", cert.params.n},
                       {"w", cert.params.w},
                       {"x", cert.params.x},
                       {"y", cert.params.y},
                       {"z", cert.params.z}}},
                     {"lhs", cert.lhs.str()},
                     {"rhs", cert.rhs.str()},
                     {"s_count", cert.s_count.str()},
                     {"v_count", cert.v_count.str()},
                     {"counts_equal", cert.counts_equal},
                     {"vacuous", cert.vacuous},
                     {"bijection_checked", cert.bijection_checked},
                     {"bijection_ok", cert.bijection_ok},
                     {"elapsed_ms", cert.elapsed_ms}};
    if (!cert.failure.empty()) j["failure"] = cert.failure;
    if (!cert.pairing.empty()) {
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& [v, s] : cert.pairing)
            pairs.push_back({{"v", v.str()}, {"s", s.str()}});
        j["pairing"] = pairs;
    }
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structure constants of the Peterson Schubert basis, with verification tools"};
    app.require_subcommand(1);

    std::string arg_a, arg_b, arg_c;
    int arg_n = 0;
    FormatFlags fmt;
    CachePlumbing cache;

    auto* cmd_constant =
        app.add_subcommand("constant", "one product coefficient, exact in t");
    cmd_constant->add_option("--a", arg_a, "first class, e.g. 1,2 or 2-4")->required();
    cmd_constant->add_option("--b", arg_b, "second class")->required();
    cmd_constant->add_option("--c", arg_c, "target class")->required();
    cmd_constant->add_option("--n", arg_n, "rank, 2..64")->required()->check(CLI::Range(2, 64));
    cmd_constant->add_option("--cache", cache.path, "memo snapshot file to reuse and update");
    add_format_flags(cmd_constant, fmt);

    bool arg_ordinary = false;
    auto* cmd_expand = app.add_subcommand("expand", "all nonzero coefficients of one product");
    cmd_expand->add_option("--a", arg_a)->required();
    cmd_expand->add_option("--b", arg_b)->required();
    cmd_expand->add_option("--n", arg_n)->required()->check(CLI::Range(2, 64));
    cmd_expand->add_flag("--ordinary", arg_ordinary,
                         "top-degree rows only, with t specialized away");
    cmd_expand->add_option("--cache", cache.path, "memo snapshot file to reuse and update");
    add_format_flags(cmd_expand, fmt);

    auto* cmd_restrict =
        app.add_subcommand("restrict", "restriction of one class to one fixed point");
    cmd_restrict->add_option("--a", arg_a)->required();
    cmd_restrict->add_option("--c", arg_c)->required();
    cmd_restrict->add_option("--n", arg_n)->required()->check(CLI::Range(2, 64));
    add_format_flags(cmd_restrict, fmt);

    int arg_max_n = 5;
    std::string arg_mode = "formula";
    long grid_m = 2, grid_n = 2, grid_max = 4;
    bool counts_only = false;
    auto* cmd_verify = app.add_subcommand(
        "verify", "sweep an equivalence check and report mismatches (exit 1 on any)");
    cmd_verify->add_option("--max-n", arg_max_n, "largest rank for the sweeps")
        ->check(CLI::Range(2, 10));
    cmd_verify->add_option("--mode", arg_mode, "formula | oracle | identity")
        ->check(CLI::IsMember({"formula", "oracle", "identity"}));
    cmd_verify->add_option("--grid-m", grid_m, "identity grid bound for m")->check(CLI::Range(0L, 8L));
    cmd_verify->add_option("--grid-n", grid_n, "identity grid bound for n")->check(CLI::Range(0L, 8L));
    cmd_verify->add_option("--grid-max", grid_max, "identity grid bound for w, x, y, z")
        ->check(CLI::Range(0L, 12L));
    cmd_verify->add_flag("--counts-only", counts_only,
                         "identity mode: skip the bijection sweep");
    cmd_verify->add_option("--cache", cache.path, "memo snapshot (formula mode)");
    add_format_flags(cmd_verify, fmt);

    bikelock::Params point;
    bool arg_bijection = false, arg_trace = false;
    auto* cmd_identity =
        app.add_subcommand("identity", "check one parameter point of the counting identity");
    cmd_identity->add_option("--m", point.m)->required();
    cmd_identity->add_option("--n", point.n)->required();
    cmd_identity->add_option("--w", point.w)->required();
    cmd_identity->add_option("--x", point.x)->required();
    cmd_identity->add_option("--y", point.y)->required();
    cmd_identity->add_option("--z", point.z)->required();
    cmd_identity->add_flag("--bijection", arg_bijection, "also run the move-and-translate sweep");
    cmd_identity->add_flag("--trace", arg_trace, "print the matched pairs (implies --bijection)");
    add_format_flags(cmd_identity, fmt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_constant->parsed()) {
            IndexSet a = IndexSet::parse(static_cast<unsigned>(arg_n), arg_a);
            IndexSet b = IndexSet::parse(static_cast<unsigned>(arg_n), arg_b);
            IndexSet c = IndexSet::parse(static_cast<unsigned>(arg_n), arg_c);
            StructureConstants calc;
            cache.load_into(calc);
            Monomial value = calc.coefficient(a, b, c);
            cache.save_from(calc);
            return emit_single(a, b, c, value, fmt);
        }

        if (cmd_expand->parsed()) {
            IndexSet a = IndexSet::parse(static_cast<unsigned>(arg_n), arg_a);
            IndexSet b = IndexSet::parse(static_cast<unsigned>(arg_n), arg_b);
            StructureConstants calc;
            cache.load_into(calc);
            Expansion table = calc.expand(a, b);
            cache.save_from(calc);
            std::vector<OutputRecord> rows;
            for (const auto& [c, value] : table.rows) {
                if (arg_ordinary && c.size() != a.size() + b.size()) continue;
                rows.push_back(OutputRecord::make(a, b, c, value));
            }
            write_records(std::cout, rows, fmt.pick());
            return 0;
        }

        if (cmd_restrict->parsed()) {
            IndexSet a = IndexSet::parse(static_cast<unsigned>(arg_n), arg_a);
            IndexSet c = IndexSet::parse(static_cast<unsigned>(arg_n), arg_c);
            return emit_single(a, IndexSet(static_cast<unsigned>(arg_n)), c, restriction(a, c),
                               fmt);
        }

        if (cmd_verify->parsed()) {
            if (arg_mode == "formula") return run_verify_formula(arg_max_n, cache, fmt.json);
            if (arg_mode == "oracle") return run_verify_oracle(arg_max_n, fmt.json);
            return run_verify_identity(grid_m, grid_n, grid_max, counts_only, fmt.json);
        }

        if (cmd_identity->parsed()) {
            if (!point.balanced() || point.m < 0 || point.n < 0) {
                std::cerr << "error: need m, n >= 0 and w + x == y + z (got " << point.str()
                          << ")\n";
                return 2;
            }
            if (bikelock::lhs_count(point) > 50'000'000) {
                std::cerr << "error: " << point.str()
                          << " counts more than 5e7 matrices; refusing to enumerate\n";
                return 2;
            }
            bikelock::Certificate cert =
                bikelock::verify_identity(point, arg_bijection || arg_trace, arg_trace);
            bool ok = cert.counts_equal && (!cert.bijection_checked || cert.bijection_ok);
            if (fmt.json) {
                std::cout << certificate_json(cert).dump() << "\n";
            } else {
                std::cout << cert.params.str() << "\n"
                          << "lhs = " << cert.lhs.str() << "  rhs = " << cert.rhs.str()
                          << "  |S| = " << cert.s_count.str()
                          << "  |V| = " << cert.v_count.str() << "\n"
                          << "counts " << (cert.counts_equal ? "agree" : "DISAGREE")
                          << (cert.vacuous ? " (vacuous point: everything is zero)" : "") << "\n";
                if (cert.bijection_checked)
                    std::cout << "bijection sweep: " << (cert.bijection_ok ? "pass" : "FAIL")
                              << "\n";
                if (!cert.failure.empty()) std::cout << "failure: " << cert.failure << "\n";
                for (const auto& [v, s] : cert.pairing)
                    std::cout << "  " << v.str() << "  ->  " << s.str() << "\n";
                std::cout << "elapsed " << cert.elapsed_ms << " ms\n";
            }
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
