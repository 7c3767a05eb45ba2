// kneser: command-line front end. Builds (stable) Kneser hypergraphs,
// runs the exact solvers and verifiers, and emits JSON/CSV reports.
//
// Exit codes: 0 ok, 1 mismatch or verification failure, 2 usage error,
// 3 budget exhausted.
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "kneserlab/defect.hpp"
#include "kneserlab/geometry.hpp"
#include "kneserlab/json_io.hpp"
#include "kneserlab/kneser.hpp"
#include "kneserlab/setsystem.hpp"
#include "kneserlab/topology.hpp"

using namespace kneserlab;

namespace {

constexpr std::uint64_t kDefaultSeed = 20250101;

// "5", "5:8" (inclusive), or "5,7,9"
std::vector<int> parse_range(const std::string& s) {
    std::vector<int> out;
    if (s.find(':') != std::string::npos) {
        int lo = 0, hi = 0;
        char colon = 0;
        std::istringstream in(s);
        if (!(in >> lo >> colon >> hi) || colon != ':' || hi < lo)
            throw InvalidArgument("bad range: " + s);
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw InvalidArgument("empty range: " + s);
    return out;
}

struct Output {
    std::ofstream file;
    std::ostream& stream() { return file.is_open() ? file : std::cout; }
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw InvalidArgument("cannot open output file: " + path);
    }
};

json read_stdin_json() {
    json j;
    std::cin >> j;
    return j;
}

SetSystem family_for(int r, int k, int n, const std::string& variant, int s) {
    SetSystem F = k_subsets(n, k);
    if (variant == "plain") return F;
    if (variant == "s-stable") return filter_s_stable(F, s);
    if (variant == "almost-stable") return filter_almost_2_stable(F);
    if (variant == "transversal") {
        // consecutive blocks of s elements (last block takes the remainder)
        std::vector<Mask> blocks;
        for (int lo = 1; lo <= n; lo += s) {
            Mask b = 0;
            for (int e = lo; e <= std::min(n, lo + s - 1); ++e) b |= bit_of(e);
            blocks.push_back(b);
        }
        return filter_transversal(F, GroundPartition(n, blocks));
    }
    throw InvalidArgument("unknown variant: " + variant);
}

struct Record {
    int r, k, n, s;
    std::string variant;
    int formula = 0;
    int chi = -1; // -1 when skipped
    int cd = 0;
    int kriz = 0;
    std::string status; // match | mismatch | skipped-budget
    long millis = 0;
};

Record verify_cell(int r, int k, int n, int s, const std::string& variant,
                   long long budget) {
    auto t0 = std::chrono::steady_clock::now();
    Record rec{r, k, n, s, variant};
    rec.formula = afl_formula(r, k, n);
    SetSystem F = family_for(r, k, n, variant, s);
    rec.cd = colorability_defect(F, r).value;
    rec.kriz = kriz_bound(F, r);
    Hypergraph H = build_kneser(F, r);
    ChiResult res = chromatic_number_exact(H, budget);
    if (res.budget_exceeded) {
        rec.status = "skipped-budget";
    } else {
        rec.chi = res.chi;
        rec.status = (rec.chi == rec.formula) ? "match" : "mismatch";
    }
    rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return rec;
}

json record_json(const Record& rec) {
    json j{{"r", rec.r},       {"k", rec.k},
           {"n", rec.n},       {"s", rec.s},
           {"variant", rec.variant}, {"formula", rec.formula},
           {"cd", rec.cd},     {"kriz", rec.kriz},
           {"status", rec.status},   {"millis", rec.millis}};
    if (rec.chi >= 0) j["chi"] = rec.chi;
    return j;
}

// Frozen CSV column order.
constexpr const char* kCsvHeader = "r,k,n,s,variant,formula,chi,cd,kriz,status,millis";

void record_csv(std::ostream& os, const Record& rec) {
    os << rec.r << ',' << rec.k << ',' << rec.n << ',' << rec.s << ','
       << rec.variant << ',' << rec.formula << ',';
    if (rec.chi >= 0) os << rec.chi;
    os << ',' << rec.cd << ',' << rec.kriz << ',' << rec.status << ','
       << rec.millis << '\n';
}

int run_chi(int r, int k, int n, const std::string& variant, int s,
            long long budget, const std::string& format, Output& out) {
    Record rec;
    if (k > 0) {
        rec = verify_cell(r, k, n, s, variant, budget);
    } else {
        // hypergraph JSON on stdin; no formula comparison
        Hypergraph H = hypergraph_from_json(read_stdin_json());
        auto t0 = std::chrono::steady_clock::now();
        ChiResult res = chromatic_number_exact(H, budget);
        rec.r = H.r;
        rec.k = rec.n = rec.s = 0;
        rec.variant = "input";
        rec.formula = -1;
        if (res.budget_exceeded) {
            rec.status = "skipped-budget";
        } else {
            rec.chi = res.chi;
            rec.status = "match";
        }
        rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    }
    if (format == "csv") {
        out.stream() << kCsvHeader << '\n';
        record_csv(out.stream(), rec);
    } else {
        out.stream() << record_json(rec).dump(2) << '\n';
    }
    if (rec.status == "skipped-budget") return 3;
    return rec.status == "match" ? 0 : 1;
}

int run_grid(const std::vector<int>& rs, const std::vector<int>& ks,
             const std::vector<int>& ns, const std::vector<int>& ss,
             const std::string& variant, long long budget, int jobs,
             const std::string& format, Output& out) {
    struct Cell {
        int r, k, n, s;
    };
    std::vector<Cell> cells;
    for (int r : rs)
        for (int k : ks)
            for (int n : ns)
                for (int s : ss)
                    if (n >= r * k) cells.push_back({r, k, n, s});

    std::vector<Record> records(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
            const Cell& c = cells[i];
            records[i] = verify_cell(c.r, c.k, c.n, c.s, variant, budget);
        }
    };
    int nthreads = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    bool mismatch = false;
    if (format == "csv") {
        out.stream() << kCsvHeader << '\n';
        for (const Record& rec : records) record_csv(out.stream(), rec);
    } else {
        json arr = json::array();
        for (const Record& rec : records) arr.push_back(record_json(rec));
        out.stream() << arr.dump(2) << '\n';
    }
    for (const Record& rec : records) mismatch = mismatch || rec.status == "mismatch";
    return mismatch ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification workbench for chromatic numbers of Kneser hypergraphs"};
    app.require_subcommand(1);

    int r = 2, k = 0, n = 0, s = 2, d = 1, count = 0, extra = -1, jobs = 1;
    long long budget = kDefaultNodeBudget;
    std::uint64_t seed = kDefaultSeed;
    std::string variant = "plain", format = "json", out_path, n_range = "", field = "Q";
    std::string r_range = "2", k_range = "2", s_range = "2", base = "2";
    bool strict = false, stretched = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to file instead of stdout");
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* chi = app.add_subcommand("chi", "exact chromatic number of one instance");
    chi->add_option("--r", r)->required();
    chi->add_option("--k", k, "omit to read a hypergraph JSON from stdin");
    chi->add_option("--n", n);
    chi->add_option("--s", s);
    chi->add_option("--variant", variant)
        ->check(CLI::IsMember({"plain", "s-stable", "almost-stable", "transversal"}));
    chi->add_option("--budget", budget);
    add_common(chi);

    CLI::App* grid = app.add_subcommand("grid-verify", "formula check over a parameter grid");
    grid->add_option("--r", r_range)->required();
    grid->add_option("--k", k_range)->required();
    grid->add_option("--n", n_range)->required();
    grid->add_option("--s", s_range);
    grid->add_option("--variant", variant)
        ->check(CLI::IsMember({"plain", "s-stable", "almost-stable", "transversal"}));
    grid->add_option("--budget", budget);
    grid->add_option("--jobs", jobs);
    add_common(grid);

    CLI::App* defect = app.add_subcommand("defect", "colorability defect of a family (stdin JSON)");
    defect->add_option("--r", r)->required();
    add_common(defect);

    CLI::App* tcd = app.add_subcommand("tcd-cert",
                                       "certify cd <= tcd for a family (stdin JSON, "
                                       "optional \"config\" key)");
    tcd->add_option("--r", r)->required();
    tcd->add_option("--seed", seed);
    tcd->add_option("--extra", extra, "extra join vertices (with an explicit config)");
    add_common(tcd);

    CLI::App* tverberg = app.add_subcommand("tverberg",
                                            "occurring Tverberg partitions with colorful flags");
    tverberg->add_option("--r", r)->required();
    tverberg->add_flag("--stretched", stretched, "use a validated stretched config");
    tverberg->add_option("--d", d);
    tverberg->add_option("--count", count);
    tverberg->add_option("--base", base);
    add_common(tverberg);

    CLI::App* box = app.add_subcommand("box", "box complex of a hypergraph (stdin JSON)");
    box->add_flag("--strict", strict, "strict transversal variant");
    add_common(box);

    CLI::App* homology = app.add_subcommand("homology", "reduced Betti numbers (stdin JSON)");
    homology->add_option("--field", field, "Q or a prime p for GF(p)");
    add_common(homology);

    CLI::App* coloring = app.add_subcommand("coloring", "explicit formula-optimal coloring");
    coloring->add_option("--r", r)->required();
    coloring->add_option("--k", k)->required();
    coloring->add_option("--n", n)->required();
    add_common(coloring);

    CLI11_PARSE(app, argc, argv);

    Output out;
    try {
        out.open(out_path);
        if (chi->parsed()) {
            if (k > 0 && n <= 0) throw InvalidArgument("--n required with --k");
            return run_chi(r, k, n, variant, s, budget, format, out);
        }
        if (grid->parsed()) {
            return run_grid(parse_range(r_range), parse_range(k_range),
                            parse_range(n_range), parse_range(s_range), variant,
                            budget, jobs, format, out);
        }
        if (defect->parsed()) {
            SetSystem F = setsystem_from_json(read_stdin_json());
            out.stream() << to_json(colorability_defect(F, r)).dump(2) << '\n';
            return 0;
        }
        if (tcd->parsed()) {
            json j = read_stdin_json();
            SetSystem F = setsystem_from_json(j.contains("family") ? j["family"] : j);
            json rep;
            if (j.contains("config")) {
                PointConfig cfg = pointconfig_from_json(j["config"]);
                int cd = colorability_defect(F, r).value;
                CertifiedBound cert = tcd_certificate(F, extra < 0 ? 0 : extra, cfg, r);
                rep = {{"ok", cert.value >= cd},
                       {"cd", cd},
                       {"certified", cert.value},
                       {"checked_tuples", cert.checked_tuples}};
            } else {
                CdTcdReport res = cd_le_tcd_check(F, r, 8, seed);
                rep = {{"ok", res.ok},
                       {"cd", res.cd.value},
                       {"certified", res.certificate.value},
                       {"checked_tuples", res.certificate.checked_tuples},
                       {"dimension", res.dimension},
                       {"extra_vertices", res.extra_vertices},
                       {"trials", res.trials_used}};
            }
            out.stream() << rep.dump(2) << '\n';
            return rep["ok"].get<bool>() ? 0 : 1;
        }
        if (tverberg->parsed()) {
            PointConfig cfg;
            if (stretched) {
                if (count <= 0) count = (r - 1) * (d + 1) + 2;
                cfg = validated_stretched_config(d, count, r, parse_rational(base));
            } else {
                cfg = pointconfig_from_json(read_stdin_json());
            }
            for (const BlockPartition& bp : enumerate_tverberg_partitions(cfg, r)) {
                json blocks = json::array();
                for (const auto& b : bp.blocks) blocks.push_back(b);
                json line{{"support", bp.support},
                          {"blocks", blocks},
                          {"colorful", is_colorful(bp, r, cfg.d)}};
                out.stream() << line.dump() << '\n';
            }
            return 0;
        }
        if (box->parsed()) {
            Hypergraph H = hypergraph_from_json(read_stdin_json());
            out.stream() << to_json(box_complex(H, strict)).dump(2) << '\n';
            return 0;
        }
        if (homology->parsed()) {
            SimplicialComplex K = complex_from_json(read_stdin_json());
            Field f;
            if (field != "Q") {
                f.rationals = false;
                f.p = std::stoi(field);
            }
            out.stream() << to_json(betti_numbers(K, f)).dump(2) << '\n';
            return 0;
        }
        if (coloring->parsed()) {
            Coloring col = greedy_coloring(r, k, n);
            Hypergraph H = build_kneser(k_subsets(n, k), r);
            json j = to_json(col);
            j["c"] = col.c;
            j["proper"] = is_proper(H, col);
            out.stream() << j.dump(2) << '\n';
            return j["proper"].get<bool>() ? 0 : 1;
        }
    } catch (const BudgetExceeded&) {
        std::cerr << "error: node budget exhausted\n";
        return 3;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 1;
    } catch (const InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "usage error: bad JSON input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
