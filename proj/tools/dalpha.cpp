// dalpha: generalized distance matrix toolkit for strongly connected
// digraphs. Subcommands: spectrum, bounds, generate, verify,
// conjecture, enumerate. Results go to stdout (or --output), progress
// and diagnostics to stderr. Exit status: 0 ok, 1 counterexample,
// 2 usage or input error.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dalpha/alpha_grid.hpp"
#include "dalpha/canonical.hpp"
#include "dalpha/digraph_io.hpp"
#include "dalpha/enumerate.hpp"
#include "dalpha/errors.hpp"
#include "dalpha/families.hpp"
#include "dalpha/spectrum.hpp"
#include "dalpha/verify.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string output_path;
    std::optional<double> alpha;
    std::string alpha_grid_spec;
    std::string family;
    std::string theorem;
    int n = 0;
    int k = 0;
    int m = 1;
    int n_max = 10;
    int trials = 1000;
    std::vector<int> sizes;
    bool json_out = false;
    bool csv_out = false;
    std::uint64_t seed = 1;
    int shards = 0;
    bool allow_n6 = false;
};

std::string fp(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string hex_key(std::uint64_t key) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%" PRIx64, key);
    return buf;
}

json hex_keys(const std::vector<std::uint64_t>& keys) {
    json arr = json::array();
    for (auto k : keys) arr.push_back(hex_key(k));
    return arr;
}

std::string join_keys(const std::vector<std::uint64_t>& keys) {
    std::string out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) out += " ";
        out += hex_key(keys[i]);
    }
    return out.empty() ? "{}" : "{" + out + "}";
}

std::vector<double> resolve_alphas(const RunConfig& cfg, const std::string& fallback) {
    if (cfg.alpha && !cfg.alpha_grid_spec.empty())
        throw dalpha::InvalidParams("use either --alpha or --alpha-grid, not both");
    if (cfg.alpha) {
        if (!(*cfg.alpha >= 0.0) || !(*cfg.alpha < 1.0))
            throw dalpha::InvalidAlpha("alpha must lie in [0,1)");
        return {*cfg.alpha};
    }
    return dalpha::parse_alpha_grid(cfg.alpha_grid_spec.empty() ? fallback
                                                                : cfg.alpha_grid_spec);
}

dalpha::Digraph load_input(const RunConfig& cfg) {
    if (cfg.input_path.empty())
        throw dalpha::InvalidParams("--input is required for this command");
    if (cfg.input_path == "-") return dalpha::read_digraph(std::cin);
    return dalpha::read_digraph_file(cfg.input_path);
}

struct OutputStream {
    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw dalpha::Error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& get() { return file.is_open() ? file : std::cout; }
    std::ofstream file;
};

json bounds_json(const dalpha::BoundsReport& b) {
    return json{{"lower_rowsum", b.lower_rowsum},
                {"upper_rowsum", b.upper_rowsum},
                {"trmax_bound", b.trmax_bound},
                {"distance_regular", b.distance_regular}};
}

int cmd_spectrum(const RunConfig& cfg, bool with_spectrum) {
    auto g = load_input(cfg);
    auto alphas = resolve_alphas(cfg, "0:0:0.1");
    auto dd = dalpha::distance_data(g);
    OutputStream out(cfg.output_path);
    for (double a : alphas) {
        auto bounds = dalpha::row_sum_bounds(dd, a);
        if (!with_spectrum) {
            if (cfg.json_out) {
                json rec{{"alpha", a}, {"bounds", bounds_json(bounds)}};
                out.get() << rec.dump() << "\n";
            } else {
                out.get() << "alpha " << fp(a) << ": rowsum [" << fp(bounds.lower_rowsum)
                          << ", " << fp(bounds.upper_rowsum) << "], alpha*trmax "
                          << fp(bounds.trmax_bound) << ", "
                          << (bounds.distance_regular ? "" : "not ") << "distance regular\n";
            }
            continue;
        }
        auto res = dalpha::perron(dalpha::dalpha_matrix(dd, a));
        if (cfg.json_out) {
            json rec{{"alpha", a},
                     {"radius", res.radius},
                     {"perron_vector", res.perron_vector},
                     {"iterations", res.iterations},
                     {"residual", res.residual},
                     {"bounds", bounds_json(bounds)}};
            out.get() << rec.dump() << "\n";
        } else {
            out.get() << "alpha " << fp(a) << ": radius " << fp(res.radius) << ", iterations "
                      << res.iterations << ", residual " << fp(res.residual) << "\n";
            out.get() << "  perron vector:";
            for (double x : res.perron_vector) out.get() << " " << fp(x);
            out.get() << "\n  rowsum bounds [" << fp(bounds.lower_rowsum) << ", "
                      << fp(bounds.upper_rowsum) << "], alpha*trmax " << fp(bounds.trmax_bound)
                      << ", " << (bounds.distance_regular ? "" : "not ") << "distance regular\n";
        }
    }
    return 0;
}

int cmd_generate(const RunConfig& cfg) {
    dalpha::FamilySpec spec;
    spec.n = cfg.n;
    spec.k = cfg.k;
    spec.m = cfg.m;
    spec.sizes = cfg.sizes;
    if (cfg.family == "complete") spec.kind = dalpha::FamilySpec::Kind::Complete;
    else if (cfg.family == "cycle") spec.kind = dalpha::FamilySpec::Kind::Cycle;
    else if (cfg.family == "tournament") spec.kind = dalpha::FamilySpec::Kind::TransitiveTournament;
    else if (cfg.family == "tpartition") spec.kind = dalpha::FamilySpec::Kind::TPartition;
    else if (cfg.family == "tstar") spec.kind = dalpha::FamilySpec::Kind::TStar;
    else if (cfg.family == "knkm") spec.kind = dalpha::FamilySpec::Kind::Knkm;
    else throw dalpha::InvalidParams("unknown family '" + cfg.family + "'");
    auto g = dalpha::build_family(spec);
    OutputStream out(cfg.output_path);
    dalpha::write_digraph(out.get(), g);
    return 0;
}

void print_cell_human(std::ostream& os, const dalpha::ExtremalReport& r) {
    os << to_string(r.selector) << " n=" << r.n << " alpha=" << fp(r.alpha) << ": class "
       << r.class_size << ", min " << fp(r.min_value) << " " << join_keys(r.minimizers)
       << ", max " << fp(r.max_value) << ", expected " << join_keys(r.expected_minimizers)
       << (r.proven ? "" : " (conjectured here)") << ", "
       << (r.matches ? "match" : "MISMATCH");
    if (r.bound_violations) os << ", bound violations " << r.bound_violations;
    os << "\n";
}

json cell_json(const std::string& theorem, const dalpha::ExtremalReport& r) {
    json rec{{"theorem", theorem},
             {"n", r.n},
             {"alpha", r.alpha},
             {"class", to_string(r.selector)},
             {"class_size", r.class_size},
             {"min_value", r.min_value},
             {"max_value", r.max_value},
             {"minimizers", hex_keys(r.minimizers)},
             {"maximizers", hex_keys(r.maximizers)},
             {"expected_minimizers", hex_keys(r.expected_minimizers)},
             {"proven", r.proven},
             {"matches", r.matches},
             {"bound_violations", r.bound_violations},
             {"regularity_mismatches", r.regularity_mismatches}};
    if (r.has_second_min) {
        rec["second_min_value"] = r.second_min_value;
        rec["min_margin"] = r.min_margin;
        rec["second_minimizers"] = hex_keys(r.second_minimizers);
    }
    if (!r.expected_maximizers.empty())
        rec["expected_maximizers"] = hex_keys(r.expected_maximizers);
    return rec;
}

int run_scan_theorem(const RunConfig& cfg, const dalpha::ClassSelector& sel) {
    auto alphas = resolve_alphas(cfg, "0:0.9:0.1");
    if (cfg.n < 2) throw dalpha::InvalidParams("--n is required (n >= 2)");
    std::cerr << "scanning n=" << cfg.n << ", " << (std::uint64_t{1} << dalpha::arc_slots(cfg.n))
              << " arc subsets, class " << to_string(sel) << "\n";
    auto reports = dalpha::extremal_scan_grid(cfg.n, alphas, {sel}, cfg.shards, cfg.allow_n6);
    OutputStream out(cfg.output_path);
    bool fail = false;
    for (const auto& r : reports) {
        if (cfg.json_out)
            out.get() << cell_json(cfg.theorem, r).dump() << "\n";
        else
            print_cell_human(out.get(), r);
        if ((r.proven && !r.matches) || r.bound_violations > 0) fail = true;
    }
    if (!cfg.json_out)
        out.get() << "verify " << cfg.theorem << " n=" << cfg.n << ": "
                  << (fail ? "FAIL" : "PASS") << " (" << reports.size() << " cells)\n";
    return fail ? 1 : 0;
}

int cmd_verify(const RunConfig& cfg) {
    if (cfg.theorem == "global") return run_scan_theorem(cfg, dalpha::ClassSelector::all());
    if (cfg.theorem == "dichromatic") {
        if (cfg.k < 2) throw dalpha::InvalidParams("dichromatic verify needs --k >= 2");
        return run_scan_theorem(cfg, dalpha::ClassSelector::dichromatic(cfg.k));
    }
    if (cfg.theorem == "vconn") {
        if (cfg.k < 1) throw dalpha::InvalidParams("vconn verify needs --k >= 1");
        return run_scan_theorem(cfg, dalpha::ClassSelector::vertex_conn(cfg.k));
    }
    if (cfg.theorem == "aconn") {
        if (cfg.k < 1) throw dalpha::InvalidParams("aconn verify needs --k >= 1");
        return run_scan_theorem(cfg, dalpha::ClassSelector::arc_conn(cfg.k));
    }
    if (cfg.theorem == "monotonic") {
        auto alphas = resolve_alphas(cfg, "0:0.9:0.1");
        std::vector<int> n_range = cfg.n >= 2 ? std::vector<int>{cfg.n}
                                              : std::vector<int>{3, 4, 5};
        auto rep = dalpha::monotonicity_check(cfg.trials, n_range, cfg.seed, alphas);
        OutputStream out(cfg.output_path);
        if (cfg.json_out) {
            json rec{{"theorem", "monotonic"},     {"trials", rep.trials},
                     {"seed", rep.seed},           {"n_range", rep.n_range},
                     {"comparisons", rep.comparisons}, {"counterexamples", rep.counterexamples},
                     {"min_gap", rep.min_gap}};
            out.get() << rec.dump() << "\n";
        } else {
            out.get() << "monotonic: " << rep.trials << " trials (seed " << rep.seed << "), "
                      << rep.comparisons << " comparisons, " << rep.counterexamples
                      << " counterexamples, min gap " << fp(rep.min_gap) << "\n";
        }
        return rep.counterexamples == 0 ? 0 : 1;
    }
    if (cfg.theorem == "cutcomp") {
        if (cfg.n < 2 || cfg.k < 1)
            throw dalpha::InvalidParams("cutcomp verify needs --n >= 2 and --k >= 1");
        auto rep = dalpha::cut_component_check(cfg.n, cfg.k, cfg.shards, cfg.allow_n6);
        OutputStream out(cfg.output_path);
        if (cfg.json_out) {
            json rec{{"theorem", "cutcomp"},
                     {"n", rep.n},
                     {"k", rep.k},
                     {"class_size", rep.class_size},
                     {"cuts_checked", rep.cuts_checked},
                     {"violations", rep.violations},
                     {"vacuous", rep.vacuous}};
            out.get() << rec.dump() << "\n";
        } else {
            out.get() << "cutcomp n=" << rep.n << " k=" << rep.k << ": class " << rep.class_size
                      << (rep.vacuous ? " (vacuous)" : "") << ", cuts " << rep.cuts_checked
                      << ", violations " << rep.violations << "\n";
        }
        return rep.violations == 0 ? 0 : 1;
    }
    throw dalpha::InvalidParams("unknown --theorem '" + cfg.theorem + "'");
}

int cmd_conjecture(const RunConfig& cfg) {
    auto alphas = resolve_alphas(cfg, "0.1:0.9:0.1");
    auto cells = dalpha::conjecture_sweep(cfg.n_max, alphas);
    OutputStream out(cfg.output_path);
    std::uint64_t flagged = 0;
    out.get() << "n,k,alpha,m,mu_closed,argmin_m,margin,counterexample\n";
    for (const auto& c : cells) {
        if (c.counterexample) ++flagged;
        for (std::size_t i = 0; i < c.mu_by_m.size(); ++i) {
            out.get() << c.n << "," << c.k << "," << fp(c.alpha) << "," << (i + 1) << ","
                      << fp(c.mu_by_m[i]) << "," << c.argmin_m << "," << fp(c.margin) << ","
                      << (c.counterexample ? 1 : 0) << "\n";
        }
    }
    std::cerr << "conjecture sweep: " << flagged << " of " << cells.size()
              << " cells flagged\n";
    return flagged == 0 ? 0 : 1;
}

int cmd_enumerate(const RunConfig& cfg) {
    if (cfg.n < 2) throw dalpha::InvalidParams("--n is required (n >= 2)");
    auto count = dalpha::count_sc(cfg.n, cfg.allow_n6);
    OutputStream out(cfg.output_path);
    if (cfg.json_out)
        out.get() << json{{"n", cfg.n}, {"count", count}}.dump() << "\n";
    else
        out.get() << "n=" << cfg.n << ": " << count << " strongly connected digraphs\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"alpha-weighted distance matrix spectra of strongly connected digraphs"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", cfg.output_path, "write results to a file instead of stdout");
        sub->add_flag("--json", cfg.json_out, "line-delimited JSON records");
    };
    auto add_alpha = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha, "single alpha in [0,1)");
        sub->add_option("--alpha-grid", cfg.alpha_grid_spec, "grid START:STOP:STEP");
    };

    auto* spectrum = app.add_subcommand("spectrum", "Perron root, vector and bounds of D_alpha");
    spectrum->add_option("--input", cfg.input_path, "digraph file ('-' for stdin)")->required();
    add_alpha(spectrum);
    add_common(spectrum);

    auto* bounds = app.add_subcommand("bounds", "row-sum enclosures only");
    bounds->add_option("--input", cfg.input_path, "digraph file ('-' for stdin)")->required();
    add_alpha(bounds);
    add_common(bounds);

    auto* generate = app.add_subcommand("generate", "write a named family as a digraph file");
    generate->add_option("family", cfg.family,
                         "complete|cycle|tournament|tpartition|tstar|knkm")->required();
    generate->add_option("--n", cfg.n, "vertex count");
    generate->add_option("--k", cfg.k, "class count / hub size");
    generate->add_option("--m", cfg.m, "source clique size (knkm)");
    generate->add_option("--sizes", cfg.sizes, "class sizes (tpartition)")->delimiter(',');
    generate->add_option("--output", cfg.output_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "exhaustive / randomized theorem checks");
    verify->add_option("--theorem", cfg.theorem,
                       "global|dichromatic|vconn|aconn|monotonic|cutcomp")->required();
    verify->add_option("--n", cfg.n, "vertex count");
    verify->add_option("--k", cfg.k, "invariant value");
    verify->add_option("--trials", cfg.trials, "random trials (monotonic)");
    verify->add_option("--seed", cfg.seed, "random seed (monotonic)");
    verify->add_option("--shards", cfg.shards, "enumeration shards (default: hardware)");
    verify->add_flag("--allow-n6", cfg.allow_n6, "raise the enumeration cap to n=6");
    add_alpha(verify);
    add_common(verify);

    auto* conjecture = app.add_subcommand("conjecture", "closed-form sweep over K(n,k,m)");
    conjecture->add_option("--n-max", cfg.n_max, "largest n (>= 4)");
    conjecture->add_flag("--csv", cfg.csv_out, "tabular output (the default and only format)");
    add_alpha(conjecture);
    conjecture->add_option("--output", cfg.output_path, "write table to a file");

    auto* enumerate = app.add_subcommand("enumerate", "count strongly connected digraphs");
    enumerate->add_option("--n", cfg.n, "vertex count")->required();
    enumerate->add_option("--shards", cfg.shards, "unused; kept for interface symmetry");
    enumerate->add_flag("--allow-n6", cfg.allow_n6, "raise the enumeration cap to n=6");
    add_common(enumerate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(cfg, true);
        if (bounds->parsed()) return cmd_spectrum(cfg, false);
        if (generate->parsed()) return cmd_generate(cfg);
        if (verify->parsed()) {
            cfg.theorem = cfg.theorem.empty() ? "global" : cfg.theorem;
            return cmd_verify(cfg);
        }
        if (conjecture->parsed()) return cmd_conjecture(cfg);
        if (enumerate->parsed()) return cmd_enumerate(cfg);
    } catch (const dalpha::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
