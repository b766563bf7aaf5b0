// conelab — dimensions, base loci and cones of fat-point linear systems on P^n
// with up to n+3 general base points, checked against a finite-field rank oracle.
//
// Subcommands:
//   dim        vdim/ldim/sldim report for one system (optionally vs the oracle)
//   cones      effective/movable membership, facet lists, extremal rays
//   baselocus  obstructing cycles of the base locus with multiplicities
//   cremona    Cremona/cone reduction transcripts
//   verify     formula-vs-oracle sweeps over families, CSV/JSON reports
//
// Exit codes: 0 ok, 1 usage/parse error, 2 verification disagreement.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "conelab/conelab.hpp"

namespace {

using namespace conelab;

struct OracleFlags {
    std::uint64_t prime = 0;  // 0 = keep default/env
    int samples = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int parallelism = 0;

    OracleConfig resolve() const {
        OracleConfig cfg = OracleConfig::from_env();
        if (prime) cfg.prime = prime;
        if (samples) cfg.samples = samples;
        if (seed_set) cfg.seed = seed;
        if (parallelism) cfg.parallelism = parallelism;
        cfg.validate();
        return cfg;
    }
};

void add_oracle_flags(CLI::App* cmd, OracleFlags& flags) {
    cmd->add_option("--prime", flags.prime, "oracle prime (default: env CONELAB_PRIME or 2^62-57)");
    cmd->add_option("--samples", flags.samples, "oracle sample count (default: env CONELAB_SAMPLES or 3)");
    cmd->add_option("--seed", flags.seed, "oracle seed (default: env CONELAB_SEED)")
        ->each([&flags](const std::string&) { flags.seed_set = true; });
    cmd->add_option("--jobs", flags.parallelism, "worker hint for independent samples/rows");
}

std::string mult_label(const LinearSystemSpec& L) {
    std::ostringstream os;
    os << "L_{" << L.n() << "," << L.d() << "}(";
    const auto& m = L.mults();
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ")";
    return os.str();
}

int cmd_dim(const std::string& spec_text, bool with_oracle, bool check, bool json_out,
            bool no_reduce, long long trunc_budget, bool exhaustive_trunc,
            const OracleFlags& oflags) {
    LinearSystemSpec L = parse_system(spec_text);
    TruncationPolicy pol{trunc_budget, exhaustive_trunc};
    DimReport rep = dim_report(L, pol);
    Int predicted = predicted_dim(L, pol);

    nlohmann::json results{{"vdim", int_json(rep.vdim)},     {"edim", int_json(rep.edim)},
                           {"lvdim", int_json(rep.lvdim)},   {"ldim", int_json(rep.ldim)},
                           {"slvdim", int_json(rep.slvdim)}, {"sldim", int_json(rep.sldim)},
                           {"k_C", rep.k_C},                 {"predicted_dim", int_json(predicted)},
                           {"effective", is_effective_system(L)}};

    OracleConfig cfg = oflags.resolve();
    long long odim = -1;
    if (with_oracle || check) {
        odim = no_reduce ? oracle_dim(L, cfg).dim : oracle_dim_reduced(L, cfg);
        results["oracle_dim"] = odim;
    }

    if (json_out) {
        nlohmann::json out{{"system", system_json(L)},
                           {"results", results},
                           {"meta",
                            {{"seed", cfg.seed},
                             {"prime", cfg.prime},
                             {"samples", cfg.samples},
                             {"version", kVersion}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << mult_label(L) << "\n";
        std::cout << "  vdim      " << rep.vdim.get_str() << "\n";
        std::cout << "  edim      " << rep.edim.get_str() << "\n";
        std::cout << "  lvdim     " << rep.lvdim.get_str() << "\n";
        std::cout << "  ldim      " << rep.ldim.get_str() << "\n";
        std::cout << "  slvdim    " << rep.slvdim.get_str() << "\n";
        std::cout << "  sldim     " << rep.sldim.get_str() << "\n";
        std::cout << "  k_C       " << rep.k_C << "\n";
        std::cout << "  effective " << (is_effective_system(L) ? "yes" : "no") << "\n";
        std::cout << "  predicted " << predicted.get_str() << "\n";
        if (odim >= 0) std::cout << "  oracle    " << odim << "\n";
    }

    if (check && predicted != Int(static_cast<long>(odim))) {
        std::cerr << "check failed: predicted_dim = " << predicted.get_str() << " but oracle_dim = "
                  << odim << " (seed=" << cfg.seed << " prime=" << cfg.prime << ")\n";
        return 2;
    }
    return 0;
}

int cmd_cones_check(const std::string& class_text, bool json_out) {
    DivisorClass D = parse_class(class_text);
    auto eff = is_effective(D);
    auto mov = is_movable(D);
    if (json_out) {
        auto labels = [](const MembershipReport& r) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& f : r.violated) a.push_back(f.label());
            return a;
        };
        std::cout << nlohmann::json{{"class", class_json(D)},
                                    {"effective", eff.member},
                                    {"movable", mov.member},
                                    {"violated_effective", labels(eff)},
                                    {"violated_movable", labels(mov)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << print_class(D) << "\n";
    std::cout << "  degree    " << degree(D) << "\n";
    std::cout << "  effective " << (eff.member ? "yes" : "no");
    if (!eff.member) {
        std::cout << "  (violated:";
        for (const auto& f : eff.violated) std::cout << ' ' << f.label();
        std::cout << ")";
    }
    std::cout << "\n  movable   " << (mov.member ? "yes" : "no");
    if (!mov.member) {
        std::cout << "  (violated:";
        for (const auto& f : mov.violated) std::cout << ' ' << f.label();
        std::cout << ")";
    }
    std::cout << "\n";
    return 0;
}

int cmd_cones_facets(int n, bool json_out) {
    const auto& eff = facets_effective(n);
    const auto& mov = facets_movable(n);
    if (json_out) {
        auto dump = [](const std::vector<FacetInequality>& fs) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& f : fs) a.push_back({{"label", f.label()}, {"coeffs", f.coeffs}});
            return a;
        };
        std::cout << nlohmann::json{{"n", n}, {"effective", dump(eff)}, {"movable", dump(mov)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "effective cone facets (" << eff.size() << "):\n";
    for (const auto& f : eff) std::cout << "  " << f.label() << "   " << f.pretty(n) << "\n";
    std::cout << "movable cone facets (" << mov.size() << "):\n";
    for (const auto& f : mov) std::cout << "  " << f.label() << "   " << f.pretty(n) << "\n";
    return 0;
}

int cmd_cones_rays(int n, bool json_out) {
    const auto& R = rays(n);
    if (json_out) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : R)
            a.push_back({{"t", r.t}, {"I", r.I.indices()}, {"class", class_json(r.cls)}});
        std::cout << nlohmann::json{{"n", n}, {"rays", a}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "extremal rays of Eff (" << R.size() << "):\n";
    for (const auto& r : R)
        std::cout << "  t=" << r.t << " I=" << r.I.to_string() << "  " << print_class(r.cls)
                  << "\n";
    return 0;
}

int cmd_baselocus(const std::string& spec_text, bool json_out) {
    LinearSystemSpec L = parse_system(spec_text);
    std::vector<BaseLocusEntry> table;
    try {
        table = base_locus_table(L);
    } catch (const EffectivityError& e) {
        std::cerr << "system is empty; violated facets:";
        for (const auto& f : e.violated) std::cerr << ' ' << f.label();
        std::cerr << "\n";
        return 1;
    }
    if (json_out) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& e : table)
            rows.push_back({{"t", e.cycle.t},
                            {"size", e.cycle.I.size()},
                            {"I", e.cycle.I.indices()},
                            {"count", e.count},
                            {"k", e.k},
                            {"r", e.cycle.r()},
                            {"divisorial", e.divisorial}});
        std::cout << nlohmann::json{{"system", system_json(L)}, {"base_locus", rows}}.dump(2)
                  << "\n";
        return 0;
    }
    std::cout << mult_label(L) << "\n";
    if (table.empty()) {
        std::cout << "base locus empty\n";
        return 0;
    }
    std::cout << "  t  |I|  count  k  r  divisorial\n";
    for (const auto& e : table)
        std::cout << "  " << e.cycle.t << "  " << e.cycle.I.size() << "    " << e.count << "   "
                  << e.k << "  " << e.cycle.r() << "  " << (e.divisorial ? "yes" : "no") << "\n";
    return 0;
}

int cmd_cremona(const std::string& spec_text, const std::string& pivot_text, bool reduce,
                bool oracle_check, const OracleFlags& oflags) {
    LinearSystemSpec L = parse_system(spec_text);
    require_linear_system(L, "cremona");

    if (!pivot_text.empty()) {
        MultiIndex J = pivot_text == "auto"
                           ? default_pivot(L)
                           : [&] {
                                 std::vector<int> ids;
                                 std::istringstream is(pivot_text);
                                 std::string item;
                                 while (std::getline(is, item, ',')) ids.push_back(std::stoi(item));
                                 return MultiIndex(ids);
                             }();
        const long long c = cremona_c(L, J);
        LinearSystemSpec out = cremona_transform(L, J);
        std::cout << "pivot " << J.to_string() << "  c=" << c << "\n";
        std::cout << mult_label(L) << "  ->  " << mult_label(out) << "\n";
        return 0;
    }

    (void)reduce;  // full reduction is the default mode
    CremonaReduction red = cremona_reduce(L);
    if (red.steps.empty()) {
        std::cout << mult_label(L) << "  already reduced (c = "
                  << cremona_c(L, default_pivot(L)) << ")\n";
        return 0;
    }
    for (const auto& s : red.steps) {
        std::cout << "  " << to_string(s.kind) << " pivot=" << s.pivot.to_string();
        if (s.kind == StepKind::cremona) std::cout << " c=" << s.c;
        std::cout << "  " << mult_label(s.before) << " -> " << mult_label(s.after) << "\n";
    }
    if (red.empty) {
        std::cout << "degree went negative: the system is empty\n";
        return 0;
    }
    std::cout << "reduced: " << mult_label(red.system)
              << "   (every step preserves the dimension)\n";
    if (oracle_check) {
        OracleConfig cfg = oflags.resolve();
        const long long before = oracle_dim_reduced(L, cfg);
        const long long after = oracle_dim_reduced(red.system, cfg);
        std::cout << "oracle dims: input " << before << ", reduced " << after
                  << (before == after ? "  (preserved)" : "  (MISMATCH)") << "\n";
        if (before != after) return 2;
    }
    return 0;
}

int cmd_verify(const std::string& family, int tmax, int amax, int nmax, int bmax, long long dmax,
               int grid_n, long long grid_d, long long grid_m, std::size_t limit,
               const std::string& file_path, const std::string& csv_path,
               const std::string& json_path, bool no_reduce, const OracleFlags& oflags) {
    SweepOptions opt;
    opt.oracle = oflags.resolve();
    opt.reduce_before_oracle = !no_reduce;

    std::vector<LinearSystemSpec> systems;
    if (family == "secant") {
        systems = family_secant(tmax, amax);
    } else if (family == "homog") {
        systems = family_homog(nmax, bmax, dmax);
    } else if (family == "grid") {
        systems = family_grid(grid_n, grid_d, grid_m, limit, opt.oracle.seed);
    } else if (family == "file") {
        std::ifstream in(file_path);
        if (!in) {
            std::cerr << "verify: cannot open " << file_path << "\n";
            return 1;
        }
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            systems.push_back(parse_system(line));
        }
    } else {
        std::cerr << "verify: unknown family '" << family
                  << "' (expected secant|homog|grid|file)\n";
        return 1;
    }

    SweepReport report = run_sweep(family, systems, opt);

    if (!csv_path.empty()) {
        std::ofstream os(csv_path);
        write_csv(report, os);
    }
    if (!json_path.empty()) {
        std::ofstream os(json_path);
        os << report_json(report).dump(2) << "\n";
    }
    if (csv_path.empty() && json_path.empty()) write_csv(report, std::cout);

    std::size_t disagreements = 0;
    for (const auto& r : report.rows)
        if (!r.agree) {
            ++disagreements;
            std::cerr << "disagree: " << print_system(r.system) << "  predicted="
                      << r.predicted.get_str() << " oracle=" << r.oracle_dim << " eff_formula="
                      << r.effective_formula << " eff_oracle=" << r.effective_oracle
                      << "  (seed=" << opt.oracle.seed << " prime=" << opt.oracle.prime
                      << " samples=" << opt.oracle.samples << ")\n";
        }
    std::cerr << report.rows.size() << " rows, " << disagreements << " disagreements\n";
    return disagreements == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fat-point linear systems on P^n with n+3 general points: dimension formulas, "
                 "base loci, effective/movable cones, and a finite-field rank oracle"};
    app.require_subcommand(1);

    std::string spec_text, class_text, pivot_text, family, file_path, csv_path, json_path;
    bool with_oracle = false, check = false, json_out = false, no_reduce = false;
    bool exhaustive_trunc = false, reduce = false, oracle_check = false;
    long long trunc_budget = 2;
    int facets_n = 2, rays_n = 2;
    int tmax = 2, amax = 2, nmax = 4, bmax = 2;
    long long dmax = 8;
    int grid_n = 2;
    long long grid_d = 6, grid_m = 6;
    std::size_t limit = 20000;
    OracleFlags oflags;

    auto* dim = app.add_subcommand("dim", "dimension report for one system");
    dim->add_option("spec", spec_text, "system, e.g. \"n=2 d=4 m=2,2,2,2,2\" or JSON")->required();
    dim->add_flag("--oracle", with_oracle, "also compute the oracle dimension");
    dim->add_flag("--check", check, "exit 2 if predicted_dim != oracle_dim");
    dim->add_flag("--json", json_out, "JSON output");
    dim->add_flag("--no-reduce", no_reduce, "oracle the system directly, without Cremona/cone reduction");
    dim->add_option("--trunc-budget", trunc_budget, "containment-search budget for ldim/sldim (default 2)");
    dim->add_flag("--exhaustive-trunc", exhaustive_trunc, "search every containing system (small inputs)");
    add_oracle_flags(dim, oflags);

    auto* cones = app.add_subcommand("cones", "effective / movable cone queries");
    cones->require_subcommand(1);
    auto* cc = cones->add_subcommand("check", "membership of a divisor class");
    cc->add_option("class", class_text, "class, e.g. \"n=4 d=3 m=2,2,2,2,2,2,2\"")->required();
    cc->add_flag("--json", json_out, "JSON output");
    auto* cf = cones->add_subcommand("facets", "facet lists of both cones");
    cf->add_option("n", facets_n, "ambient dimension")->required();
    cf->add_flag("--json", json_out, "JSON output");
    auto* cr = cones->add_subcommand("rays", "degree-1 extremal rays of the effective cone");
    cr->add_option("n", rays_n, "ambient dimension")->required();
    cr->add_flag("--json", json_out, "JSON output");

    auto* bl = app.add_subcommand("baselocus", "obstructing cycles with multiplicities");
    bl->add_option("spec", spec_text, "system spec")->required();
    bl->add_flag("--json", json_out, "JSON output");

    auto* crm = app.add_subcommand("cremona", "Cremona reduction transcript");
    crm->add_option("spec", spec_text, "system spec")->required();
    crm->add_option("--pivot", pivot_text, "single transform at 'auto' or comma-separated indices");
    crm->add_flag("--reduce", reduce, "full reduction loop (default)");
    crm->add_flag("--oracle-check", oracle_check, "verify oracle dimension is preserved");
    add_oracle_flags(crm, oflags);

    auto* ver = app.add_subcommand("verify", "formula-vs-oracle sweep over a family");
    ver->add_option("family", family, "secant | homog | grid | file")->required();
    ver->add_option("--tmax", tmax, "secant: max secant index (default 2)");
    ver->add_option("--amax", amax, "secant: max multiple (default 2)");
    ver->add_option("--nmax", nmax, "homog: max ambient dimension (default 4)");
    ver->add_option("--bmax", bmax, "homog: max b (default 2)");
    ver->add_option("--dmax", dmax, "homog: max degree for L_{n,d}(n^(n+3)) (default 8)");
    ver->add_option("--n", grid_n, "grid: ambient dimension (default 2)");
    ver->add_option("--d", grid_d, "grid: max degree (default 6)");
    ver->add_option("--m", grid_m, "grid: max multiplicity (default 6)");
    ver->add_option("--limit", limit, "grid: max systems kept (default 20000)");
    ver->add_option("--file", file_path, "file: one spec per line");
    ver->add_option("--csv", csv_path, "write CSV report here");
    ver->add_option("--json", json_path, "write JSON report here");
    ver->add_flag("--no-reduce", no_reduce, "oracle systems directly (may be very large)");
    add_oracle_flags(ver, oflags);
    ver->footer("CSV columns: " + std::string(kSweepCsvHeader));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help/message
        return code == 0 ? 0 : 1;      // stable contract: usage errors exit 1
    }

    try {
        if (dim->parsed())
            return cmd_dim(spec_text, with_oracle, check, json_out, no_reduce, trunc_budget,
                           exhaustive_trunc, oflags);
        if (cones->parsed()) {
            if (cc->parsed()) return cmd_cones_check(class_text, json_out);
            if (cf->parsed()) return cmd_cones_facets(facets_n, json_out);
            if (cr->parsed()) return cmd_cones_rays(rays_n, json_out);
        }
        if (bl->parsed()) return cmd_baselocus(spec_text, json_out);
        if (crm->parsed()) return cmd_cremona(spec_text, pivot_text, reduce, oracle_check, oflags);
        if (ver->parsed())
            return cmd_verify(family, tmax, amax, nmax, bmax, dmax, grid_n, grid_d, grid_m, limit,
                              file_path, csv_path, json_path, no_reduce, oflags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
