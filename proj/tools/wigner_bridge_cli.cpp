// wigner-bridge: Monte Carlo and exact-combinatorics laboratory for the
// global fluctuations of Wigner eigenvector overlap matrices.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wigner/combinatorics.hpp"
#include "wigner/config.hpp"
#include "wigner/matrices.hpp"
#include "wigner/montecarlo.hpp"
#include "wigner/process.hpp"
#include "wigner/spectral_stats.hpp"

namespace {

using namespace wigner;

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    std::size_t n = xs.size();
    return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

struct EnsembleFlags {
    std::string name = "goe";
    int beta = 1;
    std::string diag_kv, offdiag_kv;

    EnsembleSpec resolve(int n) const {
        if (!diag_kv.empty() || !offdiag_kv.empty()) {
            if (diag_kv.empty() || offdiag_kv.empty())
                throw CLI::ValidationError("--diag and --offdiag must be given together");
            return make_custom_ensemble(beta, n, diag_kv, offdiag_kv);
        }
        return parse_ensemble(name, n);
    }

    std::string describe(const EnsembleSpec& spec) const {
        std::ostringstream os;
        os << "beta=" << spec.beta << " diag[" << spec.diag.to_string() << "] offdiag["
           << spec.offdiag.to_string() << "]";
        return os.str();
    }
};

void add_ensemble_flags(CLI::App* cmd, EnsembleFlags& flags) {
    cmd->add_option("--ensemble", flags.name,
                    "preset: goe, gue, rademacher, pareto, two-point(m4=X)");
    cmd->add_option("--beta", flags.beta, "symmetry class for --diag/--offdiag ensembles");
    cmd->add_option("--diag", flags.diag_kv, "diagonal atom spec, e.g. \"kind=gauss-real sigma2=2\"");
    cmd->add_option("--offdiag", flags.offdiag_kv, "off-diagonal atom spec");
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    return file;
}

// --------------------------------------------------------------------------
// simulate
// --------------------------------------------------------------------------
int cmd_simulate(const EnsembleFlags& eflags, int n, int trials, std::uint64_t seed,
                 double grid, const std::string& tstat_s, int tstat_k,
                 const std::string& rect, bool max_jump, const std::string& out,
                 const std::string& cov_out, const std::string& raw_out, int workers) {
    ExperimentPlan plan;
    plan.ensemble = eflags.resolve(n);
    plan.trials = trials;
    plan.seed = seed;

    if (grid > 0) {
        if (grid >= 1) throw CLI::ValidationError("--grid must be in (0,1)");
        for (double s = grid; s < 1.0 - 1e-12; s += grid)
            for (double t = grid; t < 1.0 - 1e-12; t += grid)
                plan.observables.push_back(ObsBridgePoint{s, t});
    }
    if (!tstat_s.empty())
        for (double s : parse_double_list(tstat_s))
            plan.observables.push_back(ObsTStat{s, tstat_k});
    if (!rect.empty()) {
        auto v = parse_double_list(rect);
        if (v.size() != 4) throw CLI::ValidationError("--rect wants s1,s2,t1,t2");
        plan.observables.push_back(ObsRectIncrement{v[0], v[1], v[2], v[3]});
    }
    if (max_jump) plan.observables.push_back(ObsMaxJump{});
    if (plan.observables.empty())
        throw CLI::ValidationError("nothing to measure: give --grid, --tstat-s, --rect or --max-jump");

    RunResult res = run(plan, workers);

    std::vector<std::pair<std::string, std::string>> cfg = {
        {"command", "simulate"},
        {"ensemble", eflags.describe(plan.ensemble)},
        {"n", std::to_string(n)},
        {"trials", std::to_string(trials)},
        {"grid", std::to_string(grid)},
        {"workers", std::to_string(workers)},
    };

    std::ofstream file;
    std::ostream& os = open_out(file, out);
    write_output_header(os, cfg, seed);
    os << "observable,mean,variance,se,kurtosis,trials\n";
    os.precision(12);
    for (std::size_t i = 0; i < res.ids.size(); ++i) {
        const auto& st = res.stats[i];
        os << res.ids[i] << "," << st.mean << "," << st.variance << "," << st.se << ","
           << st.kurtosis << "," << st.count << "\n";
    }

    if (!cov_out.empty()) {
        std::ofstream cfile;
        std::ostream& cs = open_out(cfile, cov_out);
        write_output_header(cs, cfg, seed);
        cs << "observable_a,observable_b,cov,se\n";
        cs.precision(12);
        for (std::size_t a = 0; a < res.ids.size(); ++a)
            for (std::size_t b = a; b < res.ids.size(); ++b)
                cs << res.ids[a] << "," << res.ids[b] << "," << res.covariances[a][b].cov << ","
                   << res.covariances[a][b].se << "\n";
    }
    if (!raw_out.empty()) {
        std::ofstream rfile;
        std::ostream& rs = open_out(rfile, raw_out);
        write_output_header(rs, cfg, seed);
        rs << "trial,observable,value\n";
        rs.precision(17);
        for (std::size_t o = 0; o < res.ids.size(); ++o)
            for (std::size_t t = 0; t < res.samples[o].size(); ++t)
                rs << t << "," << res.ids[o] << "," << res.samples[o][t] << "\n";
    }
    if (!res.failed_trials.empty())
        std::cerr << "warning: " << res.failed_trials.size() << " trial(s) failed and were dropped\n";
    return 0;
}

// --------------------------------------------------------------------------
// limit-cov
// --------------------------------------------------------------------------
int cmd_limit_cov(const EnsembleFlags& eflags, int k1, int k2, const std::string& s1_text,
                  const std::string& s2_text, const std::string& m4_text, bool centered,
                  bool trace) {
    Rat s1 = parse_rat(s1_text);
    Rat s2 = parse_rat(s2_text);
    AtomSpec diag, off;
    if (!m4_text.empty()) {
        diag = goe_diag_spec();
        off = AtomSpec::two_point_sym_m4(parse_rat(m4_text));
    } else {
        EnsembleSpec spec = eflags.resolve(1);
        diag = spec.diag;
        off = spec.offdiag;
    }

    if (trace) {
        auto terms = enumerate_terms(k1, k2);
        std::cout << "# term trace: partition | graph | s-weight | factor\n";
        for (const auto& term : terms) {
            MomentValue f = expectation_factor(term, diag, off);
            if (f.finite && f.value == 0) continue;
            const char* cls = term.graph_class == GraphClass::Tree      ? "tree"
                              : term.graph_class == GraphClass::Bracelet ? "bracelet"
                                                                         : "other";
            std::cout << term.blocks_string() << " | " << cls << " | "
                      << (term.endpoints_share_block ? "min{s1,s2}" : "s1*s2") << " | "
                      << (f.finite ? rat_string(f.value) : std::string("divergent")) << "\n";
        }
    }

    MomentValue v = centered ? limit_cov_centered(k1, k2, s1, s2, diag, off)
                             : limit_cov(k1, k2, s1, s2, diag, off);
    const char* name = centered ? "limit_cov_centered" : "limit_cov";
    std::cout << name << "(k1=" << k1 << ",k2=" << k2 << ",s1=" << rat_string(s1)
              << ",s2=" << rat_string(s2) << ") = ";
    if (!v.finite) {
        std::cout << "divergent (atom moments of the required order do not exist)\n";
        return 1;
    }
    std::cout << rat_string(v.value) << " = " << to_double(v.value) << "\n";
    return 0;
}

// --------------------------------------------------------------------------
// heatmap
// --------------------------------------------------------------------------
int cmd_heatmap(const EnsembleFlags& eflags, int n, std::uint64_t seed, const std::string& out) {
    EnsembleSpec spec = eflags.resolve(n);
    RngStream rng(seed, 0);
    WignerSample x = build_wigner(spec, rng);
    SpectralDecomposition dec = spectral_decomposition(x);

    std::vector<std::pair<std::string, std::string>> cfg = {
        {"command", "heatmap"},
        {"ensemble", eflags.describe(spec)},
        {"n", std::to_string(n)},
    };
    std::ofstream file;
    std::ostream& os = open_out(file, out);
    write_output_header(os, cfg, seed);
    os << "i,j,value\n";
    os.precision(12);
    const double inv_n = 1.0 / n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            os << (i + 1) << "," << (j + 1) << "," << std::abs(dec.abs2(i, j) - inv_n) << "\n";
    return 0;
}

// --------------------------------------------------------------------------
// weingarten
// --------------------------------------------------------------------------
int cmd_weingarten(const std::string& group_name, int n, int samples, std::uint64_t seed) {
    struct Pattern {
        const char* name;
        int i1, j1, i2, j2;
    };
    const Pattern patterns[] = {
        {"distinct", 1, 1, 2, 2},
        {"shared-row", 1, 1, 1, 2},
        {"shared-col", 1, 1, 2, 1},
        {"same-cell", 1, 1, 1, 1},
    };
    std::vector<HaarGroup> groups;
    if (group_name == "both" || group_name == "orthogonal")
        groups.push_back(HaarGroup::Orthogonal);
    if (group_name == "both" || group_name == "unitary") groups.push_back(HaarGroup::Unitary);
    if (groups.empty()) throw CLI::ValidationError("--group: orthogonal, unitary or both");

    std::vector<std::pair<std::string, std::string>> cfg = {
        {"command", "weingarten"},
        {"group", group_name},
        {"n", std::to_string(n)},
        {"samples", std::to_string(samples)},
    };
    write_output_header(std::cout, cfg, seed);
    std::cout << "group,pattern,exact,mc,se,abs_dev_over_se\n";
    std::cout.precision(10);

    int worst_flag = 0;
    for (HaarGroup g : groups) {
        // One Haar sample stream per group keeps patterns perfectly paired.
        std::vector<std::vector<double>> vals(4);
        RngStream rng(seed, g == HaarGroup::Orthogonal ? 1 : 2);
        for (int t = 0; t < samples; ++t) {
            RMat o;
            CMat u;
            if (g == HaarGroup::Orthogonal)
                o = haar_orthogonal(n, rng);
            else
                u = haar_unitary(n, rng);
            auto abs2 = [&](int i, int j) {
                return g == HaarGroup::Orthogonal ? o(i - 1, j - 1) * o(i - 1, j - 1)
                                                  : std::norm(u(i - 1, j - 1));
            };
            for (int p = 0; p < 4; ++p)
                vals[p].push_back(abs2(patterns[p].i1, patterns[p].j1) *
                                  abs2(patterns[p].i2, patterns[p].j2));
        }
        for (int p = 0; p < 4; ++p) {
            SummaryStats st = summarize(vals[p]);
            Rat exact = haar_pair_moment(patterns[p].i1, patterns[p].j1, patterns[p].i2,
                                         patterns[p].j2, n, g);
            double dev = st.se > 0 ? std::abs(st.mean - to_double(exact)) / st.se : 0.0;
            if (dev > 3.0) worst_flag = 1;
            std::cout << (g == HaarGroup::Orthogonal ? "orthogonal" : "unitary") << ","
                      << patterns[p].name << "," << rat_string(exact) << "," << st.mean << ","
                      << st.se << "," << dev << "\n";
        }
    }
    std::cout << "# Wg_ortho(id,n) = " << rat_string(weingarten(HaarGroup::Orthogonal, PairPerm::Identity, n))
              << ", Wg_ortho((12),n) = "
              << rat_string(weingarten(HaarGroup::Orthogonal, PairPerm::Transposition, n)) << "\n";
    std::cout << "# Wg_unit(id,n) = " << rat_string(weingarten(HaarGroup::Unitary, PairPerm::Identity, n))
              << ", Wg_unit((12),n) = "
              << rat_string(weingarten(HaarGroup::Unitary, PairPerm::Transposition, n)) << "\n";
    return worst_flag;
}

// --------------------------------------------------------------------------
// jumps
// --------------------------------------------------------------------------
int cmd_jumps(const EnsembleFlags& eflags, const std::string& n_list, int trials,
              std::uint64_t seed, int workers) {
    auto sizes = parse_int_list(n_list);
    if (sizes.empty()) throw CLI::ValidationError("--n-list wants a comma list of sizes");

    std::vector<std::pair<std::string, std::string>> cfg = {
        {"command", "jumps"},
        {"n-list", n_list},
        {"trials", std::to_string(trials)},
    };
    write_output_header(std::cout, cfg, seed);
    std::cout << "n,median_max_jump,trials\n";
    std::cout.precision(10);

    double prev = 0;
    bool decreasing = true;
    for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
        ExperimentPlan plan;
        plan.ensemble = eflags.resolve(sizes[idx]);
        plan.trials = trials;
        plan.seed = seed + idx;  // independent batches per size
        plan.observables = {ObsMaxJump{}};
        RunResult res = run(plan, workers);
        double med = median(res.samples[0]);
        std::cout << sizes[idx] << "," << med << "," << trials << "\n";
        if (idx > 0 && med >= prev) decreasing = false;
        prev = med;
    }
    std::cout << "# medians strictly decreasing: " << (decreasing ? "yes" : "no") << "\n";
    return decreasing ? 0 : 1;
}

// --------------------------------------------------------------------------
// check: fast self-consistency sweep across the exact engines.
// --------------------------------------------------------------------------
int cmd_check(std::uint64_t seed, int workers) {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    };

    // Null-mass CDF moment identity on random measures.
    {
        RngStream rng(seed, 101);
        double worst = 0;
        for (int rep = 0; rep < 20; ++rep) {
            SignedMeasure mu;
            double mass = 0;
            for (int a = 0; a < 9; ++a) {
                double x = 4.0 * rng.next_unit() - 2.0;
                double w = rng.next_gaussian();
                mass += w;
                mu.atoms.emplace_back(x, w);
            }
            mu.atoms.emplace_back(4.0 * rng.next_unit() - 2.0, -mass);
            for (int k = 0; k <= 6; ++k) {
                auto pair = signed_cdf_moment(mu, k);
                worst = std::max(worst, std::abs(pair.via_cdf - pair.via_measure));
            }
        }
        std::ostringstream d;
        d << "max |lhs-rhs| = " << worst;
        report("signed-measure moment identity", worst < 1e-10, d.str());
    }

    // Two-route trace statistics on one GOE draw.
    {
        RngStream rng(seed, 102);
        EnsembleSpec spec = EnsembleSpec::goe(40);
        RMat x = build_wigner_real(spec, rng);
        SpectralDecomposition dec = spectral_decomposition(x);
        double worst = 0;
        for (int k = 1; k <= 6; ++k)
            for (double s : {0.25, 0.5, 0.75, 1.0}) {
                double a = t_stat_power(x, s, k);
                double b = t_stat_spectral(dec, s, k);
                double scale = 1e-8 * 40 * std::pow(dec.max_abs_eigenvalue(), k);
                worst = std::max(worst, std::abs(a - b) / std::max(scale, 1e-300));
            }
        std::ostringstream d;
        d << "worst residual / tolerance = " << worst;
        report("power vs spectral trace statistics", worst <= 1.0, d.str());
    }

    // Finite-n covariance approaches the exact limit for (2,2).
    {
        AtomSpec diag = goe_diag_spec();
        AtomSpec off = goe_off_spec();
        Rat one(1);
        double limit = to_double(limit_cov_centered(2, 2, one, one, diag, off).value);
        bool ok = true;
        std::ostringstream d;
        double prev_gap = 1e300;
        for (int n = 2; n <= 6; ++n) {
            double fin = to_double(finite_n_cov(n, 2, 2, one, one, diag, off).value);
            double gap = std::abs(fin - limit);
            if (gap > prev_gap + 1e-12) ok = false;
            prev_gap = gap;
        }
        d << "limit = " << limit << ", gap at n=6: " << prev_gap;
        report("finite-n covariance trend (2,2)", ok && prev_gap < limit, d.str());
    }

    // Semicircle CDF endpoints and symmetry.
    {
        bool ok = semicircle_cdf(-2.5) == 0.0 && semicircle_cdf(2.5) == 1.0 &&
                  std::abs(semicircle_cdf(0.0) - 0.5) < 1e-15 &&
                  std::abs(semicircle_cdf(1.0) + semicircle_cdf(-1.0) - 1.0) < 1e-15;
        report("semicircle CDF sanity", ok);
    }

    // Weingarten vs a small Haar Monte Carlo.
    {
        RngStream rng(seed, 103);
        const int n = 4, samples = 20000;
        std::vector<double> vals;
        vals.reserve(samples);
        for (int t = 0; t < samples; ++t) {
            CMat u = haar_unitary(n, rng);
            vals.push_back(std::norm(u(0, 0)) * std::norm(u(1, 1)));
        }
        SummaryStats st = summarize(vals);
        double exact = to_double(haar_pair_moment(1, 1, 2, 2, n, HaarGroup::Unitary));
        double dev = std::abs(st.mean - exact) / st.se;
        std::ostringstream d;
        d << "dev = " << dev << " se";
        report("Weingarten pair moment vs Haar MC", dev < 4.0, d.str());
    }

    // Determinism across worker counts.
    {
        ExperimentPlan plan;
        plan.ensemble = EnsembleSpec::goe(24);
        plan.trials = 40;
        plan.seed = seed;
        plan.observables = {ObsBridgePoint{0.5, 0.5}, ObsTStat{0.5, 2}};
        RunResult a = run(plan, 1);
        RunResult b = run(plan, std::max(2, workers));
        bool ok = a.samples == b.samples;
        report("worker-count determinism", ok);
    }

    std::cout << (failures == 0 ? "all checks passed\n" : "some checks FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eigenvector overlap fluctuations of Wigner matrices: simulation and exact covariance engine"};
    app.require_subcommand(1);

    int workers = default_worker_count();
    app.add_option("--workers", workers, "worker threads (default: WIGNER_WORKERS or hardware)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte Carlo bridge / trace-statistic estimation");
    EnsembleFlags sim_ens;
    add_ensemble_flags(sim, sim_ens);
    int sim_n = 100, sim_trials = 100, sim_tstat_k = 2;
    std::uint64_t sim_seed = 1;
    double sim_grid = 0;
    std::string sim_tstat_s, sim_rect, sim_out = "-", sim_cov_out, sim_raw;
    bool sim_maxjump = false;
    std::string sim_config;
    sim->add_option("--n", sim_n, "matrix size");
    sim->add_option("--trials", sim_trials, "number of trials");
    sim->add_option("--seed", sim_seed, "master seed");
    sim->add_option("--grid", sim_grid, "bridge grid step in (0,1): interior lattice points");
    sim->add_option("--tstat-s", sim_tstat_s, "comma list of s values for T_n(s,k)");
    sim->add_option("--tstat-k", sim_tstat_k, "order k for the T statistics");
    sim->add_option("--rect", sim_rect, "rectangle increment s1,s2,t1,t2");
    sim->add_flag("--max-jump", sim_maxjump, "record the maximal jump");
    sim->add_option("--out", sim_out, "stats CSV ('-' = stdout)");
    sim->add_option("--cov-out", sim_cov_out, "pairwise covariance CSV");
    sim->add_option("--raw", sim_raw, "per-trial raw CSV");
    sim->add_option("--config", sim_config, "key = value config file");

    // limit-cov
    auto* lc = app.add_subcommand("limit-cov", "exact limiting covariance of the trace statistics");
    EnsembleFlags lc_ens;
    add_ensemble_flags(lc, lc_ens);
    int lc_k1 = 2, lc_k2 = 2;
    std::string lc_s1 = "1", lc_s2 = "1", lc_m4;
    bool lc_centered = false, lc_trace = false;
    lc->add_option("--k1", lc_k1, "first trace order");
    lc->add_option("--k2", lc_k2, "second trace order");
    lc->add_option("--s1", lc_s1, "first time (rational, e.g. 0.3 or 3/10)");
    lc->add_option("--s2", lc_s2, "second time");
    lc->add_option("--m4", lc_m4, "off-diagonal fourth moment (unit-variance two-point spec)");
    lc->add_flag("--centered", lc_centered, "report the expectation-centered covariance");
    lc->add_flag("--trace", lc_trace, "list every contributing partition term");

    // heatmap
    auto* hm = app.add_subcommand("heatmap", "export ||u_ij|^2 - 1/n| for one sampled matrix");
    EnsembleFlags hm_ens;
    add_ensemble_flags(hm, hm_ens);
    int hm_n = 50;
    std::uint64_t hm_seed = 1;
    std::string hm_out = "-";
    hm->add_option("--n", hm_n, "matrix size");
    hm->add_option("--seed", hm_seed, "seed");
    hm->add_option("--out", hm_out, "CSV output ('-' = stdout)");

    // weingarten
    auto* wg = app.add_subcommand("weingarten", "exact Haar pair moments vs Monte Carlo");
    std::string wg_group = "both";
    int wg_n = 8, wg_samples = 100000;
    std::uint64_t wg_seed = 1;
    wg->add_option("--group", wg_group, "orthogonal, unitary or both");
    wg->add_option("--n", wg_n, "matrix size (n >= 3)");
    wg->add_option("--samples", wg_samples, "Monte Carlo sample count");
    wg->add_option("--seed", wg_seed, "seed");

    // jumps
    auto* jp = app.add_subcommand("jumps", "maximal jump scan over matrix sizes");
    EnsembleFlags jp_ens;
    add_ensemble_flags(jp, jp_ens);
    std::string jp_nlist = "50,100,200,400";
    int jp_trials = 50;
    std::uint64_t jp_seed = 1;
    jp->add_option("--n-list", jp_nlist, "comma list of sizes");
    jp->add_option("--trials", jp_trials, "trials per size");
    jp->add_option("--seed", jp_seed, "seed");

    // check
    auto* ck = app.add_subcommand("check", "self-check suite over the exact engines");
    std::uint64_t ck_seed = 20240601;
    ck->add_option("--seed", ck_seed, "seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            if (!sim_config.empty()) {
                auto kv = read_config_file(sim_config);
                for (const auto& [key, value] : kv) {
                    if (key == "ensemble") sim_ens.name = value;
                    else if (key == "beta") sim_ens.beta = std::stoi(value);
                    else if (key == "diag") sim_ens.diag_kv = value;
                    else if (key == "offdiag") sim_ens.offdiag_kv = value;
                    else if (key == "n") sim_n = std::stoi(value);
                    else if (key == "trials") sim_trials = std::stoi(value);
                    else if (key == "seed") sim_seed = std::stoull(value);
                    else if (key == "grid") sim_grid = std::stod(value);
                    else if (key == "tstat-s") sim_tstat_s = value;
                    else if (key == "tstat-k") sim_tstat_k = std::stoi(value);
                    else if (key == "out") sim_out = value;
                    else if (key == "workers") workers = std::stoi(value);
                    else throw std::invalid_argument("unknown config key '" + key + "'");
                }
            }
            return cmd_simulate(sim_ens, sim_n, sim_trials, sim_seed, sim_grid, sim_tstat_s,
                                sim_tstat_k, sim_rect, sim_maxjump, sim_out, sim_cov_out,
                                sim_raw, workers);
        }
        if (lc->parsed())
            return cmd_limit_cov(lc_ens, lc_k1, lc_k2, lc_s1, lc_s2, lc_m4, lc_centered, lc_trace);
        if (hm->parsed()) return cmd_heatmap(hm_ens, hm_n, hm_seed, hm_out);
        if (wg->parsed()) return cmd_weingarten(wg_group, wg_n, wg_samples, wg_seed);
        if (jp->parsed()) return cmd_jumps(jp_ens, jp_nlist, jp_trials, jp_seed, workers);
        if (ck->parsed()) return cmd_check(ck_seed, workers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
