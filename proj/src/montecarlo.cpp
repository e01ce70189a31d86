#include "wigner/montecarlo.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "wigner/process.hpp"
#include "wigner/spectral_stats.hpp"

namespace wigner {

int default_worker_count() {
    if (const char* env = std::getenv("WIGNER_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

SummaryStats summarize(const std::vector<double>& xs) {
    SummaryStats s;
    s.count = static_cast<int>(xs.size());
    if (s.count == 0) {
        s.mean = s.variance = s.se = s.kurtosis = std::numeric_limits<double>::quiet_NaN();
        return s;
    }
    double sum = 0;
    for (double x : xs) sum += x;
    s.mean = sum / s.count;
    if (s.count < 2) {
        s.variance = s.se = s.kurtosis = std::numeric_limits<double>::quiet_NaN();
        return s;
    }
    double m2 = 0, m4 = 0;
    for (double x : xs) {
        double d = x - s.mean;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    s.variance = m2 / (s.count - 1);
    m2 /= s.count;
    m4 /= s.count;
    s.se = std::sqrt(s.variance / s.count);
    s.kurtosis = m2 > 0 ? m4 / (m2 * m2) : std::numeric_limits<double>::quiet_NaN();
    return s;
}

CovEstimate cov_estimate(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("cov_estimate: length mismatch");
    if (x.size() < 2) throw std::invalid_argument("cov_estimate: need at least 2 samples");
    const int n = static_cast<int>(x.size());
    double mx = 0, my = 0;
    for (int i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sum = 0, sumsq = 0;
    for (int i = 0; i < n; ++i) {
        double d = (x[i] - mx) * (y[i] - my);
        sum += d;
        sumsq += d * d;
    }
    CovEstimate out;
    out.cov = sum / (n - 1);
    double mean_d = sum / n;
    double var_d = std::max(0.0, sumsq / n - mean_d * mean_d);
    out.se = std::sqrt(var_d / n);
    return out;
}

std::string observable_id(const Observable& o) {
    std::ostringstream os;
    os.precision(10);
    if (const auto* b = std::get_if<ObsBridgePoint>(&o))
        os << "bridge(" << b->s << ";" << b->t << ")";
    else if (const auto* t = std::get_if<ObsTStat>(&o))
        os << "tstat(" << t->s << ";k=" << t->k << ")";
    else if (const auto* r = std::get_if<ObsRectIncrement>(&o))
        os << "rect(" << r->s1 << ";" << r->s2 << ";" << r->t1 << ";" << r->t2 << ")";
    else if (std::get_if<ObsMaxJump>(&o))
        os << "max-jump";
    else
        os << "heatmap-max";
    return os.str();
}

void ExperimentPlan::validate() const {
    ensemble.validate();
    if (trials < 1) throw std::invalid_argument("ExperimentPlan: trials >= 1");
    if (observables.empty()) throw std::invalid_argument("ExperimentPlan: no observables");
    for (const auto& o : observables) {
        if (const auto* b = std::get_if<ObsBridgePoint>(&o)) {
            if (b->s < 0 || b->s > 1 || b->t < 0 || b->t > 1)
                throw std::invalid_argument("bridge point outside [0,1]^2");
        } else if (const auto* t = std::get_if<ObsTStat>(&o)) {
            if (t->s < 0 || t->s > 1) throw std::invalid_argument("t-stat s outside [0,1]");
            if (t->k < 1 || t->k > kMaxTraceOrder)
                throw std::invalid_argument("t-stat order k outside [1,12]");
        } else if (const auto* r = std::get_if<ObsRectIncrement>(&o)) {
            if (!(r->s1 < r->s2) || !(r->t1 < r->t2) || r->s1 < 0 || r->s2 > 1 || r->t1 < 0 ||
                r->t2 > 1)
                throw std::invalid_argument("rectangle must satisfy 0<=s<s'<=1, 0<=t<t'<=1");
        }
    }
}

RunResult run(const ExperimentPlan& plan, int workers) {
    plan.validate();
    const int trials = plan.trials;
    const int nobs = static_cast<int>(plan.observables.size());

    bool needs_dec = false;
    for (const auto& o : plan.observables)
        if (!std::holds_alternative<ObsTStat>(o)) needs_dec = true;

    RunResult result;
    result.ids.reserve(nobs);
    for (const auto& o : plan.observables) result.ids.push_back(observable_id(o));
    result.samples.assign(nobs, std::vector<double>(trials, 0.0));

    std::vector<char> failed(trials, 0);
    parallel_for(trials, workers, [&](int t) {
        RngStream rng(plan.seed, static_cast<std::uint64_t>(t));
        WignerSample x = build_wigner(plan.ensemble, rng);
        std::optional<BridgeGrid> grid;
        if (needs_dec) {
            try {
                grid.emplace(spectral_decomposition(x));
            } catch (const EigensolverError&) {
                failed[t] = 1;
                return;
            }
        }
        for (int o = 0; o < nobs; ++o) {
            const Observable& obs = plan.observables[o];
            double v = 0;
            if (const auto* b = std::get_if<ObsBridgePoint>(&obs))
                v = grid->eval(b->s, b->t);
            else if (const auto* ts = std::get_if<ObsTStat>(&obs))
                v = t_stat_power(x, ts->s, ts->k);
            else if (const auto* r = std::get_if<ObsRectIncrement>(&obs))
                v = grid->rect_increment(r->s1, r->s2, r->t1, r->t2);
            else if (std::get_if<ObsMaxJump>(&obs))
                v = grid->max_jump();
            else
                v = grid->max_jump() / std::sqrt(x.beta / 2.0);
            result.samples[o][t] = v;
        }
    });

    for (int t = 0; t < trials; ++t)
        if (failed[t]) result.failed_trials.push_back(t);
    if (static_cast<double>(result.failed_trials.size()) > 0.01 * trials) {
        throw std::runtime_error("run: more than 1% of trials failed in the eigensolver (" +
                                 std::to_string(result.failed_trials.size()) + "/" +
                                 std::to_string(trials) + ")");
    }
    if (!result.failed_trials.empty()) {
        // Drop failed trials from every observable, preserving trial order.
        for (auto& column : result.samples) {
            std::vector<double> kept;
            kept.reserve(column.size());
            for (int t = 0; t < trials; ++t)
                if (!failed[t]) kept.push_back(column[t]);
            column = std::move(kept);
        }
    }

    result.stats.reserve(nobs);
    for (const auto& xs : result.samples) result.stats.push_back(summarize(xs));
    if (trials >= 2) {
        result.covariances.assign(nobs, std::vector<CovEstimate>(nobs));
        for (int a = 0; a < nobs; ++a)
            for (int b = a; b < nobs; ++b) {
                CovEstimate c = cov_estimate(result.samples[a], result.samples[b]);
                result.covariances[a][b] = c;
                result.covariances[b][a] = c;
            }
    }
    return result;
}

}  // namespace wigner
