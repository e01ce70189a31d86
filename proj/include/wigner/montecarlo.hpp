#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "wigner/matrices.hpp"

namespace wigner {

// Worker count: WIGNER_WORKERS if set, else hardware concurrency.
int default_worker_count();

// Runs f(i) for i in [0, count) across the given number of workers.  Work is
// handed out through an atomic counter; results must be written by index, so
// the outcome is independent of scheduling.
template <typename F>
void parallel_for(int count, int workers, F&& f) {
    if (workers <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int spawn = std::min(workers, count);
    pool.reserve(spawn);
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    for (int w = 0; w < spawn; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    f(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(error);
}

struct SummaryStats {
    double mean = 0;
    double variance = 0;  // unbiased; NaN when fewer than 2 samples
    double se = 0;        // sample sd / sqrt(count)
    double kurtosis = 0;  // m4 / m2^2 (biased moment ratio); NaN when degenerate
    int count = 0;
};
SummaryStats summarize(const std::vector<double>& xs);

struct CovEstimate {
    double cov = 0;  // unbiased sample covariance
    double se = 0;   // sd of the product deviations / sqrt(count)
};
CovEstimate cov_estimate(const std::vector<double>& x, const std::vector<double>& y);

// ---------------------------------------------------------------------------
// Experiment plans.
// ---------------------------------------------------------------------------

struct ObsBridgePoint { double s = 0.5, t = 0.5; };
struct ObsTStat { double s = 0.5; int k = 2; };
struct ObsRectIncrement { double s1 = 0, s2 = 1, t1 = 0, t2 = 1; };
struct ObsMaxJump {};
struct ObsHeatmapMax {};  // per-trial max_ij ||u_ij|^2 - 1/n|
using Observable =
    std::variant<ObsBridgePoint, ObsTStat, ObsRectIncrement, ObsMaxJump, ObsHeatmapMax>;

std::string observable_id(const Observable& o);

struct ExperimentPlan {
    EnsembleSpec ensemble;
    int trials = 1;
    std::uint64_t seed = 1;
    std::vector<Observable> observables;

    void validate() const;
};

struct RunResult {
    std::vector<std::string> ids;
    std::vector<std::vector<double>> samples;  // [observable][trial], trial order
    std::vector<SummaryStats> stats;
    std::vector<std::vector<CovEstimate>> covariances;  // symmetric, ids x ids
    std::vector<int> failed_trials;
};

// Per-trial pipeline sample -> decompose (only when some observable needs
// eigenvectors) -> evaluate.  Trial t draws from RngStream(seed, t), so the
// result is identical for identical (plan, seed) regardless of worker count.
// Trials whose eigensolve fails are recorded and skipped; more than 1%
// failures aborts the run.
RunResult run(const ExperimentPlan& plan, int workers = default_worker_count());

}  // namespace wigner
