// SPDX-License-Identifier: Apache-2.0
//
// irspn: phase-noise-aware channel estimation and rate analysis for IRS links
// Copyright (C) 2026 The irspn authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "irspn/channel.hpp"
#include "irspn/closed_form.hpp"
#include "irspn/csv.hpp"
#include "irspn/experiments.hpp"
#include "irspn/mmse_estimator.hpp"
#include "irspn/montecarlo.hpp"
#include "oracles.hpp"

using namespace irspn;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs a sub-check and enforces its own time budget.
template <typename F>
void timed(Outcome& out, const std::string& name, double budget, F&& f) {
    const auto start = Clock::now();
    f();
    const double elapsed = seconds_since(start);
    out.detail << " " << name << " " << elapsed << "s;";
    out.require(elapsed < budget, name + " exceeded " + std::to_string(budget) + " s");
}

std::vector<int> first_times(Index B) {
    std::vector<int> times;
    for (Index i = 1; i <= B; ++i) times.push_back(static_cast<int>(i));
    return times;
}

double relative_fro(const CMatrix& a, const CMatrix& b) { return (a - b).norm() / b.norm(); }

// ---------------------------------------------------------------------------

void identities(Outcome& out) {
    RandomStream rng(StreamTree(1).child(1).seed());

    timed(out, "psi+C", 1.0, [&] {
        double worst = 0.0;
        for (double beta : {1e-7, 1.0}) {
            for (Index N : {1, 2, 4, 8, 16}) {
                const auto sched = dft_schedule(N, N, first_times(N));
                for (double s : {0.0, 1e-6, 1e-2}) {
                    for (int t : {static_cast<int>(N) + 1, 500}) {
                        const auto d = decay_matrix(t, sched.pilot_times, sched.pilot_symbols, s, s / 3);
                        const double su2 = beta / 100.0;
                        const CMatrix sum = estimate_covariance(sched, d, beta, su2, 3, N).expand() +
                                            error_covariance(sched, d, beta, su2, 3, N).expand();
                        worst = std::max(worst, (sum - beta * CMatrix::Identity(3 * N, 3 * N)).cwiseAbs().maxCoeff());
                    }
                }
            }
        }
        out.detail << " max|psi+C-beta I|=" << worst;
        out.require(worst < 1e-10, "psi + C identity");
    });

    timed(out, "blockwise=stacked", 1.0, [&] {
        double worst = 0.0;
        for (int rep = 0; rep < 200; ++rep) {
            const Index M = 1 + static_cast<Index>(rng.uniform() * 4);
            const Index N = 1 + static_cast<Index>(rng.uniform() * 4);
            const Index B = 1 + static_cast<Index>(rng.uniform() * static_cast<double>(N));
            auto sched = dft_schedule(B, N, first_times(B));
            for (Index i = 0; i < B; ++i) sched.pilot_symbols(i) = std::polar(1.0, rng.uniform_phase());
            const auto ch = sample_cascaded(M, N, 1.0, rng);
            const auto traj = sample_trajectories(M, B, 0.2, 0.1, rng);
            RandomStream noise(static_cast<std::uint64_t>(rep) + 1000);
            RandomStream noise_copy = noise;
            const auto obs = simulate_uplink(ch.h, traj, sched, 0.5, noise);

            CMatrix A(B * M, M * N);
            for (Index i = 0; i < B; ++i) {
                const CMatrix D = drift_matrix(traj, sched.pilot_times[static_cast<std::size_t>(i)]).dense();
                A.block(i * M, 0, M, M * N) = sched.pilot_symbols(i) * oracle::kron(sched.Phi.row(i), D);
            }
            CVector stacked = A * oracle::vec(ch.H);
            for (Index k = 0; k < B * M; ++k) stacked(k) += noise_copy.cscg(0.5);
            worst = std::max(worst, (obs.psi - stacked).cwiseAbs().maxCoeff());
        }
        out.detail << " max|blockwise-stacked|=" << worst;
        out.require(worst < 1e-12, "blockwise vs stacked uplink");
    });

    timed(out, "DFT", 1.0, [&] {
        double worst = 0.0;
        for (Index N = 1; N <= 64; ++N) {
            const auto sched = dft_schedule(N, N, first_times(N));
            const CMatrix gram = sched.Phi.adjoint() * sched.Phi;
            worst = std::max(worst, (gram - static_cast<double>(N) * CMatrix::Identity(N, N)).cwiseAbs().maxCoeff());
        }
        out.detail << " max|Phi^H Phi-N I|=" << worst;
        out.require(worst < 1e-10, "DFT orthogonality");
    });

    timed(out, "eta ratio", 1.0, [&] {
        double worst = 0.0;
        for (int k = 0; k < 2000; ++k) {
            const int N = 1 + static_cast<int>(rng.uniform() * 256);
            const int t = N + 1 + static_cast<int>(rng.uniform() * 500);
            const double beta = std::pow(10.0, -9.0 + 9.0 * rng.uniform());
            const double su2 = beta * std::pow(10.0, -3.0 + 6.0 * rng.uniform());
            const double s = k % 4 == 0 ? 0.0 : std::pow(10.0, -9.0 + 7.0 * rng.uniform());
            const double ratio = eta(t, N, beta, su2, s, s / 2).value / eta_asymptote(t, N, beta, s, s / 2);
            worst = std::max(worst, std::abs(ratio - N * beta / (N * beta + su2)));
        }
        out.detail << " max|eta/asym-gain|=" << worst;
        out.require(worst < 1e-12, "eta over asymptote");
    });

    timed(out, "trace", 1.0, [&] {
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            const Index N = 1 + static_cast<Index>(rng.uniform() * 32);
            const Index M = 1 + static_cast<Index>(rng.uniform() * 8);
            const int t = static_cast<int>(N) + 1 + static_cast<int>(rng.uniform() * 500);
            const double beta = std::pow(10.0, -8.0 + 8.0 * rng.uniform());
            const double su2 = beta * std::pow(10.0, -3.0 + 6.0 * rng.uniform());
            const double s = std::pow(10.0, -9.0 + 7.0 * rng.uniform());
            const auto sched = dft_schedule(N, N, first_times(N));
            const auto d = decay_matrix(t, sched.pilot_times, sched.pilot_symbols, s, s);
            const double tr = estimate_covariance(sched, d, beta, su2, M, N).trace();
            const double expected = static_cast<double>(M * N) * eta(t, static_cast<int>(N), beta, su2, s, s).value;
            worst = std::max(worst, std::abs(tr - expected) / expected);
        }
        out.detail << " max rel|tr Psi-MN eta|=" << worst;
        out.require(worst < 1e-10, "trace identity");
    });
}

void dense_oracle(Outcome& out) {
    double worst = 0.0;
    const Index M = 2;
    RandomStream rng(StreamTree(2).child(2).seed());
    for (Index N : {2, 3}) {
        for (double s : {0.0, 1e-6, 0.05, 0.5}) {
            for (double su2 : {0.01, 1.0}) {
                auto sched = dft_schedule(N, N, first_times(N));
                for (Index i = 0; i < N; ++i) sched.pilot_symbols(i) = std::polar(1.0, rng.uniform_phase());
                const auto ch = sample_cascaded(M, N, 1.0, rng);
                const auto traj = sample_trajectories(M, N + 30, s, s / 2, rng);
                const auto obs = simulate_uplink(ch.h, traj, sched, su2, rng);
                for (int t = static_cast<int>(N) + 1; t <= static_cast<int>(N) + 30; t += 7) {
                    const auto d = decay_matrix(t, sched.pilot_times, sched.pilot_symbols, s, s / 2);
                    const auto est = estimate(obs, sched, d, 1.0, su2, M, N);
                    const CVector ref = oracle::dense_mmse(sched, t, s, s / 2, 1.0, su2, M, obs.psi);
                    worst = std::max(worst, (est.h_hat - ref).cwiseAbs().maxCoeff());
                    const CMatrix cov = oracle::dense_estimate_covariance(sched, t, s, s / 2, 1.0, su2, M);
                    worst = std::max(worst, (est.Psi.expand() - cov).cwiseAbs().maxCoeff());
                }
            }
        }
    }
    out.detail << " max abs diff (estimate and covariance, beta=1)=" << worst;
    out.require(worst < 1e-10, "dense oracle");
}

void estimator_statistics(Outcome& out) {
    SystemConfig config;
    config.M = 2;
    config.N = config.B = 4;
    config.zeta_BS = config.zeta_UE = 1e-19;
    const auto derived = validate(config);
    config.sigma_u2 = derived.beta_cas / 100.0;
    const auto link = link_params(config);
    const Index M = link.M, N = link.N;
    const int t = link.T;
    const double beta = link.beta_cas;

    const auto sched = dft_schedule(N, N, first_times(N));
    const auto d = decay_matrix(t, sched.pilot_times, sched.pilot_symbols, link.sigma_BS2, link.sigma_UE2);
    const MmseEstimator estimator(sched, d, beta, link.sigma_u2, M);
    const CMatrix Psi = estimate_covariance(sched, d, beta, link.sigma_u2, M, N).expand();
    const CMatrix C = error_covariance(sched, d, beta, link.sigma_u2, M, N).expand();

    const StreamTree tree(config.seed);
    const int trials = 100000;
    CMatrix est_cov = CMatrix::Zero(M * N, M * N);
    CMatrix err_cov = CMatrix::Zero(M * N, M * N);
    CMatrix cross = CMatrix::Zero(M * N, M * N);
    for (int k = 0; k < trials; ++k) {
        const auto index = static_cast<std::uint64_t>(k);
        auto rc = tree.stream(index, Purpose::channel);
        auto rp = tree.stream(index, Purpose::phase_noise);
        auto rn = tree.stream(index, Purpose::uplink_noise);
        const auto ch = sample_cascaded(M, N, beta, rc);
        const auto traj = sample_trajectories(M, t, link.sigma_BS2, link.sigma_UE2, rp);
        const CVector h_hat = estimator.apply(simulate_uplink(ch.h, traj, sched, link.sigma_u2, rn).psi);
        const CVector h_eff = vectorize(drift_matrix(traj, t).entries.asDiagonal() * ch.H);
        const CVector err = h_eff - h_hat;
        est_cov += h_hat * h_hat.adjoint();
        err_cov += err * err.adjoint();
        cross += h_hat * err.adjoint();
    }
    est_cov /= static_cast<double>(trials);
    err_cov /= static_cast<double>(trials);
    cross /= static_cast<double>(trials);

    const double e_est = relative_fro(est_cov, Psi);
    const double e_err = relative_fro(err_cov, C);
    const double e_cross = cross.norm() / Psi.norm();
    out.detail << " sample cov vs Psi " << e_est << ", error cov vs C " << e_err
               << ", |cross|/|Psi| " << e_cross << " (1e5 trials, t=" << t << ")";
    out.require(e_est < 0.05, "estimate covariance");
    out.require(e_err < 0.05, "error covariance");
    out.require(e_cross < 0.05, "orthogonality");
}

// Gap of the averaged SNR implied by the moment report relative to the closed form.
struct GapEstimate {
    double gap;
    double half_width;
};

GapEstimate snr_gap(const FourthMomentReport& report, const LinkParams& link, int t, IrsMode mode) {
    const double scale = link.snr_scale() / precoder_power(link.M, link.N, report.eta, mode);
    const double closed = avg_snr(t, link, mode);
    return {scale * report.numerator.mean / closed - 1.0, scale * report.numerator.half_width / closed};
}

SystemConfig headline_config() { return SystemConfig{}; }

void averaged_snr_random(Outcome& out) {
    const auto link = link_params(headline_config());
    const int t = link.T;
    const RunOptions run{100000, 0};
    const StreamTree tree(headline_config().seed);
    const auto mc = simulate_simplified(link, t, IrsMode::random, run, tree);
    const double closed = avg_snr_random(t, link);
    const double rel = mc.mean / closed - 1.0;
    out.detail << " MC " << mc.mean << " +/- " << mc.half_width << " vs closed form " << closed
               << " (rel gap " << rel << ", exact-moment prediction " << exact_avg_snr(t, link, IrsMode::random)
               << ")";
    out.require(std::abs(rel) <= 0.10, "within 10% of the closed form");

    const auto a = snr_gap(fourth_moment_oracle(link, t, IrsMode::random, run, tree), link, t, IrsMode::random);
    const auto b = snr_gap(fourth_moment_oracle(link, t, IrsMode::random, run, StreamTree(tree.seed() + 1)),
                           link, t, IrsMode::random);
    out.detail << "; oracle gap seed A " << a.gap << " +/- " << a.half_width << ", seed B " << b.gap << " +/- "
               << b.half_width;
    out.require(std::abs(a.gap - b.gap) <= a.half_width + b.half_width, "gap stable across seeds");
}

void averaged_snr_optimized(Outcome& out) {
    const auto link = link_params(headline_config());
    const int t = link.T;
    const RunOptions run{100000, 0};
    const StreamTree tree(headline_config().seed);
    const auto opt = simulate_simplified(link, t, IrsMode::optimized, run, tree);
    const double closed = avg_snr_optimized(t, link);
    const double rel = opt.mean / closed - 1.0;
    out.detail << " MC " << opt.mean << " +/- " << opt.half_width << " vs closed form " << closed
               << " (rel gap " << rel << ", exact-moment prediction "
               << exact_avg_snr(t, link, IrsMode::optimized) << ")";
    out.require(std::abs(rel) <= 0.10, "within 10% of the closed form");

    const auto report = fourth_moment_oracle(link, t, IrsMode::optimized, run, tree);
    const auto g = snr_gap(report, link, t, IrsMode::optimized);
    out.detail << "; oracle gap " << g.gap << " +/- " << g.half_width;

    const auto rnd = simulate_simplified(link, t, IrsMode::random, run, StreamTree(tree.seed() + 2));
    out.detail << "; random " << rnd.mean << " +/- " << rnd.half_width;
    out.require(avg_snr_optimized(t, link) > avg_snr_random(t, link), "analytic ordering");
    out.require(opt.mean - opt.half_width > rnd.mean + rnd.half_width, "non-overlapping CIs");
}

void fourth_moment(Outcome& out) {
    const SystemConfig base = headline_config();
    const std::vector<std::pair<int, int>> grid = {{4, 8}, {16, 16}, {32, 64}};
    const StreamTree root(base.seed);
    const RunOptions run{100000, 0};
    for (std::size_t g = 0; g < grid.size(); ++g) {
        SystemConfig point = base;
        point.M = grid[g].first;
        point.N = point.B = grid[g].second;
        const auto link = link_params(point);
        const int t = link.T;
        const auto report = fourth_moment_oracle(link, t, IrsMode::optimized, run, root.child(g));
        const double n = link.N;
        const double e = report.eta;
        const double closed = n * n * std::numbers::pi * e / 4.0;
        // Independent oracle: quadrature of the Rayleigh magnitude moments.
        const double exact = oracle::rayleigh_sum_second_moment(link.N, e);
        const double measured = report.aligned_row.mean;
        const double hw = report.aligned_row.half_width;
        out.detail << " (M,N)=(" << link.M << "," << link.N << "): gap to N^2 pi eta/4 "
                   << measured / closed - 1.0 << ", exact gap " << exact / closed - 1.0 << ", |measured-exact|/hw "
                   << std::abs(measured - exact) / hw << ";";
        out.require(std::abs(measured - exact) <= hw,
                    "exact moment outside the 95% CI at N=" + std::to_string(link.N));
    }
}

struct CsvRow {
    std::string variable;
    double value;
    int N;
    std::string mode;
    std::string fidelity;
    double rate;
    double perfect;
    double normalized;
    double half_width;
};

std::vector<CsvRow> load_rows(const std::string& csv) {
    std::vector<CsvRow> rows;
    const auto table = parse_csv(csv);
    for (std::size_t r = 1; r < table.size(); ++r) {
        const auto& f = table[r];
        rows.push_back({f[0], std::stod(f[1]), std::stoi(f[2]), f[4], f[5], std::stod(f[6]), std::stod(f[7]), std::stod(f[8]),
                        f[9].empty() ? 0.0 : std::stod(f[9])});
    }
    return rows;
}

std::vector<CsvRow> select(const std::vector<CsvRow>& rows, int N, const std::string& mode,
                           const std::string& fidelity) {
    std::vector<CsvRow> out;
    for (const auto& r : rows)
        if (r.N == N && r.mode == mode && r.fidelity == fidelity) out.push_back(r);
    return out;
}

void figure_trends(Outcome& out) {
    const SystemConfig config = headline_config();
    ExperimentOptions options;
    options.trials = 200;
    const std::vector<std::string> modes = {"random", "optimized"};
    const std::vector<std::string> fidelities = {"analytic", "simplified"};

    int monotone_violations = 0;
    int ordering_violations = 0;
    int normalized_violations = 0;
    int reversals_within_ci = 0;
    int checks = 0;
    for (const char* name : {"fig2", "fig2b", "fig3", "fig3b"}) {
        const auto rows = load_rows(run_experiment(config, name, options).csv);
        std::vector<int> ns;
        for (const auto& r : rows)
            if (std::find(ns.begin(), ns.end(), r.N) == ns.end()) ns.push_back(r.N);

        for (int N : ns) {
            for (const auto& fidelity : fidelities) {
                for (const auto& mode : modes) {
                    const auto curve = select(rows, N, mode, fidelity);
                    for (std::size_t k = 1; k < curve.size(); ++k) {
                        ++checks;
                        const double slack = curve[k].half_width + curve[k - 1].half_width;
                        if (curve[k].rate > curve[k - 1].rate + slack) ++monotone_violations;
                    }
                }
                const auto rnd = select(rows, N, "random", fidelity);
                const auto opt = select(rows, N, "optimized", fidelity);
                for (std::size_t k = 0; k < rnd.size(); ++k) {
                    ++checks;
                    if (opt[k].rate < rnd[k].rate) ++ordering_violations;
                }
            }
        }
        if (std::string(name).back() == 'b') {
            for (const auto& fidelity : fidelities) {
                for (const auto& mode : modes) {
                    const auto small = select(rows, 16, mode, fidelity);
                    const auto large = select(rows, 64, mode, fidelity);
                    for (std::size_t k = 0; k < small.size(); ++k) {
                        ++checks;
                        // Simulated rows only count when the ordering is reversed beyond both CIs.
                        const double slack = small[k].half_width / small[k].perfect +
                                             large[k].half_width / large[k].perfect;
                        if (fidelity == "analytic" ? !(large[k].normalized > small[k].normalized)
                                                   : large[k].normalized < small[k].normalized - slack)
                            ++normalized_violations;
                        else if (!(large[k].normalized > small[k].normalized))
                            ++reversals_within_ci;
                    }
                }
            }
        }
    }
    out.detail << " " << checks << " pointwise checks over fig2/fig2b/fig3/fig3b (analytic and simplified rows, "
               << options.trials << " trials); monotonicity violations " << monotone_violations
               << ", optimized<random " << ordering_violations << ", normalized N=64<=N=16 "
               << normalized_violations << " (simulated reversals inside the CI: " << reversals_within_ci << ")";
    out.require(monotone_violations == 0, "rate not non-increasing");
    out.require(ordering_violations == 0, "optimized below random");
    out.require(normalized_violations == 0, "normalized rate ordering in N");
}

void eta_gap_property(Outcome& out) {
    RandomStream rng(StreamTree(8).child(8).seed());
    double minimum = 1.0;
    double smallest_nonzero = 1.0;
    double largest_zero = 0.0;
    int zero_points = 0;
    for (int k = 0; k < 200; ++k) {
        const int N = 2 + static_cast<int>(rng.uniform() * 255);
        const int t = N + 1 + static_cast<int>(rng.uniform() * 1000);
        // Every 10th point has ideal oscillators; every 7th has exactly one ideal oscillator.
        const bool ideal = k % 10 == 0;
        double sb = std::pow(10.0, -8.0 + 6.0 * rng.uniform());
        double su = std::pow(10.0, -8.0 + 6.0 * rng.uniform());
        if (ideal) sb = su = 0.0;
        else if (k % 7 == 0) su = 0.0;
        const double gap = eta_gap(N, t, 1.0, sb, su);
        minimum = std::min(minimum, gap);
        if (ideal) {
            ++zero_points;
            largest_zero = std::max(largest_zero, std::abs(gap));
        } else {
            smallest_nonzero = std::min(smallest_nonzero, gap);
        }
    }
    out.detail << " 200 points (beta=1, " << zero_points << " ideal): min gap " << minimum
               << ", max |gap| at ideal points " << largest_zero << ", min gap elsewhere " << smallest_nonzero;
    out.require(minimum >= -1e-15, "negative gap");
    out.require(largest_zero < 1e-15, "nonzero gap with ideal oscillators");
    out.require(smallest_nonzero >= 1e-15, "zero gap with nonzero variance");
}

void asymptotic_noise(Outcome& out) {
    const double beta = validate(SystemConfig{}).beta_cas;
    const double su2 = 100.0 * beta;
    double worst = 0.0;
    int threshold = -1;
    bool stays_above = true;
    for (int N = 1; N <= 20000; ++N) {
        const int t = N + 1;
        for (double s : {0.0, 1e-6}) {
            const double ratio = eta(t, N, beta, su2, s, s).value / eta_asymptote(t, N, beta, s, s);
            worst = std::max(worst, std::abs(ratio - N / (N + 100.0)));
            if (s == 0.0) {
                if (ratio > 0.99 && threshold < 0) threshold = N;
                if (threshold > 0 && !(ratio > 0.99)) stays_above = false;
            }
        }
    }
    out.detail << " max|ratio - N/(N+100)|=" << worst << ", first N with ratio > 0.99: " << threshold;
    out.require(worst < 1e-12, "ratio identity");
    out.require(threshold == 9901, "threshold");
    out.require(stays_above, "ratio drops below 0.99 past the threshold");
}

void determinism(Outcome& out) {
    const SystemConfig config = headline_config();
    ExperimentOptions options;
    const auto first = run_experiment(config, "fig2", options).csv;
    const auto second = run_experiment(config, "fig2", options).csv;
    options.workers = 1;
    const auto single = run_experiment(config, "fig2", options).csv;
    options.workers = 3;
    const auto three = run_experiment(config, "fig2", options).csv;
    out.detail << " fig2 csv blob " << git_blob_hash(first) << " (" << first.size() << " bytes)";
    out.require(first == second, "repeat run differs");
    out.require(first == single, "single worker differs");
    out.require(first == three, "three workers differ");
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "exact identities", 5.0, identities},
        {2, "estimator vs dense LMMSE oracle", 10.0, dense_oracle},
        {3, "estimator statistics", 120.0, estimator_statistics},
        {4, "averaged SNR, random IRS", 60.0, averaged_snr_random},
        {5, "averaged SNR, optimized IRS", 120.0, averaged_snr_optimized},
        {6, "fourth-moment arbitration", 180.0, fourth_moment},
        {7, "figure trends", 300.0, figure_trends},
        {8, "eta gap non-negativity", 1.0, eta_gap_property},
        {9, "asymptotic vanishing of uplink noise", 1.0, asymptotic_noise},
        {10, "determinism", 300.0, determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome out;
        const auto start = Clock::now();
        try {
            c.body(out);
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(start);
        out.require(elapsed < c.budget_seconds, "runtime budget");
        if (!out.pass) ++failures;
        std::printf("criterion %2d %s  %s (%.2f s, budget %.0f s):%s\n", c.id, out.pass ? "PASS" : "FAIL", c.title,
                    elapsed, c.budget_seconds, out.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
