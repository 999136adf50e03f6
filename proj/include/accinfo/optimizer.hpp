#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "accinfo/info.hpp"
#include "accinfo/model.hpp"

namespace accinfo {

struct LineSearchConfig {
    double bracket_max = 1.0;
    double shrink_tol = 1e-6;
    int max_evals = 100;
};

struct OptimizerConfig {
    double steepest_prob = 0.02;  // chance of a plain-gradient iteration
    double tolerance = 1e-9;      // relative mutual-information tolerance
    std::uint64_t seed = 0;
    int max_iterations = 10000;
    LineSearchConfig line_search;
    int restarts = 1;
};

struct RunReport {
    std::vector<double> mi_trace;  // mutual information after each iteration
    Povm final_povm;
    Povm reduced_povm;
    int iterations = 0;
    bool converged = false;
    OptimizerConfig config_echo;

    double final_mi() const { return mi_trace.empty() ? 0.0 : mi_trace.back(); }
};

using DirectionSet = std::vector<CMatrix>;

/// Previous factor-space gradient and direction for Polak-Ribiere mixing.
/// A steepest step overwrites both with the fresh gradient, which acts as a
/// conjugate-gradient restart.
struct CgMemory {
    DirectionSet gradient;
    DirectionSet direction;

    bool empty() const { return gradient.empty(); }
};

/// K gaussian factors renormalized to a complete POVM: A_k = B_k S^{-1/2}
/// with S = Σ B_k†B_k. Retries fresh draws up to 5 times if S falls below
/// the pseudo-inversion floor, then throws RankDeficient.
Povm init_random_povm(int dim, int k, RngState& rng);

/// Factor-space ascent direction. Raw gradient is Γ_k = A_k R_k; with
/// conjugate memory, D = Γ + β D_prev with the Polak-Ribiere β clamped at 0.
/// Updates `memory` to the (gradient, direction) pair it produced.
DirectionSet ascent_direction(const Povm& p, const GradientSet& g,
                              CgMemory& memory, bool use_steepest);

/// Constraint-preserving step: B_k = A_k + eps D_k, then renormalize by
/// S^{-1/2} so the outcomes stay PSD and complete for every eps. Throws
/// RankDeficient when S(eps) is singular beyond the pseudo-inverse floor.
Povm apply_step(const Povm& p, const DirectionSet& d, double eps);

struct GoldenResult {
    double eps_star;
    double f_star;
};

/// Golden-section maximization on [0, bracket_max] at ratio (sqrt(5)-1)/2.
/// Returns the best sampled point; f(0) is always among the samples, so
/// f_star >= f(0). Stops once the interval shrinks below
/// shrink_tol * bracket_max or max_evals evaluations are spent.
GoldenResult golden_section_max(const std::function<double(double)>& f,
                                double bracket_max, double shrink_tol,
                                int max_evals);

/// The stopping predicate, evaluated in double precision:
/// 2.0*(current - previous) <= tolerance*(current + previous) + 1.0e-25.
bool is_converged(double previous_mi, double current_mi, double tolerance);

/// Called after every accepted iteration; never consumes randomness.
using IterationObserver =
    std::function<void(int restart, int iteration, double mi, const Povm& p)>;

/// Full ascent driver. Each restart r runs an independent stream seeded
/// with cfg.seed + r; the stream is consumed in a fixed order: first the
/// POVM initialization, then one uniform draw per iteration for the
/// steepest-vs-conjugate choice. The best final MI across restarts wins,
/// ties broken by lowest restart index. Deterministic for fixed inputs.
RunReport run(const Ensemble& e, const OptimizerConfig& cfg, int k_init,
              const IterationObserver& observer = {});

}  // namespace accinfo
