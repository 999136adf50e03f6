#include "accinfo/optimizer.hpp"

#include "accinfo/reduce.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace accinfo {

namespace {

// Σ_k Re tr(x_k† y_k).
double factor_inner(const DirectionSet& x, const DirectionSet& y) {
    double sum = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sum += x[k].conjugate().cwiseProduct(y[k]).sum().real();
    }
    return sum;
}

// Renormalizes factors in place: A_k <- A_k S^{-1/2}. Returns false when S
// is singular beyond the pseudo-inverse floor.
bool renormalize(std::vector<CMatrix>& factors, int dim) {
    CMatrix s = CMatrix::Zero(dim, dim);
    for (const CMatrix& b : factors) s += b.adjoint() * b;
    const HermitianEig eig = hermitian_eig(s);
    const double floor = default_pseudo_floor(eig.eigenvalues);
    if (eig.eigenvalues(0) <= floor) return false;
    const CMatrix t = inv_sqrt_from_eig(eig, floor);
    for (CMatrix& b : factors) b = b * t;
    return true;
}

}  // namespace

Povm init_random_povm(int dim, int k, RngState& rng) {
    if (dim < 1 || k < 1) {
        throw std::invalid_argument("init_random_povm: dim and k must be >= 1");
    }
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<CMatrix> factors;
        factors.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            factors.push_back(random_gaussian_matrix(dim, rng));
        }
        if (renormalize(factors, dim)) {
            return Povm{dim, std::move(factors)};
        }
    }
    throw RankDeficient("init_random_povm: singular factor sum after 5 draws");
}

DirectionSet ascent_direction(const Povm& p, const GradientSet& g,
                              CgMemory& memory, bool use_steepest) {
    DirectionSet gradient;
    gradient.reserve(p.factors.size());
    for (std::size_t k = 0; k < p.factors.size(); ++k) {
        gradient.push_back(p.factors[k] * g.rks[k]);
    }

    DirectionSet direction;
    if (use_steepest || memory.empty()) {
        direction = gradient;
    } else {
        DirectionSet diff;
        diff.reserve(gradient.size());
        for (std::size_t k = 0; k < gradient.size(); ++k) {
            diff.push_back(gradient[k] - memory.gradient[k]);
        }
        const double denom = factor_inner(memory.gradient, memory.gradient);
        const double beta =
            denom > 0.0 ? std::max(0.0, factor_inner(diff, gradient) / denom)
                        : 0.0;
        direction.reserve(gradient.size());
        for (std::size_t k = 0; k < gradient.size(); ++k) {
            direction.push_back(gradient[k] + beta * memory.direction[k]);
        }
    }

    memory.gradient = gradient;
    memory.direction = direction;
    return direction;
}

Povm apply_step(const Povm& p, const DirectionSet& d, double eps) {
    if (d.size() != p.factors.size()) {
        throw DimensionMismatch("apply_step: direction count mismatch");
    }
    std::vector<CMatrix> factors;
    factors.reserve(p.factors.size());
    for (std::size_t k = 0; k < p.factors.size(); ++k) {
        factors.push_back(p.factors[k] + eps * d[k]);
    }
    if (!renormalize(factors, p.dim)) {
        std::ostringstream os;
        os << "apply_step: singular factor sum at eps = " << eps;
        throw RankDeficient(os.str());
    }
    return Povm{p.dim, std::move(factors)};
}

GoldenResult golden_section_max(const std::function<double(double)>& f,
                                double bracket_max, double shrink_tol,
                                int max_evals) {
    if (bracket_max <= 0.0) {
        throw std::invalid_argument("golden_section_max: bracket must be > 0");
    }
    constexpr double ratio = 0.6180339887498949;  // (sqrt(5)-1)/2

    GoldenResult best{0.0, f(0.0)};
    int evals = 1;
    auto probe = [&](double x) {
        const double fx = f(x);
        ++evals;
        if (fx > best.f_star) best = {x, fx};
        return fx;
    };
    if (evals >= max_evals) return best;

    double lo = 0.0;
    double hi = bracket_max;
    double x1 = lo + (1.0 - ratio) * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = probe(x1);
    if (evals >= max_evals) return best;
    double f2 = probe(x2);

    while (hi - lo > shrink_tol * bracket_max && evals < max_evals) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = probe(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = lo + (1.0 - ratio) * (hi - lo);
            f1 = probe(x1);
        }
    }
    return best;
}

bool is_converged(double previous_mi, double current_mi, double tolerance) {
    return 2.0 * (current_mi - previous_mi) <=
           tolerance * (current_mi + previous_mi) + 1.0e-25;
}

namespace {

struct RestartResult {
    std::vector<double> trace;
    Povm povm;
    bool converged = false;
    double final_mi = 0.0;
};

RestartResult run_single(const Ensemble& e, const OptimizerConfig& cfg,
                         int k_init, int restart,
                         const IterationObserver& observer) {
    RngState rng(cfg.seed + static_cast<std::uint64_t>(restart));

    RestartResult result;
    result.povm = init_random_povm(e.dim, k_init, rng);

    ProbTable table = probability_table(e, result.povm);
    double mi_prev = mutual_information(table);
    result.final_mi = mi_prev;

    CgMemory memory;
    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        const GradientSet grads = gradient_operators(e, table);
        const bool use_steepest = rng.uniform01() < cfg.steepest_prob;
        DirectionSet direction =
            ascent_direction(result.povm, grads, memory, use_steepest);

        // Scale-free bracket: largest factor direction has unit spectral norm.
        double scale = 0.0;
        for (const CMatrix& d : direction) {
            scale = std::max(scale, spectral_norm(d));
        }
        if (scale > 0.0) {
            for (CMatrix& d : direction) d /= scale;
        }

        const auto objective = [&](double eps) {
            try {
                const Povm trial = apply_step(result.povm, direction, eps);
                return mutual_information(probability_table(e, trial));
            } catch (const RankDeficient&) {
                return -std::numeric_limits<double>::infinity();
            }
        };
        const GoldenResult pick = golden_section_max(
            objective, cfg.line_search.bracket_max, cfg.line_search.shrink_tol,
            cfg.line_search.max_evals);

        result.povm = apply_step(result.povm, direction, pick.eps_star);
        table = probability_table(e, result.povm);
        const double mi_cur = mutual_information(table);

        result.trace.push_back(mi_cur);
        result.final_mi = mi_cur;
        if (observer) observer(restart, iter, mi_cur, result.povm);

        if (is_converged(mi_prev, mi_cur, cfg.tolerance)) {
            result.converged = true;
            break;
        }
        mi_prev = mi_cur;
    }
    return result;
}

}  // namespace

RunReport run(const Ensemble& e, const OptimizerConfig& cfg, int k_init,
              const IterationObserver& observer) {
    if (k_init < 1) {
        throw std::invalid_argument("run: k_init must be >= 1");
    }
    if (cfg.restarts < 1) {
        throw std::invalid_argument("run: restarts must be >= 1");
    }
    const ValidationReport validation = validate_ensemble(e);
    if (!validation.ok()) {
        throw InvalidEnsemble("run: " + validation.to_string());
    }

    RestartResult best;
    bool have_best = false;
    for (int r = 0; r < cfg.restarts; ++r) {
        RestartResult candidate = run_single(e, cfg, k_init, r, observer);
        if (!have_best || candidate.final_mi > best.final_mi) {
            best = std::move(candidate);
            have_best = true;
        }
    }

    RunReport report;
    report.mi_trace = std::move(best.trace);
    report.final_povm = best.povm;
    report.iterations = static_cast<int>(report.mi_trace.size());
    report.converged = best.converged;
    report.config_echo = cfg;

    // Least-element POVM: drop unreachable outcomes first, then merge
    // statistically equivalent ones.
    const Povm trimmed = drop_null_outcomes(best.povm);
    report.reduced_povm =
        merge_equivalent_outcomes(trimmed, probability_table(e, trimmed));
    return report;
}

}  // namespace accinfo
