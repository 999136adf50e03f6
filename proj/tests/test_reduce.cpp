#include <catch2/catch.hpp>

#include "accinfo/info.hpp"
#include "accinfo/optimizer.hpp"
#include "accinfo/reduce.hpp"
#include "helpers.hpp"

using namespace accinfo;

TEST_CASE("duplicated outcomes merge into one", "[reduce]") {
    RngState rng(113);
    const Ensemble e = testutil::random_ensemble(2, 3, rng);

    // Identity split into two equal halves: columns are proportional.
    const CMatrix half = CMatrix::Identity(2, 2) / std::sqrt(2.0);
    const Povm split{2, {half, half}};
    const ProbTable t = probability_table(e, split);
    const double mi_before = mutual_information(t);

    const Povm merged = merge_equivalent_outcomes(split, t);
    REQUIRE(merged.size() == 1);
    REQUIRE((merged.outcome(0) - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
            1e-10);
    REQUIRE(completeness_residual(merged) <= 1e-9);

    const double mi_after =
        mutual_information(probability_table(e, merged));
    REQUIRE(std::abs(mi_after - mi_before) <= 1e-8);
}

TEST_CASE("distinguishing projectors do not merge", "[reduce]") {
    const Ensemble e = testutil::orthogonal_pair_ensemble();
    CMatrix p0 = CMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    CMatrix p1 = CMatrix::Zero(2, 2);
    p1(1, 1) = 1.0;
    const Povm projective{2, {p0, p1}};

    const ProbTable t = probability_table(e, projective);
    const Povm merged = merge_equivalent_outcomes(projective, t);
    REQUIRE(merged.size() == 2);
}

TEST_CASE("a redundant third outcome disappears after convergence", "[reduce]") {
    const Ensemble e = testutil::two_state_ensemble(testutil::kPi / 4);
    OptimizerConfig cfg;
    cfg.seed = 31;
    cfg.tolerance = 1e-15;  // resolve the optimum to machine precision
    cfg.max_iterations = 5000;
    const RunReport report = run(e, cfg, 3);

    // The mutual information is second-order blind to how a split outcome
    // is shared, so the pair's columns align only to about the square root
    // of the MI resolution; the equivalence tolerance has to match that.
    const ProbTable t = probability_table(e, report.final_povm);
    const Povm merged = merge_equivalent_outcomes(report.final_povm, t, 1e-6);
    REQUIRE(merged.size() == 2);
    REQUIRE(completeness_residual(merged) <= 1e-9);

    const double mi_merged =
        mutual_information(probability_table(e, merged));
    REQUIRE(std::abs(mi_merged - report.final_mi()) <= 1e-9);
}

TEST_CASE("merge is idempotent", "[reduce]") {
    RngState rng(127);
    const Ensemble e = testutil::random_ensemble(2, 3, rng);
    const Povm base = init_random_povm(2, 3, rng);
    // Split the first outcome into two equal halves; the POVM stays complete
    // and carries one mergeable pair.
    Povm p{2,
           {base.factors[0] / std::sqrt(2.0), base.factors[0] / std::sqrt(2.0),
            base.factors[1], base.factors[2]}};
    const ProbTable t = probability_table(e, p);

    const Povm once = merge_equivalent_outcomes(p, t);
    const Povm twice =
        merge_equivalent_outcomes(once, probability_table(e, once));
    REQUIRE(once.size() == twice.size());
    for (int k = 0; k < once.size(); ++k) {
        REQUIRE((once.outcome(k) - twice.outcome(k)).cwiseAbs().maxCoeff() <
                1e-12);
    }
}

TEST_CASE("drop_null_outcomes removes zero outcomes", "[reduce]") {
    const Povm p{2, {CMatrix::Identity(2, 2), CMatrix::Zero(2, 2)}};
    const Povm dropped = drop_null_outcomes(p);
    REQUIRE(dropped.size() == 1);
    REQUIRE((dropped.outcome(0) - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
            1e-10);
}

TEST_CASE("drop_null_outcomes leaves full POVMs alone", "[reduce]") {
    RngState rng(131);
    const Povm p = init_random_povm(2, 4, rng);
    const Povm same = drop_null_outcomes(p);
    REQUIRE(same.size() == p.size());
    for (int k = 0; k < p.size(); ++k) {
        REQUIRE((same.factors[k] - p.factors[k]).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("drop_null_outcomes rejects an all-null POVM", "[reduce]") {
    const Povm p{2, {CMatrix::Zero(2, 2), CMatrix::Zero(2, 2)}};
    REQUIRE_THROWS_AS(drop_null_outcomes(p), EmptyPovm);
}

TEST_CASE("reduction keeps the orthogonal-letters information", "[reduce]") {
    const Ensemble e = testutil::orthogonal_pair_ensemble();
    OptimizerConfig cfg;
    cfg.seed = 8;
    const RunReport report = run(e, cfg, 6);

    REQUIRE(report.final_mi() == Approx(1.0).margin(1e-6));

    // Dropping alone must not cost information...
    const Povm survivors = drop_null_outcomes(report.final_povm);
    const double mi_survivors =
        mutual_information(probability_table(e, survivors));
    REQUIRE(mi_survivors == Approx(1.0).margin(1e-6));

    // ...and neither must the full reduction pipeline.
    const double mi_reduced =
        mutual_information(probability_table(e, report.reduced_povm));
    REQUIRE(mi_reduced == Approx(1.0).margin(1e-6));
    REQUIRE(report.reduced_povm.size() <= report.final_povm.size());
    REQUIRE(completeness_residual(report.reduced_povm) <= 1e-9);
}
