#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "metabandit/bounds.hpp"
#include "metabandit/regularizers.hpp"
#include "oracles.hpp"

using namespace metabandit;

TEST_CASE("lambert w") {
  CHECK(lambert_w(0.0) == doctest::Approx(0.0));
  CHECK(lambert_w(1.0) == doctest::Approx(0.5671432904097838).epsilon(1e-11));
  CHECK(lambert_w(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-11));
  // Defining identity w e^w = z across scales, vs the bisection oracle.
  for (double z : {0.01, 0.3, 2.0, 50.0, 1e4, 1e8}) {
    const double w = lambert_w(z);
    CHECK(w * std::exp(w) == doctest::Approx(z).epsilon(1e-10));
    CHECK(w == doctest::Approx(oracles::lambert_direct(z)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(lambert_w(-0.1), std::invalid_argument);
}

TEST_CASE("histogram entropy normalizes and extends through zeros") {
  CHECK(histogram_entropy({1.0, 1.0}, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(histogram_entropy({3.0, 1.0}, 1.0) ==
        doctest::Approx(oracles::shannon_entropy({0.75, 0.25})).epsilon(1e-12));
  // Zeros contribute nothing: a point mass has zero entropy at every beta.
  CHECK(histogram_entropy({5.0, 0.0, 0.0}, 0.5) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(histogram_entropy({5.0, 0.0, 0.0}, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
  // Uniform over d attains the worst case (d^{1-beta}-1)/(1-beta).
  CHECK(histogram_entropy({1.0, 1.0, 1.0, 1.0}, 0.5) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(histogram_entropy({0.0, 0.0}, 0.5), std::invalid_argument);
}

TEST_CASE("iota condition threshold, hand-computed") {
  // d=4, eps=0.1, delta=0.5: arg = 160, threshold = 75*160*log(160).
  const double threshold = 60902.085782805916;
  CHECK_FALSE(iota_condition(4, threshold - 1.0, 0.1, 0.5));
  CHECK(iota_condition(4, threshold + 1.0, 0.1, 0.5));

  BoundSpec spec;
  spec.which = "iota";
  spec.params = {{"d", 4}, {"m", threshold + 1.0}, {"eps", 0.1}, {"delta", 0.5}};
  CHECK(eval_bound(spec) == 1.0);
  spec.params["m"] = threshold - 1.0;
  CHECK(eval_bound(spec) == 0.0);
}

TEST_CASE("conditional entropy surrogate switches at the threshold") {
  // Below the threshold: the worst case for that beta.
  CHECK(h_beta_conditional(0.2, 0.5, 4, 100, 0.1, 0.5) ==
        doctest::Approx(2.0).epsilon(1e-12));
  // Above it: H_beta + 56/(m d).
  CHECK(h_beta_conditional(0.2, 0.5, 4, 1e6, 0.1, 0.5) ==
        doctest::Approx(0.2 + 56.0 / 4e6).epsilon(1e-12));
}

TEST_CASE("identification probability, hand-computed") {
  // d=4, m=12000, eps=0.1, delta=0.5: exp(-3*0.1*0.25*12000/112).
  CHECK(identification_kappa(4, 12000, 0.1, 0.5) ==
        doctest::Approx(0.0003236932384041889).epsilon(1e-12));
  BoundSpec spec;
  spec.which = "misid-bound";
  spec.params = {{"d", 4}, {"m", 12000}, {"eps", 0.1}, {"delta", 0.5}};
  CHECK(eval_bound(spec) == doctest::Approx(4.0 * 0.0003236932384041889).epsilon(1e-12));
}

TEST_CASE("asymptotic scan dominates no single beta") {
  BoundSpec spec;
  spec.which = "mab-asymptotic";
  spec.params = {{"d", 8}, {"m", 400}};
  spec.histogram = {10.0, 5.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  const double scanned = eval_bound(spec);
  CHECK(std::isfinite(scanned));
  CHECK(scanned > 0.0);
  // The scan is a minimum, so it is at most the value at beta = 1/2 and 1.
  for (double beta : {0.5, 1.0}) {
    const double h = histogram_entropy(spec.histogram, beta);
    CHECK(scanned <= 2.0 * std::sqrt(h * std::pow(8.0, beta) * 400.0 / beta) + 1e-9);
  }

  // A point-mass histogram drives the bound to (nearly) zero.
  spec.histogram = {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  CHECK(eval_bound(spec) < 1e-6);
}

TEST_CASE("conditional bound reduces to the worst case for small m") {
  BoundSpec spec;
  spec.which = "mab-conditional";
  spec.params = {{"d", 4}, {"m", 100}, {"eps", 0.1}, {"delta", 0.5}};
  spec.histogram = {1.0, 0.0, 0.0, 0.0};
  const double small_m = eval_bound(spec);
  // eps*m plus the minimum over beta of the worst-case term.
  double expect = 1e300;
  for (int i = 1; i <= 1000; ++i) {
    const double beta = i * 1e-3;
    const double h = mab_divergence_radius_sq(beta, 4);
    expect = std::min(expect, 2.0 * std::sqrt(h * std::pow(4.0, beta) * 100.0 / beta));
  }
  CHECK(small_m == doctest::Approx(0.1 * 100.0 + expect).epsilon(1e-9));

  // With the condition satisfied the concentrated histogram helps.
  spec.params["m"] = 1e6;
  BoundSpec worst = spec;
  worst.histogram = {1.0, 1.0, 1.0, 1.0};
  CHECK(eval_bound(spec) < eval_bound(worst));
}

TEST_CASE("remaining closed forms") {
  BoundSpec spec;
  spec.which = "lambert-term";
  spec.params = {{"d", 4}, {"delta", 0.5}, {"m", 75.0}};
  // 75*4/0.25 * W(1) = 1200 W(1).
  CHECK(eval_bound(spec) == doctest::Approx(1200.0 * 0.5671432904097838).epsilon(1e-10));

  spec.which = "robust-entropy";
  spec.params = {{"C", 2.0}, {"s", 3.0}, {"d", 16}, {"beta", 0.5}, {"T", 256}, {"p", 0.5}};
  // 2 (3 + 4 / 256^{0.25}) = 2 (3 + 1) = 8.
  CHECK(eval_bound(spec) == doctest::Approx(8.0).epsilon(1e-12));

  spec.which = "single-task-mab";
  spec.params = {{"d", 4}, {"m", 100}};
  // 2 sqrt(D^2 d^{1/2} m / (1/2)) with D^2 = 2: 2 sqrt(800).
  CHECK(eval_bound(spec) == doctest::Approx(2.0 * std::sqrt(800.0)).epsilon(1e-12));

  spec.which = "single-task-blo";
  spec.params = {{"d", 3}, {"m", 100}, {"Dsq", 0.5}};
  CHECK(eval_bound(spec) == doctest::Approx(2.0 * std::sqrt(32.0 * 0.5 * 9.0 * 100.0)).epsilon(1e-12));

  // r is the norm of the mean of unit-norm estimates: r = 1 (all equal)
  // gives zero similarity, r = 0 (antipodal) the maximum log(9/5).
  spec.which = "sphere-similarity";
  spec.params = {{"eps", 0.5}, {"r", 1.0}};
  CHECK(eval_bound(spec) == doctest::Approx(0.0).epsilon(1e-12));
  spec.params["r"] = 0.0;
  CHECK(eval_bound(spec) == doctest::Approx(std::log(9.0 / 5.0)).epsilon(1e-12));

  spec.which = "no-such-bound";
  CHECK_THROWS_AS(eval_bound(spec), std::invalid_argument);
  spec.which = "lambert-term";
  spec.params.erase("delta");
  CHECK_THROWS_AS(eval_bound(spec), std::invalid_argument);
}
