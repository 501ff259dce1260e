#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "renyi/discrete_models.hpp"
#include "renyi/entropy.hpp"

using renyi::Alpha;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Binomial pmf by the product recurrence in long double, independent of the
// saddle-point log-pmf used by the library.
std::vector<double> binomial_pmf(std::size_t n, double p) {
  std::vector<long double> v(n + 1);
  const long double q = 1.0L - p;
  v[0] = std::pow(q, static_cast<long double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    v[k + 1] = v[k] * static_cast<long double>(n - k) / static_cast<long double>(k + 1) * p / q;
  }
  long double total = 0.0L;
  for (long double x : v) total += x;
  std::vector<double> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = static_cast<double>(v[k] / total);
  return out;
}

}  // namespace

TEST_CASE("binomial entropy values") {
  for (double a : {0.3, 1.0, 2.0, 9.0}) {
    CHECK_THAT(renyi::binomial_renyi({1, 0.5}, Alpha(a)), WithinRel(std::log(2.0), 1e-14));
    CHECK(renyi::binomial_renyi({5, 0.0}, Alpha(a)) == 0.0);
    CHECK(renyi::binomial_renyi({5, 1.0}, Alpha(a)) == 0.0);
  }
  CHECK_THAT(renyi::binomial_renyi({100, 0.02}, Alpha(2.0)), WithinAbs(1.5685458749565827, 1e-10));
  CHECK_THAT(renyi::binomial_renyi({1000, 0.3}, Alpha(0.5)), WithinAbs(4.2852931847296744, 1e-10));
  CHECK_THROWS_AS(renyi::binomial_renyi({5, 1.5}, Alpha(2.0)), renyi::Error);
}

TEST_CASE("binomial Shannon entropy equals that of the materialized pmf") {
  for (std::size_t n : {1u, 2u, 10u, 57u, 300u, 1000u}) {
    for (double p : {0.01, 0.3, 0.5, 0.93}) {
      const auto pmf = binomial_pmf(n, p);
      renyi::TolerancePolicy loose;
      loose.sum_tol = 1e-9;
      const double direct = renyi::shannon_entropy(renyi::make_distribution(pmf, loose));
      INFO("n=" << n << " p=" << p);
      CHECK_THAT(renyi::binomial_renyi({n, p}, Alpha(1.0)), WithinAbs(direct, 1e-12));
      CHECK_THAT(renyi::binomial_renyi({n, p}, Alpha(3.0)),
                 WithinAbs(renyi::renyi_entropy(renyi::make_distribution(pmf, loose), Alpha(3.0)), 1e-12));
    }
  }
}

TEST_CASE("log pmfs") {
  // exact small cases
  CHECK_THAT(renyi::binomial_log_pmf(2, 4, 0.5, 0.5), WithinRel(std::log(6.0 / 16.0), 1e-14));
  CHECK_THAT(renyi::binomial_log_pmf(0, 4, 0.25, 0.75), WithinRel(4.0 * std::log(0.75), 1e-14));
  CHECK_THAT(renyi::binomial_log_pmf(4, 4, 0.25, 0.75), WithinRel(4.0 * std::log(0.25), 1e-14));
  CHECK_THAT(renyi::poisson_log_pmf(0, 2.0), WithinRel(-2.0, 1e-15));
  CHECK_THAT(renyi::poisson_log_pmf(3, 2.0), WithinRel(-2.0 + 3.0 * std::log(2.0) - std::log(6.0), 1e-14));
  // large arguments stay finite and accurate
  const double big = renyi::poisson_log_pmf(1000000, 1000000.0);
  CHECK_THAT(big, WithinRel(-0.5 * std::log(2.0 * M_PI * 1e6) - 1.0 / 12e6, 1e-10));
  const double lg = std::lgamma(1e6 + 1.0);
  CHECK_THAT(renyi::binomial_log_pmf(500000, 1000000, 0.5, 0.5),
             WithinRel(lg - 2.0 * std::lgamma(500001.0) + 1e6 * std::log(0.5), 1e-9));
}

TEST_CASE("binomial terms are dominated by lambda^k / k!") {
  for (double lambda : {0.5, 2.0, 5.0}) {
    for (std::size_t n : {10u, 100u, 1000u}) {
      const double p = lambda / static_cast<double>(n);
      for (std::size_t k = 0; k <= std::min<std::size_t>(n, 60); ++k) {
        const double bound = static_cast<double>(k) * std::log(lambda) - std::lgamma(static_cast<double>(k) + 1.0);
        CHECK(renyi::binomial_log_pmf(k, n, p, 1.0 - p) <= bound + 1e-12);
      }
    }
  }
}

TEST_CASE("Poisson entropy against independent series") {
  for (double lambda : {0.5, 2.0, 7.0}) {
    // alpha = 2: 2 lambda - log I_0(2 lambda)
    const double bessel = 2.0 * lambda - std::log(std::cyl_bessel_i(0.0, 2.0 * lambda));
    CHECK_THAT(renyi::poisson_renyi({lambda}, Alpha(2.0)).value, WithinAbs(bessel, 1e-10));
    // alpha = 1: lambda - lambda log lambda + sum pi_k log k!
    long double acc = 0.0L, term = std::exp(-lambda);
    for (int k = 1; k < 200; ++k) {
      term *= lambda / k;
      acc += term * std::lgamma(k + 1.0L);
    }
    const double regrouped = lambda - lambda * std::log(lambda) + static_cast<double>(acc);
    CHECK_THAT(renyi::poisson_renyi({lambda}, Alpha(1.0)).value, WithinAbs(regrouped, 1e-10));
  }
  CHECK_THAT(renyi::poisson_renyi({2.0}, Alpha(0.5)).value, WithinAbs(1.8686816638878784, 1e-12));
  CHECK_THAT(renyi::poisson_renyi({2.0}, Alpha(1.0)).value, WithinAbs(1.7048826439329838, 1e-12));
  CHECK_THAT(renyi::poisson_renyi({2.0}, Alpha(2.0)).value, WithinAbs(1.5750272044845407, 1e-12));
  CHECK_THAT(renyi::poisson_renyi({2.0}, Alpha(5.0)).value, WithinAbs(1.4402191591060795, 1e-12));
}

TEST_CASE("Poisson degenerate limit") {
  for (double a : {1.0, 3.0}) CHECK(renyi::poisson_renyi({1e-8}, Alpha(a)).value < 1e-6);
  // below alpha = 1 the entropy vanishes only like lambda^alpha / (1 - alpha)
  const double lambda = 1e-8, root = std::sqrt(lambda);
  CHECK_THAT(renyi::poisson_renyi({lambda}, Alpha(0.5)).value,
             WithinAbs(2.0 * std::log1p(root + lambda / std::sqrt(2.0) + lambda * root / std::sqrt(6.0)) - lambda,
                       1e-15));
  CHECK_THROWS_AS(renyi::poisson_renyi({0.0}, Alpha(1.0)), renyi::Error);
}

TEST_CASE("truncation is sound") {
  for (double lambda : {0.5, 2.0, 30.0}) {
    for (double a : {0.3, 1.0, 2.0, 5.0}) {
      const auto base = renyi::poisson_renyi({lambda}, Alpha(a));
      const auto tight = renyi::poisson_renyi({lambda}, Alpha(a), {1e-17, 1000000});
      INFO("lambda=" << lambda << " alpha=" << a);
      CHECK(base.tail_bound <= 1e-14 * base.value);
      // the bound covers truncation; a few ulps of summation rounding come on top
      CHECK(std::fabs(base.value - tight.value) <= base.tail_bound + 8.0 * 2.2e-16 * base.value);
    }
  }
  renyi::TruncationPolicy tiny{1e-14, 3};
  CHECK_THROWS_MATCHES(renyi::poisson_renyi({2.0}, Alpha(1.0), tiny), renyi::Error,
                       Catch::Matchers::Predicate<renyi::Error>(
                           [](const renyi::Error& e) { return e.kind() == renyi::ErrorKind::TruncationFailure; }));
}

TEST_CASE("convergence table for lambda = 2") {
  const std::vector<std::size_t> ns = {100, 1000, 10000};
  const double expected[4][3] = {{-0.0090789354733, -0.000897074809025, -8.960113097e-5},
                                 {-0.00703528825278, -0.0006928205825, -6.91765466597e-5},
                                 {-0.00648132952796, -0.00063650316405, -6.35353681369e-5},
                                 {-0.00628426272867, -0.000617828543265, -6.16783745102e-5}};
  const double alphas[] = {0.5, 1.0, 2.0, 5.0};
  for (int i = 0; i < 4; ++i) {
    const auto rows = renyi::convergence_table(2.0, Alpha(alphas[i]), ns);
    REQUIRE(rows.size() == 3);
    for (int j = 0; j < 3; ++j) {
      INFO("alpha=" << alphas[i] << " n=" << ns[j]);
      CHECK(rows[j].n == ns[j]);
      CHECK_THAT(rows[j].difference, WithinRel(expected[i][j], 1e-8));
      CHECK(rows[j].difference == rows[j].h_binomial - rows[j].h_poisson);
    }
  }
  CHECK_THROWS_AS(renyi::convergence_table(5.0, Alpha(1.0), std::vector<std::size_t>{3}), renyi::Error);
}

TEST_CASE("the binomial gap shrinks monotonically") {
  const std::vector<std::size_t> ns = {100, 1000, 10000};
  for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
    for (double a : {0.5, 1.0, 2.0, 5.0}) {
      const auto rows = renyi::convergence_table(lambda, Alpha(a), ns);
      INFO("lambda=" << lambda << " alpha=" << a);
      CHECK(std::fabs(rows[1].difference) < std::fabs(rows[0].difference));
      CHECK(std::fabs(rows[2].difference) < std::fabs(rows[1].difference));
      if (a == 1.0) {
        for (const auto& r : rows) CHECK(r.difference < 0.0);
      }
    }
  }
}
