// Entropy, alpha-derivatives and a perturbation rate for a small distribution.

#include <cstdio>

#include "renyi/renyi.hpp"

int main() {
  const auto d = renyi::make_distribution({0.4, 0.4, 0.2});

  std::printf("Shannon entropy      %.15g\n", renyi::shannon_entropy(d));
  for (double a : {0.5, 2.0, 5.0}) {
    const auto rep = renyi::curvature_report(d, renyi::Alpha(a));
    std::printf("alpha=%-4g H=%.12f  H'=%.12f  H''=%.12f\n", a, rep.h, rep.h1, rep.h2);
  }
  std::printf("H_0 = log(support)   %.15g\n", renyi::entropy_limit_zero(d));
  std::printf("H_inf = -log max p   %.15g\n", renyi::entropy_limit_infinity(d));

  // Move mass between the first two entries and watch the entropy gap.
  const renyi::PerturbationSpec spec{{1.0, -1.0, 0.0}};
  const auto fit = renyi::empirical_rate(d, spec, renyi::Alpha(2.0), 1e-3, 0.1, 4);
  std::printf("perturbation regime %s, rate %s, constant %.6g, fitted exponent %.6f\n",
              renyi::to_string(fit.law.case_id), renyi::to_string(fit.law.rate),
              fit.predicted_constant, fit.fitted_exponent);

  // A two-level distribution on 3 points whose entropy is concave at alpha = 0.
  const auto neg = renyi::build_two_level(2, 3);
  std::printf("two-level (2 of 3): p0=%.12f q0=%.12f H''(0)=%.12f\n", neg.levels.p0, neg.levels.q0,
              renyi::curvature_certificate(neg.levels));
  return 0;
}
