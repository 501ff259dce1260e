// renyi: command-line front end for the renyi library.
//
// Exit codes: 0 success, 1 numerical failure (no bracket, series did not
// converge, certificate check failed), 2 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "renyi/io.hpp"
#include "renyi/renyi.hpp"

namespace {

using renyi::io::format;
using json = nlohmann::json;

constexpr int kNumericalFailure = 1;
constexpr int kInvalidInput = 2;

renyi::Distribution load_distribution(const std::string& source) {
  return renyi::make_distribution(renyi::io::read_vector(source, "p"));
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (double v : renyi::io::parse_list(text)) {
    if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw renyi::Error(renyi::ErrorKind::ParseError, "expected positive integers, got " + format(v));
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_entropy(const std::string& dist, double alpha) {
  const auto d = load_distribution(dist);
  std::cout << format(renyi::renyi_entropy(d, renyi::Alpha(alpha))) << '\n';
  return 0;
}

int cmd_curve(const std::string& dist, double lo, double hi, std::size_t points) {
  const auto d = load_distribution(dist);
  if (!(lo > 0.0) || !(lo < hi) || points < 2) {
    throw renyi::Error(renyi::ErrorKind::InvalidRange, "need 0 < alpha-min < alpha-max and points >= 2");
  }
  const bool full = d.full_support();
  if (!full) {
    std::cerr << "warning: distribution has zero entries; h2 column left empty\n";
  }
  const renyi::detail::LogSupport s(d);
  std::cout << "alpha,h,h1,h2\n";
  for (double a : renyi::log_grid(lo, hi, points)) {
    const renyi::Alpha alpha(a);
    const double at = alpha.is_one() ? 1.0 : a;
    std::cout << format(a) << ',' << format(renyi::renyi_entropy(d, alpha)) << ','
              << format(renyi::detail::first_derivative(s, at)) << ',';
    if (full) std::cout << format(renyi::detail::second_derivative(s, at));
    std::cout << '\n';
  }
  return 0;
}

int cmd_inflections(const std::string& dist, double lo, double hi, std::size_t grid) {
  const auto d = load_distribution(dist);
  const auto roots = renyi::find_inflections(d, {lo, hi, grid});
  print_json(json(roots));
  return 0;
}

int cmd_family(double p1, double p2, double p3_min, double p3_max, std::size_t steps,
               const std::string& alphas_text) {
  const double rest = 1.0 - p1 - p2;
  if (!(p1 > 0.0) || !(p2 > 0.0) || !(rest > 0.0)) {
    throw renyi::Error(renyi::ErrorKind::InvalidRange, "need p1, p2 > 0 and p1 + p2 < 1");
  }
  if (!(p3_min > 0.0) || !(p3_max < rest) || !(p3_min <= p3_max) || steps < 1 ||
      (steps == 1 && p3_min != p3_max)) {
    throw renyi::Error(renyi::ErrorKind::InvalidRange,
                       "p3 grid must lie strictly inside (0, " + format(rest) + ")");
  }
  const std::vector<double> alphas = renyi::io::parse_list(alphas_text);
  std::cout << "p3,alpha,h\n";
  for (std::size_t i = 0; i < steps; ++i) {
    const double p3 =
        steps == 1 ? p3_min : p3_min + (p3_max - p3_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
    renyi::TolerancePolicy loose;
    loose.sum_tol = 1e-9;
    const auto d = renyi::make_distribution({p1, p2, p3, 1.0 - p1 - p2 - p3}, loose);
    for (double a : alphas) {
      std::cout << format(p3) << ',' << format(a) << ',' << format(renyi::renyi_entropy(d, renyi::Alpha(a)))
                << '\n';
    }
  }
  return 0;
}

int cmd_perturb(const std::string& dist, const std::string& coeffs, double alpha, double eps_start,
                double eps_factor, std::size_t steps, const std::string& out) {
  const auto d = load_distribution(dist);
  const renyi::PerturbationSpec spec{renyi::io::read_vector(coeffs, "c")};
  const auto rep = renyi::empirical_rate(d, spec, renyi::Alpha(alpha), eps_start, eps_factor, steps);
  if (out == "csv") {
    std::cout << "eps,delta,ratio\n";
    for (std::size_t j = 0; j < rep.eps_grid.size(); ++j) {
      std::cout << format(rep.eps_grid[j]) << ',' << format(rep.deltas[j]) << ',' << format(rep.ratios[j])
                << '\n';
    }
    return 0;
  }
  json rows = json::array();
  for (std::size_t j = 0; j < rep.eps_grid.size(); ++j) {
    rows.push_back({{"eps", rep.eps_grid[j]}, {"delta", rep.deltas[j]}, {"ratio", rep.ratios[j]}});
  }
  print_json({{"case", renyi::to_string(rep.law.case_id)},
              {"rate", renyi::to_string(rep.law.rate)},
              {"exponent", rep.law.exponent},
              {"predicted_constant", rep.predicted_constant},
              {"fitted_exponent", rep.fitted_exponent},
              {"terminal_ratio", rep.terminal_ratio},
              {"warnings", rep.law.warnings},
              {"rows", rows}});
  return 0;
}

void write_column(std::ostream& os, const renyi::Distribution& d) {
  os << "p\n";
  for (double p : d.probs()) os << format(p) << '\n';
}

int cmd_construct_negative(std::size_t k, std::size_t n, const std::string& out, const std::string& dist_out) {
  const auto t = renyi::build_two_level(k, n);
  if (!dist_out.empty()) {
    std::ofstream f(dist_out);
    if (!f) throw renyi::Error(renyi::ErrorKind::ParseError, "cannot write " + dist_out);
    write_column(f, t.expanded);
  }
  if (out == "csv") {
    write_column(std::cout, t.expanded);
    return 0;
  }
  print_json({{"k", k},
              {"n", n},
              {"x", t.point.x},
              {"y", t.point.y},
              {"r", t.point.r},
              {"p0", t.levels.p0},
              {"q0", t.levels.q0},
              {"certificate", renyi::curvature_certificate(t.levels)},
              {"second_derivative_at_zero", renyi::second_derivative_at_zero(t.expanded)},
              {"residuals", {{"normalization", t.sum_residual}, {"log_equation", t.log_residual}}}});
  return 0;
}

int cmd_binpoi(double lambda, double alpha, const std::string& ns) {
  const auto sizes = parse_sizes(ns);
  const auto rows = renyi::convergence_table(lambda, renyi::Alpha(alpha), sizes);
  std::cout << "n,h_binomial,h_poisson,diff,tail_bound\n";
  for (const auto& r : rows) {
    std::cout << r.n << ',' << format(r.h_binomial) << ',' << format(r.h_poisson) << ',' << format(r.difference)
              << ',' << format(r.tail_bound) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renyi entropy: values, alpha-derivatives, inflection points, perturbation rates"};
  app.require_subcommand(1);

  std::string dist, coeffs, out = "json", dist_out, ns = "100,1000,10000";
  std::string alphas = "0.5,1,2,5";
  double alpha = 1.0, lo = 0.01, hi = 10.0, lambda = 2.0;
  double p1 = 0.05, p2 = 0.05, p3_min = 0.01, p3_max = 0.89;
  double eps_start = 1e-3, eps_factor = 0.1;
  std::size_t points = 500, grid = 2000, p3_steps = 89, steps = 4, k = 0, n = 0;

  auto* entropy = app.add_subcommand("entropy", "H_alpha of a distribution");
  entropy->add_option("--dist", dist, "comma list (KxV allowed) or CSV file")->required();
  entropy->add_option("--alpha", alpha, "order alpha > 0")->required();

  auto* curve = app.add_subcommand("curve", "CSV of alpha, H, H', H'' on a log grid");
  curve->add_option("--dist", dist)->required();
  curve->add_option("--alpha-min", lo)->capture_default_str();
  curve->add_option("--alpha-max", hi)->capture_default_str();
  curve->add_option("--points", points)->capture_default_str();

  auto* infl = app.add_subcommand("inflections", "JSON array of sign changes of H''");
  infl->add_option("--dist", dist)->required();
  infl->add_option("--alpha-min", lo)->capture_default_str();
  infl->add_option("--alpha-max", hi)->capture_default_str();
  infl->add_option("--grid", grid, "scan grid points")->capture_default_str();

  auto* family = app.add_subcommand("family", "H_alpha over (p1, p2, p3, 1-p1-p2-p3)");
  family->add_option("--p1", p1)->capture_default_str();
  family->add_option("--p2", p2)->capture_default_str();
  family->add_option("--p3-min", p3_min)->capture_default_str();
  family->add_option("--p3-max", p3_max)->capture_default_str();
  family->add_option("--p3-steps", p3_steps)->capture_default_str();
  family->add_option("--alphas", alphas)->capture_default_str();

  auto* perturb = app.add_subcommand("perturb", "rate law of H(p) - H(p + eps c)");
  perturb->add_option("--dist", dist)->required();
  perturb->add_option("--coeffs", coeffs, "coefficient vector c")->required();
  perturb->add_option("--alpha", alpha)->required();
  perturb->add_option("--eps-start", eps_start)->capture_default_str();
  perturb->add_option("--eps-factor", eps_factor)->capture_default_str();
  perturb->add_option("--steps", steps)->capture_default_str();
  perturb->add_option("--out", out)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* neg = app.add_subcommand("construct-negative", "two-level distribution with H''(0) < 0");
  neg->add_option("--k", k, "number of low entries")->required();
  neg->add_option("--n", n, "alphabet size")->required();
  neg->add_option("--out", out)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  neg->add_option("--dist-out", dist_out, "also write the expanded distribution to this CSV file");

  auto* binpoi = app.add_subcommand("binpoi", "H_alpha(Binomial(n, lambda/n)) vs H_alpha(Poisson(lambda))");
  binpoi->add_option("--lambda", lambda)->required();
  binpoi->add_option("--alpha", alpha)->required();
  binpoi->add_option("--n", ns)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalidInput;
  }

  try {
    if (*entropy) return cmd_entropy(dist, alpha);
    if (*curve) return cmd_curve(dist, lo, hi, points);
    if (*infl) return cmd_inflections(dist, lo, hi, grid);
    if (*family) return cmd_family(p1, p2, p3_min, p3_max, p3_steps, alphas);
    if (*perturb) return cmd_perturb(dist, coeffs, alpha, eps_start, eps_factor, steps, out);
    if (*neg) return cmd_construct_negative(k, n, out, dist_out);
    if (*binpoi) return cmd_binpoi(lambda, alpha, ns);
  } catch (const renyi::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return renyi::is_numerical_failure(e.kind()) ? kNumericalFailure : kInvalidInput;
  }
  return kInvalidInput;
}
