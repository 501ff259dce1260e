// Inflection points of H_alpha for distributions with one, none or two of them.

#include <cstdio>
#include <utility>
#include <vector>

#include "renyi/renyi.hpp"

namespace {

renyi::Distribution blocks(std::initializer_list<std::pair<std::size_t, double>> parts) {
  std::vector<double> p;
  for (const auto& [count, value] : parts) p.insert(p.end(), count, value);
  renyi::TolerancePolicy loose;
  loose.sum_tol = 1e-9;
  return renyi::make_distribution(p, loose);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, renyi::Distribution>> cases = {
      {"(0.4, 0.4, 0.2)", renyi::make_distribution({0.4, 0.4, 0.2})},
      {"198 x 1/400, 2 x 101/400", blocks({{198, 1.0 / 400}, {2, 101.0 / 400}})},
      {"10 x 0.01, 2 x 0.15, 2 x 0.3", blocks({{10, 0.01}, {2, 0.15}, {2, 0.3}})},
      {"10 x 0.08, 1 x 0.2", blocks({{10, 0.08}, {1, 0.2}})},
      {"100 x 1e-4, 100 x 0.0079, 1 x 0.2", blocks({{100, 0.0001}, {100, 0.0079}, {1, 0.2}})},
  };
  for (const auto& [label, d] : cases) {
    const auto roots = renyi::find_inflections(d);
    std::printf("%-36s", label);
    if (roots.empty()) std::printf(" convex on (0.01, 10)");
    for (double r : roots) std::printf(" %.9f", r);
    std::printf("\n");
  }
  return 0;
}
