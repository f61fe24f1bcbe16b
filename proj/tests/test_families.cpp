#include "isohom/families.hpp"

#include <doctest.h>

using namespace isohom;

namespace {

/// Riemann-Hurwitz solved by brute force over candidate genera.
std::int64_t genus_by_search(std::int64_t order, std::int64_t n, std::int64_t k) {
  for (std::int64_t g = 0; g < 1000; ++g)
    if (k * (2 * g - 2) == order * (n * (k - 1) - 2 * k)) return g;
  return -1;
}

}  // namespace

TEST_CASE("builtin cases") {
  const auto cases = builtin_cases();
  REQUIRE(cases.size() == 4);
  CHECK(cases[0].label == "Case 1: G = (Z/2)^3");
  CHECK(cases[3].label == "Case 4: G = (Z/5)^2");
  CHECK(cases[3].family_dimension == 0);
  CHECK(cases[2].action.k == 3);
  CHECK(cases[2].action.phi.images[2] == cases[2].group().element({2, 0}));
  CHECK_THROWS_AS(builtin_case(0), std::out_of_range);
  CHECK_THROWS_AS(builtin_case(5), std::out_of_range);
}

TEST_CASE("genus") {
  const std::pair<std::int64_t, std::int64_t> expected[] = {{3, 5}, {5, 5}, {4, 4}, {6, 6}};
  for (const auto& fc : builtin_cases()) {
    const auto inv = surface_invariants(fc.action);
    CHECK(inv.genus_first == expected[fc.id - 1].first);
    CHECK(inv.genus_second == expected[fc.id - 1].second);
    CHECK(inv.chi_top == 4);
    const auto order = fc.group().order();
    CHECK(inv.genus_first == genus_by_search(order, static_cast<std::int64_t>(fc.action.n()), fc.action.k));
    CHECK(inv.genus_second == genus_by_search(order, static_cast<std::int64_t>(fc.action.m()), fc.action.k));
  }
  CHECK_THROWS_AS(genus(2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(genus(1, 3, 2), std::invalid_argument);
}

TEST_CASE("full_homology") {
  const InvariantFactors t{5, 5, 5};
  const auto h = full_homology(t);
  REQUIRE(h.size() == 5);
  CHECK(h[0].to_string() == "Z");
  CHECK(h[1].torsion == t);
  CHECK(h[2] == HomologyGroup{2, t});
  CHECK(h[2].to_string() == "Z^2 ⊕ Z/5 ⊕ Z/5 ⊕ Z/5");
  CHECK(h[3].to_string() == "0");
  CHECK(h[4].to_string() == "Z");
  CHECK_THROWS_AS(full_homology(InvariantFactors({2}, 1)), std::invalid_argument);
}

TEST_CASE("run_case") {
  const auto report = run_case(builtin_case(3));
  CHECK(report.action_free);
  CHECK(report.h1_extension == InvariantFactors{3, 3, 3, 3, 3});
  CHECK(report.h1_oracle == report.h1_extension);
  CHECK(report.graded.size() == 5);
  CHECK(report.invariants.genus_first == 4);

  auto bent = builtin_case(4);
  bent.action.psi.images[0] = bent.group().basis(0);
  bent.action.psi.images[2] = -(bent.action.psi.images[0] + bent.action.psi.images[1]);
  REQUIRE(bent.action.validate().empty());
  CHECK_THROWS_AS(run_case(bent), ValidationError);
  const auto loose = run_case(bent, false);
  CHECK_FALSE(loose.action_free);
  CHECK(loose.graded.empty());
  CHECK(loose.h1_oracle == loose.h1_extension);
}
