#include "support.hpp"

#include <doctest.h>

using namespace isohom;
using namespace isohom::testing;

TEST_CASE("AbElement arithmetic") {
  const auto g2 = FinAbGroup::homogeneous(2, 3);
  CHECK((g2.basis(0) + g2.basis(0)).is_zero());

  const auto g3 = FinAbGroup::homogeneous(3, 2);
  CHECK(-g3.basis(1) == g3.element({0, 2}));

  const auto g5 = FinAbGroup::homogeneous(5, 2);
  CHECK(3 * g5.element({1, 2}) == g5.element({3, 1}));

  CHECK_THROWS_AS(g2.basis(0) + g3.basis(0), std::invalid_argument);
  CHECK_THROWS_AS(FinAbGroup({2, 1}), std::invalid_argument);
  CHECK(g5.element({-1, 7}) == g5.element({4, 2}));
}

TEST_CASE("element order and enumeration") {
  const FinAbGroup g({2, 4});
  CHECK(g.element({1, 2}).order() == 2);
  CHECK(g.element({0, 1}).order() == 4);
  CHECK(g.zero().order() == 1);
  const auto all = g.elements();
  CHECK(all.size() == 8);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(g.index_of(all[i]) == i);
  CHECK(g.to_string() == "Z/2 + Z/4");
  CHECK(FinAbGroup::homogeneous(2, 3).to_string() == "(Z/2)^3");
}

TEST_CASE("wedge product") {
  const auto g = FinAbGroup::homogeneous(5, 3);
  CHECK(wedge(g.basis(0), g.basis(1)) == Wedge2::basis(g, 0, 1));
  CHECK(wedge(g.basis(1), g.basis(0)) == -Wedge2::basis(g, 0, 1));
  CHECK(Wedge2::basis(g, 1, 2).coeff(2, 1) == 4);
  CHECK_THROWS_AS(wedge(g.basis(0), FinAbGroup::homogeneous(5, 2).basis(0)), std::invalid_argument);

  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_element(g), x2 = random_element(g), y = random_element(g);
    CHECK(wedge(x, x).is_zero());
    CHECK(wedge(x + x2, y) == wedge(x, y) + wedge(x2, y));
    CHECK(wedge(x, y) == -wedge(y, x));
  }
}

TEST_CASE("wedge uses gcd moduli for mixed orders") {
  const FinAbGroup g({2, 4, 6});
  CHECK(Wedge2::moduli(g) == std::vector<std::int64_t>{2, 2, 2});
  CHECK((2 * wedge(g.basis(1), g.basis(2))).is_zero());
}

TEST_CASE("pairwise_wedge_sum on the (Z/2)^4 second system") {
  const auto g = FinAbGroup::homogeneous(2, 4);
  const std::vector<AbElement> psi{g.element({0, 1, 1, 1}), g.element({1, 0, 1, 1}),
                                   g.element({1, 0, 1, 0}), g.element({0, 1, 0, 1})};
  const auto expected = Wedge2::basis(g, 0, 3) + Wedge2::basis(g, 1, 2) + Wedge2::basis(g, 2, 3);
  CHECK(pairwise_wedge_sum(psi, 1) == expected);
}

TEST_CASE("pairwise_wedge_sum on the (Z/2)^3 systems") {
  const auto g = FinAbGroup::homogeneous(2, 3);
  const std::vector<AbElement> phi{g.basis(0), g.basis(1), g.basis(2), g.basis(0)};
  CHECK(pairwise_wedge_sum(phi, 1) == Wedge2::basis(g, 1, 2));
  const std::vector<AbElement> psi{g.element({1, 1, 0}), g.element({1, 0, 1}),
                                   g.element({1, 1, 1}), g.element({1, 1, 0}),
                                   g.element({1, 0, 1})};
  CHECK(pairwise_wedge_sum(psi, 1).is_zero());
}

TEST_CASE("pairwise_wedge_sum with k(k-1)/2 vanishes for odd k") {
  for (std::int64_t k : {3, 5, 7}) {
    const auto g = FinAbGroup::homogeneous(k, 3);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<AbElement> imgs;
      for (int i = 0; i < 4; ++i) imgs.push_back(random_element(g));
      CHECK(pairwise_wedge_sum(imgs, k * (k - 1) / 2).is_zero());
    }
  }
}

TEST_CASE("subgroup_generated") {
  const auto g = FinAbGroup::homogeneous(5, 2);
  const std::vector<AbElement> e1{g.basis(0)};
  const auto sub = subgroup_generated(g, e1);
  CHECK(sub == std::set<AbElement>{g.zero(), g.element({1, 0}), g.element({2, 0}),
                                   g.element({3, 0}), g.element({4, 0})});

  const std::vector<AbElement> x{g.element({3, 4})}, y{g.element({1, 3})};
  CHECK(subgroup_generated(g, x) == subgroup_generated(g, y));

  CHECK(subgroup_generated(g, std::span<const AbElement>{}) == std::set<AbElement>{g.zero()});

  for (int trial = 0; trial < 30; ++trial) {
    const auto h = FinAbGroup({2, 4, 3});
    std::vector<AbElement> gens;
    for (int i = 0; i < uniform(0, 3); ++i) gens.push_back(random_element(h));
    const auto closed = subgroup_generated(h, gens);
    const std::vector<AbElement> all(closed.begin(), closed.end());
    CHECK(subgroup_generated(h, all) == closed);
    for (const auto& a : closed) CHECK(closed.count(-a));
  }
}

TEST_CASE("exterior square order is k^(s(s-1)/2) and is spanned by wedges") {
  for (std::int64_t k : {2, 3, 5})
    for (std::size_t s = 1; s <= 4; ++s) {
      const auto g = FinAbGroup::homogeneous(k, s);
      std::set<Wedge2> decomposable;
      const auto elems = g.elements();
      for (const auto& x : elems)
        for (const auto& y : elems) decomposable.insert(wedge(x, y));
      const auto span =
          span_closure(Wedge2(g), std::vector<Wedge2>(decomposable.begin(), decomposable.end()));
      std::int64_t expected = 1;
      for (std::size_t i = 0; i < s * (s - 1) / 2; ++i) expected *= k;
      CHECK(static_cast<std::int64_t>(span.size()) == expected);
    }
}
