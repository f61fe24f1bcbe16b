#include "isohom/families.hpp"
#include "isohom/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace isohom;
using namespace isohom::testing;

namespace {

SchreierData schreier_for(const ProductAction& act) {
  return SchreierData(CosetTable(act.presentation(), act.hom()));
}

ProductAction trivial_action(std::int64_t k, std::size_t n, std::size_t m) {
  const FinAbGroup g;
  return ProductAction{k, GeneratingSystem(g, std::vector<AbElement>(n, g.zero())),
                       GeneratingSystem(g, std::vector<AbElement>(m, g.zero()))};
}

}  // namespace

TEST_CASE("coset_table") {
  const auto c1 = builtin_case(1).action;
  CHECK(coset_table(c1.presentation(), c1.hom()).cosets() == 8);
  const auto c4 = builtin_case(4).action;
  const auto t4 = coset_table(c4.presentation(), c4.hom());
  CHECK(t4.cosets() == 25);
  for (std::size_t x = 0; x < t4.generators(); ++x) {
    std::set<std::size_t> targets;
    for (std::size_t c = 0; c < t4.cosets(); ++c) {
      targets.insert(t4.act(c, x));
      CHECK(t4.act_inverse(t4.act(c, x), x) == c);
    }
    CHECK(targets.size() == 25);
  }

  const auto triv = trivial_action(3, 3, 3);
  CHECK(coset_table(triv.presentation(), triv.hom()).cosets() == 1);

  // image inside <e1> only: not surjective onto (Z/3)^2
  const auto g = FinAbGroup::homogeneous(3, 2);
  const GeneratingSystem small(g, {g.basis(0), g.basis(0), g.basis(0)});
  const ProductAction bad{3, small, small};
  CHECK_THROWS_AS(coset_table(bad.presentation(), bad.hom()), std::invalid_argument);
}

TEST_CASE("schreier_transversal") {
  const auto triv = trivial_action(2, 3, 3);
  const auto dt = schreier_for(triv);
  CHECK(dt.transversal(0).empty());
  CHECK(dt.nontrivial_count() == 6);

  const auto c3 = builtin_case(3).action;
  const auto d3 = schreier_for(c3);
  const auto e1 = c3.group().index_of(c3.group().basis(0));
  CHECK(d3.transversal(e1) == Word{a(1)});

  const auto c1 = builtin_case(1).action;
  const auto d1 = schreier_for(c1);
  CHECK(d1.tree_edge_count() == 7);
  CHECK(d1.nontrivial_count() == 81);

  for (int id = 1; id <= 4; ++id) {
    const auto act = builtin_case(id).action;
    const auto d = schreier_for(act);
    const auto hom = act.hom();
    for (std::size_t c = 0; c < d.table().cosets(); ++c) {
      const auto& t = d.transversal(c);
      CHECK(act.group().index_of(hom(t)) == c);
      // prefix closed
      if (!t.empty()) {
        Word prefix(std::vector<Letter>(t.letters().begin(), t.letters().end() - 1));
        CHECK(d.transversal(act.group().index_of(hom(prefix))) == prefix);
      }
    }
    const auto ng = act.n() + act.m();
    CHECK(d.nontrivial_count() == d.table().cosets() * ng - (d.table().cosets() - 1));
  }
}

TEST_CASE("rewrite_relator") {
  const auto c1 = builtin_case(1).action;
  const auto d1 = schreier_for(c1);
  const auto e1 = c1.group().index_of(c1.group().basis(0));

  const auto row = rewrite_relator(Word{a(1), a(1)}, Word{}, d1);
  std::vector<std::int64_t> expected(d1.nontrivial_count(), 0);
  expected[d1.column(e1, 0)] = 1;
  CHECK(d1.column(0, 0) == SchreierData::kTreeEdge);
  CHECK(row == expected);

  const auto comm = rewrite_relator(commutator(Word{a(1)}, Word{b(1)}), Word{}, d1);
  std::int64_t weight = 0;
  for (auto x : comm) weight += x < 0 ? -x : x;
  CHECK(weight <= 4);
}

TEST_CASE("rewriting reproduces the conjugated relator") {
  for (int id = 1; id <= 4; ++id) {
    const auto act = builtin_case(id).action;
    const auto d = schreier_for(act);
    const auto relators = act.presentation().relators();
    for (int trial = 0; trial < 25; ++trial) {
      const auto c = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(d.table().cosets()) - 1));
      const auto& r = relators[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(relators.size()) - 1))];
      const Word target = d.transversal(c) * r * d.transversal(c).inverse();
      Word expanded;
      for (const auto& s : d.rewrite(target)) {
        const auto gen = d.generator_word(s.column);
        expanded *= s.exponent > 0 ? gen : gen.inverse();
      }
      CHECK(free_reduce(expanded) == free_reduce(target));
    }
  }
}

TEST_CASE("kernel_h1 on the builtin cases") {
  CHECK(kernel_h1(builtin_case(1).action) == InvariantFactors{2, 2, 2, 2, 4, 4});
  CHECK(kernel_h1(builtin_case(2).action) == InvariantFactors{4, 4, 4, 4});
  CHECK(kernel_h1(builtin_case(3).action) == InvariantFactors{3, 3, 3, 3, 3});
  CHECK(kernel_h1(builtin_case(4).action) == InvariantFactors{5, 5, 5});
}

TEST_CASE("kernel_h1 with trivial G is F^ab") {
  for (auto [k, n, m] : {std::tuple{2, 3, 4}, std::tuple{3, 3, 3}, std::tuple{5, 4, 3}}) {
    const auto triv = trivial_action(k, n, m);
    const auto h1 = kernel_h1(triv.presentation(), triv.hom());
    CHECK(h1.free_rank == 0);
    CHECK(h1.factors == std::vector<BigInt>(n + m - 2, k));
  }
}

TEST_CASE("kernel_h1 does not depend on the BFS generator order") {
  for (int id = 1; id <= 4; ++id) {
    const auto act = builtin_case(id).action;
    std::vector<std::size_t> order(act.n() + act.m());
    std::iota(order.rbegin(), order.rend(), 0);
    CHECK(kernel_h1(act.presentation(), act.hom(), order) == kernel_h1(act));
  }
}

TEST_CASE("kernel_h1 rejects relators that do not map to zero") {
  const auto g = FinAbGroup::homogeneous(3, 2);
  const ProductAction bad{2, GeneratingSystem(g, {g.basis(0), g.basis(1), -(g.basis(0) + g.basis(1))}),
                          GeneratingSystem(g, {g.basis(0), g.basis(1), -(g.basis(0) + g.basis(1))})};
  CHECK_THROWS_AS(kernel_h1(bad.presentation(), bad.hom()), std::invalid_argument);
  CHECK_THROWS_AS(kernel_h1(bad), ValidationError);
}
