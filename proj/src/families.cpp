#include "isohom/families.hpp"

#include "isohom/extension.hpp"
#include "isohom/oracle.hpp"

#include <sstream>

namespace isohom {

namespace {

using Coeffs = std::vector<std::vector<std::int64_t>>;

FamilyCase make_case(int id, std::int64_t k, std::size_t rank, const Coeffs& phi,
                     const Coeffs& psi, int dimension) {
  const auto g = FinAbGroup::homogeneous(k, rank);
  FamilyCase fc;
  fc.id = id;
  fc.label = "Case " + std::to_string(id) + ": G = " + g.to_string();
  fc.action = ProductAction{k, GeneratingSystem::from_coeffs(g, phi),
                            GeneratingSystem::from_coeffs(g, psi)};
  fc.family_dimension = dimension;
  return fc;
}

}  // namespace

FamilyCase builtin_case(int id) {
  switch (id) {
    case 1:
      return make_case(1, 2, 3,
                       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 1, 1}},
                       {{1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}},
                       5);
    case 2:
      return make_case(2, 2, 4,
                       {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}},
                       {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}},
                       4);
    case 3:
      return make_case(3, 3, 2,
                       {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                       {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}},
                       2);
    case 4:
      return make_case(4, 5, 2,
                       {{1, 0}, {0, 1}, {-1, -1}},
                       {{1, 2}, {3, 4}, {1, 4}},
                       0);
    default:
      throw std::out_of_range("builtin_case: unknown case id " + std::to_string(id) +
                              " (expected 1..4)");
  }
}

std::vector<FamilyCase> builtin_cases() {
  return {builtin_case(1), builtin_case(2), builtin_case(3), builtin_case(4)};
}

std::int64_t genus(std::int64_t group_order, std::int64_t branch_points, std::int64_t k) {
  if (group_order < 1 || branch_points < 0 || k < 2)
    throw std::invalid_argument("genus: malformed signature");
  // 2g - 2 = |G| (n (k - 1) - 2k) / k
  const std::int64_t numerator = group_order * (branch_points * (k - 1) - 2 * k);
  if (numerator % k != 0)
    throw std::invalid_argument("genus: Riemann-Hurwitz gives a non-integral Euler characteristic");
  const std::int64_t twice_g_minus_2 = numerator / k;
  if (twice_g_minus_2 % 2 != 0)
    throw std::invalid_argument("genus: Riemann-Hurwitz gives a non-integral genus");
  const std::int64_t g = twice_g_minus_2 / 2 + 1;
  if (g < 2) throw std::invalid_argument("genus: curve of genus " + std::to_string(g) + " < 2");
  return g;
}

SurfaceInvariants surface_invariants(const ProductAction& action) {
  SurfaceInvariants out;
  const std::int64_t order = action.group().order();
  out.genus_first = genus(order, static_cast<std::int64_t>(action.n()), action.k);
  out.genus_second = genus(order, static_cast<std::int64_t>(action.m()), action.k);
  const std::int64_t product = (2 - 2 * out.genus_first) * (2 - 2 * out.genus_second);
  if (product % order != 0)
    throw std::invalid_argument("surface_invariants: chi(C1) chi(C2) not divisible by |G|");
  out.chi_top = product / order;
  return out;
}

std::string HomologyGroup::to_string() const {
  InvariantFactors f = torsion;
  f.free_rank += free_rank;
  return f.to_string();
}

std::vector<HomologyGroup> full_homology(const InvariantFactors& h1) {
  if (!h1.is_finite())
    throw std::invalid_argument("full_homology: H_1 has a free part, so q != 0");
  return {
      HomologyGroup{1, {}},
      HomologyGroup{0, h1},
      HomologyGroup{2, h1},
      HomologyGroup{0, {}},
      HomologyGroup{1, {}},
  };
}

MethodMismatchError::MethodMismatchError(InvariantFactors extension, InvariantFactors oracle)
    : std::runtime_error("H_1 mismatch: extension method gives " + extension.to_string() +
                         ", Reidemeister-Schreier gives " + oracle.to_string()),
      extension_(std::move(extension)),
      oracle_(std::move(oracle)) {}

HomologyReport run_case(const FamilyCase& fc, bool require_free) {
  fc.action.require_valid();
  HomologyReport report;
  report.source = fc;
  report.action_free = fc.action.is_free();
  if (require_free && !report.action_free) throw ValidationError({"action not free"});

  const auto cc = cross_check(fc.action);
  if (!cc.match) throw MethodMismatchError(cc.extension, cc.oracle);
  report.h1_extension = cc.extension;
  report.h1_oracle = cc.oracle;
  if (report.action_free) {
    report.invariants = surface_invariants(fc.action);
    report.graded = full_homology(report.h1_extension);
  }
  return report;
}

}  // namespace isohom
