#pragma once

// The four families of surfaces (C1 x C2)/G with p_g = q = 0 and abelian G
// acting by a product action, plus the topological bookkeeping around H_1.

#include "isohom/intlattice.hpp"
#include "isohom/presentation.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isohom {

struct FamilyCase {
  int id = 0;  // 1..4 for the builtin families, 0 for user data
  std::string label;
  ProductAction action;
  /// Dimension of the family; 0 for the family consisting of two points.
  int family_dimension = -1;

  const FinAbGroup& group() const { return action.group(); }
};

/// Throws std::out_of_range for ids outside 1..4.
FamilyCase builtin_case(int id);
std::vector<FamilyCase> builtin_cases();

/// Genus g of a curve C with C/G = P^1 branched over n points with stabilizers
/// of order k: 2 - 2g = |G| (2 - n (1 - 1/k)). Throws std::invalid_argument if
/// g is not an integer >= 2.
std::int64_t genus(std::int64_t group_order, std::int64_t branch_points, std::int64_t k);

struct SurfaceInvariants {
  std::int64_t genus_first = 0;
  std::int64_t genus_second = 0;
  std::int64_t chi_top = 0;
};

/// chi_top(S) = chi(C1) chi(C2) / |G|.
SurfaceInvariants surface_invariants(const ProductAction& action);

struct HomologyGroup {
  std::size_t free_rank = 0;
  InvariantFactors torsion;

  std::string to_string() const;
  bool operator==(const HomologyGroup&) const = default;
};

/// H_0..H_4 of a surface with H_1 = T finite and b_2 = 2:
/// Z, T, Z^2 + T, 0, Z. Throws std::invalid_argument if h1 has a free part.
std::vector<HomologyGroup> full_homology(const InvariantFactors& h1);

struct HomologyReport {
  FamilyCase source;
  InvariantFactors h1_extension;
  InvariantFactors h1_oracle;
  bool action_free = false;
  SurfaceInvariants invariants;
  std::vector<HomologyGroup> graded;
};

class MethodMismatchError : public std::runtime_error {
 public:
  MethodMismatchError(InvariantFactors extension, InvariantFactors oracle);
  const InvariantFactors& extension() const { return extension_; }
  const InvariantFactors& oracle() const { return oracle_; }

 private:
  InvariantFactors extension_;
  InvariantFactors oracle_;
};

/// Computes H_1 both ways and the derived invariants. Throws ValidationError
/// for invalid generating systems (and for a non-free action when
/// require_free is set) and MethodMismatchError if the two methods disagree.
HomologyReport run_case(const FamilyCase& fc, bool require_free = true);

}  // namespace isohom
