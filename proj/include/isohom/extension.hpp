#pragma once

// H_1 of the surface through the commutator subgroup.
//
// With F = Pi(1) x Pi(2) and K the kernel of F -> G, there are extensions
//   0 -> [F,F]/[K,K] -> F/[K,K] -> F^ab -> 0,
//   0 -> [F,F]/[K,K] -> K^ab    -> K/[F,F] -> 0.
// [F,F]/[K,K] is identified with H, the quotient of the exterior square of G
// by the two relators (k(k-1)/2) sum_{i<j} g_i ^ g_j (one per curve). The
// extension is classified by a bilinear 2-cocycle on F^ab with values in H,
// and K^ab is presented by H plus one generator f_i per basis vector c_i of
// K/[F,F], with k f_i = -(k(k-1)/2) <c_i, c_i>.

#include "isohom/abelian.hpp"
#include "isohom/intlattice.hpp"
#include "isohom/presentation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace isohom {

/// k(k-1)/2 * sum_{i<j<r} g_i ^ g_j over all but the last image.
Wedge2 sigma_relator(const GeneratingSystem& sys, std::int64_t k);

/// The exterior square of G modulo the two relators.
class HGroup {
 public:
  explicit HGroup(const ProductAction& action);

  const FinAbGroup& group() const { return group_; }
  const Wedge2& phi_relator() const { return phi_relator_; }
  const Wedge2& psi_relator() const { return psi_relator_; }
  const InvariantFactors& invariants() const { return invariants_; }
  BigInt order() const { return quotient_.order(); }
  /// Order of the subgroup of the exterior square spanned by the relators.
  BigInt relator_span_order() const;

  /// Canonical representative of the class of w.
  Wedge2 project(const Wedge2& w) const;
  bool is_zero(const Wedge2& w) const { return project(w).is_zero(); }
  bool equal(const Wedge2& x, const Wedge2& y) const { return project(x - y).is_zero(); }

 private:
  FinAbGroup group_;
  Wedge2 phi_relator_;
  Wedge2 psi_relator_;
  LatticeQuotient quotient_;
  InvariantFactors invariants_;
};

HGroup build_h(const ProductAction& action);

/// Inversion-count value of the commutator element (u, v), projected to H.
/// u may only use a_1..a_{n-1}, v only b_1..b_{m-1}, and every generator
/// degree must be divisible by k; std::invalid_argument otherwise.
Wedge2 alpha(const Word& u, const Word& v, const ProductAction& action, const HGroup& h);

/// Element of F^ab = (Z/k)^{n-1} + (Z/k)^{m-1} in the basis a_1..a_{n-1},
/// b_1..b_{m-1}; coefficients reduced into [0, k).
struct FabVector {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;

  static FabVector zero(const ProductAction& action);
  /// Reduces coefficients mod k and checks the lengths against the action.
  static FabVector make(const ProductAction& action, std::vector<std::int64_t> a,
                        std::vector<std::int64_t> b);

  std::vector<std::int64_t> flat() const;
  bool is_zero() const;
  bool operator==(const FabVector&) const = default;
};

FabVector add(const FabVector& x, const FabVector& y, std::int64_t k);
FabVector scale(std::int64_t c, const FabVector& x, std::int64_t k);

/// Image of z under F^ab -> G, a_i -> phi(a_i), b_j -> -psi(b_j).
AbElement fab_image(const FabVector& z, const ProductAction& action);

/// -sum_{i<j} r_j s_i phi(a_i)^phi(a_j) + sum_{i<j} r'_j s'_i psi(b_i)^psi(b_j),
/// unprojected.
Wedge2 cocycle_value(const FabVector& z1, const FabVector& z2, const ProductAction& action);
/// The cocycle as an element of H.
Wedge2 cocycle(const FabVector& z1, const FabVector& z2, const ProductAction& action,
               const HGroup& h);

/// Normal-form section a_1^{r_1} ... a_{n-1}^{r_{n-1}} and b_1^{r'_1} ... b_{m-1}^{r'_{m-1}}.
std::pair<Word, Word> section_words(const FabVector& z);

struct KFBasis {
  std::vector<FabVector> vectors;
  std::size_t size() const { return vectors.size(); }
};

/// Basis of K/[F,F] over Z/k, the kernel of F^ab -> G. Requires k prime and
/// G = (Z/k)^s.
KFBasis kf_basis(const ProductAction& action);

/// Presentation matrix of K^ab. Columns: exterior-square basis pairs, then
/// one f_i per basis vector.
IntMatrix h1_relation_matrix(const ProductAction& action, const KFBasis& basis);

InvariantFactors h1_extension(const ProductAction& action);
/// Same computation with a caller-chosen basis of K/[F,F]; the basis is
/// checked for kernel membership, independence and size.
InvariantFactors h1_extension(const ProductAction& action, const KFBasis& basis);

struct CrossCheckReport {
  InvariantFactors extension;
  InvariantFactors oracle;
  bool match = false;
};

/// Runs both methods; a disagreement is reported, not thrown.
CrossCheckReport cross_check(const ProductAction& action);

}  // namespace isohom
