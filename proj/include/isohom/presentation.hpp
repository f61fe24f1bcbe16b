#pragma once

// Free-group words, the orbifold groups
//   <a_1, ..., a_n | a_1^k, ..., a_n^k, a_1 ... a_n>,
// their direct product F, and homomorphisms F -> G into a finite abelian group.

#include "isohom/abelian.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace isohom {

/// Which orbifold factor a generator belongs to: a-letters or b-letters.
enum class Factor : std::uint8_t { First, Second };

struct Letter {
  Factor factor = Factor::First;
  std::size_t index = 0;  // 0-based: a_1 is index 0
  int exponent = 1;       // +1 or -1

  Letter inverse() const { return {factor, index, -exponent}; }
  bool operator==(const Letter&) const = default;
};

inline Letter a(std::size_t one_based, int exponent = 1) {
  return {Factor::First, one_based - 1, exponent};
}
inline Letter b(std::size_t one_based, int exponent = 1) {
  return {Factor::Second, one_based - 1, exponent};
}

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word power(std::size_t e) const;
  void append(const Letter& x);
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  /// Exponent sum of each generator of one factor.
  std::vector<std::int64_t> degrees(Factor factor, std::size_t generator_count) const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

Word free_reduce(const Word& w);
/// [x, y] = x y x^-1 y^-1
Word commutator(const Word& x, const Word& y);

class OrbifoldPresentation {
 public:
  OrbifoldPresentation(Factor factor, std::size_t generators, std::int64_t order);

  Factor factor() const { return factor_; }
  std::size_t generators() const { return n_; }
  std::int64_t order() const { return k_; }
  Letter generator(std::size_t i) const { return {factor_, i, 1}; }

  /// x_1^k, ..., x_n^k, x_1 ... x_n
  std::vector<Word> relators() const;

 private:
  Factor factor_;
  std::size_t n_;
  std::int64_t k_;
};

/// Direct product of two orbifold groups. Generators are numbered a_1..a_n
/// followed by b_1..b_m.
class ProductPresentation {
 public:
  ProductPresentation(OrbifoldPresentation first, OrbifoldPresentation second);

  const OrbifoldPresentation& first() const { return first_; }
  const OrbifoldPresentation& second() const { return second_; }

  std::size_t generator_count() const { return first_.generators() + second_.generators(); }
  Letter generator(std::size_t flat_index) const;
  std::size_t flat_index(const Letter& x) const;

  /// Relators of both factors followed by all [a_i, b_j].
  std::vector<Word> relators() const;

 private:
  OrbifoldPresentation first_;
  OrbifoldPresentation second_;
};

/// Images g_1, ..., g_r in G of the loop generators of one orbifold group.
struct GeneratingSystem {
  FinAbGroup group;
  std::vector<AbElement> images;

  GeneratingSystem() = default;
  GeneratingSystem(FinAbGroup g, std::vector<AbElement> imgs);
  /// Builds images from raw coefficient vectors.
  static GeneratingSystem from_coeffs(const FinAbGroup& g,
                                      const std::vector<std::vector<std::int64_t>>& coeffs);

  std::size_t size() const { return images.size(); }
  bool operator==(const GeneratingSystem&) const = default;
};

/// Sum of the signed images of the letters; the factor tag is not consulted.
AbElement evaluate(const GeneratingSystem& hom, const Word& w);

/// The surjection F -> G, (p, q) -> phi(p) - psi(q).
class DifferenceHom {
 public:
  DifferenceHom(GeneratingSystem phi, GeneratingSystem psi);

  const FinAbGroup& group() const { return phi_.group; }
  const GeneratingSystem& phi() const { return phi_; }
  const GeneratingSystem& psi() const { return psi_; }

  AbElement image(const Letter& x) const;
  AbElement operator()(const Word& w) const;

 private:
  GeneratingSystem phi_;
  GeneratingSystem psi_;
};

DifferenceHom difference_hom(const GeneratingSystem& phi, const GeneratingSystem& psi);

/// Raised when a case fails validation; carries every failed condition.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> failures);
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct ValidationReport {
  bool nonempty = true;
  bool enough_branch_points = true;
  bool product_zero = true;
  bool generates = true;
  bool nonzero_images = true;
  bool orders_match = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks g_1 + ... + g_r = 0, that the g_i generate G, that no g_i is zero,
/// and (when branch_order > 0) that every g_i has order exactly branch_order.
ValidationReport validate_generating_system(const GeneratingSystem& sys,
                                            std::int64_t branch_order = 0);

/// True iff the union of the cyclic subgroups <g_i> meets the union of the
/// <h_j> only in 0, i.e. G acts freely on the product of the two curves.
bool freeness_check(const GeneratingSystem& phi, const GeneratingSystem& psi);

/// Everything that defines one surface: common branch order k and the two
/// generating systems for the first and second curve.
struct ProductAction {
  std::int64_t k = 0;
  GeneratingSystem phi;
  GeneratingSystem psi;

  /// Infers k as the largest order among the images (0 if there are none).
  static ProductAction from_systems(GeneratingSystem phi, GeneratingSystem psi);

  const FinAbGroup& group() const { return phi.group; }
  std::size_t n() const { return phi.size(); }
  std::size_t m() const { return psi.size(); }

  ProductPresentation presentation() const;
  DifferenceHom hom() const { return DifferenceHom(phi, psi); }

  /// Failures of either generating system (prefixed "phi: "/"psi: ") plus
  /// group mismatches; freeness is reported separately.
  std::vector<std::string> validate() const;
  /// Throws ValidationError when validate() reports anything.
  void require_valid() const;
  bool is_free() const { return freeness_check(phi, psi); }
  bool operator==(const ProductAction&) const = default;
};

}  // namespace isohom
