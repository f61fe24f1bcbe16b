#pragma once

// Brute-force H_1 of the kernel K of F -> G: cosets of K are the elements of
// G, a BFS Schreier transversal gives kernel generators, and every conjugate
// t r t^-1 of every relator is rewritten and abelianized into one matrix row.

#include "isohom/intlattice.hpp"
#include "isohom/presentation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace isohom {

class CosetTable {
 public:
  /// Throws std::invalid_argument when hom is not surjective.
  CosetTable(const ProductPresentation& presentation, const DifferenceHom& hom);

  std::size_t cosets() const { return cosets_; }
  std::size_t generators() const { return generators_; }
  /// Coset reached from coset c by the generator with flat index x.
  std::size_t act(std::size_t c, std::size_t x) const { return forward_[c * generators_ + x]; }
  std::size_t act_inverse(std::size_t c, std::size_t x) const {
    return backward_[c * generators_ + x];
  }
  const FinAbGroup& group() const { return group_; }
  const ProductPresentation& presentation() const { return presentation_; }

 private:
  FinAbGroup group_;
  ProductPresentation presentation_;
  std::size_t cosets_;
  std::size_t generators_;
  std::vector<std::size_t> forward_;
  std::vector<std::size_t> backward_;
};

CosetTable coset_table(const ProductPresentation& presentation, const DifferenceHom& hom);

/// One Schreier generator t_c x t_{c.x}^-1 in a rewritten word.
struct SchreierLetter {
  std::size_t column;  // index among the nontrivial Schreier generators
  int exponent;        // +1 or -1
};

class SchreierData {
 public:
  static constexpr std::size_t kTreeEdge = static_cast<std::size_t>(-1);

  /// BFS spanning tree; generators are tried in generator_order (flat
  /// indices), defaulting to a_1, ..., a_n, b_1, ..., b_m.
  SchreierData(const CosetTable& table,
               std::optional<std::vector<std::size_t>> generator_order = std::nullopt);

  const CosetTable& table() const { return table_; }
  const Word& transversal(std::size_t coset) const { return transversal_[coset]; }
  /// Column of the Schreier generator for (coset, generator), or kTreeEdge.
  std::size_t column(std::size_t coset, std::size_t generator) const {
    return columns_[coset * table_.generators() + generator];
  }
  std::size_t nontrivial_count() const { return edges_.size(); }
  std::size_t tree_edge_count() const { return table_.cosets() - 1; }

  /// The word t_c x t_{c.x}^-1 for a column.
  Word generator_word(std::size_t column) const;

  /// Rewrites a word lying in K into Schreier generators, starting at coset 0.
  std::vector<SchreierLetter> rewrite(const Word& w) const;

 private:
  CosetTable table_;
  std::vector<Word> transversal_;
  std::vector<std::size_t> columns_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;  // column -> (coset, generator)
};

SchreierData schreier_transversal(
    const CosetTable& table,
    std::optional<std::vector<std::size_t>> generator_order = std::nullopt);

/// Exponent-sum row of conjugator * r * conjugator^-1 over the nontrivial
/// Schreier generators.
std::vector<std::int64_t> rewrite_relator(const Word& relator, const Word& conjugator,
                                          const SchreierData& data);

/// Relation matrix of K^ab: one row per (coset, relator), coset-major.
IntMatrix kernel_relation_matrix(const SchreierData& data);

/// H_1 of the surface as K^ab. Checks that hom kills every relator of the
/// presentation and is surjective; throws std::invalid_argument otherwise.
InvariantFactors kernel_h1(const ProductPresentation& presentation, const DifferenceHom& hom,
                           std::optional<std::vector<std::size_t>> generator_order = std::nullopt);

InvariantFactors kernel_h1(const ProductAction& action);

}  // namespace isohom
