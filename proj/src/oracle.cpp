#include "isohom/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace isohom {

CosetTable::CosetTable(const ProductPresentation& presentation, const DifferenceHom& hom)
    : group_(hom.group()),
      presentation_(presentation),
      cosets_(static_cast<std::size_t>(hom.group().order())),
      generators_(presentation.generator_count()) {
  std::vector<AbElement> images;
  for (std::size_t x = 0; x < generators_; ++x) images.push_back(hom.image(presentation.generator(x)));
  if (subgroup_generated(group_, images).size() != cosets_)
    throw std::invalid_argument("coset_table: homomorphism F -> G is not surjective");

  forward_.resize(cosets_ * generators_);
  backward_.resize(cosets_ * generators_);
  for (std::size_t c = 0; c < cosets_; ++c) {
    const AbElement g = group_.element_at(c);
    for (std::size_t x = 0; x < generators_; ++x) {
      forward_[c * generators_ + x] = group_.index_of(g + images[x]);
      backward_[c * generators_ + x] = group_.index_of(g - images[x]);
    }
  }
}

CosetTable coset_table(const ProductPresentation& presentation, const DifferenceHom& hom) {
  return CosetTable(presentation, hom);
}

SchreierData::SchreierData(const CosetTable& table,
                           std::optional<std::vector<std::size_t>> generator_order)
    : table_(table) {
  const std::size_t ng = table_.generators();
  std::vector<std::size_t> order(ng);
  std::iota(order.begin(), order.end(), 0);
  if (generator_order) {
    auto sorted = *generator_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != order) throw std::invalid_argument("schreier_transversal: not a permutation of the generators");
    order = *generator_order;
  }

  transversal_.assign(table_.cosets(), Word{});
  std::vector<bool> seen(table_.cosets(), false);
  std::vector<bool> tree(table_.cosets() * ng, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t x : order) {
      const std::size_t d = table_.act(c, x);
      if (seen[d]) continue;
      seen[d] = true;
      tree[c * ng + x] = true;
      transversal_[d] = transversal_[c];
      transversal_[d].append(table_.presentation().generator(x));
      queue.push_back(d);
    }
  }

  columns_.assign(table_.cosets() * ng, kTreeEdge);
  for (std::size_t c = 0; c < table_.cosets(); ++c)
    for (std::size_t x = 0; x < ng; ++x) {
      if (tree[c * ng + x]) continue;
      columns_[c * ng + x] = edges_.size();
      edges_.emplace_back(c, x);
    }
}

SchreierData schreier_transversal(const CosetTable& table,
                                  std::optional<std::vector<std::size_t>> generator_order) {
  return SchreierData(table, std::move(generator_order));
}

Word SchreierData::generator_word(std::size_t column) const {
  const auto [c, x] = edges_.at(column);
  Word w = transversal_[c];
  w.append(table_.presentation().generator(x));
  return w * transversal_[table_.act(c, x)].inverse();
}

std::vector<SchreierLetter> SchreierData::rewrite(const Word& w) const {
  std::vector<SchreierLetter> out;
  std::size_t c = 0;
  for (const auto& letter : w.letters()) {
    const std::size_t x = table_.presentation().flat_index(letter);
    if (letter.exponent > 0) {
      if (auto col = column(c, x); col != kTreeEdge) out.push_back({col, 1});
      c = table_.act(c, x);
    } else {
      c = table_.act_inverse(c, x);
      if (auto col = column(c, x); col != kTreeEdge) out.push_back({col, -1});
    }
  }
  if (c != 0) {
    std::ostringstream os;
    os << "rewrite: word " << w << " is not in the kernel";
    throw std::invalid_argument(os.str());
  }
  return out;
}

std::vector<std::int64_t> rewrite_relator(const Word& relator, const Word& conjugator,
                                          const SchreierData& data) {
  std::vector<std::int64_t> row(data.nontrivial_count(), 0);
  for (const auto& s : data.rewrite(conjugator * relator * conjugator.inverse()))
    row[s.column] += s.exponent;
  return row;
}

IntMatrix kernel_relation_matrix(const SchreierData& data) {
  const auto relators = data.table().presentation().relators();
  IntMatrix m(0, data.nontrivial_count());
  for (std::size_t c = 0; c < data.table().cosets(); ++c)
    for (const auto& r : relators) {
      auto row = rewrite_relator(r, data.transversal(c), data);
      m.append_row(std::span<const std::int64_t>(row));
    }
  return m;
}

InvariantFactors kernel_h1(const ProductPresentation& presentation, const DifferenceHom& hom,
                           std::optional<std::vector<std::size_t>> generator_order) {
  for (const auto& r : presentation.relators()) {
    if (!hom(r).is_zero()) {
      std::ostringstream os;
      os << "kernel_h1: relator " << r << " does not map to zero";
      throw std::invalid_argument(os.str());
    }
  }
  const CosetTable table(presentation, hom);
  const SchreierData data(table, std::move(generator_order));
  return abelian_invariants(kernel_relation_matrix(data));
}

InvariantFactors kernel_h1(const ProductAction& action) {
  action.require_valid();
  return kernel_h1(action.presentation(), action.hom());
}

}  // namespace isohom
