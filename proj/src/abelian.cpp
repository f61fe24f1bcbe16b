#include "isohom/abelian.hpp"

#include "isohom/intlattice.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace isohom {

// ---------------------------------------------------------------------------
// FinAbGroup

FinAbGroup::FinAbGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  for (auto k : orders_)
    if (k < 2) throw std::invalid_argument("FinAbGroup: cyclic orders must be >= 2");
}

FinAbGroup FinAbGroup::homogeneous(std::int64_t k, std::size_t rank) {
  return FinAbGroup(std::vector<std::int64_t>(rank, k));
}

std::int64_t FinAbGroup::order() const {
  std::int64_t n = 1;
  for (auto k : orders_) n *= k;
  return n;
}

std::int64_t FinAbGroup::exponent() const {
  std::int64_t e = 1;
  for (auto k : orders_) e = std::lcm(e, k);
  return e;
}

AbElement FinAbGroup::zero() const {
  return AbElement(*this, std::vector<std::int64_t>(rank(), 0));
}

AbElement FinAbGroup::basis(std::size_t i) const {
  if (i >= rank()) throw std::out_of_range("FinAbGroup::basis: index out of range");
  std::vector<std::int64_t> c(rank(), 0);
  c[i] = 1;
  return AbElement(*this, std::move(c));
}

AbElement FinAbGroup::element(std::vector<std::int64_t> coeffs) const {
  return AbElement(*this, std::move(coeffs));
}

std::size_t FinAbGroup::index_of(const AbElement& x) const {
  if (x.group() != *this) throw std::invalid_argument("FinAbGroup::index_of: foreign element");
  std::size_t idx = 0;
  for (std::size_t i = rank(); i-- > 0;) idx = idx * orders_[i] + x[i];
  return idx;
}

AbElement FinAbGroup::element_at(std::size_t index) const {
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    c[i] = static_cast<std::int64_t>(index % orders_[i]);
    index /= orders_[i];
  }
  return AbElement(*this, std::move(c));
}

std::vector<AbElement> FinAbGroup::elements() const {
  std::vector<AbElement> out;
  const auto n = static_cast<std::size_t>(order());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

std::string FinAbGroup::to_string() const {
  if (orders_.empty()) return "0";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < orders_.size()) {
    std::size_t j = i;
    while (j < orders_.size() && orders_[j] == orders_[i]) ++j;
    if (!first) os << " + ";
    first = false;
    if (j - i == 1)
      os << "Z/" << orders_[i];
    else
      os << "(Z/" << orders_[i] << ")^" << (j - i);
    i = j;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// AbElement

AbElement::AbElement(FinAbGroup group, std::vector<std::int64_t> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_.rank())
    throw std::invalid_argument("AbElement: coefficient count does not match group rank");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = mod_floor(coeffs_[i], group_.orders()[i]);
}

bool AbElement::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::int64_t AbElement::order() const {
  std::int64_t n = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto k = group_.orders()[i];
    n = std::lcm(n, k / std::gcd(k, coeffs_[i]));
  }
  return n;
}

void AbElement::check_same_group(const AbElement& rhs) const {
  if (group_ != rhs.group_) throw std::invalid_argument("AbElement: mismatched groups");
}

AbElement& AbElement::operator+=(const AbElement& rhs) {
  check_same_group(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = (coeffs_[i] + rhs.coeffs_[i]) % group_.orders()[i];
  return *this;
}

AbElement& AbElement::operator-=(const AbElement& rhs) {
  check_same_group(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = mod_floor(coeffs_[i] - rhs.coeffs_[i], group_.orders()[i]);
  return *this;
}

AbElement AbElement::operator-() const { return group_.zero() - *this; }

AbElement operator*(std::int64_t scalar, const AbElement& x) {
  std::vector<std::int64_t> c(x.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto k = x.group().orders()[i];
    c[i] = mod_floor(mod_floor(scalar, k) * x[i], k);
  }
  return AbElement(x.group(), std::move(c));
}

std::ostream& operator<<(std::ostream& os, const AbElement& x) {
  bool first = true;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (x[i] != 1) os << x[i];
    os << 'e' << (i + 1);
  }
  if (first) os << '0';
  return os;
}

// ---------------------------------------------------------------------------
// Wedge2

Wedge2::Wedge2(FinAbGroup group)
    : group_(std::move(group)), coeffs_(dimension(group_), 0) {}

Wedge2::Wedge2(FinAbGroup group, std::vector<std::int64_t> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != dimension(group_))
    throw std::invalid_argument("Wedge2: coefficient count does not match s(s-1)/2");
  reduce();
}

std::size_t Wedge2::dimension(const FinAbGroup& group) {
  const auto s = group.rank();
  return s < 2 ? 0 : s * (s - 1) / 2;
}

std::size_t Wedge2::pair_index(std::size_t rank, std::size_t i, std::size_t j) {
  if (!(i < j && j < rank)) throw std::out_of_range("Wedge2::pair_index: need i < j < rank");
  // Pairs (0,1), (0,2), ..., (0,s-1), (1,2), ...
  return i * rank - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::int64_t> Wedge2::moduli(const FinAbGroup& group) {
  std::vector<std::int64_t> out;
  const auto& k = group.orders();
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j) out.push_back(std::gcd(k[i], k[j]));
  return out;
}

FinAbGroup Wedge2::ambient(const FinAbGroup& group) { return FinAbGroup(moduli(group)); }

Wedge2 Wedge2::basis(const FinAbGroup& group, std::size_t i, std::size_t j) {
  Wedge2 w(group);
  w.coeffs_[pair_index(group.rank(), i, j)] = 1;
  w.reduce();
  return w;
}

std::int64_t Wedge2::coeff(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  const auto m = moduli(group_)[pair_index(group_.rank(), std::min(i, j), std::max(i, j))];
  const auto v = coeffs_[pair_index(group_.rank(), std::min(i, j), std::max(i, j))];
  return i < j ? v : mod_floor(-v, m);
}

void Wedge2::reduce() {
  const auto mod = moduli(group_);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] = mod_floor(coeffs_[p], mod[p]);
}

bool Wedge2::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

void Wedge2::check_same_group(const Wedge2& rhs) const {
  if (group_ != rhs.group_) throw std::invalid_argument("Wedge2: mismatched groups");
}

Wedge2& Wedge2::operator+=(const Wedge2& rhs) {
  check_same_group(rhs);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] += rhs.coeffs_[p];
  reduce();
  return *this;
}

Wedge2& Wedge2::operator-=(const Wedge2& rhs) {
  check_same_group(rhs);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] -= rhs.coeffs_[p];
  reduce();
  return *this;
}

Wedge2 Wedge2::operator-() const { return Wedge2(group_) - *this; }

Wedge2 operator*(std::int64_t scalar, const Wedge2& x) {
  const auto mod = Wedge2::moduli(x.group());
  std::vector<std::int64_t> c(x.coeffs().size());
  for (std::size_t p = 0; p < c.size(); ++p) c[p] = mod_floor(scalar, mod[p]) * x.coeffs()[p];
  return Wedge2(x.group(), std::move(c));
}

std::string Wedge2::to_string() const {
  std::ostringstream os;
  bool first = true;
  const auto s = group_.rank();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) {
      const auto c = coeffs_[pair_index(s, i, j)];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1) os << c << ' ';
      os << 'e' << (i + 1) << "^e" << (j + 1);
    }
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Wedge2& w) { return os << w.to_string(); }

Wedge2 wedge(const AbElement& x, const AbElement& y) {
  if (x.group() != y.group()) throw std::invalid_argument("wedge: mismatched groups");
  const auto& g = x.group();
  const auto s = g.rank();
  std::vector<std::int64_t> c(Wedge2::dimension(g), 0);
  const auto mod = Wedge2::moduli(g);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) {
      const auto p = Wedge2::pair_index(s, i, j);
      c[p] = mod_floor(x[i] * y[j] - x[j] * y[i], mod[p]);
    }
  return Wedge2(g, std::move(c));
}

Wedge2 pairwise_wedge_sum(std::span<const AbElement> images, std::int64_t multiplier) {
  if (images.empty()) throw std::invalid_argument("pairwise_wedge_sum: no images given");
  Wedge2 sum(images.front().group());
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) sum += wedge(images[i], images[j]);
  return multiplier * sum;
}

std::set<AbElement> subgroup_generated(const FinAbGroup& group,
                                       std::span<const AbElement> elements) {
  std::set<AbElement> closed{group.zero()};
  std::vector<AbElement> frontier{group.zero()};
  while (!frontier.empty()) {
    std::vector<AbElement> next;
    for (const auto& x : frontier)
      for (const auto& g : elements) {
        auto y = x + g;
        if (closed.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return closed;
}

}  // namespace isohom
