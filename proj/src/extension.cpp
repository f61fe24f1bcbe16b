#include "isohom/extension.hpp"

#include "isohom/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isohom {

namespace {

std::int64_t half_triangular(std::int64_t k) { return k * (k - 1) / 2; }

IntMatrix relator_lattice(const FinAbGroup& group, const Wedge2& r1, const Wedge2& r2) {
  const auto mod = Wedge2::moduli(group);
  const std::size_t dim = mod.size();
  IntMatrix rows(0, dim);
  for (std::size_t p = 0; p < dim; ++p) {
    std::vector<std::int64_t> row(dim, 0);
    row[p] = mod[p];
    rows.append_row(std::span<const std::int64_t>(row));
  }
  rows.append_row(std::span<const std::int64_t>(r1.coeffs()));
  rows.append_row(std::span<const std::int64_t>(r2.coeffs()));
  return rows;
}

std::vector<BigInt> to_big(const std::vector<std::int64_t>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

Wedge2 sigma_relator(const GeneratingSystem& sys, std::int64_t k) {
  if (sys.images.empty()) throw std::invalid_argument("sigma_relator: empty generating system");
  std::span<const AbElement> head(sys.images.data(), sys.images.size() - 1);
  if (head.empty()) return Wedge2(sys.group);
  return pairwise_wedge_sum(head, half_triangular(k));
}

// ---------------------------------------------------------------------------
// HGroup

HGroup::HGroup(const ProductAction& action)
    : group_(action.group()),
      phi_relator_(sigma_relator(action.phi, action.k)),
      psi_relator_(sigma_relator(action.psi, action.k)),
      quotient_(relator_lattice(group_, phi_relator_, psi_relator_)),
      invariants_(quotient_.invariants()) {}

BigInt HGroup::relator_span_order() const {
  BigInt ambient = 1;
  for (auto d : Wedge2::moduli(group_)) ambient *= d;
  return ambient / order();
}

Wedge2 HGroup::project(const Wedge2& w) const {
  if (w.group() != group_) throw std::invalid_argument("HGroup::project: element of another group");
  const auto reduced = quotient_.reduce(to_big(w.coeffs()));
  std::vector<std::int64_t> c;
  c.reserve(reduced.size());
  for (const auto& x : reduced) c.push_back(static_cast<std::int64_t>(x));
  return Wedge2(group_, std::move(c));
}

HGroup build_h(const ProductAction& action) { return HGroup(action); }

// ---------------------------------------------------------------------------
// alpha

namespace {

// sum over r < s with index(r) > index(s) of sign_r sign_s image_r ^ image_s
Wedge2 inversion_sum(const Word& w, const GeneratingSystem& sys) {
  const std::size_t n = sys.size();
  std::vector<AbElement> seen(n, sys.group.zero());
  Wedge2 total(sys.group);
  for (const auto& x : w.letters()) {
    const AbElement g = x.exponent > 0 ? sys.images[x.index] : -sys.images[x.index];
    for (std::size_t i = x.index + 1; i < n; ++i)
      if (!seen[i].is_zero()) total += wedge(seen[i], g);
    seen[x.index] += g;
  }
  return total;
}

void check_commutator_word(const Word& w, Factor factor, std::size_t usable, std::int64_t k,
                           const char* name) {
  for (const auto& x : w.letters()) {
    if (x.factor != factor || x.index >= usable) {
      std::ostringstream os;
      os << "alpha: word " << name << " may only use " << (factor == Factor::First ? 'a' : 'b')
         << "_1.." << (factor == Factor::First ? 'a' : 'b') << '_' << usable;
      throw std::invalid_argument(os.str());
    }
  }
  for (auto d : w.degrees(factor, usable))
    if (d % k != 0) {
      std::ostringstream os;
      os << "alpha: word " << name << " has a generator degree not divisible by " << k;
      throw std::invalid_argument(os.str());
    }
}

}  // namespace

Wedge2 alpha(const Word& u, const Word& v, const ProductAction& action, const HGroup& h) {
  if (action.n() < 1 || action.m() < 1) throw std::invalid_argument("alpha: empty generating system");
  check_commutator_word(u, Factor::First, action.n() - 1, action.k, "u");
  check_commutator_word(v, Factor::Second, action.m() - 1, action.k, "v");
  return h.project(inversion_sum(u, action.phi) - inversion_sum(v, action.psi));
}

// ---------------------------------------------------------------------------
// F^ab and the cocycle

FabVector FabVector::zero(const ProductAction& action) {
  return FabVector{std::vector<std::int64_t>(action.n() - 1, 0),
                   std::vector<std::int64_t>(action.m() - 1, 0)};
}

FabVector FabVector::make(const ProductAction& action, std::vector<std::int64_t> a,
                          std::vector<std::int64_t> b) {
  if (a.size() + 1 != action.n() || b.size() + 1 != action.m())
    throw std::invalid_argument("FabVector: expected n-1 a-coefficients and m-1 b-coefficients");
  for (auto& x : a) x = mod_floor(x, action.k);
  for (auto& x : b) x = mod_floor(x, action.k);
  return FabVector{std::move(a), std::move(b)};
}

std::vector<std::int64_t> FabVector::flat() const {
  auto out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool FabVector::is_zero() const {
  for (auto x : a)
    if (x) return false;
  for (auto x : b)
    if (x) return false;
  return true;
}

FabVector add(const FabVector& x, const FabVector& y, std::int64_t k) {
  if (x.a.size() != y.a.size() || x.b.size() != y.b.size())
    throw std::invalid_argument("FabVector: shape mismatch");
  FabVector out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = mod_floor(out.a[i] + y.a[i], k);
  for (std::size_t i = 0; i < out.b.size(); ++i) out.b[i] = mod_floor(out.b[i] + y.b[i], k);
  return out;
}

FabVector scale(std::int64_t c, const FabVector& x, std::int64_t k) {
  FabVector out = x;
  for (auto& v : out.a) v = mod_floor(c * v, k);
  for (auto& v : out.b) v = mod_floor(c * v, k);
  return out;
}

AbElement fab_image(const FabVector& z, const ProductAction& action) {
  AbElement g = action.group().zero();
  for (std::size_t i = 0; i < z.a.size(); ++i) g += z.a[i] * action.phi.images[i];
  for (std::size_t j = 0; j < z.b.size(); ++j) g -= z.b[j] * action.psi.images[j];
  return g;
}

Wedge2 cocycle_value(const FabVector& z1, const FabVector& z2, const ProductAction& action) {
  if (z1.a.size() + 1 != action.n() || z1.b.size() + 1 != action.m() ||
      z2.a.size() + 1 != action.n() || z2.b.size() + 1 != action.m())
    throw std::invalid_argument("cocycle: F^ab element of the wrong shape");
  Wedge2 total(action.group());
  for (std::size_t i = 0; i < z1.a.size(); ++i)
    for (std::size_t j = i + 1; j < z1.a.size(); ++j)
      total -= (z1.a[j] * z2.a[i]) * wedge(action.phi.images[i], action.phi.images[j]);
  for (std::size_t i = 0; i < z1.b.size(); ++i)
    for (std::size_t j = i + 1; j < z1.b.size(); ++j)
      total += (z1.b[j] * z2.b[i]) * wedge(action.psi.images[i], action.psi.images[j]);
  return total;
}

Wedge2 cocycle(const FabVector& z1, const FabVector& z2, const ProductAction& action,
               const HGroup& h) {
  return h.project(cocycle_value(z1, z2, action));
}

std::pair<Word, Word> section_words(const FabVector& z) {
  Word u, v;
  for (std::size_t i = 0; i < z.a.size(); ++i)
    for (std::int64_t e = 0; e < z.a[i]; ++e) u.append({Factor::First, i, 1});
  for (std::size_t j = 0; j < z.b.size(); ++j)
    for (std::int64_t e = 0; e < z.b[j]; ++e) v.append({Factor::Second, j, 1});
  return {u, v};
}

// ---------------------------------------------------------------------------
// K/[F,F] and K^ab

namespace {

void require_elementary(const ProductAction& action) {
  if (!is_prime(action.k))
    throw std::invalid_argument("kf_basis: branch order " + std::to_string(action.k) +
                                " is not prime");
  for (auto order : action.group().orders())
    if (order != action.k)
      throw std::invalid_argument("kf_basis: G must be elementary abelian of exponent k");
}

// Matrix of F^ab -> G: one row per cyclic factor of G.
std::vector<std::vector<std::int64_t>> fab_map_matrix(const ProductAction& action) {
  const std::size_t cols = (action.n() - 1) + (action.m() - 1);
  std::vector<std::vector<std::int64_t>> m(action.group().rank(),
                                           std::vector<std::int64_t>(cols, 0));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t i = 0; i + 1 < action.n(); ++i) m[r][i] = action.phi.images[i][r];
    for (std::size_t j = 0; j + 1 < action.m(); ++j)
      m[r][action.n() - 1 + j] = mod_floor(-action.psi.images[j][r], action.k);
  }
  return m;
}

}  // namespace

KFBasis kf_basis(const ProductAction& action) {
  require_elementary(action);
  const auto m = fab_map_matrix(action);
  const std::size_t cols = (action.n() - 1) + (action.m() - 1);
  KFBasis out;
  for (const auto& v : kernel_basis_mod_p(m, cols, action.k)) {
    std::vector<std::int64_t> a(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(action.n() - 1));
    std::vector<std::int64_t> b(v.begin() + static_cast<std::ptrdiff_t>(action.n() - 1), v.end());
    out.vectors.push_back(FabVector{std::move(a), std::move(b)});
  }
  return out;
}

IntMatrix h1_relation_matrix(const ProductAction& action, const KFBasis& basis) {
  const auto& group = action.group();
  const auto mod = Wedge2::moduli(group);
  const std::size_t dim = mod.size();
  const std::size_t cols = dim + basis.size();
  const std::int64_t k = action.k;
  IntMatrix rel(0, cols);

  std::vector<std::int64_t> row(cols);
  auto emit = [&] {
    rel.append_row(std::span<const std::int64_t>(row));
    std::fill(row.begin(), row.end(), 0);
  };
  std::fill(row.begin(), row.end(), 0);
  for (std::size_t p = 0; p < dim; ++p) {
    row[p] = mod[p];
    emit();
  }
  for (const auto& r : {sigma_relator(action.phi, k), sigma_relator(action.psi, k)}) {
    for (std::size_t p = 0; p < dim; ++p) row[p] = r.coeffs()[p];
    emit();
  }
  // k f_i + (k(k-1)/2) <c_i, c_i> = 0
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto self = cocycle_value(basis.vectors[i], basis.vectors[i], action);
    for (std::size_t p = 0; p < dim; ++p) row[p] = half_triangular(k) * self.coeffs()[p];
    row[dim + i] = k;
    emit();
  }
  return rel;
}

InvariantFactors h1_extension(const ProductAction& action) {
  return h1_extension(action, kf_basis(action));
}

InvariantFactors h1_extension(const ProductAction& action, const KFBasis& basis) {
  action.require_valid();
  const auto expected = kf_basis(action).size();
  if (basis.size() != expected)
    throw std::invalid_argument("h1_extension: basis has " + std::to_string(basis.size()) +
                                " vectors, K/[F,F] has dimension " + std::to_string(expected));
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& c : basis.vectors) {
    if (c.a.size() + 1 != action.n() || c.b.size() + 1 != action.m())
      throw std::invalid_argument("h1_extension: basis vector of the wrong shape");
    if (!fab_image(c, action).is_zero())
      throw std::invalid_argument("h1_extension: basis vector does not lie in K/[F,F]");
    rows.push_back(c.flat());
  }
  if (rank_mod_p(rows, action.k) != basis.size())
    throw std::invalid_argument("h1_extension: basis vectors are linearly dependent");
  return abelian_invariants(h1_relation_matrix(action, basis));
}

CrossCheckReport cross_check(const ProductAction& action) {
  CrossCheckReport report;
  report.extension = h1_extension(action);
  report.oracle = kernel_h1(action);
  report.match = report.extension == report.oracle;
  return report;
}

}  // namespace isohom
