#include "isohom/intlattice.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace isohom {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(std::span<const std::int64_t>(r));
  return m;
}

void IntMatrix::append_row(std::span<const BigInt> row) {
  if (row.size() != cols_) throw std::invalid_argument("IntMatrix: row width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void IntMatrix::append_row(std::span<const std::int64_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("IntMatrix: row width mismatch");
  for (auto v : row) data_.emplace_back(v);
  ++rows_;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const BigInt& a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

BigInt determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant: non-square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// InvariantFactors

InvariantFactors::InvariantFactors(std::initializer_list<long long> torsion,
                                   std::size_t free) {
  std::vector<BigInt> orders(torsion.begin(), torsion.end());
  *this = from_cyclic_orders(std::move(orders));
  free_rank += free;
}

InvariantFactors InvariantFactors::from_cyclic_orders(std::vector<BigInt> orders) {
  InvariantFactors out;
  std::vector<BigInt> finite;
  for (auto& d : orders) {
    if (d == 0)
      ++out.free_rank;
    else
      finite.push_back(abs_big(d));
  }
  // Pairwise (gcd, lcm) sweeps leave each entry dividing all later ones.
  for (std::size_t i = 0; i < finite.size(); ++i)
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      BigInt g = gcd(finite[i], finite[j]);
      BigInt l = finite[i] / g * finite[j];
      finite[i] = g;
      finite[j] = l;
    }
  for (auto& d : finite)
    if (d != 1) out.factors.push_back(std::move(d));
  return out;
}

BigInt InvariantFactors::torsion_order() const {
  BigInt p = 1;
  for (const auto& d : factors) p *= d;
  return p;
}

std::string InvariantFactors::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " ⊕ ";
    first = false;
  };
  if (free_rank > 0) {
    sep();
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
  }
  for (const auto& d : factors) {
    sep();
    os << "Z/" << d;
  }
  if (first) os << '0';
  return os.str();
}

std::vector<std::int64_t> InvariantFactors::to_int64() const {
  std::vector<std::int64_t> out;
  for (const auto& d : factors) {
    if (d > std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("invariant factor exceeds 64 bits");
    out.push_back(static_cast<std::int64_t>(d));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const InvariantFactors& f) {
  return os << f.to_string();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

class Diagonalizer {
 public:
  Diagonalizer(IntMatrix& a, IntMatrix* u, IntMatrix* v) : a_(a), u_(u), v_(v) {}

  // Reduces a to diagonal form. With full_chain the diagonal also satisfies
  // d1 | d2 | ...; otherwise only diagonality is guaranteed.
  void run(bool full_chain) {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      if (!place_min_pivot(t)) break;
      for (;;) {
        bool clean = clear_column(t);
        clean = clear_row(t) && clean;
        if (!clean) {
          place_cross_pivot(t);
          continue;
        }
        if (full_chain) {
          if (auto bad = nondivisible_row(t)) {
            add_row(t, *bad, 1);
            continue;
          }
        }
        break;
      }
      if (a_(t, t) < 0) negate_row(t);
    }
  }

 private:
  bool place_min_pivot(std::size_t t) {
    std::size_t best_r = 0, best_c = 0;
    BigInt best = 0;
    for (std::size_t r = t; r < a_.rows() && best != 1; ++r)
      for (std::size_t c = t; c < a_.cols(); ++c) {
        const BigInt& x = a_(r, c);
        if (x == 0) continue;
        BigInt ax = abs_big(x);
        if (best == 0 || ax < best) {
          best = std::move(ax);
          best_r = r;
          best_c = c;
          if (best == 1) break;
        }
      }
    if (best == 0) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  // Picks the smallest nonzero entry in row t or column t as the new pivot.
  void place_cross_pivot(std::size_t t) {
    std::size_t best_r = t, best_c = t;
    BigInt best = abs_big(a_(t, t));
    for (std::size_t r = t + 1; r < a_.rows(); ++r) {
      const BigInt& x = a_(r, t);
      if (x != 0 && (best == 0 || abs_big(x) < best)) {
        best = abs_big(x);
        best_r = r;
        best_c = t;
      }
    }
    for (std::size_t c = t + 1; c < a_.cols(); ++c) {
      const BigInt& x = a_(t, c);
      if (x != 0 && (best == 0 || abs_big(x) < best)) {
        best = abs_big(x);
        best_r = t;
        best_c = c;
      }
    }
    swap_rows(t, best_r);
    swap_cols(t, best_c);
  }

  bool clear_column(std::size_t t) {
    bool clean = true;
    const BigInt pivot = a_(t, t);
    for (std::size_t r = t + 1; r < a_.rows(); ++r) {
      if (a_(r, t) == 0) continue;
      BigInt q = a_(r, t) / pivot;
      if (q != 0) add_row(r, t, -q);
      if (a_(r, t) != 0) clean = false;
    }
    return clean;
  }

  bool clear_row(std::size_t t) {
    bool clean = true;
    const BigInt pivot = a_(t, t);
    for (std::size_t c = t + 1; c < a_.cols(); ++c) {
      if (a_(t, c) == 0) continue;
      BigInt q = a_(t, c) / pivot;
      if (q != 0) add_col(c, t, -q);
      if (a_(t, c) != 0) clean = false;
    }
    return clean;
  }

  std::optional<std::size_t> nondivisible_row(std::size_t t) const {
    const BigInt& pivot = a_(t, t);
    for (std::size_t r = t + 1; r < a_.rows(); ++r)
      for (std::size_t c = t + 1; c < a_.cols(); ++c)
        if (a_(r, c) % pivot != 0) return r;
    return std::nullopt;
  }

  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t c = 0; c < a_.cols(); ++c)
      if (a_(src, c) != 0) a_(dst, c) += factor * a_(src, c);
    if (u_)
      for (std::size_t c = 0; c < u_->cols(); ++c)
        if ((*u_)(src, c) != 0) (*u_)(dst, c) += factor * (*u_)(src, c);
  }

  // col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t r = 0; r < a_.rows(); ++r)
      if (a_(r, src) != 0) a_(r, dst) += factor * a_(r, src);
    if (v_)
      for (std::size_t r = 0; r < v_->rows(); ++r)
        if ((*v_)(r, src) != 0) (*v_)(r, dst) += factor * (*v_)(r, src);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    if (u_)
      for (std::size_t c = 0; c < u_->cols(); ++c) std::swap((*u_)(i, c), (*u_)(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    if (v_)
      for (std::size_t r = 0; r < v_->rows(); ++r) std::swap((*v_)(r, i), (*v_)(r, j));
  }

  void negate_row(std::size_t t) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(t, c) = -a_(t, c);
    if (u_)
      for (std::size_t c = 0; c < u_->cols(); ++c) (*u_)(t, c) = -(*u_)(t, c);
  }

  IntMatrix& a_;
  IntMatrix* u_;
  IntMatrix* v_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithDecomposition out{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  Diagonalizer(out.diagonal, &out.left, &out.right).run(true);
  return out;
}

InvariantFactors abelian_invariants(
    const IntMatrix& relations,
    const std::optional<std::vector<std::int64_t>>& generator_orders) {
  const std::size_t n = relations.cols();
  IntMatrix work(0, n);
  std::vector<BigInt> row(n);
  for (std::size_t r = 0; r < relations.rows(); ++r) {
    bool nonzero = false;
    for (std::size_t c = 0; c < n; ++c) {
      row[c] = relations(r, c);
      nonzero = nonzero || row[c] != 0;
    }
    if (nonzero) work.append_row(row);
  }
  if (generator_orders) {
    if (generator_orders->size() != n)
      throw std::invalid_argument("abelian_invariants: one order per generator expected");
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(row.begin(), row.end(), BigInt(0));
      row[i] = (*generator_orders)[i];
      if (row[i] != 0) work.append_row(row);
    }
  }

  Diagonalizer(work, nullptr, nullptr).run(false);
  std::vector<BigInt> diag;
  const std::size_t limit = std::min(work.rows(), n);
  for (std::size_t i = 0; i < limit; ++i) diag.push_back(work(i, i));
  for (std::size_t i = limit; i < n; ++i) diag.emplace_back(0);
  return InvariantFactors::from_cyclic_orders(std::move(diag));
}

// ---------------------------------------------------------------------------
// LatticeQuotient

LatticeQuotient::LatticeQuotient(const IntMatrix& generators) {
  const std::size_t n = generators.cols();
  IntMatrix a = generators;
  hermite_ = IntMatrix(n, n);
  std::size_t top = 0;
  for (std::size_t c = 0; c < n; ++c) {
    // Euclid on column c across rows top.. until a single nonzero remains.
    for (;;) {
      std::size_t best = a.rows();
      for (std::size_t r = top; r < a.rows(); ++r)
        if (a(r, c) != 0 && (best == a.rows() || abs_big(a(r, c)) < abs_big(a(best, c))))
          best = r;
      if (best == a.rows())
        throw std::invalid_argument("LatticeQuotient: lattice is not of full rank");
      if (best != top)
        for (std::size_t j = 0; j < n; ++j) std::swap(a(top, j), a(best, j));
      bool done = true;
      for (std::size_t r = top + 1; r < a.rows(); ++r) {
        if (a(r, c) == 0) continue;
        BigInt q = a(r, c) / a(top, c);
        for (std::size_t j = c; j < n; ++j) a(r, j) -= q * a(top, j);
        if (a(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(top, c) < 0)
      for (std::size_t j = c; j < n; ++j) a(top, j) = -a(top, j);
    for (std::size_t j = 0; j < n; ++j) hermite_(c, j) = a(top, j);
    ++top;
  }
  // Reduce entries above each pivot to keep the basis small.
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < c; ++r) {
      BigInt q = floor_div(hermite_(r, c), hermite_(c, c));
      if (q != 0)
        for (std::size_t j = c; j < n; ++j) hermite_(r, j) -= q * hermite_(c, j);
    }
}

std::vector<BigInt> LatticeQuotient::reduce(std::vector<BigInt> x) const {
  const std::size_t n = dimension();
  if (x.size() != n) throw std::invalid_argument("LatticeQuotient: dimension mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    BigInt q = floor_div(x[c], hermite_(c, c));
    if (q != 0)
      for (std::size_t j = c; j < n; ++j) x[j] -= q * hermite_(c, j);
  }
  return x;
}

bool LatticeQuotient::contains(const std::vector<BigInt>& x) const {
  auto r = reduce(x);
  return std::all_of(r.begin(), r.end(), [](const BigInt& v) { return v == 0; });
}

BigInt LatticeQuotient::order() const {
  BigInt p = 1;
  for (std::size_t c = 0; c < dimension(); ++c) p *= hermite_(c, c);
  return p;
}

InvariantFactors LatticeQuotient::invariants() const { return abelian_invariants(hermite_); }

// ---------------------------------------------------------------------------
// Arithmetic over Z/p

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = mod_floor(a, p), r = p, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw std::domain_error("inverse_mod: not invertible");
  return mod_floor(old_s, p);
}

namespace {

// Row-reduces m in place over Z/p; returns the pivot column of each pivot row.
std::vector<std::size_t> row_echelon_mod_p(std::vector<std::vector<std::int64_t>>& m,
                                           std::size_t cols, std::int64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (auto& r : m)
    for (auto& v : r) v = mod_floor(v, p);
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const std::int64_t inv = inverse_mod(m[row][c], p);
    for (auto& v : m[row]) v = v * inv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const std::int64_t f = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = mod_floor(m[r][j] - f * m[row][j], p);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<std::int64_t>> kernel_basis_mod_p(
    const std::vector<std::vector<std::int64_t>>& m, std::size_t cols, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("kernel_basis_mod_p: modulus is not prime");
  for (const auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("kernel_basis_mod_p: ragged matrix");
  auto work = m;
  const auto pivots = row_echelon_mod_p(work, cols, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod_floor(-work[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  if (m.empty()) return 0;
  return row_echelon_mod_p(m, m.front().size(), p).size();
}

}  // namespace isohom
