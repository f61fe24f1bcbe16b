#pragma once

// Exact integer linear algebra: Smith normal form, invariant factors of
// finitely presented abelian groups, lattice quotients and kernels over Z/p.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace isohom {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void append_row(std::span<const BigInt> row);
  void append_row(std::span<const std::int64_t> row);

  bool is_diagonal() const;
  bool operator==(const IntMatrix& other) const = default;

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& m);

/// Canonical decomposition Z^free_rank + Z/d1 + ... + Z/dt with d1 | d2 | ...
/// and every di >= 2.
struct InvariantFactors {
  std::vector<BigInt> factors;
  std::size_t free_rank = 0;

  InvariantFactors() = default;
  InvariantFactors(std::initializer_list<long long> torsion, std::size_t free = 0);

  /// Builds the canonical form from an arbitrary list of cyclic orders;
  /// zeros count as free factors and ones are dropped.
  static InvariantFactors from_cyclic_orders(std::vector<BigInt> orders);

  bool is_finite() const { return free_rank == 0; }
  /// Order of the torsion part.
  BigInt torsion_order() const;
  /// "Z/2 ⊕ Z/4", "0" for the trivial group, "Z^2 ⊕ Z/3" with free part.
  std::string to_string() const;
  std::vector<std::int64_t> to_int64() const;

  bool operator==(const InvariantFactors& other) const = default;
};

std::ostream& operator<<(std::ostream& os, const InvariantFactors& f);

struct SmithDecomposition {
  IntMatrix diagonal;  // D
  IntMatrix left;      // U
  IntMatrix right;     // V, with U * A * V == D
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Invariant factors of the cokernel of the relation rows. When
/// generator_orders is given, a row orders[i] * e_i is appended per generator.
InvariantFactors abelian_invariants(
    const IntMatrix& relations,
    const std::optional<std::vector<std::int64_t>>& generator_orders = std::nullopt);

/// Quotient Z^n / L for a full-rank lattice L given by generating rows.
/// Holds the Hermite form of L, which gives a unique representative per coset.
class LatticeQuotient {
 public:
  LatticeQuotient(const IntMatrix& generators);

  std::size_t dimension() const { return hermite_.cols(); }
  /// Canonical coset representative: entry c lies in [0, hermite(c, c)).
  std::vector<BigInt> reduce(std::vector<BigInt> x) const;
  bool contains(const std::vector<BigInt>& x) const;
  BigInt order() const;
  InvariantFactors invariants() const;
  const IntMatrix& hermite() const { return hermite_; }

 private:
  IntMatrix hermite_;
};

bool is_prime(std::int64_t p);

/// Basis of the kernel of x -> M x over Z/p, where M has one row per output
/// coordinate. Vectors are returned with entries in [0, p).
std::vector<std::vector<std::int64_t>> kernel_basis_mod_p(
    const std::vector<std::vector<std::int64_t>>& m, std::size_t cols,
    std::int64_t p);

/// Rank of a matrix over Z/p.
std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p);

std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

}  // namespace isohom
