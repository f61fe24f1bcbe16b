#pragma once

// Finite abelian groups Z/k1 + ... + Z/ks, their elements, and the exterior
// square with its wedge product.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace isohom {

class AbElement;

class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<std::int64_t> orders);

  /// (Z/k)^rank
  static FinAbGroup homogeneous(std::int64_t k, std::size_t rank);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::int64_t order() const;
  /// lcm of the cyclic orders; 1 for the trivial group.
  std::int64_t exponent() const;

  AbElement zero() const;
  AbElement basis(std::size_t i) const;
  AbElement element(std::vector<std::int64_t> coeffs) const;

  /// Mixed-radix position of x among all elements, in [0, order()).
  std::size_t index_of(const AbElement& x) const;
  AbElement element_at(std::size_t index) const;
  std::vector<AbElement> elements() const;

  /// "(Z/2)^3", "Z/3 + Z/9", "0".
  std::string to_string() const;

  bool operator==(const FinAbGroup&) const = default;

 private:
  std::vector<std::int64_t> orders_;
};

/// Element of a FinAbGroup; coefficients are kept reduced into [0, k_i).
class AbElement {
 public:
  AbElement() = default;
  AbElement(FinAbGroup group, std::vector<std::int64_t> coeffs);

  const FinAbGroup& group() const { return group_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  /// Smallest m >= 1 with m x = 0.
  std::int64_t order() const;

  AbElement& operator+=(const AbElement& rhs);
  AbElement& operator-=(const AbElement& rhs);
  friend AbElement operator+(AbElement lhs, const AbElement& rhs) { return lhs += rhs; }
  friend AbElement operator-(AbElement lhs, const AbElement& rhs) { return lhs -= rhs; }
  AbElement operator-() const;
  friend AbElement operator*(std::int64_t scalar, const AbElement& x);

  bool operator==(const AbElement& other) const { return coeffs_ == other.coeffs_ && group_ == other.group_; }
  std::strong_ordering operator<=>(const AbElement& other) const { return coeffs_ <=> other.coeffs_; }

 private:
  void check_same_group(const AbElement& rhs) const;

  FinAbGroup group_;
  std::vector<std::int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const AbElement& x);

/// Element of the exterior square of a FinAbGroup in the basis e_i ^ e_j,
/// i < j, ordered lexicographically. Coordinate (i, j) lives in
/// Z/gcd(k_i, k_j).
class Wedge2 {
 public:
  Wedge2() = default;
  explicit Wedge2(FinAbGroup group);
  Wedge2(FinAbGroup group, std::vector<std::int64_t> coeffs);

  static Wedge2 basis(const FinAbGroup& group, std::size_t i, std::size_t j);
  /// Number of basis pairs s(s-1)/2.
  static std::size_t dimension(const FinAbGroup& group);
  /// Position of the pair (i, j), i < j, in the lexicographic basis.
  static std::size_t pair_index(std::size_t rank, std::size_t i, std::size_t j);
  /// Modulus of each coordinate.
  static std::vector<std::int64_t> moduli(const FinAbGroup& group);
  /// The exterior square as an abstract group, one cyclic factor per pair.
  static FinAbGroup ambient(const FinAbGroup& group);

  const FinAbGroup& group() const { return group_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(std::size_t i, std::size_t j) const;

  bool is_zero() const;

  Wedge2& operator+=(const Wedge2& rhs);
  Wedge2& operator-=(const Wedge2& rhs);
  friend Wedge2 operator+(Wedge2 lhs, const Wedge2& rhs) { return lhs += rhs; }
  friend Wedge2 operator-(Wedge2 lhs, const Wedge2& rhs) { return lhs -= rhs; }
  Wedge2 operator-() const;
  friend Wedge2 operator*(std::int64_t scalar, const Wedge2& x);

  bool operator==(const Wedge2& other) const { return coeffs_ == other.coeffs_ && group_ == other.group_; }
  std::strong_ordering operator<=>(const Wedge2& other) const { return coeffs_ <=> other.coeffs_; }

  /// "e1^e2 + 2 e3^e4", "0".
  std::string to_string() const;

 private:
  void reduce();
  void check_same_group(const Wedge2& rhs) const;

  FinAbGroup group_;
  std::vector<std::int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Wedge2& w);

/// sum_{i<j} (x_i y_j - x_j y_i) e_i ^ e_j
Wedge2 wedge(const AbElement& x, const AbElement& y);

/// multiplier * sum_{i<j} images[i] ^ images[j]
Wedge2 pairwise_wedge_sum(std::span<const AbElement> images, std::int64_t multiplier);

/// Closure of the elements under addition (finite group, so negation too).
/// The group argument is needed when elements is empty.
std::set<AbElement> subgroup_generated(const FinAbGroup& group,
                                       std::span<const AbElement> elements);

}  // namespace isohom
