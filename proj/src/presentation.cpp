#include "isohom/presentation.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace isohom {

// ---------------------------------------------------------------------------
// Words

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& x : letters_)
    if (x.exponent != 1 && x.exponent != -1)
      throw std::invalid_argument("Word: letter exponents must be +1 or -1");
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::power(std::size_t e) const {
  Word out;
  for (std::size_t i = 0; i < e; ++i) out *= *this;
  return out;
}

void Word::append(const Letter& x) {
  if (x.exponent != 1 && x.exponent != -1)
    throw std::invalid_argument("Word: letter exponents must be +1 or -1");
  letters_.push_back(x);
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::vector<std::int64_t> Word::degrees(Factor factor, std::size_t generator_count) const {
  std::vector<std::int64_t> deg(generator_count, 0);
  for (const auto& x : letters_) {
    if (x.factor != factor) continue;
    if (x.index >= generator_count) throw std::out_of_range("Word::degrees: generator index");
    deg[x.index] += x.exponent;
  }
  return deg;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  if (w.empty()) return os << "1";
  bool first = true;
  for (const auto& x : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << (x.factor == Factor::First ? 'a' : 'b') << (x.index + 1);
    if (x.exponent < 0) os << "^-1";
  }
  return os;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  for (const auto& x : w.letters()) {
    if (!stack.empty() && stack.back() == x.inverse())
      stack.pop_back();
    else
      stack.push_back(x);
  }
  return Word(std::move(stack));
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

// ---------------------------------------------------------------------------
// Presentations

OrbifoldPresentation::OrbifoldPresentation(Factor factor, std::size_t generators,
                                           std::int64_t order)
    : factor_(factor), n_(generators), k_(order) {
  if (n_ < 3) throw std::invalid_argument("OrbifoldPresentation: need at least 3 generators");
  if (k_ < 2) throw std::invalid_argument("OrbifoldPresentation: order must be >= 2");
}

std::vector<Word> OrbifoldPresentation::relators() const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < n_; ++i)
    out.push_back(Word{generator(i)}.power(static_cast<std::size_t>(k_)));
  Word product;
  for (std::size_t i = 0; i < n_; ++i) product.append(generator(i));
  out.push_back(std::move(product));
  return out;
}

ProductPresentation::ProductPresentation(OrbifoldPresentation first,
                                         OrbifoldPresentation second)
    : first_(first), second_(second) {
  if (first_.factor() != Factor::First || second_.factor() != Factor::Second)
    throw std::invalid_argument("ProductPresentation: factors must be tagged First, Second");
}

Letter ProductPresentation::generator(std::size_t flat_index) const {
  if (flat_index < first_.generators()) return first_.generator(flat_index);
  if (flat_index < generator_count()) return second_.generator(flat_index - first_.generators());
  throw std::out_of_range("ProductPresentation::generator: index out of range");
}

std::size_t ProductPresentation::flat_index(const Letter& x) const {
  if (x.factor == Factor::First) {
    if (x.index >= first_.generators()) throw std::out_of_range("letter index out of range");
    return x.index;
  }
  if (x.index >= second_.generators()) throw std::out_of_range("letter index out of range");
  return first_.generators() + x.index;
}

std::vector<Word> ProductPresentation::relators() const {
  auto out = first_.relators();
  auto rest = second_.relators();
  out.insert(out.end(), rest.begin(), rest.end());
  for (std::size_t i = 0; i < first_.generators(); ++i)
    for (std::size_t j = 0; j < second_.generators(); ++j)
      out.push_back(commutator(Word{first_.generator(i)}, Word{second_.generator(j)}));
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms to G

GeneratingSystem::GeneratingSystem(FinAbGroup g, std::vector<AbElement> imgs)
    : group(std::move(g)), images(std::move(imgs)) {
  for (const auto& x : images)
    if (x.group() != group) throw std::invalid_argument("GeneratingSystem: image from another group");
}

GeneratingSystem GeneratingSystem::from_coeffs(
    const FinAbGroup& g, const std::vector<std::vector<std::int64_t>>& coeffs) {
  std::vector<AbElement> imgs;
  for (const auto& c : coeffs) imgs.push_back(g.element(c));
  return GeneratingSystem(g, std::move(imgs));
}

AbElement evaluate(const GeneratingSystem& hom, const Word& w) {
  AbElement sum = hom.group.zero();
  for (const auto& x : w.letters()) {
    if (x.index >= hom.images.size()) throw std::out_of_range("evaluate: generator index out of range");
    if (x.exponent > 0)
      sum += hom.images[x.index];
    else
      sum -= hom.images[x.index];
  }
  return sum;
}

DifferenceHom::DifferenceHom(GeneratingSystem phi, GeneratingSystem psi)
    : phi_(std::move(phi)), psi_(std::move(psi)) {
  if (phi_.group != psi_.group) throw std::invalid_argument("DifferenceHom: different target groups");
}

AbElement DifferenceHom::image(const Letter& x) const {
  const auto& sys = x.factor == Factor::First ? phi_ : psi_;
  if (x.index >= sys.images.size()) throw std::out_of_range("DifferenceHom: generator index out of range");
  AbElement g = sys.images[x.index];
  if (x.factor == Factor::Second) g = -g;
  return x.exponent > 0 ? g : -g;
}

AbElement DifferenceHom::operator()(const Word& w) const {
  AbElement sum = group().zero();
  for (const auto& x : w.letters()) sum += image(x);
  return sum;
}

DifferenceHom difference_hom(const GeneratingSystem& phi, const GeneratingSystem& psi) {
  return DifferenceHom(phi, psi);
}

namespace {

std::string join_failures(const std::vector<std::string>& failures) {
  std::string out = "invalid case";
  for (std::size_t i = 0; i < failures.size(); ++i) out += (i ? "; " : ": ") + failures[i];
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> failures)
    : std::runtime_error(join_failures(failures)), failures_(std::move(failures)) {}

ValidationReport validate_generating_system(const GeneratingSystem& sys,
                                            std::int64_t branch_order) {
  ValidationReport report;
  if (sys.images.empty()) {
    report.nonempty = false;
    report.failures.push_back("empty generating system");
    return report;
  }
  if (sys.images.size() < 3) {
    report.enough_branch_points = false;
    report.failures.push_back("fewer than 3 branch points");
  }
  AbElement sum = sys.group.zero();
  for (const auto& x : sys.images) sum += x;
  if (!sum.is_zero()) {
    report.product_zero = false;
    std::ostringstream msg;
    msg << "images do not sum to zero (sum is " << sum << ')';
    report.failures.push_back(msg.str());
  }
  if (subgroup_generated(sys.group, sys.images).size() !=
      static_cast<std::size_t>(sys.group.order())) {
    report.generates = false;
    report.failures.push_back("images do not generate " + sys.group.to_string());
  }
  for (std::size_t i = 0; i < sys.images.size(); ++i) {
    if (sys.images[i].is_zero()) {
      report.nonzero_images = false;
      report.failures.push_back("image " + std::to_string(i + 1) + " is zero");
    } else if (branch_order > 0 && sys.images[i].order() != branch_order) {
      report.orders_match = false;
      report.failures.push_back("image " + std::to_string(i + 1) + " has order " +
                                std::to_string(sys.images[i].order()) + ", expected " +
                                std::to_string(branch_order));
    }
  }
  return report;
}

bool freeness_check(const GeneratingSystem& phi, const GeneratingSystem& psi) {
  if (phi.group != psi.group) throw std::invalid_argument("freeness_check: different groups");
  auto cyclic_union = [](const GeneratingSystem& sys) {
    std::set<AbElement> out;
    for (const auto& g : sys.images) {
      auto sub = subgroup_generated(sys.group, std::span<const AbElement>(&g, 1));
      out.insert(sub.begin(), sub.end());
    }
    return out;
  };
  const auto left = cyclic_union(phi);
  const auto right = cyclic_union(psi);
  for (const auto& x : left)
    if (!x.is_zero() && right.count(x)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ProductAction

ProductAction ProductAction::from_systems(GeneratingSystem phi, GeneratingSystem psi) {
  std::int64_t k = 0;
  for (const auto* sys : {&phi, &psi})
    for (const auto& x : sys->images) k = std::max(k, x.order());
  return ProductAction{k, std::move(phi), std::move(psi)};
}

ProductPresentation ProductAction::presentation() const {
  return ProductPresentation(OrbifoldPresentation(Factor::First, n(), k),
                             OrbifoldPresentation(Factor::Second, m(), k));
}

std::vector<std::string> ProductAction::validate() const {
  std::vector<std::string> failures;
  if (phi.group != psi.group) failures.push_back("phi and psi target different groups");
  for (const auto& [name, sys] : {std::pair{"phi", &phi}, std::pair{"psi", &psi}}) {
    auto report = validate_generating_system(*sys, k);
    for (auto& f : report.failures) failures.push_back(std::string(name) + ": " + f);
  }
  return failures;
}

void ProductAction::require_valid() const {
  if (auto failures = validate(); !failures.empty()) throw ValidationError(std::move(failures));
}

}  // namespace isohom
