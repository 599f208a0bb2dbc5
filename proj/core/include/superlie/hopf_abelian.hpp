#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superlie/parity.hpp"
#include "superlie/scalar.hpp"

namespace superlie {

/// Basis monomial g z^lambda: a character g in Z^r of the torus and exponents
/// lambda over l even and k odd primitive generators (odd exponents are 0/1).
struct Monomial {
  std::vector<std::int64_t> torus;
  std::vector<std::uint32_t> exps;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Generator counts (r, l, k) of an abelian Hopf superalgebra.
struct HopfShape {
  std::size_t r = 0;
  std::size_t l = 0;
  std::size_t k = 0;

  std::size_t unipotent() const { return l + k; }
  Monomial one() const { return {std::vector<std::int64_t>(r), std::vector<std::uint32_t>(l + k)}; }
  Parity parity(const Monomial& m) const;
  /// sum |g_a| + sum lambda_i
  std::uint64_t degree(const Monomial& m) const;
  bool is_unipotent(const Monomial& m) const;
  /// Mask of the odd generators present in m (bit i = odd generator i).
  std::uint32_t odd_mask(const Monomial& m) const;
  /// Product a*b as (sign, monomial); sign 0 when an odd generator repeats.
  std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const HopfShape&, const HopfShape&) = default;
};

/// Element of an abelian Hopf superalgebra: finite sum of monomials.
class HopfElement {
 public:
  HopfElement() = default;
  explicit HopfElement(HopfShape shape) : shape_(shape) {}
  static HopfElement monomial(HopfShape shape, Monomial m, const Scalar& c = Scalar(1));
  static HopfElement constant(HopfShape shape, const Scalar& c);

  const HopfShape& shape() const { return shape_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  std::optional<Parity> parity() const;
  /// True when every term contains an odd generator, which is exactly nilpotency.
  bool is_nilpotent() const;

  void add_term(const Monomial& m, const Scalar& c);
  HopfElement& operator+=(const HopfElement& o);
  HopfElement& operator-=(const HopfElement& o);
  HopfElement& operator*=(const Scalar& s);
  friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
  friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
  friend HopfElement operator*(HopfElement a, const Scalar& s) { return a *= s; }
  friend HopfElement operator*(const Scalar& s, HopfElement a) { return a *= s; }
  friend HopfElement operator*(const HopfElement& a, const HopfElement& b);
  HopfElement operator-() const { return (*this) * Scalar(-1); }
  friend bool operator==(const HopfElement& a, const HopfElement& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }

  HopfElement power(std::size_t n) const;

 private:
  void check(const HopfElement& o) const;
  HopfShape shape_;
  std::map<Monomial, Scalar> terms_;
};

/// Element of A_1 (x) ... (x) A_n with the Koszul product
/// (a_1 (x) ... (x) a_n)(b_1 (x) ... (x) b_n) = sign * a_1 b_1 (x) ... (x) a_n b_n.
class HopfTensor {
 public:
  HopfTensor() = default;
  explicit HopfTensor(std::vector<HopfShape> shapes) : shapes_(std::move(shapes)) {}
  /// a (x) b for elements.
  static HopfTensor tensor(const HopfElement& a, const HopfElement& b);
  /// Embeds a single element as a one-factor tensor.
  static HopfTensor single(const HopfElement& a);

  const std::vector<HopfShape>& shapes() const { return shapes_; }
  const std::map<std::vector<Monomial>, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const std::vector<Monomial>& key) const;

  void add_term(const std::vector<Monomial>& key, const Scalar& c);
  HopfTensor& operator+=(const HopfTensor& o);
  HopfTensor& operator-=(const HopfTensor& o);
  HopfTensor& operator*=(const Scalar& s);
  friend HopfTensor operator+(HopfTensor a, const HopfTensor& b) { return a += b; }
  friend HopfTensor operator-(HopfTensor a, const HopfTensor& b) { return a -= b; }
  friend HopfTensor operator*(HopfTensor a, const Scalar& s) { return a *= s; }
  friend HopfTensor operator*(const HopfTensor& a, const HopfTensor& b);
  friend bool operator==(const HopfTensor& a, const HopfTensor& b) {
    return a.shapes_ == b.shapes_ && a.terms_ == b.terms_;
  }

  /// Replaces factor p of every term by the tensor f(monomial), whose factors
  /// have the shapes `replacement`. Only valid for even maps f.
  template <class F>
  HopfTensor map_factor(std::size_t p, const std::vector<HopfShape>& replacement, F&& f) const;

 private:
  void check(const HopfTensor& o) const;
  std::vector<HopfShape> shapes_;
  std::map<std::vector<Monomial>, Scalar> terms_;
};

/// Coordinate Hopf superalgebra of X_s x G_a^l x (G_a^-)^k with D = Z^r:
///   Delta(g z^lambda) = (g (x) g) sum_{mu <= lambda} (-1)^{k(lambda,mu)} C(lambda,mu) z^mu (x) z^{lambda-mu}
/// where k(lambda,mu) counts pairs of odd indices j < i with mu_i = 1 and
/// (lambda - mu)_j = 1, eps(g z^lambda) = [lambda = 0], S(g z^lambda) = (-1)^{|lambda|} g^{-1} z^lambda.
class AbelianHopfAlgebra {
 public:
  AbelianHopfAlgebra(std::size_t r, std::size_t l, std::size_t k, std::vector<std::string> torus_names = {},
                     std::vector<std::string> names = {});

  const HopfShape& shape() const { return shape_; }
  std::size_t r() const { return shape_.r; }
  std::size_t l() const { return shape_.l; }
  std::size_t k() const { return shape_.k; }

  HopfElement one() const { return HopfElement::constant(shape_, 1); }
  HopfElement zero() const { return HopfElement(shape_); }
  /// The group-like t_a^exponent.
  HopfElement grouplike(std::size_t a, std::int64_t exponent = 1) const;
  /// The primitive generator z_i (0-based over the l even then k odd ones).
  HopfElement generator(std::size_t i) const;
  HopfElement monomial(const Monomial& m, const Scalar& c = Scalar(1)) const;
  /// Generator by display name.
  HopfElement named(const std::string& name) const;

  HopfTensor comultiply(const Monomial& m) const;
  HopfTensor comultiply(const HopfElement& a) const;
  Scalar counit(const Monomial& m) const;
  Scalar counit(const HopfElement& a) const;
  HopfElement antipode(const HopfElement& a) const;

  /// Sign (-1)^{k(lambda,mu)} times the flip applied by corrupt_sign, if any.
  int comultiplication_sign(const std::vector<std::uint32_t>& lambda, const std::vector<std::uint32_t>& mu) const;
  /// Flips the sign of the single term mu of Delta(z^lambda) (for mutation tests).
  void corrupt_sign(std::vector<std::uint32_t> lambda, std::vector<std::uint32_t> mu);

  /// All basis monomials with degree <= d, ordered by degree.
  std::vector<Monomial> basis_up_to(std::size_t d) const;

  std::string format(const Monomial& m) const;
  std::string format(const HopfElement& a) const;

 private:
  HopfShape shape_;
  std::vector<std::string> torus_names_;
  std::vector<std::string> names_;
  std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> corrupted_;
};

/// Hopf superalgebra generated freely (up to supercommutativity) by group-like
/// and primitive even generators and primitive odd generators.
enum class GeneratorKind { GroupLike, EvenPrimitive, OddPrimitive };

class FreeHopfSuperalgebra {
 public:
  explicit FreeHopfSuperalgebra(const std::vector<std::pair<std::string, GeneratorKind>>& generators);

  const AbelianHopfAlgebra& hopf() const { return hopf_; }
  HopfElement operator[](const std::string& name) const { return hopf_.named(name); }

 private:
  static AbelianHopfAlgebra build(const std::vector<std::pair<std::string, GeneratorKind>>& generators);
  AbelianHopfAlgebra hopf_;
};

/// Renders a tensor using the generator names of each factor algebra.
std::string format_tensor(const HopfTensor& t, const std::vector<const AbelianHopfAlgebra*>& factors);

/// Tensor helpers used by the axiom scans. All maps involved are even, so no
/// signs arise from applying them to a single factor.
HopfTensor apply_comultiplication(const AbelianHopfAlgebra& h, const HopfTensor& t, std::size_t factor);
HopfTensor apply_counit(const AbelianHopfAlgebra& h, const HopfTensor& t, std::size_t factor);
HopfTensor apply_antipode(const AbelianHopfAlgebra& h, const HopfTensor& t, std::size_t factor);
/// Multiplies factors p and p+1 together.
HopfTensor multiply_factors(const HopfTensor& t, std::size_t p);
/// Collapses a one-factor tensor to an element.
HopfElement to_element(const HopfTensor& t);

struct HopfReport {
  bool coassociative = true;
  bool counit = true;
  bool antipode = true;
  std::size_t monomials_checked = 0;
  std::optional<Monomial> witness;
  std::string failure;

  bool ok() const { return coassociative && counit && antipode; }
};

/// Scans coassociativity, both counit laws and both antipode laws on every
/// basis monomial of degree <= d; the first failure is reported with its monomial.
HopfReport verify_hopf(const AbelianHopfAlgebra& h, std::size_t d);
inline HopfReport verify_hopf(const FreeHopfSuperalgebra& f, std::size_t d) { return verify_hopf(f.hopf(), d); }

template <class F>
HopfTensor HopfTensor::map_factor(std::size_t p, const std::vector<HopfShape>& replacement, F&& f) const {
  std::vector<HopfShape> shapes;
  shapes.insert(shapes.end(), shapes_.begin(), shapes_.begin() + static_cast<std::ptrdiff_t>(p));
  shapes.insert(shapes.end(), replacement.begin(), replacement.end());
  shapes.insert(shapes.end(), shapes_.begin() + static_cast<std::ptrdiff_t>(p) + 1, shapes_.end());
  HopfTensor out(shapes);
  for (const auto& [key, c] : terms_) {
    const HopfTensor image = f(key[p]);
    for (const auto& [ikey, ic] : image.terms()) {
      std::vector<Monomial> k;
      k.insert(k.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(p));
      k.insert(k.end(), ikey.begin(), ikey.end());
      k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(p) + 1, key.end());
      out.add_term(k, c * ic);
    }
  }
  return out;
}

}  // namespace superlie
