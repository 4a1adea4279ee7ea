#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "qcoh/scalar.hpp"

namespace qcoh {

/// The three coordinate rings of the projective line: k[x], k[x^-1] and k[x,x^-1].
enum class Ring { X, XInv, Laurent };

const char* to_string(Ring ring);
/// Accepts "x", "xinv" and "laurent".
Ring parse_ring(std::string_view text);
/// Smallest of the three rings containing both.
Ring join(Ring a, Ring b);

/// Laurent polynomial tagged with the coordinate ring it is declared to live in.
///
/// Coefficients are stored sparsely by exponent; zero coefficients are never stored.
/// Arithmetic treats every operand as an element of k[x,x^-1] and tags the result
/// with the join of the operand rings.
class Poly {
 public:
  using Terms = std::map<std::int64_t, Scalar>;

  Poly() = default;
  Poly(Ring ring, Field field) : ring_(ring), field_(field) {}

  static Poly zero(Ring ring, Field field) { return Poly(ring, field); }
  static Poly constant(Ring ring, const Scalar& c);
  static Poly constant(Ring ring, Field field, long c) { return constant(ring, Scalar(field, c)); }
  static Poly monomial(Ring ring, const Scalar& c, std::int64_t exponent);
  static Poly x_power(Ring ring, Field field, std::int64_t exponent) {
    return monomial(ring, Scalar::one(field), exponent);
  }
  /// Throws RingMismatch if an exponent is not allowed in `ring`.
  static Poly from_terms(Ring ring, Field field, const Terms& terms);

  Ring ring() const noexcept { return ring_; }
  Field field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second.is_one(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Highest exponent; throws ZeroInput on the zero polynomial.
  std::int64_t degree() const;
  /// Lowest exponent; throws ZeroInput on the zero polynomial.
  std::int64_t low_degree() const;
  Scalar coeff(std::int64_t exponent) const;
  Scalar leading_coefficient() const;
  Scalar trailing_coefficient() const;

  bool fits(Ring ring) const;
  /// Retag; throws RingMismatch when the exponents do not fit.
  Poly with_ring(Ring ring) const;
  /// Multiply by x^k. Keeps the tag when the result still fits it, otherwise Laurent.
  Poly shifted(std::int64_t k) const;
  /// Substitute x -> x^-1, swapping k[x] and k[x^-1].
  Poly reflected() const;
  Poly scaled(const Scalar& c) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  /// Equality as elements of k[x,x^-1]; ring tags are ignored.
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, e.g. "3x^-2 + x - 1".
  std::string to_string() const;

 private:
  void add_term(std::int64_t e, const Scalar& c);

  Ring ring_ = Ring::Laurent;
  Field field_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Euclidean structure of the coordinate rings. k[x^-1] reuses the k[x] code path
/// through exponent reflection; k[x,x^-1] uses the exponent span as Euclidean norm.
namespace euclid {

std::int64_t norm(const Poly& a, Ring ring);
bool is_unit(const Poly& a, Ring ring);
/// a = q*b + r with r = 0 or norm(r) < norm(b).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, Ring ring);
/// Returns (u, u*a) with u a unit and u*a the normalized associate: monic for k[x],
/// monic in x^-1 for k[x^-1], and for k[x,x^-1] a monic polynomial with nonzero constant term.
std::pair<Poly, Poly> normalize(const Poly& a, Ring ring);
Poly gcd(const Poly& a, const Poly& b, Ring ring);
bool divides(const Poly& d, const Poly& f, Ring ring);
/// Throws NotInSpan if d does not divide f.
Poly exact_div(const Poly& f, const Poly& d, Ring ring);
/// Canonical residue of f modulo the normalized nonzero divisor d. For k[x,x^-1] the
/// residue is supported in exponents [0, deg d).
Poly reduce(const Poly& f, const Poly& d, Ring ring);

}  // namespace euclid

}  // namespace qcoh
