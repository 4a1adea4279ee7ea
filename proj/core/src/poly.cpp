#include "qcoh/poly.hpp"

#include <sstream>

#include "qcoh/error.hpp"

namespace qcoh {

const char* to_string(Ring ring) {
  switch (ring) {
    case Ring::X: return "x";
    case Ring::XInv: return "xinv";
    case Ring::Laurent: return "laurent";
  }
  return "?";
}

Ring parse_ring(std::string_view text) {
  if (text == "x") return Ring::X;
  if (text == "xinv") return Ring::XInv;
  if (text == "laurent") return Ring::Laurent;
  throw Error(ErrorKind::Parse, "unknown ring '" + std::string(text) + "'");
}

Ring join(Ring a, Ring b) { return a == b ? a : Ring::Laurent; }

Poly Poly::constant(Ring ring, const Scalar& c) { return monomial(ring, c, 0); }

Poly Poly::monomial(Ring ring, const Scalar& c, std::int64_t exponent) {
  Poly p(ring, c.field());
  if (!c.is_zero()) p.terms_.emplace(exponent, c);
  if (!p.fits(ring))
    throw Error(ErrorKind::RingMismatch, "x^" + std::to_string(exponent) + " is not in " + qcoh::to_string(ring));
  return p;
}

Poly Poly::from_terms(Ring ring, Field field, const Terms& terms) {
  Poly p(ring, field);
  for (const auto& [e, c] : terms) {
    if (!(c.field() == field)) throw Error(ErrorKind::FieldMismatch, "coefficient field differs from polynomial field");
    if (!c.is_zero()) p.terms_.emplace(e, c);
  }
  if (!p.fits(ring)) throw Error(ErrorKind::RingMismatch, p.to_string() + " is not in " + qcoh::to_string(ring));
  return p;
}

std::int64_t Poly::degree() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "degree of zero polynomial");
  return terms_.rbegin()->first;
}

std::int64_t Poly::low_degree() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "low degree of zero polynomial");
  return terms_.begin()->first;
}

Scalar Poly::coeff(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Scalar Poly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

Scalar Poly::trailing_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "trailing coefficient of zero polynomial");
  return terms_.begin()->second;
}

bool Poly::fits(Ring ring) const {
  if (terms_.empty() || ring == Ring::Laurent) return true;
  if (ring == Ring::X) return terms_.begin()->first >= 0;
  return terms_.rbegin()->first <= 0;
}

Poly Poly::with_ring(Ring ring) const {
  if (!fits(ring)) throw Error(ErrorKind::RingMismatch, to_string() + " is not in " + qcoh::to_string(ring));
  Poly p = *this;
  p.ring_ = ring;
  return p;
}

Poly Poly::shifted(std::int64_t k) const {
  Poly p(ring_, field_);
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  if (!p.fits(ring_)) p.ring_ = Ring::Laurent;
  return p;
}

Poly Poly::reflected() const {
  Ring r = ring_ == Ring::X ? Ring::XInv : ring_ == Ring::XInv ? Ring::X : Ring::Laurent;
  Poly p(r, field_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly p(ring_, field_);
  if (c.is_zero()) return p;
  for (const auto& [e, v] : terms_) p.terms_.emplace_hint(p.terms_.end(), e, v * c);
  return p;
}

void Poly::add_term(std::int64_t e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p(ring_, field_);
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  if (!(field_ == other.field_)) throw Error(ErrorKind::FieldMismatch, "adding polynomials over different fields");
  ring_ = join(ring_, other.ring_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (!(field_ == other.field_)) throw Error(ErrorKind::FieldMismatch, "subtracting polynomials over different fields");
  ring_ = join(ring_, other.ring_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, "multiplying polynomials over different fields");
  Poly p(join(a.ring_, b.ring_), a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    std::string cs = c.to_string();
    bool negative = field_.is_rational() && !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool unit = cs == "1";
    if (e == 0) {
      os << cs;
      continue;
    }
    if (!unit) os << cs;
    os << "x";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

namespace euclid {

namespace {

// Long division in k[x]; both operands must have nonnegative exponents.
std::pair<Poly, Poly> divmod_x(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero polynomial");
  if (!a.fits(Ring::X) || !b.fits(Ring::X))
    throw Error(ErrorKind::RingMismatch, "k[x] division needs nonnegative exponents");
  Field f = a.field();
  Poly q(Ring::X, f);
  Poly r = a.with_ring(Ring::X);
  const std::int64_t db = b.degree();
  const Scalar inv_lc = b.leading_coefficient().inverse();
  while (!r.is_zero() && r.degree() >= db) {
    std::int64_t shift = r.degree() - db;
    Scalar c = r.leading_coefficient() * inv_lc;
    Poly t = Poly::monomial(Ring::X, c, shift);
    q += t;
    r -= t * b;
  }
  return {q, r.with_ring(Ring::X)};
}

Poly reduce_x(const Poly& f, const Poly& d) { return divmod_x(f, d).second; }

}  // namespace

std::int64_t norm(const Poly& a, Ring ring) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "norm of zero");
  switch (ring) {
    case Ring::X: return a.degree();
    case Ring::XInv: return -a.low_degree();
    case Ring::Laurent: return a.degree() - a.low_degree();
  }
  return 0;
}

bool is_unit(const Poly& a, Ring ring) {
  if (a.is_zero()) return false;
  return ring == Ring::Laurent ? a.is_monomial() : a.is_constant();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, Ring ring) {
  switch (ring) {
    case Ring::X: return divmod_x(a, b);
    case Ring::XInv: {
      auto [q, r] = divmod_x(a.reflected(), b.reflected());
      return {q.reflected(), r.reflected()};
    }
    case Ring::Laurent: {
      if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero polynomial");
      if (a.is_zero()) return {Poly(Ring::Laurent, a.field()), Poly(Ring::Laurent, a.field())};
      const std::int64_t ea = a.low_degree(), eb = b.low_degree();
      auto [q0, r0] = divmod_x(a.shifted(-ea), b.shifted(-eb));
      return {q0.shifted(ea - eb).with_ring(Ring::Laurent), r0.shifted(ea).with_ring(Ring::Laurent)};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "bad ring");
}

std::pair<Poly, Poly> normalize(const Poly& a, Ring ring) {
  Field f = a.field();
  if (a.is_zero()) return {Poly::constant(ring, f, 1), a};
  Poly unit(ring, f);
  switch (ring) {
    case Ring::X: unit = Poly::constant(ring, a.leading_coefficient().inverse()); break;
    case Ring::XInv: unit = Poly::constant(ring, a.trailing_coefficient().inverse()); break;
    case Ring::Laurent:
      unit = Poly::monomial(ring, a.leading_coefficient().inverse(), -a.low_degree());
      break;
  }
  return {unit, (unit * a).with_ring(ring)};
}

Poly gcd(const Poly& a, const Poly& b, Ring ring) {
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = divmod(u, v, ring).second;
    u = std::move(v);
    v = std::move(r);
  }
  return normalize(u, ring).second;
}

bool divides(const Poly& d, const Poly& f, Ring ring) {
  if (d.is_zero()) return f.is_zero();
  return divmod(f, d, ring).second.is_zero();
}

Poly exact_div(const Poly& f, const Poly& d, Ring ring) {
  auto [q, r] = divmod(f, d, ring);
  if (!r.is_zero()) throw Error(ErrorKind::NotInSpan, d.to_string() + " does not divide " + f.to_string());
  return q;
}

Poly reduce(const Poly& f, const Poly& d, Ring ring) {
  if (d.is_zero()) return f;
  Field fld = f.field();
  switch (ring) {
    case Ring::X: return reduce_x(f, d);
    case Ring::XInv: return reduce_x(f.reflected(), d.reflected()).reflected();
    case Ring::Laurent: {
      Poly dn = normalize(d, Ring::Laurent).second;
      if (dn.degree() == 0) return Poly(Ring::Laurent, fld);
      Poly result(Ring::X, fld);
      Poly positive(Ring::X, fld);
      std::map<std::int64_t, Scalar> negative;
      for (const auto& [e, c] : f.terms()) {
        if (e >= 0)
          positive += Poly::monomial(Ring::X, c, e);
        else
          negative.emplace(e, c);
      }
      result = reduce_x(positive, dn);
      if (!negative.empty()) {
        // x^-1 = -(d - d(0)) / (x d(0)) modulo d.
        Scalar d0 = dn.coeff(0);
        Poly g = (dn - Poly::constant(Ring::X, d0)).shifted(-1).with_ring(Ring::X);
        Poly xinv = g.scaled(-d0.inverse());
        Poly power = Poly::constant(Ring::X, fld, 1);
        std::int64_t k = 0;
        for (auto it = negative.rbegin(); it != negative.rend(); ++it) {
          while (k < -it->first) {
            power = reduce_x(power * xinv, dn);
            ++k;
          }
          result += power.scaled(it->second);
        }
        result = reduce_x(result, dn);
      }
      return result.with_ring(Ring::Laurent);
    }
  }
  return f;
}

}  // namespace euclid

}  // namespace qcoh
