#include "qcoh/scalar.hpp"

#include <charconv>

#include "qcoh/error.hpp"

namespace qcoh {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t reduce_signed(long value, std::uint64_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t mpz_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw Error(ErrorKind::InvalidArgument, "field modulus must be a prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  if (text.rfind("Fp:", 0) == 0 || text.rfind("fp:", 0) == 0) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw Error(ErrorKind::Parse, "bad field modulus '" + std::string(digits) + "'");
    return prime(p);
  }
  throw Error(ErrorKind::Parse, "unknown field descriptor '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(modulus_);
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field_.is_rational())
    rational_ = value;
  else
    residue_ = reduce_signed(value, field_.modulus());
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    rational_ = value;
    rational_.canonicalize();
    return;
  }
  std::uint64_t p = field_.modulus();
  std::uint64_t den = mpz_mod(value.get_den(), p);
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "denominator vanishes modulo " + std::to_string(p));
  residue_ = mpz_mod(value.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw Error(ErrorKind::Parse, "empty scalar");
  mpq_class q;
  if (q.set_str(s, 10) != 0 || (s.find('/') != std::string::npos && q.get_den() == 0))
    throw Error(ErrorKind::Parse, "bad scalar '" + s + "'");
  auto slash = s.find('/');
  if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0)
    throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(rational_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rational_ == 1 : residue_ == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_))
    throw Error(ErrorKind::FieldMismatch, field_.to_string() + " vs " + other.field_.to_string());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInput, "inverse of zero");
  Scalar r = *this;
  if (field_.is_rational())
    r.rational_ = 1 / rational_;
  else
    r.residue_ = pow_mod(residue_, field_.modulus() - 2, field_.modulus());
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational())
    r.rational_ = -rational_;
  else
    r.residue_ = residue_ == 0 ? 0 : field_.modulus() - residue_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational())
    rational_ += other.rational_;
  else
    residue_ = (residue_ + other.residue_) % field_.modulus();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational())
    rational_ -= other.rational_;
  else
    residue_ = (residue_ + field_.modulus() - other.residue_) % field_.modulus();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational())
    rational_ *= other.rational_;
  else
    residue_ = residue_ * other.residue_ % field_.modulus();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? rational_.get_str() : std::to_string(residue_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace qcoh
