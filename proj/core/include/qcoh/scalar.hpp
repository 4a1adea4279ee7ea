#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <string>
#include <string_view>

namespace qcoh {

/// Base field descriptor: the rationals (modulus 0) or a prime field F_p.
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field(); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  constexpr bool is_rational() const noexcept { return modulus_ == 0; }
  constexpr std::uint64_t modulus() const noexcept { return modulus_; }
  std::string to_string() const;

  friend constexpr bool operator==(Field a, Field b) noexcept { return a.modulus_ == b.modulus_; }

 private:
  explicit constexpr Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

/// Exact element of a Field. F_p residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }
  /// Accepts "a", "-a" and "a/b" (decimal).
  static Scalar parse(Field field, std::string_view text);

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;
  std::uint64_t residue() const noexcept { return residue_; }
  const mpq_class& rational() const noexcept { return rational_; }

 private:
  void check_same_field(const Scalar& other) const;

  Field field_;
  std::uint64_t residue_ = 0;
  mpq_class rational_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qcoh
