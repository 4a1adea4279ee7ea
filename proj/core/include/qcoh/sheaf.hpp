#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcoh/birkhoff.hpp"
#include "qcoh/module.hpp"

namespace qcoh {

/// A closed point of P^1: a finite a in k, or infinity.
struct Point {
  bool at_infinity = false;
  Scalar a;

  static Point finite(const Scalar& a) { return Point{false, a}; }
  static Point infinity(Field field) { return Point{true, Scalar::zero(field)}; }
  std::string to_string() const { return at_infinity ? "inf" : a.to_string(); }
};

/// Coordinate split and Birkhoff data of a valid sheaf, computed once and shared.
struct SheafStructure {
  std::vector<std::size_t> m_t, m_f, p_t, p_f, n_t, n_f;
  std::size_t rank = 0;
  PolyMatrix sigma_ff, tau_ff, sigma_ff_inv, transition;  // k[x,x^-1]
  PolyMatrix sigma_tt, sigma_tf, tau_tt, tau_tf;          // torsion rows of sigma, tau
  SplittingData splitting;
};

/// Quasi-coherent sheaf on P^1 as a representation M -> P <- N with M over k[x],
/// P over k[x,x^-1], N over k[x^-1]. Modules are diagonal; sigma and tau are given on
/// generators with entries reduced modulo the relations of P.
class QcohSheaf {
 public:
  QcohSheaf() : QcohSheaf(Field::rationals()) {}
  explicit QcohSheaf(Field field);
  /// Throws InvalidSheaf when sigma or tau does not respect the relations.
  QcohSheaf(FpModule M, FpModule P, FpModule N, PolyMatrix sigma, PolyMatrix tau);

  /// General presentation: each module is R^gens / im(relations).
  static QcohSheaf from_presentation(Field field, std::size_t m_gens, const PolyMatrix& m_rel, std::size_t p_gens,
                                     const PolyMatrix& p_rel, std::size_t n_gens, const PolyMatrix& n_rel,
                                     const PolyMatrix& sigma, const PolyMatrix& tau);
  static QcohSheaf line_bundle(Field field, std::int64_t n);
  /// Skyscraper of length `mult` at a point. Throws InvalidArgument when mult < 1.
  static QcohSheaf torsion(const Point& point, int mult);
  static QcohSheaf torsion(Field field, const Poly& divisor_x);
  /// Locally free sheaf (k[x]^r -id-> k[x,x^-1]^r <-T- k[x^-1]^r). Throws NotInvertible.
  static QcohSheaf from_transition_matrix(const PolyMatrix& T);
  static QcohSheaf line_bundle_sum(Field field, const std::vector<std::int64_t>& twists);

  Field field() const noexcept { return field_; }
  const FpModule& M() const noexcept { return M_; }
  const FpModule& P() const noexcept { return P_; }
  const FpModule& N() const noexcept { return N_; }
  const PolyMatrix& sigma() const noexcept { return sigma_; }
  const PolyMatrix& tau() const noexcept { return tau_; }

  bool is_zero() const { return M_.is_zero() && P_.is_zero() && N_.is_zero(); }
  /// No torsion coordinates in M and N.
  bool is_locally_free() const;
  /// Free rank (0 for torsion sheaves).
  std::size_t rank() const { return P_.free_rank(); }

  /// Coordinate split and splitting data. Throws InvalidSheaf if the sheaf is not quasi-coherent.
  const SheafStructure& structure() const;

  friend QcohSheaf direct_sum(const QcohSheaf& a, const QcohSheaf& b);
  /// Structural equality of the diagonal presentations.
  friend bool operator==(const QcohSheaf& a, const QcohSheaf& b);

  std::string to_string() const;

 private:
  Field field_;
  FpModule M_, P_, N_;
  PolyMatrix sigma_, tau_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

QcohSheaf direct_sum(const std::vector<QcohSheaf>& parts, Field field);

/// A sheaf read from an arbitrary presentation together with the coordinate changes
/// into its diagonal form: new = pi * old, old = lambda * new.
struct SheafPresentation {
  QcohSheaf sheaf;
  PolyMatrix pi_M, lambda_M, pi_P, lambda_P, pi_N, lambda_N;
};

/// Same checks as QcohSheaf::from_presentation.
SheafPresentation present_sheaf(Field field, std::size_t m_gens, const PolyMatrix& m_rel, std::size_t p_gens,
                                const PolyMatrix& p_rel, std::size_t n_gens, const PolyMatrix& n_rel,
                                const PolyMatrix& sigma, const PolyMatrix& tau);

struct ValidationReport {
  bool valid = true;
  std::string violation;  ///< empty when valid
  /// Powers of x (resp. x^-1) annihilating kernel and cokernel of sigma (resp. tau).
  std::int64_t sigma_kernel_exponent = 0, sigma_cokernel_exponent = 0;
  std::int64_t tau_kernel_exponent = 0, tau_cokernel_exponent = 0;
};

/// Checks relation-compatibility and that S^-1 sigma and T^-1 tau are isomorphisms.
ValidationReport validate(const QcohSheaf& F);

/// Morphism of representations, given on generators.
class SheafMorphism {
 public:
  SheafMorphism() = default;
  /// Entries are reduced modulo the target relations. Throws InvalidMorphism when a
  /// component is not well defined or a square fails to commute.
  SheafMorphism(QcohSheaf source, QcohSheaf target, PolyMatrix phi_M, PolyMatrix phi_P, PolyMatrix phi_N);
  static SheafMorphism zero(const QcohSheaf& source, const QcohSheaf& target);
  static SheafMorphism identity(const QcohSheaf& F);
  /// Skips the commutativity check (used for internal constructions already known to be valid).
  static SheafMorphism unchecked(QcohSheaf source, QcohSheaf target, PolyMatrix phi_M, PolyMatrix phi_P, PolyMatrix phi_N);

  const QcohSheaf& source() const noexcept { return source_; }
  const QcohSheaf& target() const noexcept { return target_; }
  const PolyMatrix& phi_M() const noexcept { return phi_M_; }
  const PolyMatrix& phi_P() const noexcept { return phi_P_; }
  const PolyMatrix& phi_N() const noexcept { return phi_N_; }

  bool is_zero() const { return phi_M_.is_zero() && phi_P_.is_zero() && phi_N_.is_zero(); }
  /// Empty string when both squares commute and every component is well defined.
  std::string check() const;

  SheafMorphism scaled(const Scalar& c) const;
  friend SheafMorphism operator+(const SheafMorphism& a, const SheafMorphism& b);
  friend SheafMorphism operator-(const SheafMorphism& a, const SheafMorphism& b);
  /// g ∘ f
  friend SheafMorphism compose(const SheafMorphism& g, const SheafMorphism& f);
  friend bool operator==(const SheafMorphism& a, const SheafMorphism& b);

 private:
  QcohSheaf source_, target_;
  PolyMatrix phi_M_, phi_P_, phi_N_;
};

}  // namespace qcoh
