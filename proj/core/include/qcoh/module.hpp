#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "qcoh/poly_matrix.hpp"

namespace qcoh {

/// Finitely presented module over one coordinate ring, kept in diagonal form
/// R/(d_0) ⊕ R/(d_1) ⊕ ... where d_i = 0 marks a free coordinate and every nonzero
/// d_i is a normalized non-unit. Coordinates may appear in any order.
class FpModule {
 public:
  FpModule() = default;
  FpModule(Ring ring, Field field) : ring_(ring), field_(field) {}
  /// Divisors are normalized; unit divisors are rejected (use from_presentation to drop them).
  FpModule(Ring ring, Field field, std::vector<Poly> divisors);

  static FpModule free(Ring ring, Field field, std::size_t rank);

  struct Normalized;
  /// Module R^gens / im(relations). pi maps old generator coordinates to the new ones,
  /// lambda expresses each new generator in the old coordinates.
  static Normalized from_presentation(Ring ring, Field field, std::size_t gens, const PolyMatrix& relations);

  Ring ring() const noexcept { return ring_; }
  Field field() const noexcept { return field_; }
  std::size_t size() const noexcept { return divisors_.size(); }
  bool is_zero() const noexcept { return divisors_.empty(); }
  const std::vector<Poly>& divisors() const noexcept { return divisors_; }
  const Poly& divisor(std::size_t i) const { return divisors_[i]; }
  bool is_free_coord(std::size_t i) const { return divisors_[i].is_zero(); }

  std::size_t free_rank() const;
  bool is_torsion() const { return free_rank() == 0; }
  std::vector<std::size_t> free_coords() const;
  std::vector<std::size_t> torsion_coords() const;
  /// Dimension over k of R/(d_i); throws InfiniteDimensional for free coordinates.
  std::int64_t coord_dimension(std::size_t i) const;
  /// Dimension over k; throws InfiniteDimensional when the module has a free part.
  std::int64_t dimension() const;

  /// Invariant factors d_1 | d_2 | ... of the torsion part (normalized, non-unit).
  std::vector<Poly> invariant_factors() const;
  /// Presentation-independent equality (free rank and invariant factors).
  bool isomorphic(const FpModule& other) const;

  /// Diagonal relation matrix diag(d_i).
  PolyMatrix relation_matrix() const;
  /// Canonical residues of the rows of m (rows indexed by this module's coordinates).
  PolyMatrix reduce(const PolyMatrix& m) const;
  Poly reduce_entry(std::size_t coord, const Poly& p) const;

  /// R^a ⊕ R^b with coordinates concatenated.
  friend FpModule direct_sum(const FpModule& a, const FpModule& b);
  friend bool operator==(const FpModule& a, const FpModule& b) {
    return a.ring_ == b.ring_ && a.field_ == b.field_ && a.divisors_ == b.divisors_;
  }

  std::string to_string() const;

 private:
  Ring ring_ = Ring::X;
  Field field_;
  std::vector<Poly> divisors_;
};

struct FpModule::Normalized {
  FpModule module;
  PolyMatrix pi;      ///< new coordinates x old coordinates
  PolyMatrix lambda;  ///< old coordinates x new coordinates
};

/// Module homomorphism between diagonal modules: matrix with target rows and source columns.
struct ModuleMap {
  FpModule source, target;
  PolyMatrix matrix;
};

/// Whether a matrix defines a well-defined map source -> target.
bool is_well_defined(const FpModule& source, const FpModule& target, const PolyMatrix& matrix);

struct ModuleKernel {
  FpModule module;
  PolyMatrix inclusion;  ///< source coordinates x kernel coordinates
};
struct ModuleCokernel {
  FpModule module;
  PolyMatrix projection;  ///< cokernel coordinates x target coordinates
  PolyMatrix section;     ///< target coordinates x cokernel coordinates (lifts of generators)
};

ModuleKernel kernel(const FpModule& source, const FpModule& target, const PolyMatrix& matrix);
ModuleCokernel cokernel(const FpModule& source, const FpModule& target, const PolyMatrix& matrix);

/// Solve inclusion * c ≡ rhs modulo the relations of `ambient`; columns of rhs are
/// elements of `ambient`. Returns nullopt if some column is outside the image.
std::optional<PolyMatrix> lift_through(const FpModule& ambient, const PolyMatrix& inclusion, const PolyMatrix& rhs);

/// Localization to k[x,x^-1]: every divisor is re-normalized over the Laurent ring and
/// coordinates whose divisor becomes a unit are dropped. Returns the kept coordinates.
std::pair<FpModule, std::vector<std::size_t>> localize(const FpModule& m);

/// The torsion divisor x^k * g (k[x]) split into the valuation k at 0 and the rest g;
/// for k[x^-1] the valuation is at infinity.
std::pair<std::int64_t, Poly> split_valuation(const Poly& d, Ring ring);

/// Sum over coordinate pairs of dim_k Hom(R/(a), R/(b)); throws InfiniteDimensional
/// when a free source coordinate meets a free target coordinate.
std::int64_t hom_dimension(const FpModule& source, const FpModule& target);

}  // namespace qcoh
