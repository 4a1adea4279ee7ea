#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qcoh/ext.hpp"
#include "qcoh/hom.hpp"
#include "qcoh/sheaf_ops.hpp"

namespace qcoh {

/// Bounded cochain complex: differentials delta^n: C^n -> C^(n+1).
class BoundedComplex {
 public:
  explicit BoundedComplex(Field field = Field::rationals());
  /// Throws InvalidMorphism when a differential has the wrong source or target, or
  /// when consecutive differentials do not compose to zero.
  BoundedComplex(Field field, std::map<std::int64_t, QcohSheaf> objects, std::map<std::int64_t, SheafMorphism> differentials);

  Field field() const noexcept { return field_; }
  /// Smallest and largest degree carrying a nonzero object (lo > hi when empty).
  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }
  bool is_zero() const noexcept { return lo_ > hi_; }

  const QcohSheaf& object(std::int64_t n) const;
  SheafMorphism differential(std::int64_t n) const;
  const std::map<std::int64_t, QcohSheaf>& objects() const noexcept { return objects_; }

 private:
  Field field_;
  std::map<std::int64_t, QcohSheaf> objects_;
  std::map<std::int64_t, SheafMorphism> differentials_;
  QcohSheaf zero_;
  std::int64_t lo_ = 0, hi_ = -1;
};

/// F placed in degree -n.
BoundedComplex sphere(const QcohSheaf& F, std::int64_t n);
/// F -id-> F in degrees -n-1 and -n.
BoundedComplex disc(const QcohSheaf& F, std::int64_t n);

struct ChainMap {
  BoundedComplex source, target;
  std::map<std::int64_t, SheafMorphism> components;

  /// Component in degree n (zero when absent).
  SheafMorphism at(std::int64_t n) const;
  /// Empty string when every square commutes.
  std::string check() const;
  static ChainMap identity(const BoundedComplex& C);
};

/// Cone^n = X^(n+1) ⊕ Y^n with differential [[-delta_X, 0], [f, delta_Y]].
BoundedComplex mapping_cone(const ChainMap& f);

/// Total tensor complex with differential delta_X ⊗ 1 + (-1)^t 1 ⊗ delta_Y.
BoundedComplex tensor_complex(const BoundedComplex& X, const BoundedComplex& Y);

SheafKernel cycles(const BoundedComplex& C, std::int64_t n);
/// Image of delta^(n-1) as a subobject of C^n.
SheafKernel boundaries(const BoundedComplex& C, std::int64_t n);
QcohSheaf homology(const BoundedComplex& C, std::int64_t n);
bool is_exact(const BoundedComplex& C);
/// Exact with locally free cycles.
bool is_locally_projective_complex(const BoundedComplex& C);
/// Exact with torsion cycles.
bool is_u_perp_complex(const BoundedComplex& C);
/// Objects in every degree have equal classification data.
bool degreewise_isomorphic(const BoundedComplex& A, const BoundedComplex& B);

/// Complex of k-spaces prod_k Hom(X^k, Y^(k+n)) with
/// (delta f)^k = delta_Y f^k - (-1)^n f^(k+1) delta_X.
class HomComplex {
 public:
  struct Factor {
    std::int64_t k;
    HomSpace space;
  };
  HomComplex(const BoundedComplex& X, const BoundedComplex& Y);

  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }
  std::size_t dimension(std::int64_t n) const;
  const std::vector<Factor>& factors(std::int64_t n) const;
  /// Matrix of delta^n: degree n -> degree n+1.
  const KMatrix& differential(std::int64_t n) const;
  std::size_t cohomology_dimension(std::int64_t n) const;

 private:
  std::int64_t lo_ = 0, hi_ = -1;
  std::map<std::int64_t, std::vector<Factor>> factors_;
  std::map<std::int64_t, KMatrix> differentials_;
  std::vector<Factor> empty_;
  KMatrix empty_matrix_;
};

HomComplex hom_complex(const BoundedComplex& X, const BoundedComplex& Y);

/// Result of extending the cycles of N in degree n along 0 -> Z_n N -> T -> C -> 0.
struct MistExtension {
  std::int64_t degree = 0;
  BoundedComplex H;
  BoundedComplex quotient;  ///< C in degree `degree`
  ChainMap inclusion;       ///< N -> H
  ChainMap projection;      ///< H -> quotient
  Extension input;
  Pushout pushout;          ///< Q = N^n ⊔_Z T
};

/// Throws KernelMismatch when the extension does not start at cycles(N, n).
MistExtension mist_extension(const BoundedComplex& N, std::int64_t n, const Extension& ext);
/// A chain map section of H -> quotient, when one exists.
std::optional<SheafMorphism> mist_output_section(const MistExtension& m);
/// A section of T -> C, when one exists.
std::optional<SheafMorphism> extension_section(const Extension& ext);

}  // namespace qcoh
