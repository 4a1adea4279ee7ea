#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcoh/klinalg.hpp"
#include "qcoh/sheaf.hpp"

namespace qcoh {

/// A pair (u, v) in M x N; as columns over k[x] and k[x^-1].
struct SectionPair {
  PolyMatrix u, v;
};

/// Basis of Hom(O(n), F) = { (u, v) : x^n sigma(u) = tau(v) }.
struct HomLineSpace {
  std::int64_t n = 0;
  std::vector<SectionPair> basis;
  std::vector<std::string> labels;
  std::size_t dimension() const { return basis.size(); }
};

/// Basis of P / (x^n sigma(M) + tau(N)), by representatives in P.
struct ExtLineSpace {
  std::int64_t n = 0;
  std::vector<PolyMatrix> representatives;
  std::vector<std::string> labels;
  std::size_t dimension() const { return representatives.size(); }
};

HomLineSpace hom_line(std::int64_t n, const QcohSheaf& F);
/// Sections (u, v) of x^n sigma(u) = tau(v) supported on the torsion coordinates only.
std::vector<SectionPair> torsion_hom_line(std::int64_t n, const QcohSheaf& F);
/// A section O(type[i]) -> F lifting the i-th summand of the torsion-free quotient.
SectionPair free_section(const QcohSheaf& F, std::size_t i);
/// The morphism O(n) -> F with M-part u and N-part v.
SheafMorphism section_morphism(std::int64_t n, const QcohSheaf& F, const SectionPair& s);

ExtLineSpace ext1_line(std::int64_t n, const QcohSheaf& F);
/// Coordinates of the class of w (a column over P) in the ext1_line basis.
std::vector<Scalar> ext1_coordinates(std::int64_t n, const QcohSheaf& F, const PolyMatrix& w);

/// Element of Ext^1(O(n), F) described by (y, z) in P x P.
class ExtClass {
 public:
  ExtClass(std::int64_t n, QcohSheaf F, PolyMatrix y, PolyMatrix z);

  std::int64_t n() const noexcept { return n_; }
  const QcohSheaf& sheaf() const noexcept { return F_; }
  const PolyMatrix& y() const noexcept { return y_; }
  const PolyMatrix& z() const noexcept { return z_; }
  /// Coordinates of z - y in the ext1_line basis.
  const std::vector<Scalar>& residue() const noexcept { return residue_; }
  /// Reduced representative of z - y built from the residue.
  const PolyMatrix& canonical() const noexcept { return canonical_; }
  bool is_zero() const;

  friend bool operator==(const ExtClass& a, const ExtClass& b) { return a.n_ == b.n_ && a.residue_ == b.residue_; }

 private:
  std::int64_t n_;
  QcohSheaf F_;
  PolyMatrix y_, z_, canonical_;
  std::vector<Scalar> residue_;
};

struct Extension {
  QcohSheaf middle;
  SheafMorphism inclusion;   ///< F -> middle
  SheafMorphism projection;  ///< middle -> O(n)
};

Extension build_extension(const ExtClass& cls);
/// Witness (u, v) with x^n sigma(u) - tau(v) = z - y, or nullopt when the class is nonzero.
std::optional<SectionPair> is_split(const ExtClass& cls);

struct UPerpCertificate {
  bool member = true;
  std::optional<std::int64_t> witness_n;  ///< twist with nonzero Ext^1 when not a member
  std::size_t witness_dimension = 0;
};
UPerpCertificate in_u_perp(const QcohSheaf& F);

/// Monomial basis of the torsion coordinates of a module, used to flatten elements
/// of finite-dimensional quotients into k-vectors.
class MonomialBasis {
 public:
  explicit MonomialBasis(const FpModule& m);
  std::size_t size() const noexcept { return items_.size(); }
  const std::pair<std::size_t, std::int64_t>& item(std::size_t i) const { return items_[i]; }
  /// Coefficients of the torsion rows of column `col` of v (entries reduced first).
  std::vector<Scalar> flatten(const PolyMatrix& v, std::size_t col = 0) const;
  /// Column vector over the module with the given basis element.
  PolyMatrix element(std::size_t i) const;

 private:
  FpModule module_;
  std::vector<std::pair<std::size_t, std::int64_t>> items_;
};

std::string format_vector(const PolyMatrix& column);

}  // namespace qcoh
