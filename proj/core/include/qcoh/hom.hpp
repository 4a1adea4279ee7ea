#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "qcoh/klinalg.hpp"
#include "qcoh/sheaf.hpp"

namespace qcoh {

/// Finite-dimensional k-space of morphisms source -> target with a fixed basis.
class HomSpace {
 public:
  HomSpace() = default;
  HomSpace(QcohSheaf source, QcohSheaf target, std::vector<SheafMorphism> basis);

  const QcohSheaf& source() const noexcept { return source_; }
  const QcohSheaf& target() const noexcept { return target_; }
  const std::vector<SheafMorphism>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }

  /// Coordinates of f in the basis. Throws NotInSpan.
  std::vector<Scalar> coordinates(const SheafMorphism& f) const;
  SheafMorphism combination(const std::vector<Scalar>& coeffs) const;

 private:
  using Key = std::tuple<int, std::size_t, std::size_t, std::int64_t>;
  std::map<Key, Scalar> flatten(const SheafMorphism& f) const;

  QcohSheaf source_, target_;
  std::vector<SheafMorphism> basis_;
  std::map<Key, std::size_t> rows_;
  KMatrix matrix_;
};

/// Hom(G, F) for coherent G and F.
HomSpace hom_space(const QcohSheaf& G, const QcohSheaf& F);

/// The matrix of the k-linear map Hom(a.source, a.target) -> Hom(b.source, b.target)
/// induced by `apply`, in the two bases.
template <class Apply>
KMatrix induced_matrix(const HomSpace& from, const HomSpace& to, Apply apply) {
  KMatrix m(from.source().field(), to.dimension(), from.dimension());
  for (std::size_t c = 0; c < from.dimension(); ++c) {
    auto coords = to.coordinates(apply(from.basis()[c]));
    for (std::size_t r = 0; r < coords.size(); ++r) m(r, c) = coords[r];
  }
  return m;
}

}  // namespace qcoh
