#pragma once

#include <cstdint>
#include <vector>

#include "qcoh/hom.hpp"
#include "qcoh/resolution.hpp"

namespace qcoh {

/// Terms of the long exact sequence obtained by applying Hom(-, G) to a resolution
/// 0 -> E1 -> E0 -> F -> 0.
struct ExtAssembly {
  std::size_t hom_e0 = 0, hom_e1 = 0, ext_e0 = 0, ext_e1 = 0;
  std::size_t rank_hom = 0;  ///< rank of Hom(E0, G) -> Hom(E1, G)
  std::size_t rank_ext = 0;  ///< rank of Ext^1(E0, G) -> Ext^1(E1, G)
  std::size_t hom = 0, ext1 = 0;
  /// Cokernel of the Ext^1 pullback; this is Ext^2(F, G) and vanishes on P^1.
  std::size_t ext2 = 0;
};

ExtAssembly assemble_ext(const LineBundleResolution& R, const QcohSheaf& G);

/// dim Ext^i(F, G). For i = 2 this is the computed cokernel of the Ext^1 pullback;
/// i > 2 gives 0.
std::size_t global_ext(const QcohSheaf& F, const QcohSheaf& G, int i);
std::size_t global_ext(const LineBundleResolution& R, const QcohSheaf& G, int i);

/// Cohomology dimensions in degrees 0, 1, 2 of Hom(P, G) where P is the deleted
/// resolution of F. Throws NotInUPerp unless G is torsion.
std::vector<std::size_t> hom_double_complex_ext(const QcohSheaf& F, const QcohSheaf& G);

}  // namespace qcoh
