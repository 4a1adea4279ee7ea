#pragma once

#include <cstdint>
#include <vector>

#include "qcoh/ext.hpp"
#include "qcoh/sheaf.hpp"

namespace qcoh {

/// 0 -> E1 -> E0 -> F -> 0 with E0, E1 sums of line bundles in identity gluing form.
struct LineBundleResolution {
  QcohSheaf target;
  std::vector<std::int64_t> e0_twists, e1_twists;
  QcohSheaf E0, E1;
  SheafMorphism d;    ///< E1 -> E0
  SheafMorphism eps;  ///< E0 -> F
};

/// E0 built from the free summands of F plus global sections of its torsion part.
LineBundleResolution resolve(const QcohSheaf& F);

/// E0 = O(m)^h with m = min(0, min type) - offset, using every section of F(-m).
/// Throws InvalidArgument for negative offsets.
LineBundleResolution resolve_with_offset(const QcohSheaf& F, std::int64_t offset);

/// Empty string when eps is onto, d is injective and im d = ker eps.
std::string check_resolution(const LineBundleResolution& R);

/// The morphism ⊕ O(twists[j]) -> F whose j-th column is the section sections[j].
SheafMorphism sections_morphism(const QcohSheaf& F, const std::vector<std::int64_t>& twists,
                                const std::vector<SectionPair>& sections);

}  // namespace qcoh
