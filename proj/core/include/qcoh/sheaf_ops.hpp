#pragma once

#include <optional>
#include <vector>

#include "qcoh/sheaf.hpp"

namespace qcoh {

struct SheafKernel {
  QcohSheaf object;
  SheafMorphism inclusion;
};

struct SheafCokernel {
  QcohSheaf object;
  SheafMorphism projection;
  /// Lifts of the cokernel generators into the target, per component.
  PolyMatrix section_M, section_P, section_N;
};

struct Pushout {
  QcohSheaf object;
  SheafMorphism from_V, from_Y;
};

/// Componentwise kernel with induced gluing maps.
SheafKernel kernel(const SheafMorphism& f);
/// Componentwise cokernel with induced gluing maps.
SheafCokernel cokernel(const SheafMorphism& f);
/// The morphism coker.object -> target induced by g, which must vanish on the image.
SheafMorphism descend(const SheafCokernel& coker, const SheafMorphism& g);
/// Some h with mono ∘ h = g, or nullopt when g does not factor.
std::optional<SheafMorphism> lift_through_mono(const SheafMorphism& mono, const SheafMorphism& g);
/// W = (V ⊕ Y) / im(f, -g) for f: U -> V and g: U -> Y. Throws SourceMismatch.
Pushout pushout(const SheafMorphism& f, const SheafMorphism& g);

bool is_monomorphism(const SheafMorphism& f);
bool is_epimorphism(const SheafMorphism& f);

QcohSheaf tensor(const QcohSheaf& F, const QcohSheaf& G);
SheafMorphism tensor(const SheafMorphism& f, const SheafMorphism& g);
QcohSheaf twist(const QcohSheaf& F, std::int64_t n);

/// Morphism between direct sums given by a block matrix of morphisms
/// blocks[i][j]: sources[j] -> targets[i].
SheafMorphism block_morphism(const std::vector<QcohSheaf>& sources, const std::vector<QcohSheaf>& targets,
                             const std::vector<std::vector<std::optional<SheafMorphism>>>& blocks);
/// Canonical inclusion of parts[i] into the direct sum of parts, and the projection back.
SheafMorphism summand_inclusion(const std::vector<QcohSheaf>& parts, std::size_t i);
SheafMorphism summand_projection(const std::vector<QcohSheaf>& parts, std::size_t i);

}  // namespace qcoh
