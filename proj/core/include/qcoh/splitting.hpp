#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "qcoh/birkhoff.hpp"
#include "qcoh/sheaf.hpp"

namespace qcoh {

/// Twists n_1 >= ... >= n_r with F ≅ O(n_1) ⊕ ... ⊕ O(n_r). Throws HasTorsion.
std::vector<std::int64_t> splitting_type(const QcohSheaf& F);

/// The sum of line bundles O(type[i]) in the order of the splitting data.
QcohSheaf standard_form(const QcohSheaf& F);

/// Morphism standard_form(F) -> F sending the i-th summand onto a lift of the i-th
/// free summand. An isomorphism when F is locally free.
SheafMorphism standard_form_map(const QcohSheaf& F);

/// Inverse of standard_form_map for locally free F. Throws HasTorsion.
SheafMorphism standard_form_inverse(const QcohSheaf& F);

/// 0 = F_0 ⊂ F_1 ⊂ ... ⊂ F_r ≅ F with F_k / F_{k-1} ≅ O(labels[k-1]).
struct Filtration {
  std::vector<QcohSheaf> stages;          ///< F_0, ..., F_r
  std::vector<SheafMorphism> steps;       ///< F_{k-1} -> F_k
  std::vector<SheafMorphism> into_total;  ///< F_k -> F
  std::vector<std::int64_t> labels;
};

/// Throws HasTorsion.
Filtration line_filtration(const QcohSheaf& F);

/// Decompositions M = ⊕ M_i and N = ⊕ N_j of a locally free sheaf, each summand given
/// by generator columns.
struct ZigzagState {
  QcohSheaf sheaf;
  std::vector<PolyMatrix> m_blocks;  ///< over k[x], columns in M
  std::vector<PolyMatrix> n_blocks;  ///< over k[x^-1], columns in N
};

/// Decomposition of M and N into their coordinate lines.
ZigzagState coordinate_decomposition(const QcohSheaf& F);

struct ZigzagResult {
  std::set<std::size_t> I, J;
  std::size_t rounds = 0;
  /// The subrepresentation spanned by the chosen summands.
  QcohSheaf subsheaf;
};

/// Smallest (I ⊇ seed, J) with S^-1(⊕_I M_i) = T^-1(⊕_J N_j). Throws HasTorsion for
/// sheaves that are not locally free and InvalidArgument when the blocks are not bases.
ZigzagResult zigzag_closure(const ZigzagState& state, const std::set<std::size_t>& seed);

/// Two-sided membership check of S^-1(⊕_I M_i) = T^-1(⊕_J N_j) over k[x,x^-1].
bool localizations_agree(const ZigzagState& state, const std::set<std::size_t>& I, const std::set<std::size_t>& J);

}  // namespace qcoh
