#pragma once

#include <optional>
#include <string>

#include "qcoh/sheaf.hpp"

namespace qcoh {

enum class Chart { X, XInv, Overlap };

Chart parse_chart(const std::string& text);

/// The component module of F over the chosen chart.
FpModule chart_restrict(const QcohSheaf& F, Chart chart);

/// Pushforward of a k[x]-module E along the inclusion of the affine chart:
/// (E -> S^-1 E <-id- S^-1 E). The k[x^-1]-component is finitely generated exactly when
/// E is torsion; otherwise only the description is kept.
struct ChartExtension {
  FpModule module;            ///< E
  FpModule localized;         ///< S^-1 E over k[x, x^-1]
  bool finitely_generated = false;
  std::optional<QcohSheaf> sheaf;  ///< present when finitely generated
  std::string describe() const;
};

/// Throws RingMismatch unless E is a k[x]-module.
ChartExtension chart_extend(const FpModule& E);

/// dim Hom_{k[x]}(F|_X, E) against dim Hom(F, chart_extend(E)), both computed; the
/// right side is available only for finitely generated extensions.
struct AdjunctionCheck {
  std::int64_t restricted = 0;
  std::optional<std::int64_t> extended;
  bool agree() const { return extended && *extended == restricted; }
};

/// Throws InfiniteDimensional when Hom_{k[x]}(F|_X, E) is infinite-dimensional.
AdjunctionCheck adjunction_check(const QcohSheaf& F, const FpModule& E);

}  // namespace qcoh
