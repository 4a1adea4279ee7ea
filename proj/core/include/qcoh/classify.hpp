#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcoh/sheaf.hpp"

namespace qcoh {

/// Torsion invariants by support: multiplicities at 0 and at infinity, and the
/// invariant factors supported at the remaining finite points.
struct TorsionInvariants {
  std::vector<std::int64_t> at_zero;
  std::vector<std::int64_t> at_infinity;
  std::vector<Poly> elsewhere;
  std::int64_t length = 0;

  bool empty() const { return at_zero.empty() && at_infinity.empty() && elsewhere.empty(); }
  friend bool operator==(const TorsionInvariants& a, const TorsionInvariants& b) {
    return a.at_zero == b.at_zero && a.at_infinity == b.at_infinity && a.elsewhere == b.elsewhere;
  }
};

/// Canonical decomposition data: F is isomorphic to (torsion) ⊕ O(type[0]) ⊕ ...
struct StructureReport {
  TorsionInvariants torsion;
  std::size_t rank = 0;
  std::vector<std::int64_t> type;
  PolyMatrix transition;  ///< gluing matrix of the torsion-free quotient

  /// Equality of classification data (the transition matrix is not compared).
  friend bool operator==(const StructureReport& a, const StructureReport& b) {
    return a.torsion == b.torsion && a.type == b.type;
  }
  std::string to_string() const;
};

StructureReport classify(const QcohSheaf& F);

/// dim M_t + dim N_t - dim P_t for the torsion part.
std::int64_t torsion_length(const QcohSheaf& F);

}  // namespace qcoh
