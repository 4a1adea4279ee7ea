#include "qcoh/classify.hpp"

#include <sstream>

namespace qcoh {

std::int64_t torsion_length(const QcohSheaf& F) {
  std::int64_t len = 0;
  for (auto j : F.M().torsion_coords()) len += F.M().coord_dimension(j);
  for (auto j : F.N().torsion_coords()) len += F.N().coord_dimension(j);
  for (auto j : F.P().torsion_coords()) len -= F.P().coord_dimension(j);
  return len;
}

StructureReport classify(const QcohSheaf& F) {
  const SheafStructure& s = F.structure();
  StructureReport report;
  report.rank = s.rank;
  report.type = s.splitting.type;
  report.transition = s.transition;
  for (const Poly& d : F.M().invariant_factors()) {
    auto [k, rest] = split_valuation(d, Ring::X);
    if (k > 0) report.torsion.at_zero.push_back(k);
    if (rest.degree() > 0) report.torsion.elsewhere.push_back(rest);
  }
  for (const Poly& d : F.N().invariant_factors()) {
    auto [k, rest] = split_valuation(d, Ring::XInv);
    (void)rest;
    if (k > 0) report.torsion.at_infinity.push_back(k);
  }
  report.torsion.length = torsion_length(F);
  return report;
}

std::string StructureReport::to_string() const {
  std::ostringstream os;
  auto list = [&](const auto& v) {
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
  };
  os << "torsion: {0: ";
  list(torsion.at_zero);
  os << ", inf: ";
  list(torsion.at_infinity);
  os << ", other: ";
  list(torsion.elsewhere);
  os << "}, type: ";
  list(type);
  return os.str();
}

}  // namespace qcoh
