#include "qcoh/chart.hpp"

#include "qcoh/error.hpp"
#include "qcoh/hom.hpp"

namespace qcoh {

Chart parse_chart(const std::string& text) {
  if (text == "x" || text == "X") return Chart::X;
  if (text == "xinv" || text == "XINV") return Chart::XInv;
  if (text == "overlap" || text == "laurent" || text == "OVERLAP") return Chart::Overlap;
  throw Error(ErrorKind::Parse, "unknown chart '" + text + "'");
}

FpModule chart_restrict(const QcohSheaf& F, Chart chart) {
  switch (chart) {
    case Chart::X: return F.M();
    case Chart::XInv: return F.N();
    default: return F.P();
  }
}

std::string ChartExtension::describe() const {
  if (finitely_generated) return sheaf->to_string();
  return "M = " + module.to_string() + "; P = " + localized.to_string() +
         "; N = P viewed over k[x^-1] (not finitely generated); sigma = localization; tau = id";
}

ChartExtension chart_extend(const FpModule& E) {
  if (E.ring() != Ring::X) throw Error(ErrorKind::RingMismatch, "chart_extend expects a k[x]-module");
  ChartExtension out;
  out.module = E;
  out.localized = localize(E).first;
  out.finitely_generated = E.is_torsion();
  if (out.finitely_generated) {
    QcohSheaf F(E.field());
    for (const auto& d : E.divisors()) F = direct_sum(F, QcohSheaf::torsion(E.field(), d));
    out.sheaf = F;
  }
  return out;
}

AdjunctionCheck adjunction_check(const QcohSheaf& F, const FpModule& E) {
  AdjunctionCheck out;
  out.restricted = hom_dimension(chart_restrict(F, Chart::X), E);
  ChartExtension ext = chart_extend(E);
  if (ext.sheaf) out.extended = static_cast<std::int64_t>(hom_space(F, *ext.sheaf).dimension());
  return out;
}

}  // namespace qcoh
