#include "qcoh/resolution.hpp"

#include <algorithm>

#include "qcoh/classify.hpp"
#include "qcoh/error.hpp"
#include "qcoh/sheaf_ops.hpp"
#include "qcoh/splitting.hpp"

namespace qcoh {

SheafMorphism sections_morphism(const QcohSheaf& F, const std::vector<std::int64_t>& twists,
                                const std::vector<SectionPair>& sections) {
  const Field field = F.field();
  const std::size_t h = twists.size();
  PolyMatrix phiM(Ring::X, field, F.M().size(), h), phiN(Ring::XInv, field, F.N().size(), h);
  for (std::size_t j = 0; j < h; ++j) {
    for (std::size_t r = 0; r < F.M().size(); ++r) phiM(r, j) = sections[j].u(r, 0);
    for (std::size_t r = 0; r < F.N().size(); ++r) phiN(r, j) = sections[j].v(r, 0);
  }
  return SheafMorphism::unchecked(QcohSheaf::line_bundle_sum(field, twists), F, phiM, F.sigma() * phiM.with_ring(Ring::Laurent),
                                  phiN);
}

namespace {

LineBundleResolution finish(const QcohSheaf& F, std::vector<std::int64_t> twists, const std::vector<SectionPair>& sections) {
  LineBundleResolution R;
  R.target = F;
  R.e0_twists = std::move(twists);
  R.eps = sections_morphism(F, R.e0_twists, sections);
  R.E0 = R.eps.source();
  SheafKernel K = kernel(R.eps);
  SheafMorphism psi = standard_form_map(K.object);
  R.E1 = psi.source();
  R.e1_twists = K.object.structure().splitting.type;
  R.d = compose(K.inclusion, psi);
  return R;
}

}  // namespace

LineBundleResolution resolve(const QcohSheaf& F) {
  const SheafStructure& s = F.structure();
  std::vector<std::int64_t> twists;
  std::vector<SectionPair> sections;
  for (std::size_t i = 0; i < s.rank; ++i) {
    twists.push_back(s.splitting.type[i]);
    sections.push_back(free_section(F, i));
  }
  auto remaining = [&] { return torsion_length(cokernel(sections_morphism(F, twists, sections)).object); };
  std::int64_t left = remaining();
  if (left > 0) {
    for (const auto& cand : torsion_hom_line(0, F)) {
      twists.push_back(0);
      sections.push_back(cand);
      std::int64_t now = remaining();
      if (now < left) {
        left = now;
        if (left == 0) break;
      } else {
        twists.pop_back();
        sections.pop_back();
      }
    }
  }
  if (left != 0) throw Error(ErrorKind::InvalidSheaf, "global sections failed to generate the torsion part");
  return finish(F, std::move(twists), sections);
}

LineBundleResolution resolve_with_offset(const QcohSheaf& F, std::int64_t offset) {
  if (offset < 0) throw Error(ErrorKind::InvalidArgument, "twist offset must be nonnegative");
  const auto& type = F.structure().splitting.type;
  std::int64_t m = type.empty() ? 0 : std::min<std::int64_t>(0, type.back());
  m -= offset;
  HomLineSpace sections = hom_line(m, F);
  return finish(F, std::vector<std::int64_t>(sections.dimension(), m), sections.basis);
}

std::string check_resolution(const LineBundleResolution& R) {
  if (!is_epimorphism(R.eps)) return "augmentation is not onto";
  if (!is_monomorphism(R.d)) return "syzygy map is not injective";
  if (!compose(R.eps, R.d).is_zero()) return "composite E1 -> F is nonzero";
  SheafKernel K = kernel(R.eps);
  if (!lift_through_mono(R.d, K.inclusion)) return "kernel of the augmentation is larger than the image of E1";
  return {};
}

}  // namespace qcoh
