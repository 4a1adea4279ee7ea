#include "qcoh/derived_ext.hpp"

#include "qcoh/complex.hpp"
#include "qcoh/error.hpp"
#include "qcoh/ext.hpp"

namespace qcoh {

namespace {

std::size_t safe_rank(const KMatrix& m) { return m.rows() == 0 || m.cols() == 0 ? 0 : rank(m); }

// Pullback Ext^1(E0, G) -> Ext^1(E1, G) along d: the (j, k) block multiplies a class by
// the k[x^-1]-component of the summand map O(b_k) -> O(a_j).
KMatrix ext_pullback(const LineBundleResolution& R, const QcohSheaf& G) {
  std::vector<ExtLineSpace> src, tgt;
  std::size_t rows = 0, cols = 0;
  for (auto a : R.e0_twists) {
    src.push_back(ext1_line(a, G));
    cols += src.back().dimension();
  }
  for (auto b : R.e1_twists) {
    tgt.push_back(ext1_line(b, G));
    rows += tgt.back().dimension();
  }
  KMatrix m(G.field(), rows, cols);
  std::size_t col = 0;
  for (std::size_t j = 0; j < src.size(); ++j) {
    for (const auto& rep : src[j].representatives) {
      std::size_t row = 0;
      for (std::size_t k = 0; k < tgt.size(); ++k) {
        Poly q = R.d.phi_N()(j, k).with_ring(Ring::Laurent);
        auto coords = ext1_coordinates(R.e1_twists[k], G, rep.scaled(q));
        for (std::size_t r = 0; r < coords.size(); ++r) m(row + r, col) = coords[r];
        row += tgt[k].dimension();
      }
      ++col;
    }
  }
  return m;
}

}  // namespace

ExtAssembly assemble_ext(const LineBundleResolution& R, const QcohSheaf& G) {
  ExtAssembly a;
  HomSpace h0 = hom_space(R.E0, G), h1 = hom_space(R.E1, G);
  a.hom_e0 = h0.dimension();
  a.hom_e1 = h1.dimension();
  a.rank_hom = safe_rank(induced_matrix(h0, h1, [&](const SheafMorphism& f) { return compose(f, R.d); }));
  for (auto t : R.e0_twists) a.ext_e0 += ext1_line(t, G).dimension();
  for (auto t : R.e1_twists) a.ext_e1 += ext1_line(t, G).dimension();
  a.rank_ext = safe_rank(ext_pullback(R, G));
  a.hom = a.hom_e0 - a.rank_hom;
  a.ext1 = (a.hom_e1 - a.rank_hom) + (a.ext_e0 - a.rank_ext);
  a.ext2 = a.ext_e1 - a.rank_ext;
  return a;
}

std::size_t global_ext(const LineBundleResolution& R, const QcohSheaf& G, int i) {
  if (i < 0) throw Error(ErrorKind::InvalidArgument, "Ext degree must be nonnegative");
  ExtAssembly a = assemble_ext(R, G);
  switch (i) {
    case 0: return a.hom;
    case 1: return a.ext1;
    case 2: return a.ext2;
    default: return 0;
  }
}

std::size_t global_ext(const QcohSheaf& F, const QcohSheaf& G, int i) { return global_ext(resolve(F), G, i); }

std::vector<std::size_t> hom_double_complex_ext(const QcohSheaf& F, const QcohSheaf& G) {
  if (!in_u_perp(G).member) throw Error(ErrorKind::NotInUPerp, "target has a locally free summand");
  LineBundleResolution R = resolve(F);
  BoundedComplex P(F.field(), {{-1, R.E1}, {0, R.E0}}, {{-1, R.d}});
  HomComplex H = hom_complex(P, sphere(G, 0));
  return {H.cohomology_dimension(0), H.cohomology_dimension(1), H.cohomology_dimension(2)};
}

}  // namespace qcoh
