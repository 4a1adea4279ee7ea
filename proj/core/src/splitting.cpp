#include "qcoh/splitting.hpp"

#include "qcoh/classify.hpp"
#include "qcoh/error.hpp"
#include "qcoh/ext.hpp"
#include "qcoh/smith.hpp"

namespace qcoh {

std::vector<std::int64_t> splitting_type(const QcohSheaf& F) {
  if (!F.is_locally_free()) throw Error(ErrorKind::HasTorsion, "sheaf has a torsion summand");
  return F.structure().splitting.type;
}

QcohSheaf standard_form(const QcohSheaf& F) {
  return QcohSheaf::line_bundle_sum(F.field(), F.structure().splitting.type);
}

SheafMorphism standard_form_map(const QcohSheaf& F) {
  const std::size_t r = F.structure().rank;
  const Field field = F.field();
  QcohSheaf D = standard_form(F);
  PolyMatrix phiM(Ring::X, field, F.M().size(), r), phiN(Ring::XInv, field, F.N().size(), r);
  for (std::size_t i = 0; i < r; ++i) {
    SectionPair s = free_section(F, i);
    for (std::size_t k = 0; k < F.M().size(); ++k) phiM(k, i) = s.u(k, 0);
    for (std::size_t k = 0; k < F.N().size(); ++k) phiN(k, i) = s.v(k, 0);
  }
  return SheafMorphism(D, F, phiM, F.sigma() * phiM.with_ring(Ring::Laurent), phiN);
}

SheafMorphism standard_form_inverse(const QcohSheaf& F) {
  if (!F.is_locally_free()) throw Error(ErrorKind::HasTorsion, "standard form inverse needs a locally free sheaf");
  const SheafStructure& s = F.structure();
  PolyMatrix phiP = s.splitting.A.with_ring(Ring::Laurent) * s.sigma_ff_inv;
  return SheafMorphism(F, standard_form(F), s.splitting.A, phiP, s.splitting.B_inv);
}

namespace {

// First `k` coordinates of a free module of rank `n` included into it.
PolyMatrix prefix(Ring ring, Field field, std::size_t n, std::size_t k) {
  PolyMatrix m(ring, field, n, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = Poly::constant(ring, field, 1);
  return m;
}

SheafMorphism prefix_inclusion(const QcohSheaf& small, const QcohSheaf& big) {
  const std::size_t n = big.M().size(), k = small.M().size();
  const Field f = big.field();
  return SheafMorphism(small, big, prefix(Ring::X, f, n, k), prefix(Ring::Laurent, f, n, k), prefix(Ring::XInv, f, n, k));
}

}  // namespace

Filtration line_filtration(const QcohSheaf& F) {
  const std::vector<std::int64_t> type = splitting_type(F);
  SheafMorphism psi = standard_form_map(F);
  const QcohSheaf& D = psi.source();
  Filtration out;
  out.labels = type;
  for (std::size_t k = 0; k <= type.size(); ++k) {
    std::vector<std::int64_t> head(type.begin(), type.begin() + static_cast<std::ptrdiff_t>(k));
    out.stages.push_back(QcohSheaf::line_bundle_sum(F.field(), head));
    out.into_total.push_back(compose(psi, prefix_inclusion(out.stages.back(), D)));
    if (k > 0) out.steps.push_back(prefix_inclusion(out.stages[k - 1], out.stages[k]));
  }
  return out;
}

ZigzagState coordinate_decomposition(const QcohSheaf& F) {
  ZigzagState st{F, {}, {}};
  for (std::size_t i = 0; i < F.M().size(); ++i)
    st.m_blocks.push_back(PolyMatrix::identity(Ring::X, F.field(), F.M().size()).column(i));
  for (std::size_t j = 0; j < F.N().size(); ++j)
    st.n_blocks.push_back(PolyMatrix::identity(Ring::XInv, F.field(), F.N().size()).column(j));
  return st;
}

namespace {

struct Glued {
  PolyMatrix images;               // Laurent, one column per generator
  std::vector<std::size_t> owner;  // block index of every column
};

Glued glue(const std::vector<PolyMatrix>& blocks, const PolyMatrix& map, Ring ring, std::size_t rank) {
  Glued g{PolyMatrix(Ring::Laurent, map.field(), map.rows(), 0), {}};
  PolyMatrix gens(ring, map.field(), rank, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].rows() != rank || !blocks[b].fits(ring))
      throw Error(ErrorKind::InvalidArgument, "decomposition block has the wrong shape or ring");
    gens = hstack(gens, blocks[b].with_ring(ring));
    for (std::size_t c = 0; c < blocks[b].cols(); ++c) g.owner.push_back(b);
  }
  if (!gens.square() || !euclid::is_unit(determinant(gens), ring))
    throw Error(ErrorKind::InvalidArgument, "decomposition blocks do not form a basis");
  g.images = map * gens.with_ring(Ring::Laurent);
  return g;
}

std::vector<std::size_t> columns_of(const Glued& g, const std::set<std::size_t>& blocks) {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < g.owner.size(); ++c)
    if (blocks.count(g.owner[c])) cols.push_back(c);
  return cols;
}

// Blocks of `basis` needed to express the given columns.
std::set<std::size_t> support(const PolyMatrix& basis_inv, const Glued& basis, const PolyMatrix& vectors) {
  std::set<std::size_t> out;
  PolyMatrix coords = basis_inv * vectors;
  for (std::size_t r = 0; r < coords.rows(); ++r)
    for (std::size_t c = 0; c < coords.cols(); ++c)
      if (!coords(r, c).is_zero()) out.insert(basis.owner[r]);
  return out;
}

}  // namespace

bool localizations_agree(const ZigzagState& st, const std::set<std::size_t>& I, const std::set<std::size_t>& J) {
  const QcohSheaf& F = st.sheaf;
  Glued gm = glue(st.m_blocks, F.sigma(), Ring::X, F.M().size());
  Glued gn = glue(st.n_blocks, F.tau(), Ring::XInv, F.N().size());
  PolyMatrix a = gm.images.select_cols(columns_of(gm, I)), b = gn.images.select_cols(columns_of(gn, J));
  if (a.cols() == 0 || b.cols() == 0) return a.cols() == b.cols();
  return solve_linear(b, a, Ring::Laurent).has_value() && solve_linear(a, b, Ring::Laurent).has_value();
}

ZigzagResult zigzag_closure(const ZigzagState& st, const std::set<std::size_t>& seed) {
  const QcohSheaf& F = st.sheaf;
  if (!F.is_locally_free()) throw Error(ErrorKind::HasTorsion, "zig-zag closure needs a locally free sheaf");
  for (auto i : seed)
    if (i >= st.m_blocks.size()) throw Error(ErrorKind::InvalidArgument, "seed index out of range");
  Glued gm = glue(st.m_blocks, F.sigma(), Ring::X, F.M().size());
  Glued gn = glue(st.n_blocks, F.tau(), Ring::XInv, F.N().size());
  PolyMatrix gm_inv = inverse(gm.images, Ring::Laurent), gn_inv = inverse(gn.images, Ring::Laurent);

  ZigzagResult out;
  out.I = seed;
  while (true) {
    ++out.rounds;
    out.J = support(gn_inv, gn, gm.images.select_cols(columns_of(gm, out.I)));
    std::set<std::size_t> grown = out.I;
    for (auto i : support(gm_inv, gm, gn.images.select_cols(columns_of(gn, out.J)))) grown.insert(i);
    if (grown == out.I) break;
    out.I = std::move(grown);
  }

  const Field field = F.field();
  auto icols = columns_of(gm, out.I), jcols = columns_of(gn, out.J);
  const std::size_t a = icols.size(), b = jcols.size();
  PolyMatrix tau_sub = (gm_inv * gn.images).select_rows(icols).select_cols(jcols);
  out.subsheaf = QcohSheaf(FpModule::free(Ring::X, field, a), FpModule::free(Ring::Laurent, field, a),
                           FpModule::free(Ring::XInv, field, b), PolyMatrix::identity(Ring::Laurent, field, a), tau_sub);
  return out;
}

}  // namespace qcoh
