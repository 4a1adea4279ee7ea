#include "qcoh/sheaf_ops.hpp"

#include "qcoh/error.hpp"
#include "qcoh/smith.hpp"

namespace qcoh {

namespace {

PolyMatrix require_lift(const FpModule& ambient, const PolyMatrix& inclusion, const PolyMatrix& rhs, const char* what) {
  auto lifted = lift_through(ambient, inclusion, rhs);
  if (!lifted) throw Error(ErrorKind::InvalidMorphism, std::string("induced map does not exist: ") + what);
  return *lifted;
}

}  // namespace

SheafKernel kernel(const SheafMorphism& f) {
  const QcohSheaf& F = f.source();
  const QcohSheaf& G = f.target();
  if (f.is_zero()) return {F, SheafMorphism::identity(F)};
  auto km = kernel(F.M(), G.M(), f.phi_M());
  auto kp = kernel(F.P(), G.P(), f.phi_P());
  auto kn = kernel(F.N(), G.N(), f.phi_N());
  PolyMatrix sigma = require_lift(F.P(), kp.inclusion, F.sigma() * km.inclusion.with_ring(Ring::Laurent), "kernel sigma");
  PolyMatrix tau = require_lift(F.P(), kp.inclusion, F.tau() * kn.inclusion.with_ring(Ring::Laurent), "kernel tau");
  QcohSheaf K(km.module, kp.module, kn.module, sigma, tau);
  SheafMorphism inc = SheafMorphism::unchecked(K, F, km.inclusion, kp.inclusion, kn.inclusion);
  return {std::move(K), std::move(inc)};
}

SheafCokernel cokernel(const SheafMorphism& f) {
  const QcohSheaf& F = f.source();
  const QcohSheaf& G = f.target();
  auto cm = cokernel(F.M(), G.M(), f.phi_M());
  auto cp = cokernel(F.P(), G.P(), f.phi_P());
  auto cn = cokernel(F.N(), G.N(), f.phi_N());
  PolyMatrix sigma = cp.projection * G.sigma() * cm.section.with_ring(Ring::Laurent);
  PolyMatrix tau = cp.projection * G.tau() * cn.section.with_ring(Ring::Laurent);
  QcohSheaf C(cm.module, cp.module, cn.module, sigma, tau);
  SheafMorphism proj = SheafMorphism::unchecked(G, C, cm.projection, cp.projection, cn.projection);
  return {std::move(C), std::move(proj), cm.section, cp.section, cn.section};
}

SheafMorphism descend(const SheafCokernel& coker, const SheafMorphism& g) {
  return SheafMorphism::unchecked(coker.object, g.target(), g.phi_M() * coker.section_M, g.phi_P() * coker.section_P,
                                  g.phi_N() * coker.section_N);
}

std::optional<SheafMorphism> lift_through_mono(const SheafMorphism& mono, const SheafMorphism& g) {
  const QcohSheaf& B = mono.target();
  auto hm = lift_through(B.M(), mono.phi_M(), g.phi_M());
  if (!hm) return std::nullopt;
  auto hp = lift_through(B.P(), mono.phi_P(), g.phi_P());
  if (!hp) return std::nullopt;
  auto hn = lift_through(B.N(), mono.phi_N(), g.phi_N());
  if (!hn) return std::nullopt;
  return SheafMorphism::unchecked(g.source(), mono.source(), *hm, *hp, *hn);
}

Pushout pushout(const SheafMorphism& f, const SheafMorphism& g) {
  if (!(f.source() == g.source())) throw Error(ErrorKind::SourceMismatch, "pushout of morphisms with different sources");
  const QcohSheaf& V = f.target();
  const QcohSheaf& Y = g.target();
  std::vector<QcohSheaf> parts{V, Y};
  SheafMorphism h = block_morphism({f.source()}, parts, {{f}, {g.scaled(-Scalar::one(f.source().field()))}});
  SheafCokernel c = cokernel(h);
  SheafMorphism from_V = compose(c.projection, summand_inclusion(parts, 0));
  SheafMorphism from_Y = compose(c.projection, summand_inclusion(parts, 1));
  return {c.object, from_V, from_Y};
}

bool is_monomorphism(const SheafMorphism& f) { return kernel(f).object.is_zero(); }
bool is_epimorphism(const SheafMorphism& f) { return cokernel(f).object.is_zero(); }

namespace {

struct TensorModule {
  FpModule module;
  std::vector<std::size_t> kept;  // indices i * |B| + j of surviving pairs
};

TensorModule tensor_modules(const FpModule& a, const FpModule& b) {
  const Ring ring = a.ring();
  std::vector<Poly> ds;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Poly& da = a.divisor(i);
      const Poly& db = b.divisor(j);
      Poly g = da.is_zero() ? db : db.is_zero() ? da : euclid::gcd(da, db, ring);
      if (!g.is_zero() && euclid::is_unit(g, ring)) continue;
      kept.push_back(i * b.size() + j);
      ds.push_back(g);
    }
  return {FpModule(ring, a.field(), std::move(ds)), std::move(kept)};
}

}  // namespace

QcohSheaf tensor(const QcohSheaf& F, const QcohSheaf& G) {
  auto m = tensor_modules(F.M(), G.M());
  auto p = tensor_modules(F.P(), G.P());
  auto n = tensor_modules(F.N(), G.N());
  PolyMatrix sigma = kron(F.sigma(), G.sigma()).select_rows(p.kept).select_cols(m.kept);
  PolyMatrix tau = kron(F.tau(), G.tau()).select_rows(p.kept).select_cols(n.kept);
  return QcohSheaf(m.module, p.module, n.module, sigma, tau);
}

SheafMorphism tensor(const SheafMorphism& f, const SheafMorphism& g) {
  QcohSheaf src = tensor(f.source(), g.source());
  QcohSheaf tgt = tensor(f.target(), g.target());
  auto sm = tensor_modules(f.source().M(), g.source().M()), tm = tensor_modules(f.target().M(), g.target().M());
  auto sp = tensor_modules(f.source().P(), g.source().P()), tp = tensor_modules(f.target().P(), g.target().P());
  auto sn = tensor_modules(f.source().N(), g.source().N()), tn = tensor_modules(f.target().N(), g.target().N());
  return SheafMorphism::unchecked(src, tgt, kron(f.phi_M(), g.phi_M()).select_rows(tm.kept).select_cols(sm.kept),
                                  kron(f.phi_P(), g.phi_P()).select_rows(tp.kept).select_cols(sp.kept),
                                  kron(f.phi_N(), g.phi_N()).select_rows(tn.kept).select_cols(sn.kept));
}

QcohSheaf twist(const QcohSheaf& F, std::int64_t n) { return tensor(F, QcohSheaf::line_bundle(F.field(), n)); }

SheafMorphism block_morphism(const std::vector<QcohSheaf>& sources, const std::vector<QcohSheaf>& targets,
                             const std::vector<std::vector<std::optional<SheafMorphism>>>& blocks) {
  if (sources.empty() && targets.empty()) throw Error(ErrorKind::InvalidArgument, "empty block morphism");
  const Field field = sources.empty() ? targets.front().field() : sources.front().field();
  QcohSheaf src = direct_sum(sources, field);
  QcohSheaf tgt = direct_sum(targets, field);
  PolyMatrix pm(Ring::X, field, tgt.M().size(), src.M().size());
  PolyMatrix pp(Ring::Laurent, field, tgt.P().size(), src.P().size());
  PolyMatrix pn(Ring::XInv, field, tgt.N().size(), src.N().size());
  if (blocks.size() != targets.size()) throw Error(ErrorKind::DimensionMismatch, "block rows do not match targets");
  std::size_t rm = 0, rp = 0, rn = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (blocks[i].size() != sources.size()) throw Error(ErrorKind::DimensionMismatch, "block columns do not match sources");
    std::size_t cm = 0, cp = 0, cn = 0;
    for (std::size_t j = 0; j < sources.size(); ++j) {
      if (blocks[i][j]) {
        const SheafMorphism& b = *blocks[i][j];
        auto put = [](PolyMatrix& dst, const PolyMatrix& m, std::size_t r0, std::size_t c0) {
          for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) dst(r0 + r, c0 + c) = m(r, c);
        };
        if (b.phi_M().rows() != targets[i].M().size() || b.phi_M().cols() != sources[j].M().size() ||
            b.phi_P().rows() != targets[i].P().size() || b.phi_P().cols() != sources[j].P().size() ||
            b.phi_N().rows() != targets[i].N().size() || b.phi_N().cols() != sources[j].N().size())
          throw Error(ErrorKind::DimensionMismatch, "block does not match its source and target");
        put(pm, b.phi_M(), rm, cm);
        put(pp, b.phi_P(), rp, cp);
        put(pn, b.phi_N(), rn, cn);
      }
      cm += sources[j].M().size();
      cp += sources[j].P().size();
      cn += sources[j].N().size();
    }
    rm += targets[i].M().size();
    rp += targets[i].P().size();
    rn += targets[i].N().size();
  }
  return SheafMorphism::unchecked(src, tgt, pm, pp, pn);
}

SheafMorphism summand_inclusion(const std::vector<QcohSheaf>& parts, std::size_t i) {
  std::vector<std::vector<std::optional<SheafMorphism>>> blocks(parts.size(), std::vector<std::optional<SheafMorphism>>(1));
  blocks[i][0] = SheafMorphism::identity(parts[i]);
  return block_morphism({parts[i]}, parts, blocks);
}

SheafMorphism summand_projection(const std::vector<QcohSheaf>& parts, std::size_t i) {
  std::vector<std::vector<std::optional<SheafMorphism>>> blocks(1, std::vector<std::optional<SheafMorphism>>(parts.size()));
  blocks[0][i] = SheafMorphism::identity(parts[i]);
  return block_morphism(parts, {parts[i]}, blocks);
}

}  // namespace qcoh
