#include "qcoh/hom.hpp"

#include "qcoh/error.hpp"
#include "qcoh/ext.hpp"
#include "qcoh/resolution.hpp"
#include "qcoh/sheaf_ops.hpp"

namespace qcoh {

HomSpace::HomSpace(QcohSheaf source, QcohSheaf target, std::vector<SheafMorphism> basis)
    : source_(std::move(source)), target_(std::move(target)), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    for (const auto& [key, value] : flatten(b)) rows_.emplace(key, rows_.size());
  matrix_ = KMatrix(source_.field(), rows_.size(), basis_.size());
  for (std::size_t c = 0; c < basis_.size(); ++c)
    for (const auto& [key, value] : flatten(basis_[c])) matrix_(rows_.at(key), c) = value;
}

std::map<HomSpace::Key, Scalar> HomSpace::flatten(const SheafMorphism& f) const {
  std::map<Key, Scalar> out;
  auto add = [&](int comp, const PolyMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [e, coef] : m(r, c).terms()) out.emplace(Key{comp, r, c, e}, coef);
  };
  add(0, f.phi_M());
  add(1, f.phi_N());
  return out;
}

std::vector<Scalar> HomSpace::coordinates(const SheafMorphism& f) const {
  KMatrix rhs(source_.field(), rows_.size(), 1);
  for (const auto& [key, value] : flatten(f)) {
    auto it = rows_.find(key);
    if (it == rows_.end()) throw Error(ErrorKind::NotInSpan, "morphism is not in the span of the basis");
    rhs(it->second, 0) = value;
  }
  auto sol = solve(matrix_, rhs);
  if (!sol) throw Error(ErrorKind::NotInSpan, "morphism is not in the span of the basis");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) out.push_back((*sol)(i, 0));
  return out;
}

SheafMorphism HomSpace::combination(const std::vector<Scalar>& coeffs) const {
  if (coeffs.size() != basis_.size()) throw Error(ErrorKind::DimensionMismatch, "coefficient count differs from dimension");
  SheafMorphism out = SheafMorphism::zero(source_, target_);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) out = out + basis_[i].scaled(coeffs[i]);
  return out;
}

namespace {

// Basis of Hom(⊕ O(twists), F), summand by summand.
std::vector<SheafMorphism> sum_basis(const QcohSheaf& E, const std::vector<std::int64_t>& twists, const QcohSheaf& F) {
  std::vector<SheafMorphism> out;
  std::vector<SectionPair> zero(twists.size(),
                                SectionPair{PolyMatrix(Ring::X, F.field(), F.M().size(), 1),
                                            PolyMatrix(Ring::XInv, F.field(), F.N().size(), 1)});
  for (std::size_t j = 0; j < twists.size(); ++j) {
    for (const auto& s : hom_line(twists[j], F).basis) {
      auto cols = zero;
      cols[j] = s;
      SheafMorphism f = sections_morphism(F, twists, cols);
      out.push_back(SheafMorphism::unchecked(E, F, f.phi_M(), f.phi_P(), f.phi_N()));
    }
  }
  return out;
}

// Right inverse of a surjective module map, per component.
PolyMatrix split_epi(const FpModule& target, const PolyMatrix& map) {
  auto s = lift_through(target, map, PolyMatrix::identity(target.ring(), target.field(), target.size()));
  if (!s) throw Error(ErrorKind::InvalidMorphism, "augmentation is not surjective");
  return *s;
}

}  // namespace

HomSpace hom_space(const QcohSheaf& G, const QcohSheaf& F) {
  if (G.is_zero() || F.is_zero()) return HomSpace(G, F, {});
  LineBundleResolution R = resolve(G);
  HomSpace from_e0(R.E0, F, sum_basis(R.E0, R.e0_twists, F));
  KMatrix kernel_coeffs = KMatrix::identity(F.field(), from_e0.dimension());
  if (!R.E1.is_zero()) {
    HomSpace from_e1(R.E1, F, sum_basis(R.E1, R.e1_twists, F));
    kernel_coeffs = nullspace(induced_matrix(from_e0, from_e1, [&](const SheafMorphism& f) { return compose(f, R.d); }));
  }
  const PolyMatrix sM = split_epi(G.M(), R.eps.phi_M());
  const PolyMatrix sP = split_epi(G.P(), R.eps.phi_P());
  const PolyMatrix sN = split_epi(G.N(), R.eps.phi_N());
  std::vector<SheafMorphism> basis;
  for (std::size_t k = 0; k < kernel_coeffs.cols(); ++k) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < kernel_coeffs.rows(); ++i) c.push_back(kernel_coeffs(i, k));
    SheafMorphism f = from_e0.combination(c);
    basis.emplace_back(G, F, f.phi_M() * sM, f.phi_P() * sP, f.phi_N() * sN);
  }
  return HomSpace(G, F, std::move(basis));
}

}  // namespace qcoh
