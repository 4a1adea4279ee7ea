#include "qcoh/ext.hpp"

#include <sstream>

#include "qcoh/error.hpp"

namespace qcoh {

std::string format_vector(const PolyMatrix& column) {
  if (column.rows() == 1 && column.cols() == 1) return column(0, 0).to_string();
  std::ostringstream os;
  os << "(";
  for (std::size_t r = 0; r < column.rows(); ++r) os << (r ? ", " : "") << column(r, 0);
  os << ")";
  return os.str();
}

MonomialBasis::MonomialBasis(const FpModule& m) : module_(m) {
  for (auto j : m.torsion_coords()) {
    const std::int64_t dim = m.coord_dimension(j);
    for (std::int64_t e = 0; e < dim; ++e) items_.emplace_back(j, m.ring() == Ring::XInv ? -e : e);
  }
}

std::vector<Scalar> MonomialBasis::flatten(const PolyMatrix& v, std::size_t col) const {
  std::vector<Scalar> out;
  out.reserve(items_.size());
  std::size_t last = module_.size();
  Poly reduced;
  for (const auto& [j, e] : items_) {
    if (j != last) {
      reduced = module_.reduce_entry(j, v(j, col));
      last = j;
    }
    out.push_back(reduced.coeff(e));
  }
  return out;
}

PolyMatrix MonomialBasis::element(std::size_t i) const {
  PolyMatrix out(module_.ring(), module_.field(), module_.size(), 1);
  out(items_[i].first, 0) = Poly::x_power(module_.ring(), module_.field(), items_[i].second);
  return out;
}

namespace {

PolyMatrix zero_column(Ring ring, Field field, std::size_t rows) { return PolyMatrix(ring, field, rows, 1); }

// x^n sigma(u) - tau(v), reduced in P.
PolyMatrix section_residual(std::int64_t n, const QcohSheaf& F, const SectionPair& s) {
  Poly xn = Poly::x_power(Ring::Laurent, F.field(), n);
  return F.P().reduce((F.sigma() * s.u.with_ring(Ring::Laurent)).scaled(xn) - F.tau() * s.v.with_ring(Ring::Laurent));
}

struct TorsionSystem {
  std::vector<SectionPair> candidates;
  KMatrix images;  // flattened residuals on the torsion part of P, one column per candidate
};

TorsionSystem torsion_system(std::int64_t n, const QcohSheaf& F, const std::vector<SectionPair>& extra) {
  const Field field = F.field();
  TorsionSystem sys;
  sys.candidates = extra;
  MonomialBasis mb(F.M()), nb(F.N()), pb(F.P());
  for (std::size_t i = 0; i < mb.size(); ++i)
    sys.candidates.push_back({mb.element(i), zero_column(Ring::XInv, field, F.N().size())});
  for (std::size_t i = 0; i < nb.size(); ++i)
    sys.candidates.push_back({zero_column(Ring::X, field, F.M().size()), nb.element(i)});
  sys.images = KMatrix(field, pb.size(), sys.candidates.size());
  for (std::size_t c = 0; c < sys.candidates.size(); ++c) {
    auto flat = pb.flatten(section_residual(n, F, sys.candidates[c]));
    for (std::size_t r = 0; r < flat.size(); ++r) sys.images(r, c) = flat[r];
  }
  return sys;
}

SectionPair combine(const std::vector<SectionPair>& cands, const KMatrix& coeffs, std::size_t col, const QcohSheaf& F) {
  SectionPair out{zero_column(Ring::X, F.field(), F.M().size()), zero_column(Ring::XInv, F.field(), F.N().size())};
  for (std::size_t c = 0; c < cands.size(); ++c) {
    const Scalar& k = coeffs(c, col);
    if (k.is_zero()) continue;
    out.u = out.u + cands[c].u.scaled(Poly::constant(Ring::X, k));
    out.v = out.v + cands[c].v.scaled(Poly::constant(Ring::XInv, k));
  }
  out.u = F.M().reduce(out.u.with_ring(Ring::X));
  out.v = F.N().reduce(out.v.with_ring(Ring::XInv));
  return out;
}

// Adds torsion corrections so that x^n sigma(u) - tau(v) = target on the torsion rows.
std::optional<SectionPair> solve_torsion(std::int64_t n, const QcohSheaf& F, const SectionPair& base, const PolyMatrix& target) {
  TorsionSystem sys = torsion_system(n, F, {});
  MonomialBasis pb(F.P());
  PolyMatrix need = F.P().reduce(target - section_residual(n, F, base));
  auto flat = pb.flatten(need);
  KMatrix rhs(F.field(), flat.size(), 1);
  for (std::size_t r = 0; r < flat.size(); ++r) rhs(r, 0) = flat[r];
  auto sol = solve(sys.images, rhs);
  if (!sol) return std::nullopt;
  SectionPair corr = combine(sys.candidates, *sol, 0, F);
  return SectionPair{F.M().reduce(base.u + corr.u), F.N().reduce(base.v + corr.v)};
}

std::string section_label(const SectionPair& s) { return "u=" + format_vector(s.u) + "; v=" + format_vector(s.v); }

}  // namespace

HomLineSpace hom_line(std::int64_t n, const QcohSheaf& F) {
  const SheafStructure& s = F.structure();
  const Field field = F.field();
  std::vector<SectionPair> free_cands;
  for (std::size_t i = 0; i < s.rank; ++i) {
    const std::int64_t ni = s.splitting.type[i];
    for (std::int64_t e = 0; e <= ni - n; ++e) {
      SectionPair c{zero_column(Ring::X, field, F.M().size()), zero_column(Ring::XInv, field, F.N().size())};
      for (std::size_t k = 0; k < s.rank; ++k) {
        c.u(s.m_f[k], 0) = s.splitting.A_inv(k, i).shifted(e).with_ring(Ring::X);
        c.v(s.n_f[k], 0) = s.splitting.B(k, i).shifted(e + n - ni).with_ring(Ring::XInv);
      }
      free_cands.push_back(std::move(c));
    }
  }
  TorsionSystem sys = torsion_system(n, F, free_cands);
  KMatrix null = nullspace(sys.images);
  HomLineSpace out;
  out.n = n;
  for (std::size_t k = 0; k < null.cols(); ++k) {
    out.basis.push_back(combine(sys.candidates, null, k, F));
    out.labels.push_back(section_label(out.basis.back()));
  }
  return out;
}

std::vector<SectionPair> torsion_hom_line(std::int64_t n, const QcohSheaf& F) {
  TorsionSystem sys = torsion_system(n, F, {});
  KMatrix null = nullspace(sys.images);
  std::vector<SectionPair> out;
  for (std::size_t k = 0; k < null.cols(); ++k) out.push_back(combine(sys.candidates, null, k, F));
  return out;
}

SectionPair free_section(const QcohSheaf& F, std::size_t i) {
  const SheafStructure& s = F.structure();
  const Field field = F.field();
  if (i >= s.rank) throw Error(ErrorKind::InvalidArgument, "summand index out of range");
  const std::int64_t ni = s.splitting.type[i];
  SectionPair c{zero_column(Ring::X, field, F.M().size()), zero_column(Ring::XInv, field, F.N().size())};
  for (std::size_t k = 0; k < s.rank; ++k) {
    c.u(s.m_f[k], 0) = s.splitting.A_inv(k, i);
    c.v(s.n_f[k], 0) = s.splitting.B(k, i);
  }
  auto fixed = solve_torsion(ni, F, c, zero_column(Ring::Laurent, field, F.P().size()));
  if (!fixed) throw Error(ErrorKind::InvalidSheaf, "free section does not lift over the torsion part");
  return *fixed;
}

SheafMorphism section_morphism(std::int64_t n, const QcohSheaf& F, const SectionPair& s) {
  QcohSheaf O = QcohSheaf::line_bundle(F.field(), n);
  return SheafMorphism(O, F, s.u, F.sigma() * s.u.with_ring(Ring::Laurent), s.v);
}

ExtLineSpace ext1_line(std::int64_t n, const QcohSheaf& F) {
  const SheafStructure& s = F.structure();
  ExtLineSpace out;
  out.n = n;
  for (std::size_t i = 0; i < s.rank; ++i) {
    for (std::int64_t e = s.splitting.type[i] + 1; e < n; ++e) {
      PolyMatrix rep(Ring::Laurent, F.field(), F.P().size(), 1);
      for (std::size_t k = 0; k < s.rank; ++k) {
        Poly entry(Ring::Laurent, F.field());
        for (std::size_t l = 0; l < s.rank; ++l) entry += s.sigma_ff(k, l) * s.splitting.A_inv(l, i);
        rep(s.p_f[k], 0) = entry.shifted(e).with_ring(Ring::Laurent);
      }
      out.labels.push_back(format_vector(rep));
      out.representatives.push_back(std::move(rep));
    }
  }
  return out;
}

namespace {

// c = A sigma_ff^-1 w_f: the class of w in the standard form sum of O(type_i).
PolyMatrix standard_coordinates(const QcohSheaf& F, const PolyMatrix& w) {
  const SheafStructure& s = F.structure();
  if (w.rows() != F.P().size() || w.cols() != 1) throw Error(ErrorKind::DimensionMismatch, "element of P expected");
  PolyMatrix wf = w.with_ring(Ring::Laurent).select_rows(s.p_f);
  return s.splitting.A.with_ring(Ring::Laurent) * s.sigma_ff_inv * wf;
}

}  // namespace

std::vector<Scalar> ext1_coordinates(std::int64_t n, const QcohSheaf& F, const PolyMatrix& w) {
  const SheafStructure& s = F.structure();
  PolyMatrix c = standard_coordinates(F, w);
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < s.rank; ++i)
    for (std::int64_t e = s.splitting.type[i] + 1; e < n; ++e) out.push_back(c(i, 0).coeff(e));
  return out;
}

ExtClass::ExtClass(std::int64_t n, QcohSheaf F, PolyMatrix y, PolyMatrix z)
    : n_(n), F_(std::move(F)), y_(std::move(y)), z_(std::move(z)) {
  if (y_.rows() != F_.P().size() || y_.cols() != 1 || z_.rows() != F_.P().size() || z_.cols() != 1)
    throw Error(ErrorKind::DimensionMismatch, "y and z must be columns over P");
  y_ = F_.P().reduce(y_.with_ring(Ring::Laurent));
  z_ = F_.P().reduce(z_.with_ring(Ring::Laurent));
  residue_ = ext1_coordinates(n_, F_, z_ - y_);
  ExtLineSpace basis = ext1_line(n_, F_);
  canonical_ = PolyMatrix(Ring::Laurent, F_.field(), F_.P().size(), 1);
  for (std::size_t k = 0; k < residue_.size(); ++k)
    canonical_ = canonical_ + basis.representatives[k].scaled(Poly::constant(Ring::Laurent, residue_[k]));
}

bool ExtClass::is_zero() const {
  for (const auto& c : residue_)
    if (!c.is_zero()) return false;
  return true;
}

Extension build_extension(const ExtClass& cls) {
  const QcohSheaf& F = cls.sheaf();
  const Field field = F.field();
  const std::int64_t n = cls.n();
  FpModule M = direct_sum(F.M(), FpModule::free(Ring::X, field, 1));
  FpModule P = direct_sum(F.P(), FpModule::free(Ring::Laurent, field, 1));
  FpModule N = direct_sum(F.N(), FpModule::free(Ring::XInv, field, 1));
  PolyMatrix sigma = block_diag(F.sigma(), PolyMatrix::identity(Ring::Laurent, field, 1));
  PolyMatrix tau = block_diag(F.tau(), PolyMatrix::diagonal(Ring::Laurent, field, {Poly::x_power(Ring::Laurent, field, n)}));
  const std::size_t last_m = F.M().size(), last_n = F.N().size();
  for (std::size_t r = 0; r < F.P().size(); ++r) {
    sigma(r, last_m) = cls.y()(r, 0).shifted(-n);
    tau(r, last_n) = cls.z()(r, 0);
  }
  QcohSheaf E(M, P, N, sigma, tau);
  auto inc_block = [&](Ring ring, std::size_t rows, std::size_t cols) {
    PolyMatrix m(ring, field, rows + 1, rows);
    for (std::size_t i = 0; i < rows; ++i) m(i, i) = Poly::constant(ring, field, 1);
    (void)cols;
    return m;
  };
  auto proj_block = [&](Ring ring, std::size_t rows) {
    PolyMatrix m(ring, field, 1, rows + 1);
    m(0, rows) = Poly::constant(ring, field, 1);
    return m;
  };
  SheafMorphism inc(F, E, inc_block(Ring::X, F.M().size(), 0), inc_block(Ring::Laurent, F.P().size(), 0),
                    inc_block(Ring::XInv, F.N().size(), 0));
  SheafMorphism proj(E, QcohSheaf::line_bundle(field, n), proj_block(Ring::X, F.M().size()),
                     proj_block(Ring::Laurent, F.P().size()), proj_block(Ring::XInv, F.N().size()));
  return {std::move(E), std::move(inc), std::move(proj)};
}

std::optional<SectionPair> is_split(const ExtClass& cls) {
  if (!cls.is_zero()) return std::nullopt;
  const QcohSheaf& F = cls.sheaf();
  const SheafStructure& s = F.structure();
  const Field field = F.field();
  const std::int64_t n = cls.n();
  PolyMatrix w = F.P().reduce(cls.z() - cls.y());
  PolyMatrix c = standard_coordinates(F, w);
  PolyMatrix a(Ring::X, field, s.rank, 1), b(Ring::XInv, field, s.rank, 1);
  for (std::size_t i = 0; i < s.rank; ++i) {
    const std::int64_t ni = s.splitting.type[i];
    for (const auto& [e, coef] : c(i, 0).terms()) {
      if (e >= n)
        a(i, 0) += Poly::monomial(Ring::X, coef, e - n);
      else if (e <= ni)
        b(i, 0) += Poly::monomial(Ring::XInv, coef, e - ni);
      else
        throw Error(ErrorKind::NotInSpan, "residue computation disagrees with the split decomposition");
    }
  }
  PolyMatrix uf = s.splitting.A_inv * a;
  PolyMatrix vf = -(s.splitting.B * b);
  SectionPair base{zero_column(Ring::X, field, F.M().size()), zero_column(Ring::XInv, field, F.N().size())};
  for (std::size_t k = 0; k < s.rank; ++k) {
    base.u(s.m_f[k], 0) = uf(k, 0).with_ring(Ring::X);
    base.v(s.n_f[k], 0) = vf(k, 0).with_ring(Ring::XInv);
  }
  auto witness = solve_torsion(n, F, base, w);
  if (!witness || !F.P().reduce(section_residual(n, F, *witness) - w).is_zero())
    throw Error(ErrorKind::NotInSpan, "split witness failed verification");
  return witness;
}

UPerpCertificate in_u_perp(const QcohSheaf& F) {
  const SheafStructure& s = F.structure();
  UPerpCertificate cert;
  if (s.rank == 0) return cert;
  cert.member = false;
  cert.witness_n = s.splitting.type.front() + 2;
  cert.witness_dimension = ext1_line(*cert.witness_n, F).dimension();
  return cert;
}

}  // namespace qcoh
