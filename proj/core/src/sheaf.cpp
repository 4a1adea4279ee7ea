#include "qcoh/sheaf.hpp"

#include <exception>
#include <mutex>
#include <sstream>

#include "qcoh/error.hpp"
#include "qcoh/smith.hpp"

namespace qcoh {

struct QcohSheaf::Cache {
  std::once_flag once;
  std::optional<SheafStructure> structure;
  std::exception_ptr error;
};

QcohSheaf::QcohSheaf(Field field)
    : field_(field),
      M_(Ring::X, field),
      P_(Ring::Laurent, field),
      N_(Ring::XInv, field),
      sigma_(Ring::Laurent, field, 0, 0),
      tau_(Ring::Laurent, field, 0, 0),
      cache_(std::make_shared<Cache>()) {}

QcohSheaf::QcohSheaf(FpModule M, FpModule P, FpModule N, PolyMatrix sigma, PolyMatrix tau)
    : field_(M.field()), M_(std::move(M)), P_(std::move(P)), N_(std::move(N)), cache_(std::make_shared<Cache>()) {
  if (M_.ring() != Ring::X || P_.ring() != Ring::Laurent || N_.ring() != Ring::XInv)
    throw Error(ErrorKind::RingMismatch, "sheaf components must be over k[x], k[x,x^-1], k[x^-1]");
  if (!(P_.field() == field_) || !(N_.field() == field_)) throw Error(ErrorKind::FieldMismatch, "sheaf components over different fields");
  if (sigma.rows() != P_.size() || sigma.cols() != M_.size())
    throw Error(ErrorKind::InvalidSheaf, "sigma has shape " + std::to_string(sigma.rows()) + "x" + std::to_string(sigma.cols()) +
                                             ", expected " + std::to_string(P_.size()) + "x" + std::to_string(M_.size()));
  if (tau.rows() != P_.size() || tau.cols() != N_.size())
    throw Error(ErrorKind::InvalidSheaf, "tau has shape " + std::to_string(tau.rows()) + "x" + std::to_string(tau.cols()) +
                                             ", expected " + std::to_string(P_.size()) + "x" + std::to_string(N_.size()));
  sigma_ = P_.reduce(sigma.with_ring(Ring::Laurent));
  tau_ = P_.reduce(tau.with_ring(Ring::Laurent));
  if (!is_well_defined(M_, P_, sigma_)) throw Error(ErrorKind::InvalidSheaf, "sigma does not respect the relations of M");
  if (!is_well_defined(N_, P_, tau_)) throw Error(ErrorKind::InvalidSheaf, "tau does not respect the relations of N");
}

SheafPresentation present_sheaf(Field field, std::size_t m_gens, const PolyMatrix& m_rel, std::size_t p_gens,
                                       const PolyMatrix& p_rel, std::size_t n_gens, const PolyMatrix& n_rel,
                                       const PolyMatrix& sigma, const PolyMatrix& tau) {
  if (sigma.rows() != p_gens || sigma.cols() != m_gens) throw Error(ErrorKind::InvalidSheaf, "sigma shape does not match generators");
  if (tau.rows() != p_gens || tau.cols() != n_gens) throw Error(ErrorKind::InvalidSheaf, "tau shape does not match generators");
  if (!sigma.fits(Ring::Laurent) || !tau.fits(Ring::Laurent)) throw Error(ErrorKind::RingMismatch, "gluing maps must be Laurent");
  auto m = FpModule::from_presentation(Ring::X, field, m_gens, m_rel);
  auto p = FpModule::from_presentation(Ring::Laurent, field, p_gens, p_rel);
  auto n = FpModule::from_presentation(Ring::XInv, field, n_gens, n_rel);
  // Raw compatibility: sigma maps relations of M into the relations of P.
  auto compatible = [&](const PolyMatrix& map, const PolyMatrix& rel) {
    if (rel.cols() == 0) return true;
    PolyMatrix image = map.with_ring(Ring::Laurent) * rel.with_ring(Ring::Laurent);
    if (p_rel.cols() == 0) return image.is_zero();
    return solve_linear(p_rel.with_ring(Ring::Laurent), image, Ring::Laurent).has_value();
  };
  if (!compatible(sigma, m_rel)) throw Error(ErrorKind::InvalidSheaf, "sigma does not respect the relations of M");
  if (!compatible(tau, n_rel)) throw Error(ErrorKind::InvalidSheaf, "tau does not respect the relations of N");
  PolyMatrix s = p.pi * sigma.with_ring(Ring::Laurent) * m.lambda.with_ring(Ring::Laurent);
  PolyMatrix t = p.pi * tau.with_ring(Ring::Laurent) * n.lambda.with_ring(Ring::Laurent);
  return SheafPresentation{QcohSheaf(m.module, p.module, n.module, s, t), m.pi, m.lambda, p.pi, p.lambda, n.pi, n.lambda};
}

QcohSheaf QcohSheaf::from_presentation(Field field, std::size_t m_gens, const PolyMatrix& m_rel, std::size_t p_gens,
                                       const PolyMatrix& p_rel, std::size_t n_gens, const PolyMatrix& n_rel,
                                       const PolyMatrix& sigma, const PolyMatrix& tau) {
  return present_sheaf(field, m_gens, m_rel, p_gens, p_rel, n_gens, n_rel, sigma, tau).sheaf;
}

QcohSheaf QcohSheaf::line_bundle(Field field, std::int64_t n) {
  return QcohSheaf(FpModule::free(Ring::X, field, 1), FpModule::free(Ring::Laurent, field, 1),
                   FpModule::free(Ring::XInv, field, 1), PolyMatrix::identity(Ring::Laurent, field, 1),
                   PolyMatrix::diagonal(Ring::Laurent, field, {Poly::x_power(Ring::Laurent, field, n)}));
}

QcohSheaf QcohSheaf::line_bundle_sum(Field field, const std::vector<std::int64_t>& twists) {
  const std::size_t r = twists.size();
  std::vector<Poly> d;
  for (auto n : twists) d.push_back(Poly::x_power(Ring::Laurent, field, n));
  return QcohSheaf(FpModule::free(Ring::X, field, r), FpModule::free(Ring::Laurent, field, r),
                   FpModule::free(Ring::XInv, field, r), PolyMatrix::identity(Ring::Laurent, field, r),
                   PolyMatrix::diagonal(Ring::Laurent, field, d));
}

QcohSheaf QcohSheaf::torsion(Field field, const Poly& divisor_x) {
  if (divisor_x.is_zero() || !divisor_x.fits(Ring::X) || euclid::is_unit(divisor_x, Ring::X))
    throw Error(ErrorKind::InvalidArgument, "torsion divisor must be a non-constant polynomial in x");
  auto [k, g] = split_valuation(divisor_x, Ring::X);
  (void)k;
  FpModule M(Ring::X, field, {divisor_x});
  if (g.degree() == 0) {
    return QcohSheaf(M, FpModule(Ring::Laurent, field), FpModule(Ring::XInv, field), PolyMatrix(Ring::Laurent, field, 0, 1),
                     PolyMatrix(Ring::Laurent, field, 0, 0));
  }
  Poly g_inv = g.shifted(-g.degree()).with_ring(Ring::XInv);
  FpModule P(Ring::Laurent, field, {g.with_ring(Ring::Laurent)});
  FpModule N(Ring::XInv, field, {g_inv});
  auto one = PolyMatrix::identity(Ring::Laurent, field, 1);
  return QcohSheaf(M, P, N, one, one);
}

QcohSheaf QcohSheaf::torsion(const Point& point, int mult) {
  if (mult < 1) throw Error(ErrorKind::InvalidArgument, "multiplicity must be at least 1");
  const Field field = point.a.field();
  if (point.at_infinity) {
    FpModule N(Ring::XInv, field, {Poly::x_power(Ring::XInv, field, -mult)});
    return QcohSheaf(FpModule(Ring::X, field), FpModule(Ring::Laurent, field), N, PolyMatrix(Ring::Laurent, field, 0, 0),
                     PolyMatrix(Ring::Laurent, field, 0, 1));
  }
  Poly linear = Poly::x_power(Ring::X, field, 1) - Poly::constant(Ring::X, point.a);
  Poly d = Poly::constant(Ring::X, field, 1);
  for (int i = 0; i < mult; ++i) d *= linear;
  return torsion(field, d.with_ring(Ring::X));
}

QcohSheaf QcohSheaf::from_transition_matrix(const PolyMatrix& T) {
  if (!T.square()) throw Error(ErrorKind::NotInvertible, "transition matrix must be square");
  Poly det = determinant(T);
  if (det.is_zero()) throw Error(ErrorKind::NotInvertible, "transition matrix is singular");
  try {
    laurent_unit_decompose(det);
  } catch (const Error&) {
    throw Error(ErrorKind::NotInvertible, "determinant " + det.to_string() + " is not a unit of k[x,x^-1]");
  }
  const Field field = T.field();
  const std::size_t r = T.rows();
  return QcohSheaf(FpModule::free(Ring::X, field, r), FpModule::free(Ring::Laurent, field, r),
                   FpModule::free(Ring::XInv, field, r), PolyMatrix::identity(Ring::Laurent, field, r),
                   T.with_ring(Ring::Laurent));
}

bool QcohSheaf::is_locally_free() const { return M_.torsion_coords().empty() && N_.torsion_coords().empty(); }

const SheafStructure& QcohSheaf::structure() const {
  std::call_once(cache_->once, [this] {
    try {
      ValidationReport report = validate(*this);
      if (!report.valid) throw Error(ErrorKind::InvalidSheaf, report.violation);
      SheafStructure s;
      s.m_t = M_.torsion_coords();
      s.m_f = M_.free_coords();
      s.p_t = P_.torsion_coords();
      s.p_f = P_.free_coords();
      s.n_t = N_.torsion_coords();
      s.n_f = N_.free_coords();
      s.rank = s.p_f.size();
      if (s.m_f.size() != s.rank || s.n_f.size() != s.rank)
        throw Error(ErrorKind::InvalidSheaf, "free ranks of M, P, N differ");
      s.sigma_ff = sigma_.select_rows(s.p_f).select_cols(s.m_f);
      s.tau_ff = tau_.select_rows(s.p_f).select_cols(s.n_f);
      s.sigma_tt = sigma_.select_rows(s.p_t).select_cols(s.m_t);
      s.sigma_tf = sigma_.select_rows(s.p_t).select_cols(s.m_f);
      s.tau_tt = tau_.select_rows(s.p_t).select_cols(s.n_t);
      s.tau_tf = tau_.select_rows(s.p_t).select_cols(s.n_f);
      if (s.rank > 0) {
        s.sigma_ff_inv = inverse(s.sigma_ff, Ring::Laurent);
        s.transition = s.sigma_ff_inv * s.tau_ff;
        s.splitting = birkhoff_factorize(s.transition);
      } else {
        s.sigma_ff_inv = PolyMatrix(Ring::Laurent, field_, 0, 0);
        s.transition = s.sigma_ff_inv;
        s.splitting = SplittingData{{}, PolyMatrix(Ring::X, field_, 0, 0), PolyMatrix(Ring::XInv, field_, 0, 0),
                                    PolyMatrix(Ring::X, field_, 0, 0), PolyMatrix(Ring::XInv, field_, 0, 0)};
      }
      cache_->structure = std::move(s);
    } catch (...) {
      cache_->error = std::current_exception();
    }
  });
  if (cache_->error) std::rethrow_exception(cache_->error);
  return *cache_->structure;
}

QcohSheaf direct_sum(const QcohSheaf& a, const QcohSheaf& b) {
  return QcohSheaf(direct_sum(a.M_, b.M_), direct_sum(a.P_, b.P_), direct_sum(a.N_, b.N_), block_diag(a.sigma_, b.sigma_),
                   block_diag(a.tau_, b.tau_));
}

QcohSheaf direct_sum(const std::vector<QcohSheaf>& parts, Field field) {
  QcohSheaf out(field);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

bool operator==(const QcohSheaf& a, const QcohSheaf& b) {
  return a.M_ == b.M_ && a.P_ == b.P_ && a.N_ == b.N_ && a.sigma_ == b.sigma_ && a.tau_ == b.tau_;
}

std::string QcohSheaf::to_string() const {
  std::ostringstream os;
  os << "M = " << M_.to_string() << "; P = " << P_.to_string() << "; N = " << N_.to_string() << "; sigma = " << sigma_
     << "; tau = " << tau_;
  return os.str();
}

namespace {

struct LocalizationCheck {
  bool injective = true, surjective = true;
  std::int64_t kernel_exponent = 0, cokernel_exponent = 0;
};

// Examines the localized gluing map of one chart. For the k[x^-1] chart, exponents
// are measured in powers of x^-1.
LocalizationCheck check_localization(const FpModule& chart, const FpModule& P, const PolyMatrix& map, bool inverse_chart) {
  LocalizationCheck out;
  auto [local, kept] = localize(chart);
  PolyMatrix local_map = map.select_cols(kept);
  if (!kernel(local, P, local_map).module.is_zero()) out.injective = false;
  if (!cokernel(local, P, local_map).module.is_zero()) out.surjective = false;
  if (!out.injective || !out.surjective) return out;
  for (auto j : chart.torsion_coords()) {
    auto [k, rest] = split_valuation(chart.divisor(j), chart.ring());
    (void)rest;
    out.kernel_exponent = std::max(out.kernel_exponent, k);
  }
  if (P.size() == 0) return out;
  auto lift = lift_through(P, local_map, PolyMatrix::identity(Ring::Laurent, P.field(), P.size()));
  if (!lift) return out;
  for (std::size_t r = 0; r < lift->rows(); ++r) {
    if (!local.is_free_coord(r)) continue;
    for (std::size_t c = 0; c < lift->cols(); ++c) {
      const Poly& u = (*lift)(r, c);
      if (u.is_zero()) continue;
      std::int64_t need = inverse_chart ? u.degree() : -u.low_degree();
      out.cokernel_exponent = std::max(out.cokernel_exponent, need);
    }
  }
  return out;
}

}  // namespace

ValidationReport validate(const QcohSheaf& F) {
  ValidationReport report;
  auto fail = [&](std::string why) {
    report.valid = false;
    report.violation = std::move(why);
    return report;
  };
  if (!is_well_defined(F.M(), F.P(), F.sigma())) return fail("sigma does not respect the relations of M");
  if (!is_well_defined(F.N(), F.P(), F.tau())) return fail("tau does not respect the relations of N");
  auto describe = [](const char* name, const LocalizationCheck& c) {
    std::string why = std::string(name) + " is not an isomorphism (";
    if (!c.injective) why += c.surjective ? "not injective" : "not injective, not surjective";
    else why += "not surjective";
    return why + ")";
  };
  auto s = check_localization(F.M(), F.P(), F.sigma(), false);
  if (!s.injective || !s.surjective) return fail(describe("S^-1 sigma", s));
  auto t = check_localization(F.N(), F.P(), F.tau(), true);
  if (!t.injective || !t.surjective) return fail(describe("T^-1 tau", t));
  report.sigma_kernel_exponent = s.kernel_exponent;
  report.sigma_cokernel_exponent = s.cokernel_exponent;
  report.tau_kernel_exponent = t.kernel_exponent;
  report.tau_cokernel_exponent = t.cokernel_exponent;
  return report;
}

// ---------------------------------------------------------------------------

SheafMorphism SheafMorphism::unchecked(QcohSheaf source, QcohSheaf target, PolyMatrix phi_M, PolyMatrix phi_P, PolyMatrix phi_N) {
  SheafMorphism f;
  f.phi_M_ = target.M().reduce(phi_M.with_ring(Ring::X));
  f.phi_P_ = target.P().reduce(phi_P.with_ring(Ring::Laurent));
  f.phi_N_ = target.N().reduce(phi_N.with_ring(Ring::XInv));
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  return f;
}

SheafMorphism::SheafMorphism(QcohSheaf source, QcohSheaf target, PolyMatrix phi_M, PolyMatrix phi_P, PolyMatrix phi_N) {
  auto shape_ok = [](const PolyMatrix& m, const FpModule& src, const FpModule& tgt) {
    return m.rows() == tgt.size() && m.cols() == src.size();
  };
  if (!shape_ok(phi_M, source.M(), target.M()) || !shape_ok(phi_P, source.P(), target.P()) ||
      !shape_ok(phi_N, source.N(), target.N()))
    throw Error(ErrorKind::InvalidMorphism, "component shapes do not match source and target");
  if (!phi_M.fits(Ring::X) || !phi_N.fits(Ring::XInv))
    throw Error(ErrorKind::InvalidMorphism, "chart components must be over k[x] and k[x^-1]");
  *this = unchecked(std::move(source), std::move(target), std::move(phi_M), std::move(phi_P), std::move(phi_N));
  std::string problem = check();
  if (!problem.empty()) throw Error(ErrorKind::InvalidMorphism, problem);
}

SheafMorphism SheafMorphism::zero(const QcohSheaf& source, const QcohSheaf& target) {
  const Field f = source.field();
  return unchecked(source, target, PolyMatrix(Ring::X, f, target.M().size(), source.M().size()),
                   PolyMatrix(Ring::Laurent, f, target.P().size(), source.P().size()),
                   PolyMatrix(Ring::XInv, f, target.N().size(), source.N().size()));
}

SheafMorphism SheafMorphism::identity(const QcohSheaf& F) {
  const Field f = F.field();
  return unchecked(F, F, PolyMatrix::identity(Ring::X, f, F.M().size()), PolyMatrix::identity(Ring::Laurent, f, F.P().size()),
                   PolyMatrix::identity(Ring::XInv, f, F.N().size()));
}

std::string SheafMorphism::check() const {
  if (!is_well_defined(source_.M(), target_.M(), phi_M_)) return "M-component does not respect relations";
  if (!is_well_defined(source_.P(), target_.P(), phi_P_)) return "P-component does not respect relations";
  if (!is_well_defined(source_.N(), target_.N(), phi_N_)) return "N-component does not respect relations";
  if (!target_.P().reduce(phi_P_ * source_.sigma() - target_.sigma() * phi_M_).is_zero()) return "sigma square does not commute";
  if (!target_.P().reduce(phi_P_ * source_.tau() - target_.tau() * phi_N_).is_zero()) return "tau square does not commute";
  return {};
}

SheafMorphism SheafMorphism::scaled(const Scalar& c) const {
  Poly cx = Poly::constant(Ring::X, c), cl = Poly::constant(Ring::Laurent, c), cn = Poly::constant(Ring::XInv, c);
  return unchecked(source_, target_, phi_M_.scaled(cx), phi_P_.scaled(cl), phi_N_.scaled(cn));
}

SheafMorphism operator+(const SheafMorphism& a, const SheafMorphism& b) {
  return SheafMorphism::unchecked(a.source_, a.target_, a.phi_M_ + b.phi_M_, a.phi_P_ + b.phi_P_, a.phi_N_ + b.phi_N_);
}

SheafMorphism operator-(const SheafMorphism& a, const SheafMorphism& b) {
  return SheafMorphism::unchecked(a.source_, a.target_, a.phi_M_ - b.phi_M_, a.phi_P_ - b.phi_P_, a.phi_N_ - b.phi_N_);
}

SheafMorphism compose(const SheafMorphism& g, const SheafMorphism& f) {
  if (f.target_.M().size() != g.source_.M().size() || f.target_.P().size() != g.source_.P().size() ||
      f.target_.N().size() != g.source_.N().size())
    throw Error(ErrorKind::SourceMismatch, "composition of morphisms with incompatible ends");
  return SheafMorphism::unchecked(f.source_, g.target_, g.phi_M_ * f.phi_M_, g.phi_P_ * f.phi_P_, g.phi_N_ * f.phi_N_);
}

bool operator==(const SheafMorphism& a, const SheafMorphism& b) {
  return a.phi_M_ == b.phi_M_ && a.phi_P_ == b.phi_P_ && a.phi_N_ == b.phi_N_;
}

}  // namespace qcoh
