#include "qcoh/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "qcoh/classify.hpp"
#include "qcoh/error.hpp"

namespace qcoh {

BoundedComplex::BoundedComplex(Field field) : field_(field), zero_(field) {}

BoundedComplex::BoundedComplex(Field field, std::map<std::int64_t, QcohSheaf> objects,
                               std::map<std::int64_t, SheafMorphism> differentials)
    : field_(field), zero_(field) {
  for (auto& [n, F] : objects)
    if (!F.is_zero()) objects_.emplace(n, std::move(F));
  if (!objects_.empty()) {
    lo_ = objects_.begin()->first;
    hi_ = objects_.rbegin()->first;
  }
  for (auto& [n, d] : differentials) {
    if (!(d.source() == object(n)) || !(d.target() == object(n + 1)))
      throw Error(ErrorKind::InvalidMorphism, "differential in degree " + std::to_string(n) + " has the wrong source or target");
    if (!d.is_zero()) differentials_.emplace(n, std::move(d));
  }
  for (const auto& [n, d] : differentials_) {
    auto next = differentials_.find(n + 1);
    if (next != differentials_.end() && !compose(next->second, d).is_zero())
      throw Error(ErrorKind::InvalidMorphism, "differentials in degrees " + std::to_string(n) + " and " +
                                                  std::to_string(n + 1) + " do not compose to zero");
  }
}

const QcohSheaf& BoundedComplex::object(std::int64_t n) const {
  auto it = objects_.find(n);
  return it == objects_.end() ? zero_ : it->second;
}

SheafMorphism BoundedComplex::differential(std::int64_t n) const {
  auto it = differentials_.find(n);
  return it == differentials_.end() ? SheafMorphism::zero(object(n), object(n + 1)) : it->second;
}

BoundedComplex sphere(const QcohSheaf& F, std::int64_t n) { return BoundedComplex(F.field(), {{-n, F}}, {}); }

BoundedComplex disc(const QcohSheaf& F, std::int64_t n) {
  return BoundedComplex(F.field(), {{-n - 1, F}, {-n, F}}, {{-n - 1, SheafMorphism::identity(F)}});
}

SheafMorphism ChainMap::at(std::int64_t n) const {
  auto it = components.find(n);
  return it == components.end() ? SheafMorphism::zero(source.object(n), target.object(n)) : it->second;
}

std::string ChainMap::check() const {
  const std::int64_t lo = std::min(source.lo(), target.lo()) - 1, hi = std::max(source.hi(), target.hi());
  for (const auto& [n, f] : components)
    if (!(f.source() == source.object(n)) || !(f.target() == target.object(n)))
      return "component in degree " + std::to_string(n) + " has the wrong source or target";
  for (std::int64_t n = lo; n <= hi; ++n)
    if (!(compose(at(n + 1), source.differential(n)) - compose(target.differential(n), at(n))).is_zero())
      return "square in degree " + std::to_string(n) + " does not commute";
  return {};
}

ChainMap ChainMap::identity(const BoundedComplex& C) {
  ChainMap id{C, C, {}};
  for (const auto& [n, F] : C.objects()) id.components.emplace(n, SheafMorphism::identity(F));
  return id;
}

BoundedComplex mapping_cone(const ChainMap& f) {
  const BoundedComplex &X = f.source, &Y = f.target;
  const Field field = Y.field();
  if (X.is_zero() && Y.is_zero()) return BoundedComplex(field);
  const std::int64_t lo = std::min(X.is_zero() ? Y.lo() : X.lo() - 1, Y.is_zero() ? X.lo() - 1 : Y.lo());
  const std::int64_t hi = std::max(X.is_zero() ? Y.hi() : X.hi() - 1, Y.is_zero() ? X.hi() - 1 : Y.hi());
  auto parts = [&](std::int64_t n) { return std::vector<QcohSheaf>{X.object(n + 1), Y.object(n)}; };
  std::map<std::int64_t, QcohSheaf> objects;
  std::map<std::int64_t, SheafMorphism> diffs;
  for (std::int64_t n = lo; n <= hi; ++n) objects.emplace(n, direct_sum(parts(n), field));
  for (std::int64_t n = lo; n < hi; ++n) {
    SheafMorphism minus_dx = X.differential(n + 1).scaled(-Scalar::one(field));
    diffs.emplace(n, block_morphism(parts(n), parts(n + 1), {{minus_dx, std::nullopt}, {f.at(n + 1), Y.differential(n)}}));
  }
  return BoundedComplex(field, std::move(objects), std::move(diffs));
}

BoundedComplex tensor_complex(const BoundedComplex& X, const BoundedComplex& Y) {
  const Field field = X.field();
  if (X.is_zero() || Y.is_zero()) return BoundedComplex(field);
  auto terms = [&](std::int64_t m) {
    std::vector<std::int64_t> ts;
    for (std::int64_t t = X.lo(); t <= X.hi(); ++t)
      if (!X.object(t).is_zero() && !Y.object(m - t).is_zero()) ts.push_back(t);
    return ts;
  };
  auto parts = [&](std::int64_t m) {
    std::vector<QcohSheaf> out;
    for (auto t : terms(m)) out.push_back(tensor(X.object(t), Y.object(m - t)));
    return out;
  };
  const std::int64_t lo = X.lo() + Y.lo(), hi = X.hi() + Y.hi();
  std::map<std::int64_t, QcohSheaf> objects;
  std::map<std::int64_t, SheafMorphism> diffs;
  for (std::int64_t m = lo; m <= hi; ++m) objects.emplace(m, direct_sum(parts(m), field));
  for (std::int64_t m = lo; m < hi; ++m) {
    auto src = terms(m), tgt = terms(m + 1);
    if (src.empty() || tgt.empty()) continue;
    std::vector<std::vector<std::optional<SheafMorphism>>> blocks(tgt.size(),
                                                                  std::vector<std::optional<SheafMorphism>>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
      const std::int64_t t = src[j];
      for (std::size_t i = 0; i < tgt.size(); ++i) {
        if (tgt[i] == t + 1) {
          blocks[i][j] = tensor(X.differential(t), SheafMorphism::identity(Y.object(m - t)));
        } else if (tgt[i] == t) {
          SheafMorphism d = tensor(SheafMorphism::identity(X.object(t)), Y.differential(m - t));
          blocks[i][j] = (t % 2 == 0) ? d : d.scaled(-Scalar::one(field));
        }
      }
    }
    diffs.emplace(m, block_morphism(parts(m), parts(m + 1), blocks));
  }
  return BoundedComplex(field, std::move(objects), std::move(diffs));
}

SheafKernel cycles(const BoundedComplex& C, std::int64_t n) { return kernel(C.differential(n)); }

SheafKernel boundaries(const BoundedComplex& C, std::int64_t n) {
  return kernel(cokernel(C.differential(n - 1)).projection);
}

QcohSheaf homology(const BoundedComplex& C, std::int64_t n) {
  if (C.object(n).is_zero()) return QcohSheaf(C.field());
  SheafKernel Z = cycles(C, n);
  auto into_cycles = lift_through_mono(Z.inclusion, C.differential(n - 1));
  if (!into_cycles) throw Error(ErrorKind::InvalidMorphism, "boundaries are not contained in the cycles");
  return cokernel(*into_cycles).object;
}

bool is_exact(const BoundedComplex& C) {
  for (std::int64_t n = C.lo(); n <= C.hi(); ++n)
    if (!homology(C, n).is_zero()) return false;
  return true;
}

bool is_locally_projective_complex(const BoundedComplex& C) {
  if (!is_exact(C)) return false;
  for (std::int64_t n = C.lo(); n <= C.hi(); ++n)
    if (!cycles(C, n).object.is_locally_free()) return false;
  return true;
}

bool is_u_perp_complex(const BoundedComplex& C) {
  if (!is_exact(C)) return false;
  for (std::int64_t n = C.lo(); n <= C.hi(); ++n)
    if (!in_u_perp(cycles(C, n).object).member) return false;
  return true;
}

bool degreewise_isomorphic(const BoundedComplex& A, const BoundedComplex& B) {
  std::set<std::int64_t> degrees;
  for (const auto& [n, F] : A.objects()) degrees.insert(n);
  for (const auto& [n, F] : B.objects()) degrees.insert(n);
  for (auto n : degrees)
    if (!(classify(A.object(n)) == classify(B.object(n)))) return false;
  return true;
}

// ---------------------------------------------------------------------------

HomComplex::HomComplex(const BoundedComplex& X, const BoundedComplex& Y) {
  const Field field = X.field();
  empty_matrix_ = KMatrix(field, 0, 0);
  if (X.is_zero() || Y.is_zero()) return;
  lo_ = Y.lo() - X.hi();
  hi_ = Y.hi() - X.lo();
  for (std::int64_t n = lo_; n <= hi_; ++n) {
    auto& fs = factors_[n];
    for (std::int64_t k = X.lo(); k <= X.hi(); ++k)
      if (!X.object(k).is_zero() && !Y.object(k + n).is_zero()) fs.push_back({k, hom_space(X.object(k), Y.object(k + n))});
  }
  auto offset_of = [&](std::int64_t n, std::int64_t k) -> std::optional<std::size_t> {
    std::size_t off = 0;
    for (const auto& f : factors(n)) {
      if (f.k == k) return off;
      off += f.space.dimension();
    }
    return std::nullopt;
  };
  for (std::int64_t n = lo_; n <= hi_; ++n) {
    KMatrix d(field, dimension(n + 1), dimension(n));
    const Scalar sign = (n % 2 == 0) ? -Scalar::one(field) : Scalar::one(field);  // -(-1)^n
    std::size_t col = 0;
    for (const auto& fac : factors(n)) {
      const std::int64_t k = fac.k;
      auto same = offset_of(n + 1, k), prev = offset_of(n + 1, k - 1);
      for (const auto& f : fac.space.basis()) {
        if (same) {
          for (const auto& g : factors(n + 1))
            if (g.k == k) {
              auto c = g.space.coordinates(compose(Y.differential(k + n), f));
              for (std::size_t r = 0; r < c.size(); ++r) d(*same + r, col) += c[r];
            }
        }
        if (prev) {
          for (const auto& g : factors(n + 1))
            if (g.k == k - 1) {
              auto c = g.space.coordinates(compose(f, X.differential(k - 1)).scaled(sign));
              for (std::size_t r = 0; r < c.size(); ++r) d(*prev + r, col) += c[r];
            }
        }
        ++col;
      }
    }
    differentials_.emplace(n, std::move(d));
  }
  for (std::int64_t n = lo_; n < hi_; ++n)
    if (!(differential(n + 1) * differential(n)).is_zero())
      throw Error(ErrorKind::InvalidMorphism, "hom complex differential does not square to zero");
}

const std::vector<HomComplex::Factor>& HomComplex::factors(std::int64_t n) const {
  auto it = factors_.find(n);
  return it == factors_.end() ? empty_ : it->second;
}

std::size_t HomComplex::dimension(std::int64_t n) const {
  std::size_t d = 0;
  for (const auto& f : factors(n)) d += f.space.dimension();
  return d;
}

const KMatrix& HomComplex::differential(std::int64_t n) const {
  auto it = differentials_.find(n);
  return it == differentials_.end() ? empty_matrix_ : it->second;
}

std::size_t HomComplex::cohomology_dimension(std::int64_t n) const {
  auto rank_of = [&](std::int64_t m) {
    const KMatrix& d = differential(m);
    return d.rows() == 0 || d.cols() == 0 ? std::size_t{0} : rank(d);
  };
  return dimension(n) - rank_of(n) - rank_of(n - 1);
}

HomComplex hom_complex(const BoundedComplex& X, const BoundedComplex& Y) { return HomComplex(X, Y); }

// ---------------------------------------------------------------------------

MistExtension mist_extension(const BoundedComplex& N, std::int64_t n, const Extension& ext) {
  const Field field = N.field();
  SheafKernel Z = cycles(N, n);
  if (!(ext.inclusion.source() == Z.object))
    throw Error(ErrorKind::KernelMismatch, "extension does not start at the cycles in degree " + std::to_string(n));
  const QcohSheaf& T = ext.inclusion.target();
  const QcohSheaf& C = ext.projection.target();
  const QcohSheaf& Nn = N.object(n);
  std::vector<QcohSheaf> parts{Nn, T};
  SheafMorphism glue = block_morphism({Z.object}, parts, {{Z.inclusion}, {ext.inclusion.scaled(-Scalar::one(field))}});
  SheafCokernel Q = cokernel(glue);

  MistExtension out;
  out.degree = n;
  out.input = ext;
  out.pushout = {Q.object, compose(Q.projection, summand_inclusion(parts, 0)), compose(Q.projection, summand_inclusion(parts, 1))};
  SheafMorphism q = descend(Q, block_morphism(parts, {C}, {{std::nullopt, ext.projection}}));
  SheafMorphism delta_n =
      descend(Q, block_morphism(parts, {N.object(n + 1)}, {{N.differential(n), std::nullopt}}));

  std::map<std::int64_t, QcohSheaf> objects = N.objects();
  objects[n] = Q.object;
  std::map<std::int64_t, SheafMorphism> diffs;
  for (std::int64_t k = std::min(N.lo(), n) - 1; k <= std::max(N.hi(), n); ++k) {
    if (k == n - 1)
      diffs.emplace(k, compose(out.pushout.from_V, N.differential(k)));
    else if (k == n)
      diffs.emplace(k, delta_n);
    else
      diffs.emplace(k, N.differential(k));
  }
  out.H = BoundedComplex(field, objects, diffs);
  out.quotient = BoundedComplex(field, {{n, C}}, {});
  out.inclusion = ChainMap{N, out.H, {}};
  for (const auto& [k, F] : N.objects())
    if (k != n) out.inclusion.components.emplace(k, SheafMorphism::identity(F));
  out.inclusion.components[n] = out.pushout.from_V;
  out.projection = ChainMap{out.H, out.quotient, {{n, q}}};
  return out;
}

namespace {

// Some r in Hom(C, A) with every map in `constraints` sending r to the given target value.
struct Constraint {
  HomSpace target_space;
  std::function<SheafMorphism(const SheafMorphism&)> apply;
  SheafMorphism value;
};

std::optional<SheafMorphism> solve_affine(const HomSpace& space, const std::vector<Constraint>& constraints) {
  const Field field = space.source().field();
  std::size_t rows = 0;
  for (const auto& c : constraints) rows += c.target_space.dimension();
  KMatrix A(field, rows, space.dimension()), b(field, rows, 1);
  std::size_t r0 = 0;
  for (const auto& c : constraints) {
    KMatrix block = induced_matrix(space, c.target_space, c.apply);
    auto rhs = c.target_space.coordinates(c.value);
    for (std::size_t r = 0; r < block.rows(); ++r) {
      for (std::size_t j = 0; j < block.cols(); ++j) A(r0 + r, j) = block(r, j);
      b(r0 + r, 0) = rhs[r];
    }
    r0 += block.rows();
  }
  auto sol = solve(A, b);
  if (!sol) return std::nullopt;
  std::vector<Scalar> coeffs;
  for (std::size_t i = 0; i < space.dimension(); ++i) coeffs.push_back((*sol)(i, 0));
  return space.combination(coeffs);
}

}  // namespace

std::optional<SheafMorphism> mist_output_section(const MistExtension& m) {
  const QcohSheaf& C = m.quotient.object(m.degree);
  const QcohSheaf& Q = m.H.object(m.degree);
  const SheafMorphism q = m.projection.at(m.degree);
  const SheafMorphism dH = m.H.differential(m.degree);
  const QcohSheaf& next = m.H.object(m.degree + 1);
  return solve_affine(hom_space(C, Q),
                      {{hom_space(C, C), [&](const SheafMorphism& r) { return compose(q, r); }, SheafMorphism::identity(C)},
                       {hom_space(C, next), [&](const SheafMorphism& r) { return compose(dH, r); }, SheafMorphism::zero(C, next)}});
}

std::optional<SheafMorphism> extension_section(const Extension& ext) {
  const QcohSheaf& C = ext.projection.target();
  const QcohSheaf& T = ext.projection.source();
  return solve_affine(hom_space(C, T), {{hom_space(C, C), [&](const SheafMorphism& s) { return compose(ext.projection, s); },
                                         SheafMorphism::identity(C)}});
}

}  // namespace qcoh
