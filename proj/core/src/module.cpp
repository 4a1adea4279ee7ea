#include "qcoh/module.hpp"

#include <algorithm>
#include <sstream>

#include "qcoh/error.hpp"
#include "qcoh/smith.hpp"

namespace qcoh {

FpModule::FpModule(Ring ring, Field field, std::vector<Poly> divisors)
    : ring_(ring), field_(field), divisors_(std::move(divisors)) {
  for (auto& d : divisors_) {
    if (d.is_zero()) {
      d = Poly(ring_, field_);
      continue;
    }
    if (!d.fits(ring_)) throw Error(ErrorKind::RingMismatch, "divisor " + d.to_string() + " is not in " + qcoh::to_string(ring_));
    if (euclid::is_unit(d, ring_))
      throw Error(ErrorKind::InvalidArgument, "unit divisor " + d.to_string() + " in diagonal module");
    d = euclid::normalize(d, ring_).second;
  }
}

FpModule FpModule::free(Ring ring, Field field, std::size_t rank) {
  return FpModule(ring, field, std::vector<Poly>(rank, Poly(ring, field)));
}

namespace {

// Divisors per generator when every relation is a normalized non-unit multiple of a
// distinct generator, so that the presentation is already in diagonal form.
std::optional<std::vector<Poly>> diagonal_presentation(const PolyMatrix& rel, Ring ring) {
  std::vector<Poly> divisors(rel.rows(), Poly(ring, rel.field()));
  for (std::size_t c = 0; c < rel.cols(); ++c) {
    std::optional<std::size_t> row;
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      if (rel(r, c).is_zero()) continue;
      if (row) return std::nullopt;
      row = r;
    }
    if (!row || !divisors[*row].is_zero()) return std::nullopt;
    const Poly& d = rel(*row, c);
    if (euclid::is_unit(d, ring) || !(euclid::normalize(d, ring).second == d)) return std::nullopt;
    divisors[*row] = d;
  }
  return divisors;
}

}  // namespace

FpModule::Normalized FpModule::from_presentation(Ring ring, Field field, std::size_t gens, const PolyMatrix& relations) {
  if (relations.rows() != gens)
    throw Error(ErrorKind::DimensionMismatch, "relation matrix has " + std::to_string(relations.rows()) +
                                                  " rows for " + std::to_string(gens) + " generators");
  if (!relations.fits(ring)) throw Error(ErrorKind::RingMismatch, "relations are not over " + std::string(qcoh::to_string(ring)));
  PolyMatrix rel = relations.cols() == 0 ? PolyMatrix(ring, field, gens, 0) : relations.with_ring(ring);
  if (auto diag = diagonal_presentation(rel, ring)) {
    PolyMatrix id = PolyMatrix::identity(ring, field, gens);
    return Normalized{FpModule(ring, field, std::move(*diag)), id, id};
  }
  SmithForm s = smith_normal_form(rel, ring);
  std::vector<Poly> divisors;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < gens; ++i) {
    Poly d = i < s.rank ? s.D(i, i) : Poly(ring, field);
    if (!d.is_zero() && euclid::is_unit(d, ring)) continue;
    kept.push_back(i);
    divisors.push_back(d);
  }
  FpModule module(ring, field, std::move(divisors));
  PolyMatrix pi = module.reduce(s.U.select_rows(kept));
  PolyMatrix lambda = s.U_inv.select_cols(kept);
  return Normalized{std::move(module), std::move(pi), std::move(lambda)};
}

std::size_t FpModule::free_rank() const {
  return static_cast<std::size_t>(std::count_if(divisors_.begin(), divisors_.end(), [](const Poly& d) { return d.is_zero(); }));
}

std::vector<std::size_t> FpModule::free_coords() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (divisors_[i].is_zero()) out.push_back(i);
  return out;
}

std::vector<std::size_t> FpModule::torsion_coords() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (!divisors_[i].is_zero()) out.push_back(i);
  return out;
}

std::int64_t FpModule::coord_dimension(std::size_t i) const {
  const Poly& d = divisors_.at(i);
  if (d.is_zero()) throw Error(ErrorKind::InfiniteDimensional, "free coordinate has infinite k-dimension");
  return euclid::norm(d, ring_);
}

std::int64_t FpModule::dimension() const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < divisors_.size(); ++i) total += coord_dimension(i);
  return total;
}

std::vector<Poly> FpModule::invariant_factors() const {
  auto tc = torsion_coords();
  if (tc.empty()) return {};
  std::vector<Poly> ds;
  for (auto i : tc) ds.push_back(divisors_[i]);
  SmithForm s = smith_normal_form(PolyMatrix::diagonal(ring_, field_, ds), ring_);
  std::vector<Poly> out;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (!euclid::is_unit(s.D(i, i), ring_)) out.push_back(s.D(i, i));
  return out;
}

bool FpModule::isomorphic(const FpModule& other) const {
  return ring_ == other.ring_ && free_rank() == other.free_rank() && invariant_factors() == other.invariant_factors();
}

PolyMatrix FpModule::relation_matrix() const { return PolyMatrix::diagonal(ring_, field_, divisors_); }

Poly FpModule::reduce_entry(std::size_t coord, const Poly& p) const {
  const Poly& d = divisors_[coord];
  if (d.is_zero()) return p.with_ring(ring_);
  return euclid::reduce(p, d, ring_).with_ring(ring_);
}

PolyMatrix FpModule::reduce(const PolyMatrix& m) const {
  if (m.rows() != size())
    throw Error(ErrorKind::DimensionMismatch, "matrix rows " + std::to_string(m.rows()) + " vs module size " + std::to_string(size()));
  PolyMatrix out(ring_, field_, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = reduce_entry(r, m(r, c));
  return out;
}

FpModule direct_sum(const FpModule& a, const FpModule& b) {
  if (a.ring_ != b.ring_) throw Error(ErrorKind::RingMismatch, "direct sum over different rings");
  FpModule out(a.ring_, a.field_);
  out.divisors_ = a.divisors_;
  out.divisors_.insert(out.divisors_.end(), b.divisors_.begin(), b.divisors_.end());
  return out;
}

std::string FpModule::to_string() const {
  if (divisors_.empty()) return "0";
  std::ostringstream os;
  const char* r = ring_ == Ring::X ? "k[x]" : ring_ == Ring::XInv ? "k[x^-1]" : "k[x,x^-1]";
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    if (i) os << " + ";
    os << r;
    if (!divisors_[i].is_zero()) os << "/(" << divisors_[i] << ")";
  }
  return os.str();
}

namespace {

// Columns of diag(d_i) for the torsion coordinates only.
PolyMatrix torsion_relations(const FpModule& m) {
  auto tc = m.torsion_coords();
  PolyMatrix out(m.ring(), m.field(), m.size(), tc.size());
  for (std::size_t k = 0; k < tc.size(); ++k) out(tc[k], k) = m.divisor(tc[k]);
  return out;
}

}  // namespace

bool is_well_defined(const FpModule& source, const FpModule& target, const PolyMatrix& matrix) {
  if (matrix.rows() != target.size() || matrix.cols() != source.size()) return false;
  if (!matrix.fits(target.ring())) return false;
  for (auto j : source.torsion_coords())
    for (std::size_t i = 0; i < target.size(); ++i) {
      Poly image = source.divisor(j) * matrix(i, j);
      if (!target.reduce_entry(i, image).is_zero()) return false;
    }
  return true;
}

ModuleKernel kernel(const FpModule& source, const FpModule& target, const PolyMatrix& matrix) {
  const Ring ring = source.ring();
  const Field field = source.field();
  if (source.is_zero()) return {FpModule(ring, field), PolyMatrix(ring, field, 0, 0)};
  if (matrix.is_zero()) return {source, PolyMatrix::identity(ring, field, source.size())};
  PolyMatrix H = hstack(matrix.with_ring(ring), -torsion_relations(target));
  PolyMatrix K = kernel_basis(H, ring);
  std::vector<std::size_t> top(source.size());
  for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;
  PolyMatrix G = K.select_rows(top);
  PolyMatrix Hs = hstack(G, -torsion_relations(source));
  PolyMatrix R = kernel_basis(Hs, ring);
  std::vector<std::size_t> head(G.cols());
  for (std::size_t i = 0; i < head.size(); ++i) head[i] = i;
  auto norm = FpModule::from_presentation(ring, field, G.cols(), R.select_rows(head));
  PolyMatrix inclusion = source.reduce(G * norm.lambda);
  return {std::move(norm.module), std::move(inclusion)};
}

ModuleCokernel cokernel(const FpModule& source, const FpModule& target, const PolyMatrix& matrix) {
  (void)source;
  const Ring ring = target.ring();
  PolyMatrix rel = hstack(torsion_relations(target), matrix.with_ring(ring));
  auto norm = FpModule::from_presentation(ring, target.field(), target.size(), rel);
  return {norm.module, norm.pi, target.reduce(norm.lambda)};
}

std::optional<PolyMatrix> lift_through(const FpModule& ambient, const PolyMatrix& inclusion, const PolyMatrix& rhs) {
  const Ring ring = ambient.ring();
  const std::size_t k = inclusion.cols();
  if (k == 0) {
    if (!ambient.reduce(rhs).is_zero()) return std::nullopt;
    return PolyMatrix(ring, ambient.field(), 0, rhs.cols());
  }
  PolyMatrix H = hstack(inclusion.with_ring(ring), torsion_relations(ambient));
  auto sol = solve_linear(H, rhs.with_ring(ring), ring);
  if (!sol) return std::nullopt;
  std::vector<std::size_t> head(k);
  for (std::size_t i = 0; i < k; ++i) head[i] = i;
  return sol->select_rows(head);
}

std::pair<FpModule, std::vector<std::size_t>> localize(const FpModule& m) {
  std::vector<Poly> ds;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Poly d = m.divisor(i).with_ring(Ring::Laurent);
    if (!d.is_zero() && euclid::is_unit(d, Ring::Laurent)) continue;
    kept.push_back(i);
    ds.push_back(d);
  }
  return {FpModule(Ring::Laurent, m.field(), std::move(ds)), std::move(kept)};
}

std::pair<std::int64_t, Poly> split_valuation(const Poly& d, Ring ring) {
  if (d.is_zero()) throw Error(ErrorKind::ZeroInput, "valuation of zero");
  if (ring == Ring::X) {
    std::int64_t k = d.low_degree();
    return {k, euclid::normalize(d.shifted(-k), Ring::X).second};
  }
  if (ring == Ring::XInv) {
    std::int64_t k = -d.degree();
    return {k, euclid::normalize(d.shifted(k), Ring::XInv).second};
  }
  return {0, euclid::normalize(d, Ring::Laurent).second};
}

std::int64_t hom_dimension(const FpModule& source, const FpModule& target) {
  if (source.ring() != target.ring()) throw Error(ErrorKind::RingMismatch, "hom between modules over different rings");
  std::int64_t total = 0;
  for (std::size_t j = 0; j < source.size(); ++j)
    for (std::size_t i = 0; i < target.size(); ++i) {
      const Poly& a = source.divisor(j);
      const Poly& b = target.divisor(i);
      if (b.is_zero()) {
        if (a.is_zero()) throw Error(ErrorKind::InfiniteDimensional, "Hom(R, R) is infinite-dimensional over k");
        continue;
      }
      total += a.is_zero() ? euclid::norm(b, source.ring()) : euclid::norm(euclid::gcd(a, b, source.ring()), source.ring());
    }
  return total;
}

}  // namespace qcoh
