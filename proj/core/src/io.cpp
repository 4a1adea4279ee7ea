#include "qcoh/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qcoh/error.hpp"

namespace qcoh::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::Parse, (path.empty() ? std::string("/") : path) + ": " + what);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }

/// Re-raises a library error with the JSON path prepended, keeping its kind.
[[noreturn]] void rethrow_at(const std::string& path, const Error& e) {
  std::string what = e.what();
  const std::string prefix = std::string(to_string(e.kind())) + ": ";
  if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
  throw Error(e.kind(), (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) fail(path, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer, found " + j.dump());
  return j.get<std::int64_t>();
}

std::int64_t parse_degree(const std::string& key, const std::string& path) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(key, &used);
    if (used == key.size()) return v;
  } catch (const std::exception&) {
  }
  fail(path, "degree key '" + key + "' is not an integer");
}

}  // namespace

Poly parse_poly(Ring ring, Field field, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto bad = [&](std::size_t at) -> Error {
    return Error(ErrorKind::Parse, "cannot parse polynomial '" + std::string(text) + "' at '" + s.substr(at) + "'");
  };
  if (s.empty()) throw bad(0);
  Poly out(Ring::Laurent, field);
  std::size_t i = 0;
  auto digits = [&] {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };
  while (i < s.size()) {
    const std::size_t term_start = i;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (term_start != 0) {
      throw bad(i);
    }
    std::string coef = digits();
    if (!coef.empty() && i < s.size() && s[i] == '/') {
      ++i;
      std::string den = digits();
      if (den.empty()) throw bad(i);
      coef += "/" + den;
    }
    if (i < s.size() && s[i] == '*') {
      if (coef.empty()) throw bad(i);
      ++i;
    }
    std::int64_t exponent = 0;
    bool has_x = false;
    if (i < s.size() && s[i] == 'x') {
      has_x = true;
      exponent = 1;
      ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool paren = i < s.size() && s[i] == '(';
        if (paren) ++i;
        bool neg_exp = i < s.size() && s[i] == '-';
        if (neg_exp) ++i;
        std::string e = digits();
        if (e.empty()) throw bad(i);
        if (paren) {
          if (i >= s.size() || s[i] != ')') throw bad(i);
          ++i;
        }
        exponent = std::stoll(e) * (neg_exp ? -1 : 1);
      }
    }
    if (coef.empty() && !has_x) throw bad(term_start);
    Scalar c = coef.empty() ? Scalar::one(field) : Scalar::parse(field, coef);
    if (negative) c = -c;
    out += Poly::monomial(Ring::Laurent, c, exponent);
  }
  if (!out.fits(ring))
    throw Error(ErrorKind::RingMismatch, "polynomial '" + std::string(text) + "' is not over " + qcoh::to_string(ring));
  return out.with_ring(ring);
}

Json to_json(const Poly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.to_string();
  return out;
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const FpModule& m) {
  auto torsion = m.torsion_coords();
  PolyMatrix rel(m.ring(), m.field(), m.size(), torsion.size());
  for (std::size_t k = 0; k < torsion.size(); ++k) rel(torsion[k], k) = m.divisor(torsion[k]);
  return Json{{"ring", qcoh::to_string(m.ring())}, {"gens", m.size()}, {"relations", to_json(rel)}};
}

Json to_json(const QcohSheaf& F) {
  return Json{{"M", to_json(F.M())}, {"P", to_json(F.P())}, {"N", to_json(F.N())}, {"sigma", to_json(F.sigma())},
              {"tau", to_json(F.tau())}};
}

Json to_json(const SheafMorphism& f) {
  return Json{{"M", to_json(f.phi_M())}, {"P", to_json(f.phi_P())}, {"N", to_json(f.phi_N())}};
}

Json to_json(const BoundedComplex& C) {
  Json objects = Json::object(), diffs = Json::object();
  for (const auto& [n, F] : C.objects()) objects[std::to_string(n)] = to_json(F);
  for (std::int64_t n = C.lo(); n < C.hi(); ++n) {
    SheafMorphism d = C.differential(n);
    if (!d.is_zero()) diffs[std::to_string(n)] = to_json(d);
  }
  Json window = C.is_zero() ? Json::array({0, -1}) : Json::array({C.lo(), C.hi()});
  return Json{{"window", window}, {"objects", objects}, {"differentials", diffs}};
}

Json to_json(const StructureReport& r) {
  Json elsewhere = Json::array();
  for (const auto& p : r.torsion.elsewhere) elsewhere.push_back(to_json(p));
  return Json{{"rank", r.rank},
              {"type", r.type},
              {"torsion", {{"at_zero", r.torsion.at_zero}, {"at_infinity", r.torsion.at_infinity}, {"elsewhere", elsewhere},
                           {"length", r.torsion.length}}},
              {"transition", to_json(r.transition)}};
}

Poly parse_poly(const Json& j, Ring ring, Field field, const std::string& path) {
  try {
    if (j.is_string()) return parse_poly(ring, field, j.get<std::string>());
    if (j.is_number_integer()) return Poly::constant(ring, Scalar(field, j.get<long>()));
    if (j.is_object()) {
      Poly p(Ring::Laurent, field);
      for (const auto& [key, value] : j.items()) {
        std::int64_t e = parse_degree(key, child(path, key));
        std::string c = value.is_string() ? value.get<std::string>() : value.is_number_integer() ? std::to_string(value.get<long>()) : "";
        if (c.empty()) fail(child(path, key), "coefficient must be a string or an integer");
        p += Poly::monomial(Ring::Laurent, Scalar::parse(field, c), e);
      }
      if (!p.fits(ring)) throw Error(ErrorKind::RingMismatch, "exponent not allowed over " + std::string(qcoh::to_string(ring)));
      return p.with_ring(ring);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse && std::string(e.what()).rfind("Parse: /", 0) == 0) throw;
    rethrow_at(path, e);
  }
  fail(path, "expected a polynomial, found " + j.dump());
}

PolyMatrix parse_matrix(const Json& j, Ring ring, Field field, const std::string& path, std::size_t rows,
                        std::optional<std::size_t> cols) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  std::size_t width = cols ? *cols : (rows == 0 ? 0 : j.at(0).size());
  PolyMatrix m(ring, field, rows, width);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j.at(r);
    const std::string rp = child(path, std::to_string(r));
    if (!row.is_array()) fail(rp, "expected a row array");
    if (row.size() != width) fail(rp, "expected " + std::to_string(width) + " entries, found " + std::to_string(row.size()));
    for (std::size_t c = 0; c < width; ++c) m(r, c) = parse_poly(row.at(c), ring, field, child(rp, std::to_string(c)));
  }
  return m;
}

namespace {

struct RawModule {
  std::size_t gens;
  PolyMatrix relations;
};

RawModule parse_module(const Json& j, Ring expected, Field field, const std::string& path) {
  Ring ring = expected;
  if (j.contains("ring")) {
    try {
      ring = parse_ring(j.at("ring").get<std::string>());
    } catch (const std::exception& e) {
      fail(child(path, "ring"), e.what());
    }
    if (ring != expected)
      fail(child(path, "ring"), std::string("expected ring '") + qcoh::to_string(expected) + "', found '" + qcoh::to_string(ring) + "'");
  }
  const std::int64_t gens = as_int(require(j, "gens", path), child(path, "gens"));
  if (gens < 0) fail(child(path, "gens"), "generator count must be nonnegative");
  PolyMatrix rel(ring, field, static_cast<std::size_t>(gens), 0);
  if (j.contains("relations") && !(j.at("relations").is_array() && j.at("relations").empty()))
    rel = parse_matrix(j.at("relations"), ring, field, child(path, "relations"), static_cast<std::size_t>(gens));
  return {static_cast<std::size_t>(gens), rel};
}

SheafPresentation identity_presentation(QcohSheaf F) {
  const Field f = F.field();
  auto id = [&](Ring r, std::size_t n) { return PolyMatrix::identity(r, f, n); };
  SheafPresentation p{F,
                      id(Ring::X, F.M().size()),
                      id(Ring::X, F.M().size()),
                      id(Ring::Laurent, F.P().size()),
                      id(Ring::Laurent, F.P().size()),
                      id(Ring::XInv, F.N().size()),
                      id(Ring::XInv, F.N().size())};
  return p;
}

Point parse_point(const Json& j, Field field, const std::string& path) {
  std::string text = j.is_string() ? j.get<std::string>() : j.is_number_integer() ? std::to_string(j.get<long>()) : "";
  if (text.empty()) fail(path, "point must be a string or an integer");
  if (text == "inf" || text == "infinity") return Point::infinity(field);
  try {
    return Point::finite(Scalar::parse(field, text));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

}  // namespace

SheafPresentation parse_sheaf(const Json& j, Field field, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a sheaf description object");
  try {
    if (j.contains("line_bundle"))
      return identity_presentation(QcohSheaf::line_bundle(field, as_int(j.at("line_bundle"), child(path, "line_bundle"))));
    if (j.contains("torsion")) {
      const Json& t = j.at("torsion");
      const std::string tp = child(path, "torsion");
      if (t.contains("divisor"))
        return identity_presentation(QcohSheaf::torsion(field, parse_poly(t.at("divisor"), Ring::X, field, child(tp, "divisor"))));
      Point pt = parse_point(require(t, "point", tp), field, child(tp, "point"));
      return identity_presentation(QcohSheaf::torsion(pt, static_cast<int>(as_int(require(t, "mult", tp), child(tp, "mult")))));
    }
    if (j.contains("transition")) {
      const Json& t = j.at("transition");
      PolyMatrix T = parse_matrix(t, Ring::Laurent, field, child(path, "transition"), t.is_array() ? t.size() : 0);
      return identity_presentation(QcohSheaf::from_transition_matrix(T));
    }
    if (j.contains("direct_sum")) {
      const Json& parts = j.at("direct_sum");
      if (!parts.is_array()) fail(child(path, "direct_sum"), "expected an array of sheaves");
      SheafPresentation acc = identity_presentation(QcohSheaf(field));
      for (std::size_t i = 0; i < parts.size(); ++i) {
        SheafPresentation p = parse_sheaf(parts.at(i), field, child(child(path, "direct_sum"), std::to_string(i)));
        acc = SheafPresentation{direct_sum(acc.sheaf, p.sheaf),     block_diag(acc.pi_M, p.pi_M),
                                block_diag(acc.lambda_M, p.lambda_M), block_diag(acc.pi_P, p.pi_P),
                                block_diag(acc.lambda_P, p.lambda_P), block_diag(acc.pi_N, p.pi_N),
                                block_diag(acc.lambda_N, p.lambda_N)};
      }
      return acc;
    }
    RawModule M = parse_module(require(j, "M", path), Ring::X, field, child(path, "M"));
    RawModule P = parse_module(require(j, "P", path), Ring::Laurent, field, child(path, "P"));
    RawModule N = parse_module(require(j, "N", path), Ring::XInv, field, child(path, "N"));
    PolyMatrix sigma = parse_matrix(require(j, "sigma", path), Ring::Laurent, field, child(path, "sigma"), P.gens, M.gens);
    PolyMatrix tau = parse_matrix(require(j, "tau", path), Ring::Laurent, field, child(path, "tau"), P.gens, N.gens);
    return present_sheaf(field, M.gens, M.relations, P.gens, P.relations, N.gens, N.relations, sigma, tau);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    rethrow_at(path, e);
  }
}

SheafMorphism parse_morphism(const Json& j, const SheafPresentation& source, const SheafPresentation& target,
                             const std::string& path) {
  const Field field = source.sheaf.field();
  auto component = [&](const char* key, Ring ring, const PolyMatrix& pi, const PolyMatrix& lambda) {
    PolyMatrix raw = parse_matrix(require(j, key, path), ring, field, child(path, key), pi.cols(), lambda.rows());
    return PolyMatrix(pi.with_ring(Ring::Laurent) * raw.with_ring(Ring::Laurent) * lambda.with_ring(Ring::Laurent));
  };
  PolyMatrix m = component("M", Ring::X, target.pi_M, source.lambda_M);
  PolyMatrix p = component("P", Ring::Laurent, target.pi_P, source.lambda_P);
  PolyMatrix n = component("N", Ring::XInv, target.pi_N, source.lambda_N);
  try {
    return SheafMorphism(source.sheaf, target.sheaf, m.with_ring(Ring::X), p, n.with_ring(Ring::XInv));
  } catch (const Error& e) {
    rethrow_at(path, e);
  }
}

BoundedComplex parse_complex(const Json& j, Field field, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a complex description object");
  std::optional<std::pair<std::int64_t, std::int64_t>> window;
  if (j.contains("window")) {
    const Json& w = j.at("window");
    if (!w.is_array() || w.size() != 2) fail(child(path, "window"), "expected [lo, hi]");
    window = std::make_pair(as_int(w.at(0), child(path, "window/0")), as_int(w.at(1), child(path, "window/1")));
  }
  std::map<std::int64_t, SheafPresentation> pres;
  const std::string op = child(path, "objects");
  for (const auto& [key, value] : require(j, "objects", path).items()) {
    std::int64_t n = parse_degree(key, child(op, key));
    if (window && (n < window->first || n > window->second)) fail(child(op, key), "degree lies outside the window");
    pres.emplace(n, parse_sheaf(value, field, child(op, key)));
  }
  auto at = [&](std::int64_t n) { return pres.count(n) ? pres.at(n) : identity_presentation(QcohSheaf(field)); };
  std::map<std::int64_t, QcohSheaf> objects;
  for (const auto& [n, p] : pres) objects.emplace(n, p.sheaf);
  std::map<std::int64_t, SheafMorphism> diffs;
  if (j.contains("differentials")) {
    const std::string dp = child(path, "differentials");
    for (const auto& [key, value] : j.at("differentials").items()) {
      std::int64_t n = parse_degree(key, child(dp, key));
      diffs.emplace(n, parse_morphism(value, at(n), at(n + 1), child(dp, key)));
    }
  }
  try {
    return BoundedComplex(field, std::move(objects), std::move(diffs));
  } catch (const Error& e) {
    rethrow_at(path, e);
  }
}

Json load_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw Error(ErrorKind::Parse, filename + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, filename + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace qcoh::io
