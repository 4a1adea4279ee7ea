#include "commands.hpp"

#include <sstream>

#include "inputs.hpp"
#include "qcoh/classify.hpp"
#include "qcoh/complex.hpp"
#include "qcoh/derived_ext.hpp"
#include "qcoh/error.hpp"
#include "qcoh/ext.hpp"
#include "qcoh/resolution.hpp"
#include "qcoh/sheaf_ops.hpp"
#include "qcoh/splitting.hpp"

namespace qcoh::cli {

using io::Json;

std::string format_list(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out;
}

std::string format_indices(const std::set<std::size_t>& s) {
  std::vector<std::int64_t> v(s.begin(), s.end());
  return format_list(v);
}

class Context {
 public:
  Context(const Job& job, Report& report) : job_(job), report_(report) {}

  Input load(const std::string& role, const std::string& ref) {
    if (ref.empty()) throw Error(ErrorKind::InvalidArgument, "missing --" + role);
    Input in = load_input(ref, job_.base_dir);
    report_.inputs[role] = in.sha256;
    return in;
  }
  SheafPresentation sheaf(const std::string& role, const std::string& ref) {
    Input in = load(role, ref);
    return parse_from(in, [&](const Json& j) { return io::parse_sheaf(j, job_.field); });
  }
  BoundedComplex complex(const std::string& role, const std::string& ref) {
    Input in = load(role, ref);
    return parse_from(in, [&](const Json& j) { return io::parse_complex(j, job_.field); });
  }

 private:
  const Job& job_;
  Report& report_;
};

Json classification_json(const StructureReport& r) { return io::to_json(r); }

std::vector<std::string> classification_lines(const StructureReport& r) {
  std::vector<std::string> elsewhere;
  for (const Poly& p : r.torsion.elsewhere) elsewhere.push_back(p.to_string());
  return {"rank: " + std::to_string(r.rank), "type: " + format_list(r.type),
          "torsion at 0: " + format_list(r.torsion.at_zero), "torsion at inf: " + format_list(r.torsion.at_infinity),
          "torsion elsewhere: [" + join(elsewhere) + "]", "torsion length: " + std::to_string(r.torsion.length)};
}

std::string short_classification(const StructureReport& r) {
  std::string s = "type " + format_list(r.type);
  if (r.torsion.length > 0) s += ", torsion length " + std::to_string(r.torsion.length);
  return s;
}

/// Column over P from "--y"/"--z": a polynomial for rank-one P, or a JSON array of entries.
PolyMatrix parse_column(const std::string& text, const SheafPresentation& pres, Field field, const std::string& flag) {
  const std::size_t old_size = pres.lambda_P.rows();
  PolyMatrix col(Ring::Laurent, field, old_size, 1);
  try {
    if (!text.empty() && text.front() == '[') {
      Json arr = Json::parse(text);
      if (!arr.is_array() || arr.size() != old_size)
        throw Error(ErrorKind::Parse, "expected " + std::to_string(old_size) + " entries");
      for (std::size_t i = 0; i < old_size; ++i) col(i, 0) = io::parse_poly(arr.at(i), Ring::Laurent, field, "/" + std::to_string(i));
    } else {
      if (old_size != 1) throw Error(ErrorKind::Parse, "P has " + std::to_string(old_size) + " generators; pass a JSON array");
      col(0, 0) = io::parse_poly(Ring::Laurent, field, text);
    }
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, "--" + flag + ": malformed JSON '" + text + "'");
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, "--" + flag + ": " + std::string(e.what()));
  }
  return pres.pi_P * col;
}

Json matrix_json(const PolyMatrix& m) { return io::to_json(m); }

void cmd_validate(Context& ctx, const Job& job, Report& rep) {
  SheafPresentation p = ctx.sheaf("sheaf", job.sheaf);
  ValidationReport v = validate(p.sheaf);
  rep.result = {{"valid", v.valid},
                {"violation", v.violation},
                {"exponents",
                 {{"sigma_kernel", v.sigma_kernel_exponent}, {"sigma_cokernel", v.sigma_cokernel_exponent},
                  {"tau_kernel", v.tau_kernel_exponent}, {"tau_cokernel", v.tau_cokernel_exponent}}}};
  if (v.valid) {
    rep.lines.push_back("valid");
    rep.lines.push_back("sigma kernel/cokernel annihilated by x^" + std::to_string(v.sigma_kernel_exponent) + ", x^" +
                        std::to_string(v.sigma_cokernel_exponent));
    rep.lines.push_back("tau kernel/cokernel annihilated by x^-" + std::to_string(v.tau_kernel_exponent) + ", x^-" +
                        std::to_string(v.tau_cokernel_exponent));
    rep.summary = "valid";
  } else {
    rep.lines.push_back("invalid: " + v.violation);
    rep.summary = "invalid: " + v.violation;
    rep.exit_code = 1;
    rep.diagnostic = "invalid sheaf: " + v.violation;
  }
}

void cmd_classify(Context& ctx, const Job& job, Report& rep) {
  StructureReport r = classify(ctx.sheaf("sheaf", job.sheaf).sheaf);
  rep.result = classification_json(r);
  rep.lines = classification_lines(r);
  rep.summary = short_classification(r);
}

void cmd_split(Context& ctx, const Job& job, Report& rep) {
  QcohSheaf F = ctx.sheaf("sheaf", job.sheaf).sheaf;
  std::vector<std::int64_t> type = splitting_type(F);
  const SheafStructure& s = F.structure();
  const SplittingData& d = s.splitting;
  const PolyMatrix diag = monomial_diagonal(F.field(), type);
  const bool certified = d.A.with_ring(Ring::Laurent) * s.transition * d.B.with_ring(Ring::Laurent) == diag;
  SheafMorphism iso = standard_form_map(F);
  SheafMorphism inv = standard_form_inverse(F);
  const bool iso_ok = compose(inv, iso) == SheafMorphism::identity(standard_form(F)) &&
                      compose(iso, inv) == SheafMorphism::identity(F);
  rep.result = {{"type", type},
                {"transition", matrix_json(s.transition)},
                {"certificate", {{"A", matrix_json(d.A)}, {"B", matrix_json(d.B)}, {"A_inv", matrix_json(d.A_inv)},
                                 {"B_inv", matrix_json(d.B_inv)}, {"A_T_B_is_diagonal", certified}}},
                {"isomorphism", {{"to_F", io::to_json(iso)}, {"from_F", io::to_json(inv)}, {"verified", iso_ok}}}};
  rep.lines = {"type: " + format_list(type),
               "T = " + s.transition.to_string(),
               "A = " + d.A.to_string() + "  (over k[x])",
               "B = " + d.B.to_string() + "  (over k[x^-1])",
               std::string("A*T*B = diag(x^n_i): ") + (certified ? "verified" : "FAILED"),
               std::string("standard form isomorphism: ") + (iso_ok ? "verified" : "FAILED")};
  rep.summary = "type " + format_list(type);
  if (!certified || !iso_ok) {
    rep.exit_code = 1;
    rep.diagnostic = "splitting certificate failed verification";
  }
}

void cmd_filtrate(Context& ctx, const Job& job, Report& rep) {
  QcohSheaf F = ctx.sheaf("sheaf", job.sheaf).sheaf;
  Filtration filt = line_filtration(F);
  Json stages = Json::array();
  rep.lines.push_back("labels: " + format_list(filt.labels));
  bool all_ok = true;
  for (std::size_t k = 0; k < filt.stages.size(); ++k) {
    Json stage = {{"index", k}, {"sheaf", io::to_json(filt.stages[k])}};
    std::string line = "F_" + std::to_string(k) + ": " + short_classification(classify(filt.stages[k]));
    if (k > 0) {
      const SheafMorphism& step = filt.steps[k - 1];
      const bool ok = step.check().empty() && is_monomorphism(step) && validate(filt.stages[k]).valid;
      all_ok = all_ok && ok;
      stage["inclusion_valid"] = ok;
      line += std::string(", inclusion from F_") + std::to_string(k - 1) + (ok ? " valid" : " INVALID");
    }
    stages.push_back(std::move(stage));
    rep.lines.push_back(line);
  }
  rep.result = {{"labels", filt.labels}, {"stages", stages}, {"inclusions_valid", all_ok}};
  rep.summary = "labels " + format_list(filt.labels);
  if (!all_ok) {
    rep.exit_code = 1;
    rep.diagnostic = "a filtration inclusion failed validation";
  }
}

std::set<std::size_t> parse_seed(const std::string& text) {
  std::set<std::size_t> seed;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      seed.insert(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "--seed: invalid index '" + item + "'");
    }
  }
  return seed;
}

void cmd_zigzag(Context& ctx, const Job& job, Report& rep) {
  SheafPresentation pres = ctx.sheaf("sheaf", job.sheaf);
  const QcohSheaf& F = pres.sheaf;
  ZigzagState state = coordinate_decomposition(F);
  if (!job.decomposition.empty()) {
    Input in = ctx.load("decomposition", job.decomposition);
    state = parse_from(in, [&](const Json& j) {
      ZigzagState st{F, {}, {}};
      auto blocks = [&](const char* key, Ring ring, const PolyMatrix& pi, std::vector<PolyMatrix>& out) {
        if (!j.contains(key) || !j.at(key).is_array()) throw Error(ErrorKind::Parse, std::string("/: missing array '") + key + "'");
        for (std::size_t b = 0; b < j.at(key).size(); ++b) {
          const Json& blk = j.at(key).at(b);
          PolyMatrix raw = io::parse_matrix(blk, ring, F.field(), "/" + std::string(key) + "/" + std::to_string(b), pi.cols());
          out.push_back((pi * raw).with_ring(ring));
        }
      };
      blocks("M", Ring::X, pres.pi_M, st.m_blocks);
      blocks("N", Ring::XInv, pres.pi_N, st.n_blocks);
      return st;
    });
  }
  std::set<std::size_t> seed = parse_seed(job.seed);
  ZigzagResult z = zigzag_closure(state, seed);
  const bool agree = localizations_agree(state, z.I, z.J);
  StructureReport sub = classify(z.subsheaf);
  rep.result = {{"I", z.I}, {"J", z.J}, {"rounds", z.rounds}, {"localizations_agree", agree},
                {"subsheaf", io::to_json(z.subsheaf)}, {"subsheaf_classification", classification_json(sub)}};
  rep.lines = {"I: " + format_indices(z.I), "J: " + format_indices(z.J), "rounds: " + std::to_string(z.rounds),
               std::string("localizations agree: ") + (agree ? "yes" : "no"), "subsheaf: " + short_classification(sub)};
  rep.summary = "I " + format_indices(z.I) + ", J " + format_indices(z.J);
}

void cmd_hom(Context& ctx, const Job& job, Report& rep) {
  HomLineSpace h = hom_line(job.n, ctx.sheaf("sheaf", job.sheaf).sheaf);
  rep.result = {{"n", job.n}, {"dimension", h.dimension()}, {"basis", h.labels}};
  rep.summary = "dim " + std::to_string(h.dimension()) + ", basis [" + join(h.labels) + "]";
  rep.lines = {rep.summary};
}

void cmd_ext(Context& ctx, const Job& job, Report& rep) {
  ExtLineSpace e = ext1_line(job.n, ctx.sheaf("sheaf", job.sheaf).sheaf);
  rep.result = {{"n", job.n}, {"dimension", e.dimension()}, {"basis", e.labels}};
  rep.summary = "dim " + std::to_string(e.dimension()) + ", basis [" + join(e.labels) + "]";
  rep.lines = {rep.summary};
}

std::vector<std::string> residue_strings(const ExtClass& cls) {
  std::vector<std::string> out;
  for (const Scalar& c : cls.residue()) out.push_back(c.to_string());
  return out;
}

void cmd_extension_build(Context& ctx, const Job& job, Report& rep) {
  SheafPresentation pres = ctx.sheaf("sheaf", job.sheaf);
  ExtClass cls(job.n, pres.sheaf, parse_column(job.y, pres, job.field, "y"), parse_column(job.z, pres, job.field, "z"));
  Extension ext = build_extension(cls);
  StructureReport r = classify(ext.middle);
  const bool valid = validate(ext.middle).valid;
  rep.result = {{"n", job.n},
                {"class_residue", residue_strings(cls)},
                {"class_zero", cls.is_zero()},
                {"middle", io::to_json(ext.middle)},
                {"middle_valid", valid},
                {"middle_classification", classification_json(r)},
                {"inclusion", io::to_json(ext.inclusion)},
                {"projection", io::to_json(ext.projection)}};
  rep.lines = {"class of z - y: [" + join(residue_strings(cls)) + "]" + (cls.is_zero() ? " (zero)" : ""),
               "middle: " + short_classification(r), std::string("middle valid: ") + (valid ? "yes" : "no"),
               "middle sheaf: " + io::to_json(ext.middle).dump()};
  rep.summary = "middle " + short_classification(r);
  if (!valid) {
    rep.exit_code = 1;
    rep.diagnostic = "extension middle object failed validation";
  }
}

void cmd_extension_split(Context& ctx, const Job& job, Report& rep) {
  SheafPresentation pres = ctx.sheaf("sheaf", job.sheaf);
  ExtClass cls(job.n, pres.sheaf, parse_column(job.y, pres, job.field, "y"), parse_column(job.z, pres, job.field, "z"));
  std::optional<SectionPair> w = is_split(cls);
  rep.result = {{"n", job.n}, {"split", w.has_value()}, {"class_residue", residue_strings(cls)}};
  rep.lines.push_back(std::string("split: ") + (w ? "yes" : "no"));
  if (w) {
    PolyMatrix u = pres.lambda_M * w->u, v = pres.lambda_N * w->v;
    rep.result["witness"] = {{"u", matrix_json(u)}, {"v", matrix_json(v)}};
    rep.lines.push_back("witness u = " + format_vector(u));
    rep.lines.push_back("witness v = " + format_vector(v));
    rep.lines.push_back("x^n sigma(u) - tau(v) = z - y");
  } else {
    rep.lines.push_back("class of z - y: [" + join(residue_strings(cls)) + "]");
  }
  rep.summary = w ? "split" : "not split";
}

void cmd_homology(Context& ctx, const Job& job, Report& rep) {
  BoundedComplex C = ctx.complex("complex", job.complex);
  QcohSheaf H = homology(C, job.deg);
  StructureReport r = classify(H);
  rep.result = {{"degree", job.deg}, {"homology", io::to_json(H)}, {"classification", classification_json(r)}};
  rep.lines = {"H^" + std::to_string(job.deg) + ": " + (H.is_zero() ? std::string("0") : short_classification(r))};
  for (auto& l : classification_lines(r)) rep.lines.push_back("  " + l);
  rep.summary = H.is_zero() ? "zero" : short_classification(r);
}

void cmd_homcomplex(Context& ctx, const Job& job, Report& rep) {
  BoundedComplex X = ctx.complex("source", job.source);
  BoundedComplex Y = ctx.complex("target", job.target);
  HomComplex H = hom_complex(X, Y);
  Json degrees = Json::array();
  std::vector<std::int64_t> cohomology;
  for (std::int64_t n = H.lo(); n <= H.hi(); ++n) {
    degrees.push_back({{"degree", n}, {"dimension", H.dimension(n)}, {"cohomology", H.cohomology_dimension(n)}});
    cohomology.push_back(static_cast<std::int64_t>(H.cohomology_dimension(n)));
    rep.lines.push_back("degree " + std::to_string(n) + ": dim " + std::to_string(H.dimension(n)) + ", cohomology " +
                        std::to_string(H.cohomology_dimension(n)));
  }
  if (H.lo() > H.hi()) rep.lines.push_back("zero complex");
  rep.result = {{"window", {H.lo(), H.hi()}}, {"degrees", degrees}};
  rep.summary = "cohomology " + format_list(cohomology);
}

void cmd_tensorcomplex(Context& ctx, const Job& job, Report& rep) {
  BoundedComplex X = ctx.complex("left", job.left);
  BoundedComplex Y = ctx.complex("right", job.right);
  BoundedComplex T = tensor_complex(X, Y);
  rep.result = {{"complex", io::to_json(T)}};
  if (T.is_zero()) rep.lines.push_back("zero complex");
  std::vector<std::string> parts;
  for (const auto& [n, F] : T.objects()) {
    std::string c = short_classification(classify(F));
    rep.lines.push_back("degree " + std::to_string(n) + ": " + c);
    parts.push_back(std::to_string(n) + ": " + c);
  }
  rep.lines.push_back("complex: " + io::to_json(T).dump());
  rep.summary = "{" + join(parts) + "}";
}

void cmd_resolve(Context& ctx, const Job& job, Report& rep) {
  QcohSheaf F = ctx.sheaf("sheaf", job.sheaf).sheaf;
  LineBundleResolution R = job.has_offset ? resolve_with_offset(F, job.offset) : resolve(F);
  const std::string problem = check_resolution(R);
  BoundedComplex C(F.field(), {{-1, R.E1}, {0, R.E0}}, {{-1, R.d}});
  rep.result = {{"e0_twists", R.e0_twists}, {"e1_twists", R.e1_twists}, {"complex", io::to_json(C)},
                {"augmentation", io::to_json(R.eps)}, {"exact", problem.empty()}};
  rep.lines = {"0 -> E1 -> E0 -> F -> 0", "E0 twists: " + format_list(R.e0_twists),
               "E1 twists: " + format_list(R.e1_twists),
               std::string("exact: ") + (problem.empty() ? "yes" : "no (" + problem + ")"),
               "complex: " + io::to_json(C).dump()};
  rep.summary = "E0 " + format_list(R.e0_twists) + ", E1 " + format_list(R.e1_twists);
  if (!problem.empty()) {
    rep.exit_code = 1;
    rep.diagnostic = "resolution check failed: " + problem;
  }
}

void cmd_derived_ext(Context& ctx, const Job& job, Report& rep) {
  QcohSheaf F = ctx.sheaf("source", job.source).sheaf;
  QcohSheaf G = ctx.sheaf("target", job.target).sheaf;
  if (job.deg < 0) throw Error(ErrorKind::InvalidArgument, "--deg must be nonnegative");
  LineBundleResolution R = resolve(F);
  ExtAssembly a = assemble_ext(R, G);
  const std::size_t dim = global_ext(R, G, static_cast<int>(job.deg));
  rep.result = {{"degree", job.deg},
                {"dimension", dim},
                {"all_degrees", {a.hom, a.ext1, a.ext2}},
                {"assembly",
                 {{"hom_E0", a.hom_e0}, {"hom_E1", a.hom_e1}, {"ext1_E0", a.ext_e0}, {"ext1_E1", a.ext_e1},
                  {"rank_hom", a.rank_hom}, {"rank_ext1", a.rank_ext}}}};
  rep.summary = "dim Ext^" + std::to_string(job.deg) + " = " + std::to_string(dim);
  rep.lines = {rep.summary,
               "Hom, Ext^1, Ext^2: " + format_list({static_cast<std::int64_t>(a.hom), static_cast<std::int64_t>(a.ext1),
                                                    static_cast<std::int64_t>(a.ext2)}),
               "resolution: E0 " + format_list(R.e0_twists) + ", E1 " + format_list(R.e1_twists)};
}

}  // namespace

Report run_job(const Job& job) {
  Report rep;
  Context ctx(job, rep);
  const std::string& c = job.command;
  if (c == "validate") cmd_validate(ctx, job, rep);
  else if (c == "classify") cmd_classify(ctx, job, rep);
  else if (c == "split") cmd_split(ctx, job, rep);
  else if (c == "filtrate") cmd_filtrate(ctx, job, rep);
  else if (c == "zigzag") cmd_zigzag(ctx, job, rep);
  else if (c == "hom") cmd_hom(ctx, job, rep);
  else if (c == "ext") cmd_ext(ctx, job, rep);
  else if (c == "extension build") cmd_extension_build(ctx, job, rep);
  else if (c == "extension split") cmd_extension_split(ctx, job, rep);
  else if (c == "homology") cmd_homology(ctx, job, rep);
  else if (c == "homcomplex") cmd_homcomplex(ctx, job, rep);
  else if (c == "tensorcomplex") cmd_tensorcomplex(ctx, job, rep);
  else if (c == "resolve") cmd_resolve(ctx, job, rep);
  else if (c == "derived-ext") cmd_derived_ext(ctx, job, rep);
  else throw Error(ErrorKind::InvalidArgument, "unknown command '" + c + "'");
  return rep;
}

}  // namespace qcoh::cli
