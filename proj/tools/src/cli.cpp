#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "commands.hpp"
#include "inputs.hpp"
#include "qcoh/error.hpp"

namespace qcoh::cli {

using io::Json;

namespace {

struct Parsed {
  Job job;
  std::string field_text;
  std::string format = "text";
};

/// Builds the command-line grammar writing into `p`. Every subcommand carries the
/// global flags so they may appear before or after it.
std::unique_ptr<CLI::App> make_app(Parsed& p) {
  auto app = std::make_unique<CLI::App>("Quasi-coherent sheaves on the projective line", "qcoh");
  app->require_subcommand(1);
  app->fallthrough();
  app->add_option("--field", p.field_text, "Base field: Q or Fp:<p> (default from $QCOH_FIELD, else Q)");
  app->add_option("--format", p.format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  Job& j = p.job;
  auto sheaf_opt = [&](CLI::App* c, std::string& dst, const char* name) {
    c->add_option(name, dst, "Sheaf description file, or inline JSON")->required();
  };
  auto complex_opt = [&](CLI::App* c, std::string& dst, const char* name) {
    c->add_option(name, dst, "Complex description file, or inline JSON")->required();
  };

  sheaf_opt(app->add_subcommand("validate", "Check the quasi-coherence conditions"), j.sheaf, "--sheaf");
  sheaf_opt(app->add_subcommand("classify", "Torsion invariants and splitting type"), j.sheaf, "--sheaf");
  sheaf_opt(app->add_subcommand("split", "Splitting type with Birkhoff certificates"), j.sheaf, "--sheaf");
  sheaf_opt(app->add_subcommand("filtrate", "Filtration by line bundle quotients"), j.sheaf, "--sheaf");

  auto* zz = app->add_subcommand("zigzag", "Zigzag closure of a seed set of summands");
  sheaf_opt(zz, j.sheaf, "--sheaf");
  zz->add_option("--decomposition", j.decomposition, "JSON {\"M\": [blocks], \"N\": [blocks]}; default coordinate lines");
  zz->add_option("--seed", j.seed, "Comma-separated summand indices")->required();

  for (const char* name : {"hom", "ext"}) {
    auto* c = app->add_subcommand(name, std::string(name) == "hom" ? "Basis of Hom(O(n), F)" : "Basis of Ext^1(O(n), F)");
    c->add_option("--n", j.n, "Twist of the line bundle")->required()->allow_extra_args(false);
    sheaf_opt(c, j.sheaf, "--sheaf");
  }

  auto* ext = app->add_subcommand("extension", "Extensions of O(n) by F from a pair (y, z)");
  ext->require_subcommand(1);
  for (const char* name : {"build", "split"}) {
    auto* c = ext->add_subcommand(name, std::string(name) == "build" ? "Build the middle object" : "Decide splitting");
    c->add_option("--n", j.n, "Twist of the line bundle")->required()->allow_extra_args(false);
    sheaf_opt(c, j.sheaf, "--sheaf");
    c->add_option("--y", j.y, "Element of P: a polynomial, or a JSON array of polynomials");
    c->add_option("--z", j.z, "Element of P: a polynomial, or a JSON array of polynomials");
  }

  auto* hg = app->add_subcommand("homology", "Homology object of a complex");
  complex_opt(hg, j.complex, "--complex");
  hg->add_option("--deg", j.deg, "Degree")->required()->allow_extra_args(false);

  auto* hc = app->add_subcommand("homcomplex", "Dimensions and cohomology of Hom(X, Y)");
  complex_opt(hc, j.source, "--source");
  complex_opt(hc, j.target, "--target");

  auto* tc = app->add_subcommand("tensorcomplex", "Total tensor complex");
  complex_opt(tc, j.left, "--left");
  complex_opt(tc, j.right, "--right");

  auto* rs = app->add_subcommand("resolve", "Resolution by sums of line bundles");
  sheaf_opt(rs, j.sheaf, "--sheaf");
  rs->add_option("--offset", j.offset, "Resolve by O(m)^h with m lowered by this offset")->allow_extra_args(false);

  auto* de = app->add_subcommand("derived-ext", "dim Ext^i(F, G)");
  sheaf_opt(de, j.source, "--source");
  sheaf_opt(de, j.target, "--target");
  de->add_option("--deg", j.deg, "Degree i")->required()->allow_extra_args(false);

  app->add_subcommand("batch", "Run the jobs of a manifest")
      ->add_option("--manifest", j.manifest, "JSON list of argument vectors")
      ->required();
  return app;
}

std::string selected_command(const CLI::App& app) {
  const CLI::App* c = app.get_subcommands().front();
  std::string name = c->get_name();
  if (!c->get_subcommands().empty()) name += " " + c->get_subcommands().front()->get_name();
  return name;
}

/// Parses argv into a job. Returns 0 on success, -1 after printing help, and 2 after
/// printing a usage diagnostic.
int parse_args(std::vector<std::string> args, const std::string& default_field, Parsed& p, std::ostream& out,
               std::ostream& err) {
  auto app = make_app(p);
  std::reverse(args.begin(), args.end());
  try {
    app->parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app->exit(e, out, err);
      return -1;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  p.job.command = selected_command(*app);
  p.job.has_offset = app->get_subcommand_no_throw("resolve") && app->get_subcommand("resolve")->count("--offset") > 0;
  if (p.field_text.empty()) p.field_text = default_field;
  try {
    p.job.field = Field::parse(p.field_text);
  } catch (const std::exception& e) {
    err << "usage error: --field '" << p.field_text << "': " << e.what() << "\n";
    return 2;
  }
  p.field_text = p.job.field.to_string();
  p.job.machine = p.format == "machine";
  return 0;
}

Json envelope(const Parsed& p) { return Json{{"command", p.job.command}, {"field", p.field_text}}; }

void render(const Parsed& p, const Report& rep, std::ostream& out) {
  if (p.job.machine) {
    Json j = envelope(p);
    j["inputs"] = rep.inputs;
    j["result"] = rep.result;
    j["status"] = rep.exit_code == 0 ? "ok" : "failed";
    if (rep.exit_code != 0) j["diagnostic"] = rep.diagnostic;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& l : rep.lines) out << l << "\n";
  }
}

void render_error(const Parsed& p, const Error& e, std::ostream& out, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (p.job.machine) {
    Json j = envelope(p);
    j["status"] = "error";
    j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    out << j.dump(2) << "\n";
  }
}

/// Outcome of one manifest entry.
struct Outcome {
  std::vector<std::string> args;
  std::string command;
  std::optional<Report> report;
  std::string error_kind, error;  ///< set when the job threw or could not be parsed
  bool ok() const { return report && report->exit_code == 0; }
};

Outcome run_entry(std::vector<std::string> args, const Parsed& outer, const std::string& base_dir) {
  Outcome o;
  o.args = args;
  Parsed p;
  p.field_text = outer.field_text;
  std::ostringstream sink, diag;
  if (int code = parse_args(args, outer.field_text, p, sink, diag); code != 0) {
    o.error_kind = "Usage";
    o.error = diag.str().empty() ? "help requested" : diag.str();
    while (!o.error.empty() && o.error.back() == '\n') o.error.pop_back();
    return o;
  }
  o.command = p.job.command;
  if (o.command == "batch") {
    o.error_kind = "Usage";
    o.error = "nested batch manifests are not supported";
    return o;
  }
  p.job.base_dir = base_dir;
  try {
    o.report = run_job(p.job);
  } catch (const Error& e) {
    o.error_kind = to_string(e.kind());
    o.error = e.what();
  } catch (const std::exception& e) {
    o.error_kind = "Internal";
    o.error = e.what();
  }
  return o;
}

std::vector<std::vector<std::string>> manifest_jobs(const Json& m) {
  const Json& list = m.is_object() && m.contains("jobs") ? m.at("jobs") : m;
  if (!list.is_array()) throw Error(ErrorKind::Parse, "/: expected an array of jobs or an object with 'jobs'");
  std::vector<std::vector<std::string>> jobs;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "/jobs/" + std::to_string(i);
    const Json& entry = list.at(i).is_object() && list.at(i).contains("args") ? list.at(i).at("args") : list.at(i);
    if (!entry.is_array()) throw Error(ErrorKind::Parse, path + ": expected an argument array");
    std::vector<std::string> args;
    for (std::size_t k = 0; k < entry.size(); ++k) {
      const Json& a = entry.at(k);
      if (a.is_string()) args.push_back(a.get<std::string>());
      else if (a.is_number_integer()) args.push_back(std::to_string(a.get<std::int64_t>()));
      else if (a.is_object() || a.is_array()) args.push_back(a.dump());
      else throw Error(ErrorKind::Parse, path + "/" + std::to_string(k) + ": unsupported argument " + a.dump());
    }
    jobs.push_back(std::move(args));
  }
  return jobs;
}

int run_batch(const Parsed& p, std::ostream& out, std::ostream& err) {
  Input manifest = load_input(p.job.manifest, "");
  auto jobs = parse_from(manifest, manifest_jobs);
  const std::string base_dir = std::filesystem::path(p.job.manifest).parent_path().string();

  std::vector<Outcome> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  const std::size_t workers = std::min<std::size_t>(jobs.size(), std::max(1u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) outcomes[i] = run_entry(jobs[i], p, base_dir);
      });
  }

  std::size_t ok = 0;
  for (const auto& o : outcomes) ok += o.ok() ? 1 : 0;
  const std::size_t failed = outcomes.size() - ok;

  if (p.job.machine) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const Outcome& o = outcomes[i];
      Json row = {{"index", i}, {"args", o.args}, {"command", o.command}};
      if (o.report) {
        row["status"] = o.report->exit_code == 0 ? "ok" : "failed";
        row["inputs"] = o.report->inputs;
        row["result"] = o.report->result;
        if (o.report->exit_code != 0) row["diagnostic"] = o.report->diagnostic;
      } else {
        row["status"] = "error";
        row["error"] = {{"kind", o.error_kind}, {"message", o.error}};
      }
      rows.push_back(std::move(row));
    }
    Json j = envelope(p);
    j["inputs"] = {{"manifest", manifest.sha256}};
    j["jobs"] = rows;
    j["summary"] = {{"total", outcomes.size()}, {"ok", ok}, {"failed", failed}};
    j["status"] = failed == 0 ? "ok" : "failed";
    out << j.dump(2) << "\n";
  } else {
    std::size_t width = 7;
    for (const auto& o : outcomes) width = std::max(width, o.command.size());
    out << std::left << std::setw(5) << "#" << std::setw(8) << "status" << std::setw(static_cast<int>(width) + 2)
        << "command" << "result\n";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const Outcome& o = outcomes[i];
      std::string status = o.report ? (o.report->exit_code == 0 ? "ok" : "failed") : "error";
      std::string result = o.report ? (o.report->exit_code == 0 ? o.report->summary : o.report->diagnostic) : o.error;
      out << std::left << std::setw(5) << i << std::setw(8) << status << std::setw(static_cast<int>(width) + 2)
          << (o.command.empty() ? "?" : o.command) << result << "\n";
    }
    out << "summary: " << outcomes.size() << " jobs, " << ok << " ok, " << failed << " failed\n";
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    if (!outcomes[i].ok())
      err << "job " << i << ": "
          << (outcomes[i].report ? outcomes[i].report->diagnostic : outcomes[i].error) << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, const std::string& default_field, std::ostream& out, std::ostream& err) {
  Parsed p;
  if (int code = parse_args(args, default_field, p, out, err); code != 0) return code < 0 ? 0 : code;
  try {
    if (p.job.command == "batch") return run_batch(p, out, err);
    Report rep = run_job(p.job);
    render(p, rep, out);
    if (rep.exit_code != 0) err << "error: " << rep.diagnostic << "\n";
    return rep.exit_code;
  } catch (const Error& e) {
    render_error(p, e, out, err);
    return 1;
  } catch (const std::exception& e) {
    render_error(p, Error(ErrorKind::InvalidArgument, e.what()), out, err);
    return 1;
  }
}

}  // namespace qcoh::cli
