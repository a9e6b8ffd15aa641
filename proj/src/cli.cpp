#include "sjgeo/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sjgeo/checks.hpp"
#include "sjgeo/json_io.hpp"
#include "sjgeo/operators.hpp"

namespace sjgeo {

namespace {

struct Options {
  std::size_t n = 1, m = 1;
  double a = 1.0, b = 1.0;
  std::size_t samples = 50;
  std::uint64_t seed = 42;
  double tol = 0.0;  // 0: per-check default
  std::string out;
  std::string format = "json";
  unsigned threads = 1;
  bool verbose = false;

  std::string target;
  std::string point_file, tangent_file, field = "absW2";
  std::string model = "disk";
  bool printed = false;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "matrix size n")->check(CLI::PositiveNumber);
  app->add_option("--m", o.m, "vector rows m")->check(CLI::PositiveNumber);
  app->add_option("--A", o.a, "metric parameter A")->check(CLI::PositiveNumber);
  app->add_option("--B", o.b, "metric parameter B")->check(CLI::PositiveNumber);
  app->add_option("--samples", o.samples, "samples per check")->check(CLI::PositiveNumber);
  app->add_option("--seed", o.seed, "master seed");
  app->add_option("--tol", o.tol, "override the check tolerance")->check(CLI::PositiveNumber);
  app->add_option("--out", o.out, "write output to this file instead of stdout");
  app->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--threads", o.threads, "worker threads")->envname("SJGEO_THREADS")->check(CLI::PositiveNumber);
  app->add_flag("-v,--verbose", o.verbose, "per-component summaries on stderr");
}

std::string tolerance_table() {
  std::ostringstream s;
  s << "Checks and default tolerances (max relative residual):\n";
  for (const auto& name : check_names()) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "  %-26s %g\n", name.c_str(), default_tolerance(name));
    s << buf;
  }
  return s.str();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InvalidInput("cannot open output file '" + o.out + "'");
  f << text;
}

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON in '" + path + "': " + e.what());
  }
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names;
  if (o.target == "all") {
    names = check_names();
  } else {
    names.push_back(o.target);
  }
  CheckConfig cfg;
  cfg.n = o.n;
  cfg.m = o.m;
  cfg.params = {o.a, o.b};
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  if (o.tol > 0.0) cfg.tol = o.tol;
  cfg.threads = o.threads;

  std::vector<CheckReport> reports;
  bool all_pass = true;
  for (const auto& name : names) {
    CheckReport r = run_check(name, cfg);
    std::fprintf(stderr, "%-26s %s  max_rel=%.3e tol=%.1e  (%zu samples, %.0f ms%s)\n", name.c_str(),
                 r.pass ? "pass" : "FAIL", r.max_rel, r.tol, r.samples, r.ms,
                 r.failures ? ", sample errors" : "");
    if (o.verbose)
      for (const auto& [label, c] : r.components)
        std::fprintf(stderr, "    %-24s max_rel=%.3e tol=%.1e\n", label.c_str(), c.max_rel, c.tol);
    all_pass = all_pass && r.pass;
    reports.push_back(std::move(r));
  }

  std::string text;
  if (o.format == "csv") {
    text = csv_header() + "\n";
    for (const auto& r : reports) text += to_csv_row(r) + "\n";
  } else if (o.target == "all") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    text = arr.dump(2) + "\n";
  } else {
    text = to_json(reports.front()).dump(2) + "\n";
  }
  emit(o, text);
  return all_pass ? 0 : 1;
}

ScalarField field_for(const Options& o, Model model, const ChartLayout& layout) {
  return make_field(o.field, model, layout, o.seed);
}

int cmd_eval(const Options& o) {
  if (o.point_file.empty()) throw InvalidInput("eval needs --point");
  const json pj = read_json(o.point_file);
  const Model model = point_model(pj);
  CMatrix mat, vec;
  if (model == Model::upper) {
    const UpperPoint p = upper_point_from_json(pj);
    require_valid(p);
    mat = p.omega;
    vec = p.z;
  } else {
    const DiskPoint p = disk_point_from_json(pj);
    require_valid(p);
    mat = p.w;
    vec = p.eta;
  }
  const std::size_t n = mat.rows(), m = vec.rows();
  const MetricParams params{o.a, o.b};
  const Transcription tr = o.printed ? Transcription::printed : Transcription::laplace_beltrami;

  if (o.target == "metric") {
    if (o.tangent_file.empty()) throw InvalidInput("eval metric needs --tangent");
    const Tangent t = tangent_from_json(read_json(o.tangent_file));
    if (t.model != model) throw InvalidInput("tangent and point use different models");
    const std::string bad = tangent_violation(t, n, m);
    if (!bad.empty()) throw InvalidInput(bad);
    const double q = model == Model::upper ? q_upper({mat, vec}, t, params) : q_disk({mat, vec}, t, params);
    emit(o, fmt(q) + "\n");
    return 0;
  }
  if (o.target == "tensor") {
    const MetricTensor g = model == Model::upper ? metric_tensor(UpperPoint{mat, vec}, params)
                                                 : metric_tensor(DiskPoint{mat, vec}, params);
    emit(o, to_json(g).dump(2) + "\n");
    return 0;
  }

  OperatorKind kind;
  if (o.target == "laplacian") {
    kind = model == Model::upper ? OperatorKind::upper : OperatorKind::disk;
  } else {
    bool is_field = false;
    for (const auto& id : field_ids()) is_field = is_field || id == o.target;
    if (is_field) {
      const ChartLayout layout{n, m};
      emit(o, fmt(make_field(o.target, model, layout, o.seed)(to_chart(mat, vec))) + "\n");
      return 0;
    }
    kind = operator_kind_from_string(o.target);
  }
  if (operator_model(kind) != model) throw InvalidInput("operator '" + o.target + "' acts on the other model");
  const ChartLayout layout = operator_layout(kind, n, m);
  const RVector x = to_chart(mat, layout.m == 0 ? CMatrix(0, n) : vec);
  const double v = apply_operator(kind, field_for(o, model, layout), x, params, tr);
  emit(o, fmt(v) + "\n");
  return 0;
}

int cmd_sample(const Options& o) {
  const Model model = model_from_string(o.model);
  json j;
  if (o.target == "point") {
    j = model == Model::upper ? to_json(random_upper_point(o.n, o.m, o.seed))
                              : to_json(random_disk_point(o.n, o.m, o.seed));
  } else if (o.target == "element") {
    const JacobiElement g = random_jacobi(o.n, o.m, o.seed);
    j = model == Model::upper ? to_json(g) : to_json(theta_map(g));
  } else {
    throw InvalidInput("sample kind must be 'point' or 'element'");
  }
  emit(o, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Invariant metrics and Laplacians on Siegel-Jacobi spaces: verification harness", "sjgeo"};
  app.require_subcommand(1);
  app.footer(tolerance_table());
  Options o;

  auto* verify = app.add_subcommand("verify", "run a named check or 'all'");
  verify->add_option("check", o.target, "check name or 'all'")->required();
  add_common(verify, o);

  auto* eval = app.add_subcommand("eval", "evaluate a metric, operator or field at a point");
  eval->add_option("target", o.target,
                   "metric | tensor | laplacian | siegel | upper | disk_n | disk | D | L | Dtilde | Ltilde | field id")
      ->required();
  eval->add_option("--point", o.point_file, "point JSON file");
  eval->add_option("--tangent", o.tangent_file, "tangent JSON file");
  eval->add_option("--field", o.field, "test field id for operators");
  eval->add_flag("--printed", o.printed, "use the printed transcription of the Laplacians");
  add_common(eval, o);

  auto* sample = app.add_subcommand("sample", "print a random point or group element");
  sample->add_option("kind", o.target, "point | element")->required();
  sample->add_option("--model", o.model, "upper or disk")->check(CLI::IsMember({"upper", "disk"}));
  add_common(sample, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      if (o.target != "all" && !is_check(o.target)) {
        std::cerr << "unknown check '" << o.target << "'\n\n" << verify->help();
        return 2;
      }
      return cmd_verify(o);
    }
    if (eval->parsed()) return cmd_eval(o);
    return cmd_sample(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sjgeo
