#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "signlab/certificates.hpp"
#include "signlab/constructions.hpp"
#include "signlab/lp_search.hpp"
#include "signlab/signtools.hpp"
#include "signlab/suites.hpp"
#include "signlab/transforms.hpp"

namespace {

using namespace signlab;

// Write-then-rename so readers never observe a partial file.
void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot open " + tmp + " for writing");
    os << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("cannot rename " + tmp + " to " + path);
}

int read_thread_cap() {
  const char* env = std::getenv("SIGNLAB_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  if (v < 1) throw Error("SIGNLAB_THREADS must be a positive integer");
  return v;
}

int cmd_verify(const std::string& suite, const std::string& out,
               unsigned seed) {
  bool known = false;
  for (const auto& n : suite_names()) known = known || n == suite;
  if (!known) {
    std::cerr << "unknown suite: " << suite << "\nknown suites:";
    for (const auto& n : suite_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return 2;
  }
  SuiteReport rep = run_suite(suite, seed);
  for (const auto& it : rep.items)
    std::cout << (it.passed ? "[pass] " : "[FAIL] ") << rep.suite << ": "
              << it.name << " (" << it.value << ")"
              << (it.note.empty() ? "" : "  " + it.note) << "\n";
  if (!out.empty()) atomic_write(out, suite_report_json(rep));
  return rep.passed ? 0 : 1;
}

int cmd_search(int dim, const std::string& sign, int degree, double tol,
               const std::string& out) {
  int s = sign == "plus" ? 1 : -1;
  if (degree <= 0) degree = s > 0 ? 60 : 40;
  SearchResult res = bisect_min_radius(dim, s, degree, tol);
  std::cout << "dim " << dim << " sign " << sign << " degree " << degree
            << ": r_upper = " << res.r_upper
            << " (re-verified radius " << res.verification.radius << ")\n";
  nlohmann::json j;
  j["dim"] = dim;
  j["sign"] = s;
  j["degree"] = degree;
  j["r_upper"] = res.r_upper;
  j["verified_radius"] = res.verification.radius;
  j["candidate"] = nlohmann::json::parse(serialize_spec(res.candidate));
  if (!out.empty()) {
    atomic_write(out, j.dump(2));
    std::ostringstream csv;
    csv << "r,slack_t,feasible\n";
    for (auto& [r, t, ok] : res.trace)
      csv << r << "," << t << "," << (ok ? 1 : 0) << "\n";
    atomic_write(out + ".csv", csv.str());
  }
  return 0;
}

FunctionSpec apply_stage(const FunctionSpec& f, const nlohmann::json& stage) {
  std::string op = stage.at("op").get<std::string>();
  if (op == "eigen_symmetrize")
    return eigen_symmetrize(f, stage.at("s").get<int>());
  if (op == "dirac_symmetrize")
    return dirac_symmetrize(f, stage.at("x0").get<double>());
  if (op == "gaussian_correct") return gaussian_correct(f);
  if (op == "mollify_bandlimit")
    return mollify_bandlimit(f, stage.at("delta").get<double>());
  if (op == "schwartz_smooth")
    return schwartz_smooth(f, stage.at("delta").get<double>());
  if (op == "dilate") return dilate(f, stage.at("lambda").get<double>());
  if (op == "balance_scale") return balance_scale(f);
  throw Error("unknown pipeline op: " + op);
}

int cmd_transform(const std::string& pipeline_path,
                  const std::string& input_path, const std::string& out,
                  double grid) {
  std::ifstream in(input_path);
  if (!in) throw Error("cannot read input spec: " + input_path);
  std::stringstream ss;
  ss << in.rdbuf();
  FunctionSpec f = parse_spec(ss.str());

  nlohmann::json pipeline = nlohmann::json::array();
  if (!pipeline_path.empty()) {
    std::ifstream pin(pipeline_path);
    if (!pin) throw Error("cannot read pipeline: " + pipeline_path);
    pipeline = nlohmann::json::parse(pin);
    if (!pipeline.is_array()) throw Error("pipeline must be a JSON array");
  }
  nlohmann::json report = nlohmann::json::array();
  for (const auto& stage : pipeline) {
    f = apply_stage(f, stage);
    nlohmann::json st;
    st["op"] = stage.at("op");
    st["support_radius"] = support_radius(f);
    st["band_radius"] = band_radius(f);
    double nb = nonneg_beyond(f);
    if (!std::isnan(nb)) {
      st["nonneg_beyond"] = nb;
      st["last_sign_change"] = last_sign_change(f).radius;
    }
    report.push_back(st);
    std::cout << "stage " << st.dump() << "\n";
  }

  FunctionSpec out_spec = f;
  if (auto* cf = std::get_if<ClosedForm>(&f.rep);
      cf && cf->kind == CFKind::Custom) {
    std::vector<double> radii;
    double top = std::min(support_radius(f), 4.0 * grid);
    if (!std::isfinite(top)) top = 4.0 * grid;
    for (int i = 0; i <= 400; ++i) radii.push_back(top * i / 400.0);
    FunctionSpec s;
    s.dim = f.dim;
    s.rep = sample_on_grid(f, radii, tail_bound(f));
    out_spec = s;
  }

  FunctionSpec ft = fourier_transform(f);
  std::ostringstream csv;
  csv << "x,f,fhat\n";
  for (int i = 0; i < 200; ++i) {
    double x = grid * i / 199.0;
    csv << x << "," << evaluate(f, x) << "," << evaluate(ft, x) << "\n";
  }
  if (!out.empty()) {
    atomic_write(out, csv.str());
    nlohmann::json full;
    full["stages"] = report;
    full["result"] = nlohmann::json::parse(serialize_spec(out_spec));
    atomic_write(out + ".report.json", full.dump(2));
  } else {
    std::cout << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sign-uncertainty numerics: transforms, certificates, and "
               "linear-programming searches over radial functions"};
  app.require_subcommand(1);

  std::string suite, out;
  unsigned seed = 1234;
  auto* verify = app.add_subcommand("verify", "run a named certificate suite");
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--out", out, "JSON report path");
  verify->add_option("--seed", seed, "seed for randomized checks");

  int dim = 1, degree = 0;
  std::string sign = "minus";
  double tol = 1e-3;
  auto* search = app.add_subcommand("search", "bisect the minimal certified "
                                              "sign-change radius");
  search->add_option("--dim", dim, "dimension")->check(CLI::PositiveNumber);
  search->add_option("--sign", sign, "plus|minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  search->add_option("--degree", degree, "basis degree cap");
  search->add_option("--tol", tol, "bisection tolerance")
      ->check(CLI::PositiveNumber);
  search->add_option("--out", out, "result JSON path (trace CSV alongside)");

  std::string pipeline_path, input_path;
  double grid = 4.0;
  auto* transform = app.add_subcommand("transform",
                                       "apply a construction pipeline");
  transform->add_option("--pipeline", pipeline_path, "pipeline JSON file");
  transform->add_option("--input", input_path, "input function spec (JSON)")
      ->required();
  transform->add_option("--out", out, "CSV output path");
  transform->add_option("--grid", grid, "CSV grid upper end")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    read_thread_cap();  // validated; execution is sequential in v1
    if (verify->parsed()) return cmd_verify(suite, out, seed);
    if (search->parsed()) return cmd_search(dim, sign, degree, tol, out);
    return cmd_transform(pipeline_path, input_path, out, grid);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
