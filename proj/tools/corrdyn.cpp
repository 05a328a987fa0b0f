// corrdyn: command-line front end. Documents are JSON with rationals as
// strings. Exit codes: 0 ok, 1 verification failure, 2 precondition error,
// 3 schema or usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "corrdyn/clebsch_gordan.hpp"
#include "corrdyn/errors.hpp"
#include "corrdyn/json_io.hpp"
#include "corrdyn/multiplier.hpp"
#include "corrdyn/stability.hpp"
#include "corrdyn/verify.hpp"

using namespace corrdyn;
using json_io::Json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kPrecondition = 2, kSchema = 3 };

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": invalid JSON: " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write " + path);
  out << text;
}

MoebiusMap parse_moebius(const std::string& spec) {
  std::vector<Rational> v;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw SchemaError("--moebius: malformed rational \"" + item + "\"");
    }
  }
  if (v.size() != 4) throw SchemaError("--moebius expects a,b,c,d");
  if ((v[0] * v[3] - v[1] * v[2]).is_zero()) throw SchemaError("--moebius: a*d - b*c must be nonzero");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dynamics of correspondences on the projective line"};
  app.require_subcommand(1);

  std::string left, right, input, out, moebius, only;
  std::string c0 = "1", c1 = "1";
  unsigned n = 1, degree_cap = 3, instances = 20;
  std::uint64_t seed = 1;

  auto* compose_cmd = app.add_subcommand("compose", "res_z(f(x,z), g(z,y))");
  compose_cmd->add_option("--left", left, "left factor")->required();
  compose_cmd->add_option("--right", right, "right factor")->required();

  auto* iterate_cmd = app.add_subcommand("iterate", "n-fold composite");
  iterate_cmd->add_option("--input", input)->required();
  iterate_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  auto* conjugate_cmd = app.add_subcommand("conjugate", "substitute a Moebius map in both factors");
  conjugate_cmd->add_option("--input", input)->required();
  conjugate_cmd->add_option("--moebius", moebius, "a,b,c,d")->required();

  auto* graph_cmd = app.add_subcommand("graph", "graph of z -> (az+b)/(cz+d)");
  graph_cmd->add_option("--moebius", moebius, "a,b,c,d")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Clebsch-Gordan components");
  decompose_cmd->add_option("--input", input)->required();

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "inverse of decompose");
  reconstruct_cmd->add_option("--input", input)->required();

  auto* project_cmd = app.add_subcommand("project", "image in bidegree (1, d+e-1)");
  project_cmd->add_option("--input", input)->required();
  project_cmd->add_option("--c0", c0, "scale of the top component");
  project_cmd->add_option("--c1", c1, "scale of the second component");

  auto* stability_cmd = app.add_subcommand("stability", "GIT stability verdict");
  stability_cmd->add_option("--input", input)->required();

  auto* multipliers_cmd = app.add_subcommand("multipliers", "fixed-point multiplier form");
  multipliers_cmd->add_option("--input", input)->required();
  multipliers_cmd->add_option("--n", n, "use the n-th iterate")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "run the identity suite");
  verify_cmd->add_option("--seed", seed)->required();
  verify_cmd->add_option("--degree-cap", degree_cap)->required();
  verify_cmd->add_option("--only", only, "run a single identity");
  verify_cmd->add_option("--instances", instances, "instances per identity");

  for (auto* cmd : app.get_subcommands([](const CLI::App*) { return true; }))
    cmd->add_option("--out", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSchema;
  }

  try {
    if (compose_cmd->parsed()) {
      const auto f = json_io::parse_correspondence(read_input(left));
      const auto g = json_io::parse_correspondence(read_input(right));
      write_output(out, json_io::dump(json_io::to_json(compose(f, g))));
    } else if (iterate_cmd->parsed()) {
      const auto f = json_io::parse_correspondence(read_input(input));
      write_output(out, json_io::dump(json_io::to_json(iterate(f, n))));
    } else if (conjugate_cmd->parsed()) {
      const auto f = json_io::parse_correspondence(read_input(input));
      write_output(out, json_io::dump(json_io::to_json(conjugate(f, parse_moebius(moebius)))));
    } else if (graph_cmd->parsed()) {
      write_output(out, json_io::dump(json_io::to_json(moebius_graph(parse_moebius(moebius)))));
    } else if (decompose_cmd->parsed()) {
      const auto f = json_io::parse_correspondence(read_input(input));
      write_output(out, json_io::dump(json_io::to_json(cg_decompose(f.form()))));
    } else if (reconstruct_cmd->parsed()) {
      const auto c = json_io::parse_components(read_json(input));
      write_output(out, json_io::dump(json_io::to_json(cg_reconstruct(c))));
    } else if (project_cmd->parsed()) {
      const auto f = json_io::parse_correspondence(read_input(input));
      const Rational s0 = json_io::parse_rational(c0), s1 = json_io::parse_rational(c1);
      if (std::min(f.dx(), f.dy()) < 1) throw SchemaError("project needs min(d, e) >= 1");
      if (s0.is_zero() || s1.is_zero()) throw SchemaError("--c0 and --c1 must be nonzero");
      write_output(out, json_io::dump(json_io::to_json(rho_project(f.form(), s0, s1))));
    } else if (stability_cmd->parsed()) {
      const auto f = json_io::parse_correspondence(read_input(input));
      if (f.dx() + f.dy() == 0) throw SchemaError("stability needs d + e >= 1");
      Json doc;
      doc["d"] = f.dx();
      doc["e"] = f.dy();
      const Json verdict = json_io::to_json(classify_stability(f));
      for (auto& [k, v] : verdict.items()) doc[k] = v;
      write_output(out, json_io::dump(doc));
    } else if (multipliers_cmd->parsed()) {
      const auto f = json_io::parse_correspondence(read_input(input));
      if (f.dx() + f.dy() == 0) throw SchemaError("multipliers need d + e >= 1");
      const auto h = n == 1 ? f : iterate(f, n);
      const auto r = multiplier_form(h);
      Json doc;
      doc["n"] = n;
      doc["bidegree"] = {h.dx(), h.dy()};
      const Json report = json_io::multiplier_report(r, h.dx(), h.dy(), h.at(0, 0) * h.at(h.dx(), h.dy()));
      for (auto& [k, v] : report.items()) doc[k] = v;
      write_output(out, json_io::dump(doc));
    } else if (verify_cmd->parsed()) {
      VerifyOptions opts;
      opts.seed = seed;
      opts.degree_cap = degree_cap;
      opts.instances = instances;
      if (!only.empty()) opts.only = only;
      VerifyReport report;
      try {
        report = run_verify_suite(opts);
      } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
      }
      write_output(out, report.text());
      return report.ok() ? kOk : kVerifyFailed;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kSchema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}
