#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "solv/commands.hpp"
#include "solv/errors.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kSingular = 2, kUsage = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw solv::SpecError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<double, double> parse_pair(const std::string& text, char sep) {
  auto pos = text.find(sep);
  if (pos == std::string::npos) throw solv::SpecError("expected two values separated by '" + std::string(1, sep) + "'");
  try {
    std::size_t used = 0;
    double a = std::stod(text.substr(0, pos), &used);
    if (used != pos) throw std::invalid_argument("trailing");
    std::string rest = text.substr(pos + 1);
    double b = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing");
    return {a, b};
  } catch (const std::logic_error&) {
    throw solv::SpecError("cannot parse '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal and flat cyclic surfaces in Sol3: verification, expansion, curvature and meshes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<double> tol;
  std::string normal = "preset";
  std::uint64_t seed = 7;
  std::string format = "json";
  app.add_option("--tol", tol, "Numeric tolerance override (also SOLV_TOL)");
  app.add_option("--normal", normal, "Normal field: preset or cross")->check(CLI::IsMember({"preset", "cross"}));
  app.add_option("--seed", seed, "Seed for randomized samples");
  app.add_option("--format", format, "Output format: json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  auto* verify = app.add_subcommand("verify", "Run the checks for one theorem");
  std::string theorem;
  verify->add_option("theorem", theorem, "t1, t2, t3, t4 or t5")->required()->check(
      CLI::IsMember({"t1", "t2", "t3", "t4", "t5"}));

  auto* expand = app.add_subcommand("expand", "Coefficient form of the H- or K-numerator");
  std::string spec_path, target = "H";
  expand->add_option("--spec", spec_path, "Family spec JSON file")->required();
  expand->add_option("--target", target, "H or K")->check(CLI::IsMember({"H", "K"}));

  auto* curvature = app.add_subcommand("curvature", "H and K at a chart point");
  std::string at, method = "numeric";
  curvature->add_option("--spec", spec_path, "Family spec JSON file")->required();
  curvature->add_option("--at", at, "s,t")->required();
  curvature->add_option("--method", method, "symbolic, numeric or oracle")->check(
      CLI::IsMember({"symbolic", "numeric", "oracle"}));

  auto* mesh = app.add_subcommand("mesh", "Sample a chart into an OBJ file");
  std::string grid, out_path;
  bool curve = false;
  mesh->add_option("--spec", spec_path, "Family spec JSON file")->required();
  mesh->add_option("--grid", grid, "NUxNV")->required();
  mesh->add_option("-o,--out", out_path, "Output OBJ path")->required();
  mesh->add_flag("--curve", curve, "Export the middle s-curve as a polyline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (!tol) {
      if (const char* env = std::getenv("SOLV_TOL")) {
        try {
          tol = std::stod(env);
        } catch (const std::logic_error&) {
          throw solv::SpecError("SOLV_TOL is not a number");
        }
      }
    }
    if (tol && !(*tol > 0)) throw solv::SpecError("tolerance must be positive");
    solv::NormalChoice nc = solv::parse_normal(normal);
    bool as_json = format == "json";

    if (*verify) {
      solv::VerifyOptions opt;
      opt.normal = nc;
      opt.seed = seed;
      if (tol) opt.grid_tol = opt.ode_tol = *tol;
      solv::VerificationReport r = solv::verify(theorem, opt);
      std::cout << (as_json ? solv::to_json(r).dump(2) + "\n" : solv::pretty(r));
      return r.pass ? kPass : kFail;
    }
    solv::FamilyBuild fb = solv::build_family(solv::parse_family_spec(read_file(spec_path)));
    if (*expand) {
      solv::Expansion e = solv::expand(fb, solv::parse_target(target), nc);
      std::cout << (as_json ? solv::to_json(e, fb.family).dump(2) + "\n" : solv::pretty(e, fb.family));
      return kPass;
    }
    if (*curvature) {
      auto [s, t] = parse_pair(at, ',');
      solv::CurvatureMethod m = solv::parse_method(method);
      solv::CurvaturePoint p = solv::curvature_at(fb, s, t, m, nc);
      std::cout << (as_json ? solv::to_json(p, m).dump(2) + "\n" : solv::pretty(p, m));
      return kPass;
    }
    if (*mesh) {
      auto [nu, nv] = parse_pair(grid, 'x');
      if (nu != std::floor(nu) || nv != std::floor(nv)) throw solv::SpecError("grid sizes must be integers");
      std::string obj = solv::mesh_obj(fb, static_cast<int>(nu), static_cast<int>(nv), curve);
      std::ofstream out(out_path, std::ios::binary);
      if (!out || !(out << obj)) throw solv::SpecError("cannot write " + out_path);
      return kPass;
    }
  } catch (const solv::SingularityError& e) {
    std::cerr << "singularity: " << e.what() << '\n';
    return kSingular;
  } catch (const solv::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kSingular;
  } catch (const solv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const solv::FormError& e) {
    std::cerr << "form error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
