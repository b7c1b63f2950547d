#include "symnorm/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace {

using symnorm::io::Json;

struct Options {
  std::string root, fan, mode = "open", algorithm = "auto", point, format = "json", manifest;
  std::vector<std::string> bundles;
  bool witnesses = false, points = false;
  int j = 0;
  std::size_t deep = 100;
  std::uint64_t seed = 1;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Unicode minus signs are common in pasted examples.
std::string ascii_minus(std::string s) {
  const std::string minus = "\xE2\x88\x92";
  for (auto p = s.find(minus); p != std::string::npos; p = s.find(minus)) s.replace(p, minus.size(), "-");
  return s;
}

// "@file", inline JSON, or a bare string such as "catalog:ex1:2:2" or "A2".
Json value_arg(const std::string& raw) {
  std::string s = ascii_minus(raw);
  if (!s.empty() && s[0] == '@') s = slurp(s.substr(1));
  auto first = s.find_first_not_of(" \t\n");
  if (first != std::string::npos && (s[first] == '{' || s[first] == '[' || s[first] == '"')) {
    try {
      return Json::parse(s);
    } catch (const Json::parse_error& e) {
      throw symnorm::io::SchemaError("<argument>", e.what());
    }
  }
  return s;
}

// Also accepts "values(-2,-2,-3)" and "-2,-2,-3".
Json bundle_arg(const std::string& raw) {
  Json v = value_arg(raw);
  if (!v.is_string()) return v;
  std::string s = v.get<std::string>();
  static const std::regex wrapped(R"(^\s*values\s*\((.*)\)\s*$)");
  std::smatch mt;
  if (std::regex_match(s, mt, wrapped)) s = mt[1];
  Json vals = Json::array();
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');) {
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    if (t.empty()) throw symnorm::io::SchemaError("bundle", "empty value in '" + raw + "'");
    vals.push_back(t);
  }
  return {{"values", vals}};
}

symnorm::io::JobSpec job_from(const std::string& verb, const Options& o) {
  symnorm::io::JobSpec job;
  job.command = verb;
  if (o.fan.empty()) throw symnorm::io::SchemaError("fan", "--fan is required");
  job.fan = value_arg(o.fan);
  if (!o.root.empty()) job.root = value_arg(o.root);
  for (const auto& b : o.bundles) job.bundles.push_back(bundle_arg(b));
  job.flags["mode"] = o.mode;
  job.flags["algorithm"] = o.algorithm;
  job.flags["witnesses"] = o.witnesses;
  job.flags["points"] = o.points;
  job.flags["deep"] = o.deep;
  job.flags["seed"] = o.seed;
  if (o.j > 0) job.flags["j"] = o.j;
  if (!o.point.empty()) job.flags["point"] = value_arg(o.point);
  return job;
}

void emit(const Json& out, const std::string& format) {
  if (format == "csv") std::cout << symnorm::io::to_csv(out);
  else std::cout << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for projective normality of symmetric varieties via fans and lattice polytopes"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"validate-fan", "Validate a fan and report smoothness and properness over the orthant"},
      {"symmetrize", "Weyl-symmetrize an open fan into a complete one"},
      {"ample", "Global generation and ampleness of a bundle"},
      {"polytope", "The polytope P_h, its vertices and lattice points"},
      {"pi-sets", "Weight sets of a bundle"},
      {"check", "Surjectivity of the multiplication map"},
      {"split", "Constructive splitting of lattice points of Q_{h+k}"},
      {"saturation", "Saturation of the dominant weight set"},
      {"rj-check", "Reflection wall vertex check"},
      {"l1-check", "Q and P agreement and generation on the dominant chamber"},
      {"ex3_2-check", "Inequalities and brute-force surjectivity on ex3_2"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, desc] : verbs) {
    auto* s = app.add_subcommand(name, desc);
    s->add_option("--root", o.root, "Root system: A2, A1xA1, B2, G2, BC2, ... or JSON");
    s->add_option("--fan", o.fan, "catalog:<name>:<params>, inline JSON, or @file")->required();
    s->add_option("--bundle", o.bundles, "Bundle JSON, values(a,b,...) or @file; repeat for k");
    s->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
    if (name == "check") {
      s->add_option("--mode", o.mode)->check(CLI::IsMember({"open", "complete", "equivalence"}));
      s->add_flag("--witnesses", o.witnesses, "Record a decomposition for every target point");
    }
    if (name == "split") {
      s->add_option("--algorithm", o.algorithm)
          ->check(CLI::IsMember({"blowup", "chain", "dim2", "simplex3", "zn", "auto"}));
      s->add_option("--point", o.point, "Target point as a JSON array; default: the whole minimal layer");
    }
    if (name == "polytope") s->add_flag("--points", o.points, "List the lattice points");
    if (name == "rj-check") s->add_option("--j", o.j, "Only this simple root (1-based)");
    if (name == "l1-check") {
      s->add_option("--deep", o.deep, "Random deep points per bundle");
      s->add_option("--seed", o.seed);
    }
    subs.push_back(s);
  }
  auto* batch = app.add_subcommand("batch", "Run a JSON manifest of jobs concurrently");
  batch->add_option("manifest", o.manifest, "Manifest file ({\"jobs\": [...]})")->required();
  batch->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (batch->parsed()) {
      Json manifest;
      try {
        manifest = Json::parse(slurp(o.manifest));
      } catch (const Json::parse_error& e) {
        throw symnorm::io::SchemaError("manifest", e.what());
      }
      auto r = symnorm::io::batch(manifest);
      emit(r.report, o.format);
      return r.exit_code;
    }
    for (auto* s : subs) {
      if (!s->parsed()) continue;
      emit(symnorm::io::run(job_from(s->get_name(), o)), o.format);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
