#include "symnorm/io.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace symnorm::io {

namespace {

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string key(const std::string& path, const std::string& k) { return path + "." + k; }

const Json& need(const Json& j, const std::string& k, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(k);
  if (it == j.end()) throw SchemaError(key(path, k), "missing");
  return *it;
}

const Json& need_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

Int int_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<Int>();
  if (j.is_string()) {
    Rat q = rat_from_json(j, path);
    if (is_integer(q)) return to_int(q);
  }
  throw SchemaError(path, "expected an integer");
}

std::size_t size_from_json(const Json& j, const std::string& path) {
  Int v = int_from_json(j, path);
  if (v < 0) throw SchemaError(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

template <class T>
Json list(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json str_list(const std::vector<std::string>& v) { return Json(v); }

std::vector<std::string> strings_from_json(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < need_array(j, path).size(); ++i) {
    if (!j[i].is_string()) throw SchemaError(idx(path, i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

Verdict verdict_from_string(const std::string& s, const std::string& path) {
  for (auto v : {Verdict::Surjective, Verdict::NotSurjective, Verdict::Unsupported})
    if (to_string(v) == s) return v;
  throw SchemaError(path, "unknown verdict '" + s + "'");
}

bool flag_bool(const Json& flags, const std::string& k, bool fallback) {
  auto it = flags.find(k);
  if (it == flags.end()) return fallback;
  if (!it->is_boolean()) throw SchemaError("flags." + k, "expected a boolean");
  return it->get<bool>();
}

}  // namespace

Json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return make_rat(j.get<Int>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected a rational as a string \"p/q\" or an integer");
}

Json to_json(const MVec& m) {
  Json a = Json::array();
  for (const auto& x : m) a.push_back(to_json(x));
  return a;
}

MVec mvec_from_json(const Json& j, const std::string& path) {
  MVec m;
  for (std::size_t i = 0; i < need_array(j, path).size(); ++i) m.push_back(rat_from_json(j[i], idx(path, i)));
  return m;
}

Json to_json(const NVec& v) { return Json(v); }

NVec nvec_from_json(const Json& j, const std::string& path) {
  NVec v;
  for (std::size_t i = 0; i < need_array(j, path).size(); ++i) v.push_back(int_from_json(j[i], idx(path, i)));
  return v;
}

Fan catalog_fan(const std::string& ref) {
  const std::string prefix = "catalog:";
  if (ref.rfind(prefix, 0) != 0) throw std::invalid_argument("catalog reference must start with 'catalog:'");
  std::vector<std::string> parts;
  std::stringstream ss(ref.substr(prefix.size()));
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.empty()) throw std::invalid_argument("empty catalog reference");
  std::vector<std::size_t> n;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(parts[i], &used);
    } catch (const std::exception&) {
    }
    if (v < 0 || used != parts[i].size()) throw std::invalid_argument("bad catalog parameter '" + parts[i] + "'");
    n.push_back(static_cast<std::size_t>(v));
  }
  const std::string& name = parts[0];
  auto arity = [&](std::size_t k) {
    if (n.size() != k)
      throw std::invalid_argument("catalog:" + name + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (name == "blowup2") return arity(0), catalog::ex1(2, 2);
  if (name == "chamber") return arity(1), catalog::chamber(n[0]);
  if (name == "ex1") return arity(2), catalog::ex1(n[0], n[1]);
  if (name == "ex1b") return arity(2), catalog::ex1b(n[0], n[1]);
  if (name == "ex2b") return arity(1), catalog::ex2b(static_cast<Int>(n[0]));
  if (name == "ex3_1") return arity(2), catalog::ex3_1(n[0], n[1]);
  if (name == "ex3_2") return arity(2), catalog::ex3_2(n[0], n[1]);
  throw std::invalid_argument("unknown catalog fan '" + name + "'");
}

Json to_json(const Fan& fan) {
  Json cones = Json::array();
  for (const auto& c : fan.max_cones) cones.push_back(Json(c));
  return {{"rank", fan.rank},
          {"rays", list(fan.rays)},
          {"cones", cones},
          {"kind", fan.kind == FanKind::Open ? "open" : "complete"}};
}

Fan fan_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return catalog_fan(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path, e.what());
    }
  }
  std::size_t rank = size_from_json(need(j, "rank", path), key(path, "rank"));
  std::vector<NVec> rays;
  const Json& jr = need_array(need(j, "rays", path), key(path, "rays"));
  for (std::size_t i = 0; i < jr.size(); ++i) rays.push_back(nvec_from_json(jr[i], idx(key(path, "rays"), i)));
  std::vector<ConeIdx> cones;
  const Json& jc = need_array(need(j, "cones", path), key(path, "cones"));
  for (std::size_t i = 0; i < jc.size(); ++i) {
    ConeIdx c;
    const std::string p = idx(key(path, "cones"), i);
    for (std::size_t k = 0; k < need_array(jc[i], p).size(); ++k) c.push_back(size_from_json(jc[i][k], idx(p, k)));
    cones.push_back(c);
  }
  FanKind kind = FanKind::Open;
  if (j.contains("kind")) {
    const Json& k = j["kind"];
    if (k == "open") kind = FanKind::Open;
    else if (k == "complete") kind = FanKind::Complete;
    else throw SchemaError(key(path, "kind"), "expected \"open\" or \"complete\"");
  }
  try {
    return make_fan(rank, rays, cones, kind);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

Json to_json(const RootSystem& rs) {
  Json c = Json::array();
  for (const auto& row : rs.cartan) c.push_back(Json(row));
  return {{"label", rs.label}, {"rank", rs.rank}, {"cartan", c}};
}

RootSystem root_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return make_root_system(j.get<std::string>());
    if (j.is_object() && j.contains("type")) {
      if (!j["type"].is_string()) throw SchemaError(key(path, "type"), "expected a string");
      return make_root_system(j["type"].get<std::string>());
    }
    const Json& jc = need_array(need(j, "cartan", path), key(path, "cartan"));
    IntMat a;
    for (std::size_t i = 0; i < jc.size(); ++i) a.push_back(nvec_from_json(jc[i], idx(key(path, "cartan"), i)));
    if (j.contains("rank") && size_from_json(j["rank"], key(path, "rank")) != a.size())
      throw SchemaError(key(path, "rank"), "does not match the Cartan matrix");
    std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "custom";
    return make_custom_root_system(a, label);
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

Json to_json(const SphericalLattice& lat) {
  if (lat.is_m) return "M";
  return {{"generators", list(lat.generators)}};
}

Json to_json(const PLFunction& h) {
  return {{"values", list(h.values)}, {"parts", list(h.parts)}, {"lattice", to_json(h.lattice)}};
}

PLFunction bundle_from_json(const Json& j, const Fan& fan, const RootSystem* rs, const std::string& path) {
  const std::string vp = key(path, "values");
  const Json& jv = need(j, "values", path);
  std::vector<std::optional<Rat>> vals(fan.rays.size());
  if (jv.is_array()) {
    if (jv.size() != fan.rays.size())
      throw SchemaError(vp, "expected " + std::to_string(fan.rays.size()) + " values, got " + std::to_string(jv.size()));
    for (std::size_t i = 0; i < jv.size(); ++i) vals[i] = rat_from_json(jv[i], idx(vp, i));
  } else if (jv.is_object()) {
    for (const auto& [k, v] : jv.items()) {
      const std::string p = key(vp, k);
      long r = -1;
      if (!k.empty() && (k.front() == '(' || k.find(',') != std::string::npos)) {
        std::string body = k;
        body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }),
                   body.end());
        NVec ray;
        std::stringstream ss(body);
        try {
          for (std::string t; std::getline(ss, t, ',');) ray.push_back(std::stoll(t));
        } catch (const std::exception&) {
          throw SchemaError(p, "bad ray key");
        }
        r = fan.ray_index(ray);
      } else {
        try {
          std::size_t used = 0;
          long long v2 = std::stoll(k, &used);
          if (used == k.size() && v2 >= 0 && static_cast<std::size_t>(v2) < fan.rays.size()) r = static_cast<long>(v2);
        } catch (const std::exception&) {
        }
      }
      if (r < 0) throw SchemaError(p, "does not name a ray of the fan");
      if (vals[r]) throw SchemaError(p, "ray given twice");
      vals[r] = rat_from_json(v, p);
    }
  } else {
    throw SchemaError(vp, "expected an array or an object");
  }
  std::vector<Rat> values;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!vals[i]) throw SchemaError(vp, "no value for ray " + std::to_string(i) + " " + format(fan.rays[i]));
    values.push_back(*vals[i]);
  }
  SphericalLattice lat = rs ? SphericalLattice::root_default() : SphericalLattice::toric_default();
  if (j.contains("lattice")) {
    const Json& jl = j["lattice"];
    const std::string lp = key(path, "lattice");
    if (jl == "M") {
      lat = SphericalLattice::toric_default();
    } else {
      const Json& jg = need_array(need(jl, "generators", lp), key(lp, "generators"));
      lat = SphericalLattice{{}, false};
      for (std::size_t i = 0; i < jg.size(); ++i)
        lat.generators.push_back(mvec_from_json(jg[i], idx(key(lp, "generators"), i)));
      if (lat.generators.size() != fan.rank) throw SchemaError(key(lp, "generators"), "expected rank many generators");
    }
  }
  try {
    return from_ray_values(fan, values, lat, rs);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

Json to_json(const HPolyhedron& k) {
  Json ineqs = Json::array();
  for (const auto& q : k.ineqs) ineqs.push_back({{"normal", to_json(q.normal)}, {"bound", to_json(q.bound)}});
  return {{"dim", k.dim}, {"inequalities", ineqs}, {"coset_base", to_json(k.coset.base)}};
}

Json to_json(const LatticePointSet& s) { return {{"size", s.size()}, {"points", list(s.points)}}; }

Json to_json(const ValidationReport& r) { return {{"ok", r.ok}, {"violations", str_list(r.violations)}}; }

Json to_json(const BundleStatus& s) { return {{"gg", s.gg}, {"ample", s.ample}}; }

Json to_json(const PiSets& p) {
  return {{"Pi_Z", to_json(p.Pi_Z)}, {"Pi_Zc", to_json(p.Pi_Zc)}, {"Pi_Y", to_json(p.Pi_Y)},
          {"consistent", p.consistent}};
}

Json to_json(const CheckReport& r) {
  Json dec = Json::array();
  for (const auto& d : r.decompositions) dec.push_back({{"m", to_json(d.m)}, {"m1", to_json(d.m1)}, {"m2", to_json(d.m2)}});
  return {{"verdict", to_string(r.verdict)},
          {"mode", r.mode},
          {"witnesses", list(r.witnesses)},
          {"decompositions", dec},
          {"stats", Json(r.stats)},
          {"notes", str_list(r.notes)}};
}

CheckReport report_from_json(const Json& j, const std::string& path) {
  CheckReport r;
  const Json& v = need(j, "verdict", path);
  if (!v.is_string()) throw SchemaError(key(path, "verdict"), "expected a string");
  r.verdict = verdict_from_string(v.get<std::string>(), key(path, "verdict"));
  if (j.contains("mode")) r.mode = j["mode"].get<std::string>();
  if (j.contains("witnesses")) {
    const Json& w = need_array(j["witnesses"], key(path, "witnesses"));
    for (std::size_t i = 0; i < w.size(); ++i) r.witnesses.push_back(mvec_from_json(w[i], idx(key(path, "witnesses"), i)));
  }
  if (j.contains("decompositions")) {
    const std::string dp = key(path, "decompositions");
    const Json& d = need_array(j["decompositions"], dp);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::string p = idx(dp, i);
      r.decompositions.push_back({mvec_from_json(need(d[i], "m", p), key(p, "m")),
                                  mvec_from_json(need(d[i], "m1", p), key(p, "m1")),
                                  mvec_from_json(need(d[i], "m2", p), key(p, "m2"))});
    }
  }
  if (j.contains("stats")) {
    if (!j["stats"].is_object()) throw SchemaError(key(path, "stats"), "expected an object");
    for (const auto& [k, v2] : j["stats"].items()) r.stats[k] = int_from_json(v2, key(key(path, "stats"), k));
  }
  if (j.contains("notes")) r.notes = strings_from_json(j["notes"], key(path, "notes"));
  return r;
}

Json to_json(const EquivalenceReport& r) {
  return {{"open", to_json(r.open)}, {"complete", to_json(r.complete)}, {"agree", r.agree}};
}

Json to_json(const RjReport& r) {
  return {{"j", r.j + 1},
          {"supported", r.supported},
          {"passed", r.passed},
          {"wall_vertices", list(r.wall_vertices)},
          {"failures", list(r.failures)}};
}

Json to_json(const SaturationReport& r) {
  Json v = Json::array();
  for (const auto& [a, b] : r.violations) v.push_back({{"nu", to_json(a)}, {"nu_prime", to_json(b)}});
  return {{"saturated", r.saturated},
          {"set_size", r.set_size},
          {"pairs_checked", r.pairs_checked},
          {"violations", v},
          {"notes", str_list(r.notes)}};
}

Json to_json(const L1Report& r) {
  return {{"supported", r.supported},     {"l1a", r.l1a},
          {"l1b", r.l1b},                 {"vertices", r.vertices},
          {"points", r.points},           {"minimal_checked", r.minimal_checked},
          {"deep_checked", r.deep_checked}, {"failures", list(r.failures)},
          {"notes", str_list(r.notes)}};
}

Json to_json(const SplitWitness& w) {
  return {{"algorithm", w.algorithm}, {"m", to_json(w.m)}, {"m1", to_json(w.m1)}, {"m2", to_json(w.m2)},
          {"trace", str_list(w.trace)}};
}

SplitWitness witness_from_json(const Json& j, const std::string& path) {
  SplitWitness w;
  const Json& a = need(j, "algorithm", path);
  if (!a.is_string()) throw SchemaError(key(path, "algorithm"), "expected a string");
  w.algorithm = a.get<std::string>();
  w.m = mvec_from_json(need(j, "m", path), key(path, "m"));
  w.m1 = mvec_from_json(need(j, "m1", path), key(path, "m1"));
  w.m2 = mvec_from_json(need(j, "m2", path), key(path, "m2"));
  if (j.contains("trace")) w.trace = strings_from_json(j["trace"], key(path, "trace"));
  return w;
}

JobSpec job_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  JobSpec job;
  const Json& c = need(j, "command", path);
  if (!c.is_string()) throw SchemaError(key(path, "command"), "expected a string");
  job.command = c.get<std::string>();
  if (j.contains("id")) job.id = j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump();
  if (j.contains("root") && !j["root"].is_null()) job.root = j["root"];
  job.fan = need(j, "fan", path);
  if (j.contains("bundles")) {
    const Json& b = need_array(j["bundles"], key(path, "bundles"));
    for (const auto& x : b) job.bundles.push_back(x);
  } else if (j.contains("bundle")) {
    job.bundles.push_back(j["bundle"]);
  }
  if (j.contains("flags")) {
    if (!j["flags"].is_object()) throw SchemaError(key(path, "flags"), "expected an object");
    job.flags = j["flags"];
  }
  return job;
}

Json to_json(const JobSpec& job) {
  Json j = {{"command", job.command}, {"fan", job.fan}, {"bundles", job.bundles}, {"flags", job.flags}};
  if (!job.id.empty()) j["id"] = job.id;
  if (job.root) j["root"] = *job.root;
  return j;
}

Json run(const JobSpec& job) {
  const std::string& cmd = job.command;
  Fan fan = fan_from_json(job.fan, "fan");
  std::optional<RootSystem> rs;
  if (job.root) rs = root_from_json(*job.root, "root");
  if (rs && rs->rank != fan.rank) throw SchemaError("root", "rank differs from the fan rank");
  auto need_root = [&]() -> const RootSystem& {
    if (!rs) throw SchemaError("root", "command '" + cmd + "' needs a root system");
    return *rs;
  };
  std::optional<WeylGroup> wg;
  auto weyl = [&]() -> const WeylGroup& {
    if (!wg) wg = generate_weyl_group(need_root());
    return *wg;
  };
  std::vector<PLFunction> b;
  for (std::size_t i = 0; i < job.bundles.size(); ++i)
    b.push_back(bundle_from_json(job.bundles[i], fan, rs ? &*rs : nullptr, idx("bundles", i)));
  auto bundle = [&](std::size_t i) -> const PLFunction& {
    if (b.empty()) throw SchemaError("bundles", "command '" + cmd + "' needs a bundle");
    return b[std::min(i, b.size() - 1)];  // a single bundle doubles as k = h
  };
  const Json& f = job.flags;

  Json out;
  if (cmd == "validate-fan") {
    auto rep = validate(fan);
    out = to_json(rep);
    out["proper_over_orthant"] = fan.kind == FanKind::Open && is_proper_over_orthant(fan);
    out["smooth"] = is_smooth(fan);
    out["fan"] = to_json(fan);
    if (auto fam = identify_family(fan)) out["family"] = {{"name", fam->name}, {"params", fam->params}};
  } else if (cmd == "symmetrize") {
    Fan c = symmetrize(fan, weyl());
    out = {{"fan", to_json(c)}, {"max_cones", c.max_cones.size()}, {"weyl_order", weyl().size()}};
  } else if (cmd == "ample") {
    out = to_json(bundle_status(bundle(0), rs ? &*rs : nullptr));
  } else if (cmd == "polytope") {
    const PLFunction& h = bundle(0);
    auto hc = weyl_extend(h, weyl());
    auto p = polytope_P(hc, h.base_point());
    auto verts = vertices_from_parts(hc);
    auto pts = lattice_points(p, verts);
    out = {{"polytope", to_json(p)}, {"vertices", list(verts)}, {"lattice_points", pts.size()}};
    if (flag_bool(f, "points", false)) out["points"] = list(pts.points);
  } else if (cmd == "pi-sets") {
    out = to_json(pi_sets(bundle(0), need_root(), weyl()));
  } else if (cmd == "check") {
    std::string mode = f.value("mode", std::string("open"));
    bool rec = flag_bool(f, "witnesses", false);
    if (mode == "open") out = to_json(check_sum_open(bundle(0), bundle(1), rec));
    else if (mode == "complete") out = to_json(check_sum_complete(bundle(0), bundle(1), need_root(), weyl(), rec));
    else if (mode == "equivalence") out = to_json(check_equivalence(bundle(0), bundle(1), need_root(), weyl()));
    else throw SchemaError("flags.mode", "expected open, complete or equivalence");
  } else if (cmd == "split") {
    Algorithm a = parse_algorithm(f.value("algorithm", std::string("auto")));
    const PLFunction &h = bundle(0), &k = bundle(1);
    if (f.contains("point")) {
      out = to_json(split(a, h, k, mvec_from_json(f["point"], "flags.point")));
    } else {
      Json ws = Json::array();
      for (const auto& m : minimal_lattice_points(polyhedron_Q(h + k)).points) ws.push_back(to_json(split(a, h, k, m)));
      out = {{"algorithm", to_string(a == Algorithm::Auto ? detect_algorithm(h, k) : a)}, {"witnesses", ws}};
    }
  } else if (cmd == "saturation") {
    if (b.size() >= 2) out = to_json(check_saturation(b[0], b[1], need_root(), weyl()));
    else out = to_json(check_pi_saturation(bundle(0), need_root(), weyl()));
  } else if (cmd == "rj-check") {
    Json res = Json::array();
    bool all = true;
    for (std::size_t j = 0; j < fan.rank; ++j) {
      if (f.contains("j") && size_from_json(f["j"], "flags.j") != j + 1) continue;
      auto r = check_Rj(bundle(0), need_root(), weyl(), j);
      all = all && r.supported && r.passed;
      res.push_back(to_json(r));
    }
    out = {{"results", res}, {"passed", all}};
  } else if (cmd == "l1-check") {
    std::size_t deep = f.contains("deep") ? size_from_json(f["deep"], "flags.deep") : 100;
    std::uint64_t seed = f.contains("seed") ? size_from_json(f["seed"], "flags.seed") : 1;
    out = to_json(check_l1(bundle(0), need_root(), weyl(), deep, seed));
  } else if (cmd == "ex3_2-check") {
    auto e = ex3_2_data(bundle(0));
    out = to_json(check_ex3_2(bundle(0)));
    out["a"] = e.a;
    out["b"] = e.b;
  } else {
    throw SchemaError("command", "unknown command '" + cmd + "'");
  }
  out["command"] = cmd;
  return out;
}

BatchResult batch(const Json& manifest) {
  const Json* jobs = &manifest;
  if (manifest.is_object()) jobs = &need(manifest, "jobs", "manifest");
  need_array(*jobs, "manifest.jobs");
  const std::size_t n = jobs->size();
  std::vector<std::future<Json>> futs;
  for (std::size_t i = 0; i < n; ++i)
    futs.push_back(std::async(std::launch::async, [&, i]() -> Json {
      const std::string p = idx("jobs", i);
      Json entry = {{"index", i}};
      try {
        JobSpec job = job_from_json((*jobs)[i], p);
        entry["id"] = job.id.empty() ? std::to_string(i) : job.id;
        entry["command"] = job.command;
        entry["result"] = run(job);
        entry["status"] = "ok";
      } catch (const SchemaError& e) {
        entry["status"] = "error";
        entry["error"] = e.path.rfind("jobs", 0) == 0 ? std::string(e.what()) : p + "." + e.what();
      } catch (const std::exception& e) {
        entry["status"] = "error";
        entry["error"] = p + ": " + e.what();
      }
      return entry;
    }));
  BatchResult br;
  Json entries = Json::array();
  std::size_t ok = 0, errors = 0, disagree = 0;
  for (auto& fu : futs) {
    Json e = fu.get();
    if (e["status"] == "ok") {
      ++ok;
      const Json& r = e["result"];
      if (r.contains("agree") && r["agree"] == false) ++disagree;
    } else {
      ++errors;
    }
    entries.push_back(std::move(e));
  }
  br.report = {{"jobs", entries},
               {"summary", {{"total", n}, {"ok", ok}, {"errors", errors}, {"disagreements", disagree}}}};
  br.exit_code = errors || disagree ? 1 : 0;
  return br;
}

namespace {

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

// Scalar fields of a result, with stats flattened as stats.<name>.
std::map<std::string, Json> flat(const Json& r) {
  std::map<std::string, Json> row;
  for (const auto& [k, v] : r.items()) {
    if (v.is_primitive()) row[k] = v;
    else if (k == "stats" && v.is_object())
      for (const auto& [sk, sv] : v.items()) row["stats." + sk] = sv;
    else if (k == "witnesses" && v.is_array()) row["witness_count"] = v.size();
  }
  return row;
}

}  // namespace

std::string to_csv(const Json& result) {
  std::vector<std::map<std::string, Json>> rows;
  if (result.contains("jobs") && result["jobs"].is_array()) {
    for (const auto& e : result["jobs"]) {
      std::map<std::string, Json> row;
      if (e.contains("result")) row = flat(e["result"]);
      for (const char* k : {"index", "id", "command", "status", "error"})
        if (e.contains(k)) row[k] = e[k];
      rows.push_back(std::move(row));
    }
  } else {
    rows.push_back(flat(result));
  }
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r)
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::sort(cols.begin(), cols.end());
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out += ",";
      auto it = r.find(cols[i]);
      if (it != r.end()) out += csv_cell(it->second);
    }
    out += "\n";
  }
  return out;
}

}  // namespace symnorm::io
