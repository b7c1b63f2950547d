#pragma once

#include "symnorm/splitters.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace symnorm::io {

using Json = nlohmann::json;  // std::map-backed: keys come out sorted

// Input error with the JSON path of the offending value, e.g. "jobs[2].bundles[0].values".
struct SchemaError : std::invalid_argument {
  std::string path;
  SchemaError(std::string p, const std::string& msg) : std::invalid_argument(p + ": " + msg), path(std::move(p)) {}
};

// Rationals travel as strings "p" or "p/q"; integers are also accepted on input.
Json to_json(const Rat& q);
Rat rat_from_json(const Json& j, const std::string& path);
Json to_json(const MVec& m);
MVec mvec_from_json(const Json& j, const std::string& path);
Json to_json(const NVec& v);
NVec nvec_from_json(const Json& j, const std::string& path);

// "catalog:chamber:l", "catalog:ex1:l:r", "catalog:blowup2" (= ex1:2:2),
// "catalog:ex1b:l:r", "catalog:ex2b:a", "catalog:ex3_1:l:n", "catalog:ex3_2:l:n".
Fan catalog_fan(const std::string& ref);

Json to_json(const Fan& fan);
// Either a catalog string or {"rank", "rays", "cones", "kind": "open"|"complete"}.
Fan fan_from_json(const Json& j, const std::string& path = "fan");

Json to_json(const RootSystem& rs);
// "A2", {"type": "A2"}, or {"cartan": [[...]], "label": "..."}.
RootSystem root_from_json(const Json& j, const std::string& path = "root");

Json to_json(const SphericalLattice& lat);
Json to_json(const PLFunction& h);
// {"values": [...] | {"<index>" or "(a,b,..)": value}, "lattice": "M" | {"generators": [...]}}.
// Array positions and integer keys follow the canonical (sorted) ray order.
PLFunction bundle_from_json(const Json& j, const Fan& fan, const RootSystem* rs, const std::string& path = "bundle");

Json to_json(const HPolyhedron& k);
Json to_json(const LatticePointSet& s);
Json to_json(const ValidationReport& r);
Json to_json(const BundleStatus& s);
Json to_json(const PiSets& p);
Json to_json(const CheckReport& r);
CheckReport report_from_json(const Json& j, const std::string& path = "report");
Json to_json(const EquivalenceReport& r);
Json to_json(const RjReport& r);
Json to_json(const SaturationReport& r);
Json to_json(const L1Report& r);
Json to_json(const SplitWitness& w);
SplitWitness witness_from_json(const Json& j, const std::string& path = "witness");

struct JobSpec {
  std::string id;
  std::string command;
  std::optional<Json> root;
  Json fan;
  std::vector<Json> bundles;
  Json flags = Json::object();
};
JobSpec job_from_json(const Json& j, const std::string& path = "job");
Json to_json(const JobSpec& job);

// Dispatches one verb: validate-fan, symmetrize, ample, polytope, pi-sets, check,
// split, saturation, rj-check, l1-check. Throws SchemaError / std::invalid_argument
// on bad input; a computed negative verdict is a normal result.
Json run(const JobSpec& job);

struct BatchResult {
  Json report;
  int exit_code = 0;  // nonzero if a job errored or an equivalence check disagreed
};
// Manifest: {"jobs": [...]} or a bare array of jobs.
BatchResult batch(const Json& manifest);

// Tabular summary: one row per batch job, or one row for a single result.
std::string to_csv(const Json& result);

}  // namespace symnorm::io
