#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covlab/dynamics.hpp"
#include "covlab/metric.hpp"
#include "covlab/symbolic.hpp"

namespace covlab {

enum class InstanceKind { CoveringSystem, Dynamical, Metric, Subshift };

std::string kind_name(InstanceKind k);

// On-disk instance description (JSON). Fields are populated per kind;
// builders below validate and construct the domain objects.
struct InstanceFile {
  int schema_version = 1;
  InstanceKind kind = InstanceKind::CoveringSystem;
  std::string label;
  std::optional<long long> seed;

  // covering_system / dynamical
  int ground = 0;
  std::vector<std::vector<std::vector<int>>> bases;  // coarsest to finest
  std::vector<std::vector<std::vector<int>>> coverings;
  std::vector<std::vector<int>> generators;  // also metric isometry checks
  std::optional<int> group_cap;

  // metric
  int metric_size = 0;
  std::vector<std::vector<std::string>> distances;  // "p/q"
  std::vector<std::string> radii;
  std::optional<std::string> u_radius;

  // subshift
  std::vector<std::vector<int>> sft;
  std::vector<std::string> table;

  bool operator==(const InstanceFile&) const = default;
};

InstanceFile parse_instance(const std::string& json_text);
InstanceFile load_instance(const std::string& path);
std::string serialize_instance(const InstanceFile& inst);
void save_instance(const InstanceFile& inst, const std::string& path);

// Builders; throw ValidationError naming the offending field.
UniformStructure build_structure(const InstanceFile& f);
DynamicalInstance build_dynamical(const InstanceFile& f);
MetricSpace build_metric(const InstanceFile& f);
std::vector<Perm> build_generators(const InstanceFile& f, int degree);
SubshiftSpec build_subshift(const InstanceFile& f);
RadiusGrid build_radii(const InstanceFile& f);

// Convenience encoders used by generators and tests.
std::vector<std::vector<int>> encode_covering(const Covering& c);
InstanceFile encode_dynamical(const UniformStructure& s, const std::vector<Perm>& gens,
                              std::string label);
InstanceFile encode_metric(const MetricSpace& m, const std::vector<Rat>& radii,
                           const std::vector<Perm>& gens, std::string label);

}  // namespace covlab
