#include "covlab/instance.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "covlab/errors.hpp"

namespace covlab {

using nlohmann::json;

std::string kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::CoveringSystem: return "covering_system";
    case InstanceKind::Dynamical: return "dynamical";
    case InstanceKind::Metric: return "metric";
    case InstanceKind::Subshift: return "subshift";
  }
  return "?";
}

namespace {

InstanceKind kind_from_name(const std::string& s) {
  if (s == "covering_system") return InstanceKind::CoveringSystem;
  if (s == "dynamical") return InstanceKind::Dynamical;
  if (s == "metric") return InstanceKind::Metric;
  if (s == "subshift") return InstanceKind::Subshift;
  throw ValidationError("$.kind: unknown kind '" + s + "'");
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

int require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const json& require_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::vector<std::vector<std::vector<int>>> read_covering_list(const json& j,
                                                              const std::string& path) {
  std::vector<std::vector<std::vector<int>>> out;
  require_array(j, path);
  for (std::size_t c = 0; c < j.size(); ++c) {
    const std::string cpath = path + "[" + std::to_string(c) + "]";
    require_array(j[c], cpath);
    std::vector<std::vector<int>> cover;
    for (std::size_t m = 0; m < j[c].size(); ++m) {
      const std::string mpath = cpath + "[" + std::to_string(m) + "]";
      require_array(j[c][m], mpath);
      std::vector<int> member;
      for (std::size_t e = 0; e < j[c][m].size(); ++e)
        member.push_back(require_int(j[c][m][e], mpath + "[" + std::to_string(e) + "]"));
      cover.push_back(std::move(member));
    }
    out.push_back(std::move(cover));
  }
  return out;
}

}  // namespace

InstanceFile parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("$: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail("$", "expected an object");

  InstanceFile f;
  if (!j.contains("schema_version")) fail("$.schema_version", "missing");
  f.schema_version = require_int(j["schema_version"], "$.schema_version");
  if (f.schema_version != 1) fail("$.schema_version", "unsupported version");
  if (!j.contains("kind")) fail("$.kind", "missing");
  f.kind = kind_from_name(require_string(j["kind"], "$.kind"));
  if (j.contains("label")) f.label = require_string(j["label"], "$.label");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) fail("$.seed", "expected an integer");
    f.seed = j["seed"].get<long long>();
  }

  switch (f.kind) {
    case InstanceKind::CoveringSystem:
    case InstanceKind::Dynamical: {
      if (!j.contains("ground")) fail("$.ground", "missing");
      f.ground = require_int(j["ground"], "$.ground");
      if (!j.contains("bases")) fail("$.bases", "missing");
      f.bases = read_covering_list(j["bases"], "$.bases");
      if (j.contains("coverings")) f.coverings = read_covering_list(j["coverings"], "$.coverings");
      if (j.contains("generators")) {
        require_array(j["generators"], "$.generators");
        for (std::size_t g = 0; g < j["generators"].size(); ++g) {
          const std::string gpath = "$.generators[" + std::to_string(g) + "]";
          require_array(j["generators"][g], gpath);
          std::vector<int> img;
          for (std::size_t i = 0; i < j["generators"][g].size(); ++i)
            img.push_back(require_int(j["generators"][g][i], gpath + "[" + std::to_string(i) + "]"));
          f.generators.push_back(std::move(img));
        }
      }
      if (j.contains("group_cap")) f.group_cap = require_int(j["group_cap"], "$.group_cap");
      break;
    }
    case InstanceKind::Metric: {
      if (!j.contains("size")) fail("$.size", "missing");
      f.metric_size = require_int(j["size"], "$.size");
      if (!j.contains("distances")) fail("$.distances", "missing");
      require_array(j["distances"], "$.distances");
      for (std::size_t r = 0; r < j["distances"].size(); ++r) {
        const std::string rpath = "$.distances[" + std::to_string(r) + "]";
        require_array(j["distances"][r], rpath);
        std::vector<std::string> row;
        for (std::size_t c = 0; c < j["distances"][r].size(); ++c)
          row.push_back(require_string(j["distances"][r][c], rpath + "[" + std::to_string(c) + "]"));
        f.distances.push_back(std::move(row));
      }
      if (j.contains("radii")) {
        require_array(j["radii"], "$.radii");
        for (std::size_t i = 0; i < j["radii"].size(); ++i)
          f.radii.push_back(require_string(j["radii"][i], "$.radii[" + std::to_string(i) + "]"));
      }
      if (j.contains("u_radius")) f.u_radius = require_string(j["u_radius"], "$.u_radius");
      if (j.contains("generators")) {
        require_array(j["generators"], "$.generators");
        for (std::size_t g = 0; g < j["generators"].size(); ++g) {
          const std::string gpath = "$.generators[" + std::to_string(g) + "]";
          require_array(j["generators"][g], gpath);
          std::vector<int> img;
          for (std::size_t i = 0; i < j["generators"][g].size(); ++i)
            img.push_back(require_int(j["generators"][g][i], gpath + "[" + std::to_string(i) + "]"));
          f.generators.push_back(std::move(img));
        }
      }
      break;
    }
    case InstanceKind::Subshift: {
      const bool has_sft = j.contains("sft"), has_table = j.contains("table");
      if (has_sft == has_table) fail("$", "subshift needs exactly one of 'sft' or 'table'");
      if (has_sft) {
        require_array(j["sft"], "$.sft");
        for (std::size_t r = 0; r < j["sft"].size(); ++r) {
          const std::string rpath = "$.sft[" + std::to_string(r) + "]";
          require_array(j["sft"][r], rpath);
          std::vector<int> row;
          for (std::size_t c = 0; c < j["sft"][r].size(); ++c)
            row.push_back(require_int(j["sft"][r][c], rpath + "[" + std::to_string(c) + "]"));
          f.sft.push_back(std::move(row));
        }
      } else {
        require_array(j["table"], "$.table");
        for (std::size_t i = 0; i < j["table"].size(); ++i) {
          const std::string ipath = "$.table[" + std::to_string(i) + "]";
          if (j["table"][i].is_number_integer())
            f.table.push_back(std::to_string(j["table"][i].get<long long>()));
          else
            f.table.push_back(require_string(j["table"][i], ipath));
        }
      }
      break;
    }
  }
  return f;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string serialize_instance(const InstanceFile& f) {
  json j;
  j["schema_version"] = f.schema_version;
  j["kind"] = kind_name(f.kind);
  if (!f.label.empty()) j["label"] = f.label;
  if (f.seed) j["seed"] = *f.seed;
  switch (f.kind) {
    case InstanceKind::CoveringSystem:
    case InstanceKind::Dynamical:
      j["ground"] = f.ground;
      j["bases"] = f.bases;
      if (!f.coverings.empty()) j["coverings"] = f.coverings;
      if (!f.generators.empty()) j["generators"] = f.generators;
      if (f.group_cap) j["group_cap"] = *f.group_cap;
      break;
    case InstanceKind::Metric:
      j["size"] = f.metric_size;
      j["distances"] = f.distances;
      if (!f.radii.empty()) j["radii"] = f.radii;
      if (f.u_radius) j["u_radius"] = *f.u_radius;
      if (!f.generators.empty()) j["generators"] = f.generators;
      break;
    case InstanceKind::Subshift:
      if (!f.sft.empty())
        j["sft"] = f.sft;
      else
        j["table"] = f.table;
      break;
  }
  return j.dump(2) + "\n";
}

void save_instance(const InstanceFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write instance file: " + path);
  out << serialize_instance(f);
}

namespace {

Covering covering_from_lists(const std::vector<std::vector<int>>& lists, const GroundSet& ground,
                             const std::string& path) {
  std::vector<Subset> ms;
  for (std::size_t m = 0; m < lists.size(); ++m) {
    Subset s;
    for (std::size_t e = 0; e < lists[m].size(); ++e) {
      int v = lists[m][e];
      if (v < 0 || v >= ground.size())
        fail(path + "[" + std::to_string(m) + "][" + std::to_string(e) + "]",
             "index " + std::to_string(v) + " out of range [0," + std::to_string(ground.size()) +
                 ")");
      s.add(v);
    }
    ms.push_back(s);
  }
  try {
    return Covering(ground, std::move(ms));
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
}

}  // namespace

UniformStructure build_structure(const InstanceFile& f) {
  if (f.kind != InstanceKind::CoveringSystem && f.kind != InstanceKind::Dynamical)
    throw ValidationError("$.kind: structure requires covering_system or dynamical");
  GroundSet ground(f.ground);
  if (f.bases.empty()) fail("$.bases", "at least one base covering required");
  std::vector<Covering> bases;
  for (std::size_t i = 0; i < f.bases.size(); ++i)
    bases.push_back(covering_from_lists(f.bases[i], ground, "$.bases[" + std::to_string(i) + "]"));
  return UniformStructure(ground, std::move(bases));
}

std::vector<Perm> build_generators(const InstanceFile& f, int degree) {
  std::vector<Perm> gens;
  for (std::size_t g = 0; g < f.generators.size(); ++g) {
    const std::string gpath = "$.generators[" + std::to_string(g) + "]";
    if (static_cast<int>(f.generators[g].size()) != degree)
      fail(gpath, "permutation length differs from the ground size");
    try {
      gens.emplace_back(f.generators[g]);
    } catch (const ValidationError& e) {
      fail(gpath, e.what());
    }
  }
  return gens;
}

DynamicalInstance build_dynamical(const InstanceFile& f) {
  UniformStructure s = build_structure(f);
  std::vector<Perm> gens = build_generators(f, s.ground().size());
  return DynamicalInstance(std::move(s), std::move(gens), f.group_cap.value_or(kDefaultGroupCap));
}

MetricSpace build_metric(const InstanceFile& f) {
  if (f.kind != InstanceKind::Metric) throw ValidationError("$.kind: expected metric");
  if (static_cast<int>(f.distances.size()) != f.metric_size)
    fail("$.distances", "expected " + std::to_string(f.metric_size) + " rows");
  std::vector<std::vector<Rat>> d(f.metric_size, std::vector<Rat>(f.metric_size));
  for (int i = 0; i < f.metric_size; ++i) {
    if (static_cast<int>(f.distances[i].size()) != f.metric_size)
      fail("$.distances[" + std::to_string(i) + "]",
           "expected " + std::to_string(f.metric_size) + " entries");
    for (int j = 0; j < f.metric_size; ++j) {
      try {
        d[i][j] = parse_rat(f.distances[i][j]);
      } catch (const ValidationError& e) {
        fail("$.distances[" + std::to_string(i) + "][" + std::to_string(j) + "]", e.what());
      }
    }
  }
  return MetricSpace(f.metric_size, std::move(d));
}

SubshiftSpec build_subshift(const InstanceFile& f) {
  if (f.kind != InstanceKind::Subshift) throw ValidationError("$.kind: expected subshift");
  if (!f.sft.empty()) return SubshiftSpec::sft(f.sft, f.label);
  std::vector<BigInt> counts;
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    try {
      counts.emplace_back(f.table[i]);
    } catch (const std::exception&) {
      fail("$.table[" + std::to_string(i) + "]", "expected an integer");
    }
  }
  return SubshiftSpec::table(std::move(counts), f.label);
}

RadiusGrid build_radii(const InstanceFile& f) {
  if (f.radii.empty()) fail("$.radii", "missing radius grid");
  std::vector<Rat> rs;
  for (std::size_t i = 0; i < f.radii.size(); ++i) {
    try {
      rs.push_back(parse_rat(f.radii[i]));
    } catch (const ValidationError& e) {
      fail("$.radii[" + std::to_string(i) + "]", e.what());
    }
  }
  return RadiusGrid(std::move(rs));
}

std::vector<std::vector<int>> encode_covering(const Covering& c) {
  std::vector<std::vector<int>> out;
  for (const auto& m : c.members()) out.push_back(m.elements());
  return out;
}

InstanceFile encode_dynamical(const UniformStructure& s, const std::vector<Perm>& gens,
                              std::string label) {
  InstanceFile f;
  f.kind = InstanceKind::Dynamical;
  f.label = std::move(label);
  f.ground = s.ground().size();
  for (const auto& b : s.bases()) f.bases.push_back(encode_covering(b));
  for (const auto& g : gens) {
    std::vector<int> img(g.degree());
    for (int i = 0; i < g.degree(); ++i) img[i] = g(i);
    f.generators.push_back(std::move(img));
  }
  return f;
}

InstanceFile encode_metric(const MetricSpace& m, const std::vector<Rat>& radii,
                           const std::vector<Perm>& gens, std::string label) {
  InstanceFile f;
  f.kind = InstanceKind::Metric;
  f.label = std::move(label);
  f.metric_size = m.size();
  f.distances.assign(m.size(), std::vector<std::string>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) f.distances[i][j] = format_rat(m.dist(i, j));
  for (const auto& r : radii) f.radii.push_back(format_rat(r));
  for (const auto& g : gens) {
    std::vector<int> img(g.degree());
    for (int i = 0; i < g.degree(); ++i) img[i] = g(i);
    f.generators.push_back(std::move(img));
  }
  return f;
}

}  // namespace covlab
