#include "core/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace dockclique {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, path + ": " + e.what());
  }
}

const json& require(const json& j, const char* field, const std::string& path) {
  if (!j.is_object() || !j.contains(field)) {
    fail(ErrorCode::Parse, path + ": missing field '" + field + "'");
  }
  return j.at(field);
}

std::vector<Pharmacophore> parse_points(const json& arr, const char* which,
                                        const std::string& path) {
  if (!arr.is_array())
    fail(ErrorCode::Parse, path + ": '" + which + "' must be an array");
  std::vector<Pharmacophore> points;
  points.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& entry = arr[i];
    const std::string where =
        path + ": " + which + "[" + std::to_string(i) + "]";
    Pharmacophore p;
    try {
      p.id = require(entry, "id", where).get<int>();
      p.kind = parse_kind(require(entry, "kind", where).get<std::string>(), &p.tag);
      const json& xyz = require(entry, "xyz", where);
      if (!xyz.is_array() || xyz.size() != 3)
        fail(ErrorCode::Parse, where + ": 'xyz' must be a 3-element array");
      p.position = {xyz[0].get<double>(), xyz[1].get<double>(), xyz[2].get<double>()};
    } catch (const json::exception& e) {
      fail(ErrorCode::Parse, where + ": " + e.what());
    }
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace

PharmacophoreInstance load_instance(const std::string& path) {
  const json j = parse_file(path);
  PharmacophoreInstance instance;
  instance.pocket = parse_points(require(j, "pocket", path), "pocket", path);
  instance.ligand = parse_points(require(j, "ligand", path), "ligand", path);
  const json& compat = require(j, "compat", path);
  if (!compat.is_array())
    fail(ErrorCode::Parse, path + ": 'compat' must be an array of arrays");
  for (std::size_t i = 0; i < compat.size(); ++i) {
    std::vector<bool> row;
    if (!compat[i].is_array())
      fail(ErrorCode::Parse,
           path + ": compat[" + std::to_string(i) + "] must be an array");
    for (const json& cell : compat[i]) {
      if (cell.is_boolean()) {
        row.push_back(cell.get<bool>());
      } else if (cell.is_number_integer()) {
        row.push_back(cell.get<int>() != 0);
      } else {
        fail(ErrorCode::Parse, path + ": compat entries must be booleans or 0/1");
      }
    }
    instance.compat.push_back(std::move(row));
  }
  instance.validate();
  return instance;
}

void save_instance(const PharmacophoreInstance& instance, const std::string& path) {
  instance.validate();
  ordered_json j;
  for (const char* which : {"pocket", "ligand"}) {
    const auto& points = std::string(which) == "pocket" ? instance.pocket
                                                        : instance.ligand;
    ordered_json arr = ordered_json::array();
    for (const Pharmacophore& p : points) {
      ordered_json entry;
      entry["id"] = p.id;
      entry["kind"] = p.kind_string();
      entry["xyz"] = {p.position.x, p.position.y, p.position.z};
      arr.push_back(entry);
    }
    j[which] = arr;
  }
  ordered_json compat = ordered_json::array();
  for (const auto& row : instance.compat) {
    ordered_json jrow = ordered_json::array();
    for (bool cell : row) jrow.push_back(cell);
    compat.push_back(jrow);
  }
  j["compat"] = compat;
  write_text_file(path, j.dump(2) + "\n");
}

DockingGraph load_graph(const std::string& path) {
  const json j = parse_file(path);
  DockingGraph graph;
  try {
    graph.n = require(j, "n", path).get<int>();
    for (const json& w : require(j, "weights", path))
      graph.weights.push_back(w.get<double>());
    for (const json& e : require(j, "edges", path)) {
      if (!e.is_array() || e.size() != 2)
        fail(ErrorCode::Parse, path + ": each edge must be a pair [i, j]");
      graph.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("labels")) {
      for (const json& label : j.at("labels"))
        graph.labels.push_back(label.get<std::string>());
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, path + ": " + e.what());
  }
  graph.normalize_edges();
  graph.validate();
  return graph;
}

void save_graph(const DockingGraph& graph, const std::string& path) {
  graph.validate();
  ordered_json j;
  j["n"] = graph.n;
  j["weights"] = graph.weights;
  json edges = json::array();
  for (const auto& [a, b] : graph.edges) edges.push_back({a, b});
  j["edges"] = edges;
  if (!graph.labels.empty()) j["labels"] = graph.labels;
  write_text_file(path, j.dump(2) + "\n");
}

std::string to_dot(const DockingGraph& graph,
                   const std::vector<int>& solution_vertices) {
  std::uint64_t solution = 0;
  for (int v : solution_vertices) {
    if (v < 0 || v >= graph.n)
      fail(ErrorCode::InvalidArgument, "solution vertex out of range");
    solution |= std::uint64_t(1) << v;
  }
  std::ostringstream out;
  out << "graph dockclique {\n  node [shape=circle];\n";
  char label[64];
  for (int v = 0; v < graph.n; ++v) {
    std::snprintf(label, sizeof(label), "%d:%.3f", v, graph.weights[v]);
    out << "  " << v << " [label=\"" << label << '"';
    if (solution >> v & 1) out << ", color=red, fontcolor=red, penwidth=2.0";
    out << "];\n";
  }
  for (const auto& [a, b] : graph.edges) {
    out << "  " << a << " -- " << b;
    if ((solution >> a & 1) && (solution >> b & 1))
      out << " [color=red, penwidth=2.0]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

void write_dot(const DockingGraph& graph, const std::string& path,
               const std::vector<int>& solution_vertices) {
  write_text_file(path, to_dot(graph, solution_vertices));
}

std::string relaxed_to_json(const RelaxedSolution& sol) {
  ordered_json j;
  j["values"] = sol.values;
  j["objective"] = sol.objective;
  j["method"] = sol.method == RelaxMethod::Linear ? "linear" : "quadratic";
  j["iterations_used"] = sol.iterations_used;
  j["converged"] = sol.converged;
  return j.dump(2) + "\n";
}

void write_cost_diagonal(const CostDiagonal& diag, const std::string& path) {
  static_assert(std::endian::native == std::endian::little,
                "diagonal dump assumes a little-endian host");
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot open " + path);
  out.write(reinterpret_cast<const char*>(diag.energies.data()),
            static_cast<std::streamsize>(diag.energies.size() * sizeof(double)));
  if (!out) fail(ErrorCode::Io, "short write to " + path);
  ordered_json header;
  header["n"] = diag.n;
  header["penalty_magnitude"] = diag.penalty_magnitude;
  write_text_file(path + ".json", header.dump(2) + "\n");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot open " + path);
  out << content;
  if (!out) fail(ErrorCode::Io, "short write to " + path);
}

}  // namespace dockclique
