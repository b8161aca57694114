#pragma once

#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/instance.hpp"
#include "core/qubo.hpp"
#include "core/relax.hpp"

namespace dockclique {

// Instance file: {"pocket": [{"id", "kind", "xyz": [f,f,f]}], "ligand": [...],
// "compat": [[bool]]}. Graph file: {"n", "weights": [f], "edges": [[i,j]],
// "labels"?}. Parse failures throw Error(Parse) naming the offending field;
// structural violations throw Error(Validation).

PharmacophoreInstance load_instance(const std::string& path);
void save_instance(const PharmacophoreInstance& instance, const std::string& path);

DockingGraph load_graph(const std::string& path);
void save_graph(const DockingGraph& graph, const std::string& path);

/// Graphviz export; vertex labels are "index:weight". When a solution is
/// given, its vertices and induced edges are colored red.
std::string to_dot(const DockingGraph& graph,
                   const std::vector<int>& solution_vertices = {});
void write_dot(const DockingGraph& graph, const std::string& path,
               const std::vector<int>& solution_vertices = {});

std::string relaxed_to_json(const RelaxedSolution& sol);

/// Debug dump: raw little-endian 64-bit floats at `path`, plus a JSON header
/// {"n", "penalty_magnitude"} at path + ".json".
void write_cost_diagonal(const CostDiagonal& diag, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace dockclique
