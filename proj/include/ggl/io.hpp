// io.hpp - file formats: PGM (P2/P5) and CSV for grid functions, the
// line-oriented edge list for graphs, vertex-function CSV, key = value config
// files, and the CSV helpers shared by the reports.
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ggl/graph.hpp"
#include "ggl/grid.hpp"

namespace ggl {

// 17 significant digits (printf %.17g): round-trips every double exactly.
std::string format_double(double x);

// --- PGM ---------------------------------------------------------------
// Values are scaled by maxval: writing maps [0,1] to 0..maxval (clamped,
// rounded); reading maps pixel p to p/maxval.
void write_pgm(std::ostream& os, const GridFunction& u, bool binary = false, int maxval = 255);
void write_pgm(const std::string& path, const GridFunction& u, bool binary = false,
               int maxval = 255);
GridFunction read_pgm(std::istream& is);
GridFunction read_pgm(const std::string& path);

// --- Grid CSV ----------------------------------------------------------
// Header "grid N=<int>", then N rows of N comma-separated values (row j
// ascending, column i ascending).
void write_grid_csv(std::ostream& os, const GridFunction& u);
void write_grid_csv(const std::string& path, const GridFunction& u);
GridFunction read_grid_csv(std::istream& is);
GridFunction read_grid_csv(const std::string& path);

// --- Graph edge list ---------------------------------------------------
// Header "graph m=<int>", then lines "i j w" with 1-based i < j and w > 0.
// Duplicate or reversed repeats are rejected on read.
void write_graph(std::ostream& os, const WeightedGraph& g);
void write_graph(const std::string& path, const WeightedGraph& g);
WeightedGraph read_graph(std::istream& is);
WeightedGraph read_graph(const std::string& path);

// --- Vertex function CSV ------------------------------------------------
// One value per line, m lines.
void write_vertex_csv(std::ostream& os, const VertexFunction& u);
VertexFunction read_vertex_csv(std::istream& is, int expected_m = -1);
VertexFunction read_vertex_csv(const std::string& path, int expected_m = -1);

// --- Config files --------------------------------------------------------
// Line-oriented "key = value"; blank lines and lines starting with '#' are
// skipped. Duplicate keys are rejected; validation of the key set is the
// caller's job (unknown keys must be errors at the CLI surface).
std::map<std::string, std::string> read_config(std::istream& is);
std::map<std::string, std::string> read_config(const std::string& path);

}  // namespace ggl
