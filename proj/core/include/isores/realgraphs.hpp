#ifndef ISORES_REALGRAPHS_HPP
#define ISORES_REALGRAPHS_HPP

#include <string>
#include <vector>

#include "isores/stratum.hpp"

namespace isores {

// Rotation system on the sphere with labeled pole vertices, oriented edges
// and unoriented half-edges (darts with rev == -1). Faces are traced from the
// rotation system; face_label assigns zero labels to faces (0 for the single
// face of a tree).
//
// Dart conventions: rot[v] lists the darts at vertex v in counterclockwise
// order. For a real dart d, rev[d] is the opposite dart of the same edge and
// out[d] tells whether the edge points away from vert[d]. Every edge is
// oriented toward the side of the sphere containing the positive pole; in the
// unique loop of a saddle graph the edges run from the bottom vertex to the
// top vertex along both branches.
struct DecoratedGraph {
  int p = 0;
  std::vector<int> pole_orders;
  int positive_pole = 1;

  std::vector<int> vert;               // dart -> vertex (1-based)
  std::vector<int> rev;                // dart -> partner dart, -1 for half-edges
  std::vector<char> out;               // dart -> edge points away from vert[d]
  std::vector<std::vector<int>> rot;   // vertex (0-based) -> darts, ccw

  std::vector<int> face_of;            // dart -> face index
  std::vector<int> face_sides;         // face -> real edge sides in boundary walk
  std::vector<int> face_half_edges;    // face -> half-edges lying in the face
  std::vector<int> face_label;         // face -> zero label (1-based; 0 = merged)

  std::string canonical;               // canonical encoding (equality & sort key)

  int num_edges() const;
  int num_half_edges() const;
  int num_faces() const { return static_cast<int>(face_sides.size()); }
};

struct SaddleGraph {
  DecoratedGraph graph;
  int bottom_vertex = 0;               // loop vertex B with two outgoing loop edges
  ResidueForm length_form;             // 0/1 indicator of B and the trees attached to B
  DecoratedGraph endpoint_first;       // trees from deleting either loop edge at B
  DecoratedGraph endpoint_second;
};

struct GraphLimits {
  int max_poles = 4;            // mixed pole orders
  int max_zero_order = 6;       // a1 + a2, mixed pole orders
  int max_poles_simple = 7;     // all poles simple
  bool override_limits = false;
};

// All decorated trees classifying the zeros of the fiber form of a two-zero
// stratum (p vertices, p-1 edges, one face). Cardinality equals
// f(a1+a2, p) for the generic single-positive-residue configuration.
std::vector<DecoratedGraph> enumerate_zero_graphs(const Stratum& s,
                                                  int positive_pole,
                                                  const GraphLimits& limits = {});

// All decorated graphs with p vertices, p edges and a unique loop that
// classify the saddle connections of the fiber form; each carries its two
// endpoint trees obtained by deleting either loop edge at the bottom vertex.
std::vector<SaddleGraph> enumerate_saddle_graphs(const Stratum& s,
                                                 int positive_pole,
                                                 const GraphLimits& limits = {});

// Connected components of the graph whose nodes are zero graphs and whose
// edges are saddle graphs joining their endpoint trees.
int adjacency_components(const Stratum& s,
                         int positive_pole,
                         const GraphLimits& limits = {});

// Deterministic graph-description text (DOT), byte-identical across runs.
std::string export_dot(const std::vector<DecoratedGraph>& graphs);

} // namespace isores

#endif
