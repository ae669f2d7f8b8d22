#pragma once

#include "segstab/geometry.hpp"
#include "segstab/set_cover.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace segstab {

/// Simple undirected graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  /// Throws Error on out-of-range endpoints, self-loops or parallel edges.
  void validate() const;
  std::vector<int> degrees() const;
};

bool is_planar(const Graph& g);

/// Minimum vertex cover size by subset enumeration. Throws Error when n > 24.
int min_vertex_cover_size(const Graph& g);

/// Vertices are vertical segments at integer columns, edges horizontal
/// segments at integer levels. Vertex segments use the vertical encoding of
/// Segment: `y` is the column, [x_left, x_right] the level range.
struct VisibilityRep {
  Graph graph;
  std::vector<int> column;                 // per vertex
  std::vector<int> level;                  // per edge
  std::vector<int> isolated_level;         // per vertex; -1 unless isolated
  std::vector<Segment> vertex_segments;    // per vertex
  std::vector<Segment> edge_segments;      // per edge, left column to right column

  int width() const;   // columns spanned
  int height() const;  // levels spanned
};

/// Every violated invariant as a message; empty when valid. `extent_factor`
/// bounds width and height by extent_factor * n.
std::vector<std::string> check_visibility(const VisibilityRep& vis, int extent_factor = 4);

/// One column per vertex and one level per edge, found by backtracking over
/// column orders and edge placements: an edge may be put on the next level
/// only if no vertex strictly between its endpoints already has some but not
/// all of its edges placed. Isolated vertices get levels above all edges.
/// Throws Error for non-planar graphs and when the search fails or the graph
/// is beyond its size limits (10 vertices, 24 edges).
VisibilityRep build_visibility(const Graph& g);

struct VertexGadget {
  int vertex = 0;
  std::vector<int> rect_ids;  // top to bottom
  std::vector<Segment> s_act, s_ina;
  Rational len_act, len_ina;
};

struct EdgeGadget {
  int edge = 0;
  int rect_id = 0;
  int left = 0, right = 0;          // endpoint vertices by column
  int act_left = 0, act_right = 0;  // index into s_act of the touched segment
};

struct NPGadgetInstance {
  StabInstance inst;
  int n = 0;
  Rational overlap;     // n + 3
  Rational c;
  Rational grid_scale;  // factor applied to the layout to make it integral
  std::vector<VertexGadget> vertices;
  std::vector<EdgeGadget> edges;

  /// Target length for vertex-cover size k.
  Rational k_star(int k) const { return c + k; }
};

/// Splits a vertex-gadget stack (top to bottom) into its levels: the top
/// edge, each shared boundary (union of the two edges) and the bottom edge,
/// numbered from the top. Returns (S_act, S_ina) = (even levels, odd
/// levels). Throws Error unless the stack has odd size and consecutive rects
/// share a boundary of positive length.
std::pair<std::vector<Segment>, std::vector<Segment>> gadget_segments(std::span<const Rect> stack);

/// Vertex gadgets of 2 deg(v) + 3 rects along each vertex segment and one
/// rect per edge, on an integer grid. Throws Error on an invalid layout or if
/// the result fails check_np_instance.
NPGadgetInstance compile_np_instance(const VisibilityRep& vis);

/// Every violated gadget invariant as a message; empty when valid.
std::vector<std::string> check_np_instance(const NPGadgetInstance& np);

/// The solution built from a vertex cover: S_act on cover vertices, S_ina
/// elsewhere, each edge rect stabbed by stretching a touching S_act segment.
/// Its cost is c + |cover|. Throws Error if `cover` misses an edge.
Solution np_solution_from_cover(const NPGadgetInstance& np, std::span<const int> cover);

/// Set cover instance where every element lies in exactly two sets: for each
/// triple t = (i, j, k), i < j < k, the sets {a_i, w_t}, {w_t, x_t},
/// {a_j, x_t, y_t}, {y_t, z_t}, {a_k, z_t}. Elements: a_i = i for i < n,
/// then w_t, x_t, y_t, z_t = n + 4t + 0..3.
struct SpscInstance {
  int n = 0;
  int m = 0;
  std::vector<std::array<int, 3>> triples;
  std::vector<std::vector<int>> sets;  // 5 per triple, in the order above

  int universe_size() const { return n + 4 * m; }
  /// Throws Error on any structural violation.
  void validate() const;
};

/// m triples over n = 3m/2 elements, each a_i in exactly two triples.
/// Throws Error for odd or non-positive m.
SpscInstance gen_spsc(int m, std::uint64_t seed);

enum class SpscMode { cardinality, constrained };

/// Shifted congruent rects for the a_i with a common core, four thin rects
/// per triple inside it, and one fixed segment per set stabbing exactly that
/// set's rects (rect id = element, segment id = set). The a-rects have width
/// 1 + 1/(10m) around a core of width 1. Cardinality mode counts segments,
/// constrained mode sums lengths.
StabInstance spsc_to_stabbing(const SpscInstance& spsc, SpscMode mode);

/// The unit-cost set cover behind an SPSC instance (set id = set index).
SetCoverInstance spsc_set_cover(const SpscInstance& spsc);

}  // namespace segstab
