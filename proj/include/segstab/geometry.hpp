#pragma once

#include "segstab/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace segstab {

/// Raised for malformed inputs and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed axis-aligned rectangle [x_left, x_right] x [y_bottom, y_top].
struct Rect {
  Rational x_left, x_right, y_bottom, y_top;
  int id = 0;
  int multiplicity = 1;

  Rational width() const { return x_right - x_left; }
  Rational height() const { return y_top - y_bottom; }
  bool operator==(const Rect&) const = default;
};

enum class Orientation { horizontal, vertical };

/// Closed axis-parallel segment.
///
/// A horizontal segment covers [x_left, x_right] x {y}. A vertical segment
/// uses the same three fields on transposed axes: it covers
/// {y} x [x_left, x_right], i.e. `y` holds its x-position and the
/// "x" fields hold its y-extent. Transposing the plane therefore only flips
/// `orientation`.
struct Segment {
  Rational x_left, x_right, y;
  Orientation orientation = Orientation::horizontal;
  int id = 0;

  Rational length() const { return x_right - x_left; }
  bool operator==(const Segment&) const = default;
};

/// Geometric equality, ignoring ids.
bool same_geometry(const Segment& a, const Segment& b);

enum class Objective { length, cardinality };

struct StabInstance {
  std::vector<Rect> rects;
  /// Present iff the instance is constrained.
  std::optional<std::vector<Segment>> fixed_candidates;
  Objective objective = Objective::length;
  /// Horizontal-vertical mode: a rect may also be stabbed vertically.
  bool hv = false;

  bool constrained() const { return fixed_candidates.has_value(); }

  /// Throws Error when an invariant is violated: degenerate rects, duplicate
  /// ids, or (constrained mode) a rect no fixed candidate stabs.
  void validate() const;
};

struct Solution {
  std::vector<Segment> segments;
  Rational cost;
  /// rect id -> segment id
  std::map<int, int> assignment;
};

/// Swaps the x and y axes.
Rect transpose(const Rect& r);
Segment transpose(const Segment& s);
std::vector<Rect> transpose(std::span<const Rect> rects);

/// True iff s crosses both vertical edges of r (horizontal s) or both
/// horizontal edges of r (vertical s). Rects and segments are closed.
bool stabs(const Segment& s, const Rect& r);

/// Total length, or segment count in cardinality mode.
Rational solution_cost(Objective objective, std::span<const Segment> segments);

struct VerifyReport {
  bool feasible = false;
  std::vector<int> uncovered;        // rect ids no segment stabs
  std::vector<int> invalid_segments;  // segment ids outside the fixed family / wrong orientation
  std::vector<int> bad_assignment;    // rect ids whose assigned segment does not stab them
  Rational recomputed_cost;
  bool cost_matches = false;
};

VerifyReport verify_solution(const StabInstance& inst, const Solution& sol);

/// Trims every segment to the extent of the rects it stabs and lifts it to
/// the lowest top edge among them. Segments stabbing nothing are dropped and
/// exact duplicates collapsed. Throws Error for constrained instances.
Solution canonicalize_solution(const StabInstance& inst, const Solution& sol);

/// Greedy rect -> segment assignment (first stabbing segment in order).
std::map<int, int> assign_rects(std::span<const Rect> rects, std::span<const Segment> segments);

}  // namespace segstab
