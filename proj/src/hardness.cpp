#include "segstab/hardness.hpp"

#include <bit>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace segstab {

namespace {

constexpr int kGap = 2;  // horizontal clearance around edge rects

bool touches(const Rect& a, const Rect& b) {
  return a.x_left <= b.x_right && b.x_left <= a.x_right && a.y_bottom <= b.y_top && b.y_bottom <= a.y_top;
}

bool interiors_meet(const Rect& a, const Rect& b) {
  return a.x_left < b.x_right && b.x_left < a.x_right && a.y_bottom < b.y_top && b.y_bottom < a.y_top;
}

Rational x_overlap(const Rect& a, const Rect& b) {
  Rational lo = std::max(a.x_left, b.x_left);
  Rational hi = std::min(a.x_right, b.x_right);
  return hi > lo ? Rational(hi - lo) : Rational(0);
}

Rect box(const Rational& x1, const Rational& x2, const Rational& y1, const Rational& y2) {
  return Rect{x1, x2, y1, y2, 0, 1};
}

struct LayoutSearch {
  const Graph& g;
  std::vector<int> deg;
  std::vector<int> col;
  std::vector<int> placed;
  std::vector<int> order;
  std::vector<char> dead;

  bool open(int w) const { return placed[w] > 0 && placed[w] < deg[w]; }

  bool allowed(int e) const {
    auto [u, v] = g.edges[e];
    int lo = std::min(col[u], col[v]), hi = std::max(col[u], col[v]);
    for (int w = 0; w < g.n; ++w) {
      if (w != u && w != v && col[w] > lo && col[w] < hi && open(w)) return false;
    }
    return true;
  }

  bool extend(std::uint32_t mask) {
    const int m = static_cast<int>(g.edges.size());
    if (static_cast<int>(order.size()) == m) return true;
    if (dead[mask]) return false;
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1u || !allowed(e)) continue;
      auto [u, v] = g.edges[e];
      ++placed[u];
      ++placed[v];
      order.push_back(e);
      if (extend(mask | 1u << e)) return true;
      order.pop_back();
      --placed[u];
      --placed[v];
    }
    dead[mask] = 1;
    return false;
  }
};

}  // namespace

void Graph::validate() const {
  if (n < 0) throw Error("graph has a negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("edge endpoint out of range");
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw Error("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n, 0);
  for (auto [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

bool is_planar(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(g.n);
  for (auto [u, v] : g.edges) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

int VisibilityRep::width() const {
  if (column.empty()) return 0;
  auto [lo, hi] = std::minmax_element(column.begin(), column.end());
  return *hi - *lo;
}

int VisibilityRep::height() const {
  int top = 0;
  for (int l : level) top = std::max(top, l);
  for (int l : isolated_level) top = std::max(top, l);
  return top;
}

std::vector<std::string> check_visibility(const VisibilityRep& vis, int extent_factor) {
  std::vector<std::string> out;
  const auto& g = vis.graph;
  if (static_cast<int>(vis.vertex_segments.size()) != g.n || static_cast<int>(vis.column.size()) != g.n) {
    out.push_back("vertex segment count differs from vertex count");
    return out;
  }
  if (vis.edge_segments.size() != g.edges.size() || vis.level.size() != g.edges.size()) {
    out.push_back("edge segment count differs from edge count");
    return out;
  }
  for (int a = 0; a < g.n; ++a) {
    for (int b = a + 1; b < g.n; ++b) {
      const auto& s = vis.vertex_segments[a];
      const auto& t = vis.vertex_segments[b];
      if (s.y == t.y && s.x_left <= t.x_right && t.x_left <= s.x_right) {
        out.push_back("vertex segments " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
      }
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& s = vis.edge_segments[e];
    auto [u, v] = g.edges[e];
    for (int w = 0; w < g.n; ++w) {
      const auto& vs = vis.vertex_segments[w];
      bool hit = s.x_left <= vs.y && vs.y <= s.x_right && vs.x_left <= s.y && s.y <= vs.x_right;
      bool endpoint = w == u || w == v;
      if (hit != endpoint) {
        out.push_back("edge " + std::to_string(e) + (endpoint ? " misses endpoint " : " touches vertex ") +
                      std::to_string(w));
      }
    }
  }
  std::map<Rational, int> levels;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!levels.emplace(vis.edge_segments[e].y, static_cast<int>(e)).second) {
      out.push_back("edges " + std::to_string(levels[vis.edge_segments[e].y]) + " and " + std::to_string(e) +
                    " share a level");
    }
  }
  const int bound = extent_factor * std::max(g.n, 1);
  if (vis.width() > bound || vis.height() > bound) out.push_back("layout extent exceeds the linear bound");
  return out;
}

VisibilityRep build_visibility(const Graph& g) {
  g.validate();
  if (!is_planar(g)) throw Error("graph is not planar");
  if (g.n > 10) throw Error("visibility layout is limited to 10 vertices");
  if (g.edges.size() > 24) throw Error("visibility layout is limited to 24 edges");

  LayoutSearch search{g, g.degrees(), std::vector<int>(g.n), std::vector<int>(g.n, 0), {}, {}};
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    for (int p = 0; p < g.n; ++p) search.col[perm[p]] = p;
    std::fill(search.placed.begin(), search.placed.end(), 0);
    search.order.clear();
    search.dead.assign(std::size_t{1} << g.edges.size(), 0);
    if (search.extend(0)) {
      found = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!found) throw Error("no visibility layout found");

  VisibilityRep vis;
  vis.graph = g;
  vis.column = search.col;
  vis.level.assign(g.edges.size(), 0);
  for (std::size_t i = 0; i < search.order.size(); ++i) vis.level[search.order[i]] = static_cast<int>(i);
  vis.isolated_level.assign(g.n, -1);
  const auto deg = g.degrees();
  int next = static_cast<int>(g.edges.size());
  for (int v = 0; v < g.n; ++v) {
    if (deg[v] == 0) vis.isolated_level[v] = next++;
  }

  std::vector<int> lo(g.n, -1), hi(g.n, -1);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    for (int w : {g.edges[e].first, g.edges[e].second}) {
      int l = vis.level[e];
      lo[w] = lo[w] < 0 ? l : std::min(lo[w], l);
      hi[w] = std::max(hi[w], l);
    }
  }
  for (int v = 0; v < g.n; ++v) {
    int a = deg[v] ? lo[v] : vis.isolated_level[v];
    int b = deg[v] ? hi[v] : vis.isolated_level[v];
    vis.vertex_segments.push_back(Segment{Rational(a), Rational(b), Rational(vis.column[v]), Orientation::vertical, v});
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    int x1 = std::min(vis.column[u], vis.column[v]), x2 = std::max(vis.column[u], vis.column[v]);
    vis.edge_segments.push_back(
        Segment{Rational(x1), Rational(x2), Rational(vis.level[e]), Orientation::horizontal, static_cast<int>(e)});
  }
  auto problems = check_visibility(vis);
  if (!problems.empty()) throw Error("visibility layout invalid: " + problems.front());
  return vis;
}

std::pair<std::vector<Segment>, std::vector<Segment>> gadget_segments(std::span<const Rect> stack) {
  if (stack.size() % 2 == 0) throw Error("vertex gadget must have an odd number of rects");
  std::vector<Segment> levels;
  auto add = [&](const Rational& l, const Rational& r, const Rational& y) {
    levels.push_back(Segment{l, r, y, Orientation::horizontal, static_cast<int>(levels.size())});
  };
  add(stack[0].x_left, stack[0].x_right, stack[0].y_top);
  for (std::size_t t = 0; t + 1 < stack.size(); ++t) {
    const Rect& a = stack[t];
    const Rect& b = stack[t + 1];
    if (a.y_bottom != b.y_top) throw Error("gadget rects " + std::to_string(t) + " and " + std::to_string(t + 1) + " do not share a boundary");
    if (sgn(x_overlap(a, b)) <= 0) throw Error("gadget rects " + std::to_string(t) + " and " + std::to_string(t + 1) + " do not overlap");
    add(std::min(a.x_left, b.x_left), std::max(a.x_right, b.x_right), a.y_bottom);
  }
  add(stack.back().x_left, stack.back().x_right, stack.back().y_bottom);

  std::pair<std::vector<Segment>, std::vector<Segment>> out;
  for (std::size_t i = 0; i < levels.size(); ++i) (i % 2 == 0 ? out.second : out.first).push_back(levels[i]);
  return out;
}

NPGadgetInstance compile_np_instance(const VisibilityRep& vis) {
  auto problems = check_visibility(vis);
  if (!problems.empty()) throw Error("invalid visibility representation: " + problems.front());
  const Graph& g = vis.graph;
  const int n = g.n;
  const long W = n + 3;
  const long step = 4 * W + 2 * kGap;

  NPGadgetInstance np;
  np.n = n;
  np.overlap = W;
  np.grid_scale = 1;
  np.inst.objective = Objective::length;

  struct Attach {
    long y;
    bool left;  // v is the left endpoint
    int edge;
  };
  std::vector<std::vector<Attach>> attach(n);
  std::vector<EdgeGadget> edges(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    int left = vis.column[u] < vis.column[v] ? u : v;
    int right = left == u ? v : u;
    long l = vis.level[e];
    attach[left].push_back({8 * l + 4, true, static_cast<int>(e)});
    attach[right].push_back({8 * l + 2, false, static_cast<int>(e)});
    edges[e].edge = static_cast<int>(e);
    edges[e].left = left;
    edges[e].right = right;
  }

  int next_id = 0;
  for (int v = 0; v < n; ++v) {
    auto& at = attach[v];
    std::sort(at.begin(), at.end(), [](const Attach& a, const Attach& b) { return a.y > b.y; });
    const long c0 = vis.column[v] * step;
    std::vector<Rect> stack;
    if (at.empty()) {
      const long yb = 8L * vis.isolated_level[v] + 3;
      stack.push_back(box(c0, c0 + 1, yb + 1, yb + 2));
      stack.push_back(box(c0 - 1, c0 + W, yb, yb + 1));
      stack.push_back(box(c0, c0 + 2, yb - 1, yb));
    } else {
      const long y1 = at.front().y;
      stack.push_back(box(c0, c0 + 1, y1 + 4, y1 + 5));
      stack.push_back(box(c0 - 1, c0 + W, y1 + 3, y1 + 4));
      long upper_top = y1 + 3;
      for (const auto& a : at) {
        long b = a.left ? W + kGap : 1;
        long d = a.left ? 1 : W + kGap;
        stack.push_back(box(c0, c0 + W + b, a.y, upper_top));
        stack.push_back(box(c0 - d, c0 + W, a.y - 3, a.y));
        upper_top = a.y - 3;
      }
      stack.push_back(box(c0, c0 + 2, upper_top - 1, upper_top));
    }

    VertexGadget gadget;
    gadget.vertex = v;
    for (auto& r : stack) {
      r.id = next_id++;
      gadget.rect_ids.push_back(r.id);
      np.inst.rects.push_back(r);
    }
    auto [act, ina] = gadget_segments(stack);
    gadget.s_act = act;
    gadget.s_ina = ina;
    gadget.len_act = solution_cost(Objective::length, act);
    gadget.len_ina = solution_cost(Objective::length, ina);
    for (const auto& a : at) {
      // level 2q+2 (1-based) sits at the q-th attachment, i.e. s_act[q]
      std::size_t q = std::find_if(act.begin(), act.end(), [&](const Segment& s) { return s.y == a.y; }) - act.begin();
      if (q == act.size()) throw Error("attachment level missing from S_act");
      (a.left ? edges[a.edge].act_left : edges[a.edge].act_right) = static_cast<int>(q);
    }
    np.vertices.push_back(std::move(gadget));
  }

  Rational c = 0;
  for (auto& eg : edges) {
    long l = vis.level[eg.edge];
    long xl = vis.column[eg.left] * step + W + kGap;
    long xr = vis.column[eg.right] * step - kGap;
    if (xr <= xl) throw Error("edge rect " + std::to_string(eg.edge) + " has no room between its gadgets");
    Rect r = box(xl, xr, 8 * l + 2, 8 * l + 4);
    r.id = next_id++;
    eg.rect_id = r.id;
    np.inst.rects.push_back(r);
    c += r.width() - W;
  }
  for (const auto& vg : np.vertices) c += vg.len_ina;
  np.c = c;
  np.edges = std::move(edges);

  problems = check_np_instance(np);
  if (!problems.empty()) throw Error("gadget layout violates: " + problems.front());
  return np;
}

std::vector<std::string> check_np_instance(const NPGadgetInstance& np) {
  std::vector<std::string> out;
  std::map<int, const Rect*> by_id;
  for (const auto& r : np.inst.rects) by_id[r.id] = &r;
  auto rect_of = [&](int id) -> const Rect& { return *by_id.at(id); };
  auto name = [](const char* what, int i) { return std::string(what) + " " + std::to_string(i); };

  for (const auto& r : np.inst.rects) {
    if (floor_of(r.x_left) != r.x_left || floor_of(r.x_right) != r.x_right || floor_of(r.y_bottom) != r.y_bottom ||
        floor_of(r.y_top) != r.y_top) {
      out.push_back(name("rect", r.id) + " is off the integer grid");
    }
  }

  std::vector<int> owner(np.inst.rects.size() + 1, -1);
  for (const auto& vg : np.vertices) {
    const auto& ids = vg.rect_ids;
    const std::string gname = name("gadget", vg.vertex);
    if (ids.size() % 2 == 0) out.push_back(gname + " has an even rect count");
    if (ids.size() < 3) {
      out.push_back(gname + " has fewer than three rects");
      continue;
    }
    for (int id : ids) {
      if (id >= 0 && id < static_cast<int>(owner.size())) owner[id] = vg.vertex;
    }
    const Rect& top = rect_of(ids.front());
    const Rect& bot = rect_of(ids.back());
    if (top.width() != 1) out.push_back(gname + ": rTop width is not 1");
    if (bot.width() != 2) out.push_back(gname + ": rBot width is not 2");
    for (std::size_t t = 0; t + 1 < ids.size(); ++t) {
      const Rect& a = rect_of(ids[t]);
      const Rect& b = rect_of(ids[t + 1]);
      Rational want = t == 0 ? top.width() : t + 2 == ids.size() ? bot.width() : np.overlap;
      if (a.y_bottom != b.y_top || x_overlap(a, b) != want) {
        out.push_back(gname + ": rects " + std::to_string(t) + "/" + std::to_string(t + 1) + " overlap wrongly");
      }
    }
    for (std::size_t s = 0; s < ids.size(); ++s) {
      for (std::size_t t = s + 1; t < ids.size(); ++t) {
        if (interiors_meet(rect_of(ids[s]), rect_of(ids[t]))) out.push_back(gname + ": rects overlap in area");
      }
    }
    if (vg.s_act.size() != vg.s_ina.size()) out.push_back(gname + ": |S_act| != |S_ina|");
    if (vg.len_act != vg.len_ina + 1) out.push_back(gname + ": len(S_act) != len(S_ina) + 1");
  }

  for (std::size_t a = 0; a < np.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < np.vertices.size(); ++b) {
      for (int s : np.vertices[a].rect_ids) {
        for (int t : np.vertices[b].rect_ids) {
          if (touches(rect_of(s), rect_of(t))) {
            out.push_back("gadgets " + std::to_string(a) + " and " + std::to_string(b) + " intersect");
          }
        }
      }
    }
  }

  for (const auto& eg : np.edges) {
    const Rect& er = rect_of(eg.rect_id);
    const std::string ename = name("edge gadget", eg.edge);
    std::vector<int> hit;
    for (const auto& r : np.inst.rects) {
      if (r.id != eg.rect_id && touches(er, r)) hit.push_back(r.id);
    }
    if (hit.size() != 2) {
      out.push_back(ename + " intersects " + std::to_string(hit.size()) + " rects");
      continue;
    }
    std::set<int> owners;
    for (int id : hit) {
      if (owner[id] >= 0) owners.insert(owner[id]);
      if (x_overlap(er, rect_of(id)) != np.overlap) out.push_back(ename + ": intersection length is not n+3");
    }
    if (owners != std::set<int>{eg.left, eg.right}) out.push_back(ename + " meets the wrong gadgets");
    const auto& la = np.vertices[eg.left].s_act[eg.act_left];
    const auto& ra = np.vertices[eg.right].s_act[eg.act_right];
    if (la.y != er.y_top || la.x_right < er.x_left) out.push_back(ename + ": top edge misses the left S_act");
    if (ra.y != er.y_bottom || ra.x_left > er.x_right) out.push_back(ename + ": bottom edge misses the right S_act");
  }

  Rational c = 0;
  for (const auto& eg : np.edges) c += rect_of(eg.rect_id).width() - np.n - 3;
  for (const auto& vg : np.vertices) c += vg.len_ina;
  if (c != np.c) out.push_back("constant c does not match its definition");
  return out;
}

Solution np_solution_from_cover(const NPGadgetInstance& np, std::span<const int> cover) {
  std::set<int> active(cover.begin(), cover.end());
  std::vector<std::vector<Segment>> chosen;
  for (const auto& vg : np.vertices) chosen.push_back(active.count(vg.vertex) ? vg.s_act : vg.s_ina);

  std::map<int, const Rect*> by_id;
  for (const auto& r : np.inst.rects) by_id[r.id] = &r;
  for (const auto& eg : np.edges) {
    const Rect& er = *by_id.at(eg.rect_id);
    if (active.count(eg.left)) {
      auto& s = chosen[eg.left][eg.act_left];
      s.x_right = std::max(s.x_right, er.x_right);
    } else if (active.count(eg.right)) {
      auto& s = chosen[eg.right][eg.act_right];
      s.x_left = std::min(s.x_left, er.x_left);
    } else {
      throw Error("vertex set misses edge " + std::to_string(eg.edge));
    }
  }
  Solution sol;
  for (auto& group : chosen) {
    for (auto& s : group) {
      s.id = static_cast<int>(sol.segments.size());
      sol.segments.push_back(s);
    }
  }
  sol.cost = solution_cost(Objective::length, sol.segments);
  sol.assignment = assign_rects(np.inst.rects, sol.segments);
  return sol;
}

void SpscInstance::validate() const {
  if (m <= 0 || 2 * n != 3 * m) throw Error("SPSC needs 2n = 3m");
  if (static_cast<int>(triples.size()) != m || static_cast<int>(sets.size()) != 5 * m) {
    throw Error("SPSC needs m triples and 5m sets");
  }
  std::vector<int> count(universe_size(), 0);
  for (const auto& s : sets) {
    for (int e : s) {
      if (e < 0 || e >= universe_size()) throw Error("SPSC set element out of range");
      ++count[e];
    }
  }
  for (int e = 0; e < universe_size(); ++e) {
    if (count[e] != 2) throw Error("SPSC element " + std::to_string(e) + " lies in " + std::to_string(count[e]) + " sets");
  }
  for (const auto& t : triples) {
    if (!(t[0] < t[1] && t[1] < t[2])) throw Error("SPSC triple is not increasing");
  }
}

SpscInstance gen_spsc(int m, std::uint64_t seed) {
  if (m <= 0 || m % 2 != 0) throw Error("gen_spsc needs a positive even m");
  SpscInstance out;
  out.m = m;
  out.n = 3 * m / 2;
  std::mt19937_64 rng(seed);
  std::vector<int> slots;
  for (int i = 0; i < out.n; ++i) slots.insert(slots.end(), {i, i});
  for (;;) {
    std::shuffle(slots.begin(), slots.end(), rng);
    bool ok = true;
    out.triples.clear();
    for (int t = 0; t < m && ok; ++t) {
      std::array<int, 3> tri{slots[3 * t], slots[3 * t + 1], slots[3 * t + 2]};
      std::sort(tri.begin(), tri.end());
      ok = tri[0] < tri[1] && tri[1] < tri[2];
      out.triples.push_back(tri);
    }
    if (ok) break;
  }
  for (int t = 0; t < m; ++t) {
    const auto [i, j, k] = out.triples[t];
    const int w = out.n + 4 * t;
    out.sets.push_back({i, w});
    out.sets.push_back({w, w + 1});
    out.sets.push_back({j, w + 1, w + 2});
    out.sets.push_back({w + 2, w + 3});
    out.sets.push_back({k, w + 3});
  }
  out.validate();
  return out;
}

StabInstance spsc_to_stabbing(const SpscInstance& spsc, SpscMode mode) {
  spsc.validate();
  const int n = spsc.n, m = spsc.m;
  const Rational delta = rational(1, 10L * m);
  const Rational height = 10L * m;

  StabInstance inst;
  inst.objective = mode == SpscMode::cardinality ? Objective::cardinality : Objective::length;
  std::vector<Rect> a_rects;
  for (int i = 0; i < n; ++i) {
    Rational shift = delta * i / (n - 1);
    Rect r{shift, Rational(shift + 1 + delta), Rational(0), height, i, 1};
    a_rects.push_back(r);
    inst.rects.push_back(r);
  }
  const Rational core_l = delta, core_r = 1 + delta;
  // y-ranges of w, x, y, z within an area, and the heights of the five set segments
  const std::array<std::pair<long, long>, 4> thin{{{6, 8}, {4, 7}, {2, 5}, {1, 3}}};
  const std::array<Rational, 5> seg_y{Rational(8), Rational(7), rational(9, 2), Rational(3), Rational(1)};
  std::vector<Segment> segs;
  for (int t = 0; t < m; ++t) {
    const long base = 10L * (m - 1 - t);
    for (int q = 0; q < 4; ++q) {
      inst.rects.push_back(Rect{core_l, core_r, Rational(base + thin[q].first), Rational(base + thin[q].second),
                                n + 4 * t + q, 1});
    }
    const auto [i, j, k] = spsc.triples[t];
    const std::array<int, 5> a_of{i, -1, j, -1, k};
    for (int s = 0; s < 5; ++s) {
      Rational y = base + seg_y[s];
      Rational l = a_of[s] < 0 ? core_l : a_rects[a_of[s]].x_left;
      Rational r = a_of[s] < 0 ? core_r : a_rects[a_of[s]].x_right;
      segs.push_back(Segment{l, r, y, Orientation::horizontal, 5 * t + s});
    }
  }
  for (std::size_t s = 0; s < segs.size(); ++s) {
    std::set<int> want(spsc.sets[s].begin(), spsc.sets[s].end()), got;
    for (const auto& r : inst.rects) {
      if (stabs(segs[s], r)) got.insert(r.id);
    }
    if (got != want) throw Error("SPSC segment " + std::to_string(s) + " does not stab exactly its set");
  }
  inst.fixed_candidates = std::move(segs);
  inst.validate();
  return inst;
}

int min_vertex_cover_size(const Graph& g) {
  g.validate();
  if (g.n > 24) throw Error("vertex cover enumeration needs n <= 24");
  int best = g.n;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    bool ok = std::all_of(g.edges.begin(), g.edges.end(),
                          [&](const auto& e) { return ((mask >> e.first) & 1u) || ((mask >> e.second) & 1u); });
    if (ok) best = size;
  }
  return best;
}

SetCoverInstance spsc_set_cover(const SpscInstance& spsc) {
  spsc.validate();
  SetCoverInstance sc;
  for (int e = 0; e < spsc.universe_size(); ++e) sc.universe.push_back(e);
  for (std::size_t s = 0; s < spsc.sets.size(); ++s) {
    auto members = spsc.sets[s];
    std::sort(members.begin(), members.end());
    sc.sets.push_back(CoverSet{static_cast<int>(s), members, Rational(1)});
  }
  return sc;
}

}  // namespace segstab
