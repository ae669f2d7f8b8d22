#include "segstab/laminar.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace segstab {

bool is_x_laminar(std::span<const Segment> segs) {
  std::vector<std::pair<Rational, Rational>> spans;
  spans.reserve(segs.size());
  for (const auto& s : segs) spans.emplace_back(s.x_left, s.x_right);
  std::sort(spans.begin(), spans.end(), [](const auto& p, const auto& q) {
    return p.first != q.first ? p.first < q.first : p.second > q.second;
  });
  // stack of nested open intervals, innermost on top
  std::vector<const std::pair<Rational, Rational>*> open;
  for (const auto& cur : spans) {
    while (!open.empty() && open.back()->second <= cur.first) open.pop_back();
    if (!open.empty() && cur.second > open.back()->second) return false;
    open.push_back(&cur);
  }
  return true;
}

DyadicSnap dyadic_snap(const Rational& a, const Rational& b) {
  const Rational len = b - a;
  if (sgn(len) <= 0 || len * 3 > 1) throw Error("dyadic_snap needs 0 < b - a <= 1/3");
  int s = 0;
  while (len * 3 * pow2(s + 1) <= 1) ++s;
  const Rational unit = pow2(-s);
  const mpz_class j = floor_of(Rational(a / unit));

  DyadicSnap out;
  out.level = s;
  if (b <= Rational(j + 1) * unit) {
    out.family = 1;
    out.lo = Rational(j) * unit;
    out.hi = Rational(j + 1) * unit;
  } else {
    // J straddles the point (j+1)/2^s
    const Rational k(j + 1);
    const Rational third = unit / 3;
    out.family = 2;
    out.lo = s % 2 == 0 ? Rational((k - 1) * unit + third) : Rational(k * unit - third);
    out.hi = out.lo + unit;
  }
  if (a < out.lo || out.hi < b) throw Error("dyadic_snap produced an interval not containing J");
  return out;
}

std::vector<Segment> LaminarDecomposition::family(int which) const {
  std::vector<Segment> out;
  for (const auto& s : snapped) {
    if (s.family == which) out.push_back(s.snapped);
  }
  return out;
}

std::vector<Segment> LaminarDecomposition::segments() const {
  std::vector<Segment> out;
  out.reserve(snapped.size());
  for (const auto& s : snapped) out.push_back(s.snapped);
  return out;
}

Rational LaminarDecomposition::max_stretch() const {
  Rational m = 0;
  for (const auto& s : snapped) {
    if (s.stretch > m) m = s.stretch;
  }
  return m;
}

LaminarDecomposition laminarize(const StabInstance& inst, std::span<const Segment> cands) {
  if (inst.constrained()) throw Error("laminarize takes unconstrained instances");
  LaminarDecomposition dec;
  if (cands.empty()) {
    dec.scale = 1;
    dec.shift = 0;
    return dec;
  }
  Rational min_x = cands[0].x_left, max_len = 0;
  for (const auto& c : cands) {
    if (c.orientation != Orientation::horizontal) throw Error("laminarize takes horizontal candidates");
    if (sgn(c.length()) <= 0) throw Error("candidate " + std::to_string(c.id) + " has zero length");
    if (c.x_left < min_x) min_x = c.x_left;
    if (c.length() > max_len) max_len = c.length();
  }
  dec.shift = -min_x;
  dec.scale = 1 / (3 * max_len);

  std::map<std::tuple<Rational, Rational, Rational, int>, std::size_t> seen;
  std::vector<std::size_t> order(cands.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return cands[p].id < cands[q].id; });

  std::vector<SnappedSegment> out;
  for (auto i : order) {
    const auto& c = cands[i];
    auto snap = dyadic_snap((c.x_left + dec.shift) * dec.scale, (c.x_right + dec.shift) * dec.scale);
    Rational lo = snap.lo / dec.scale - dec.shift;
    Rational hi = snap.hi / dec.scale - dec.shift;
    auto key = std::make_tuple(lo, hi, c.y, snap.family);
    if (seen.count(key)) continue;
    seen.emplace(key, out.size());
    SnappedSegment s;
    s.original_id = c.id;
    s.original = c;
    s.snapped = Segment{lo, hi, c.y, Orientation::horizontal, 0};
    s.family = snap.family;
    s.level = snap.level;
    s.stretch = (hi - lo) / c.length();
    out.push_back(std::move(s));
  }
  // ids follow original-id order
  for (std::size_t i = 0; i < out.size(); ++i) out[i].snapped.id = static_cast<int>(i);
  dec.snapped = std::move(out);
  return dec;
}

}  // namespace segstab
