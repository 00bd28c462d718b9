#include "llt/swap.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "llt/tableaux.hpp"

namespace llt {

namespace {

void require_two_colors(int k) {
  if (k != 2) throw precondition_error("partition-swapping machinery needs k = 2");
}

std::vector<BoundaryBead> row_beads(const std::vector<ColorMask>& edge_row, BoundarySide side,
                                    int col_offset) {
  std::vector<BoundaryBead> out;
  const int cols = static_cast<int>(edge_row.size());
  for (int c = 0; c < cols; ++c) {
    const ColorMask m = edge_row[c];
    if (std::popcount(m) != 1) continue;
    int label = 0;
    for (int d = c + 1; d < cols; ++d) label += std::popcount(edge_row[d]);
    out.push_back(BoundaryBead{side, c, col_offset + c, m, label});
  }
  return out;
}

}  // namespace

const BoundaryBead& BeadSequence::at(int pos) const {
  const int nt = static_cast<int>(top.size());
  if (pos < nt) return top[pos];
  // the bottom row enters the cyclic order right to left
  return bottom[bottom.size() - 1 - (pos - nt)];
}

std::vector<BoundaryBead> singletons(const LatticeConfig& cfg) {
  require_two_colors(cfg.k);
  auto out = row_beads(cfg.v_edges[cfg.rows], BoundarySide::top, cfg.col_offset);
  auto bot = row_beads(cfg.v_edges[0], BoundarySide::bottom, cfg.col_offset);
  out.insert(out.end(), bot.begin(), bot.end());
  return out;
}

BeadSequence bead_sequence_of_config(const LatticeConfig& cfg) {
  require_two_colors(cfg.k);
  BeadSequence b;
  b.top = row_beads(cfg.v_edges[cfg.rows], BoundarySide::top, cfg.col_offset);
  b.bottom = row_beads(cfg.v_edges[0], BoundarySide::bottom, cfg.col_offset);
  return b;
}

BeadSequence bead_sequence(const ShapeTuple& tuple) {
  require_two_colors(tuple.k());
  auto [r, s] = column_range(tuple);
  const int cols = s - r + 1;
  std::vector<Partition> bet{tuple.shapes[0].outer, tuple.shapes[1].outer};
  std::vector<Partition> gam{tuple.shapes[0].inner, tuple.shapes[1].inner};
  std::vector<ColorMask> top(cols), bottom(cols);
  for (int c = 0; c < cols; ++c) {
    top[c] = boundary_vector(bet, r + c);
    bottom[c] = boundary_vector(gam, r + c);
  }
  BeadSequence b;
  b.top = row_beads(top, BoundarySide::top, r);
  b.bottom = row_beads(bottom, BoundarySide::bottom, r);
  return b;
}

namespace {

struct Walker {
  const LatticeConfig& cfg;
  Walk walk;

  explicit Walker(const LatticeConfig& c) : cfg(c) {}

  void push_edge(EdgeRef e, ColorMask color) {
    walk.edges.push_back(e);
    walk.edge_colors.push_back(color);
  }

  void push_switch(int type) {
    walk.switch_seq.push_back(type);
    ++walk.switch_counts[type - 1];
  }

  void finish(BoundarySide side, int column, ColorMask color) {
    const auto& row = (side == BoundarySide::top) ? cfg.v_edges[cfg.rows] : cfg.v_edges[0];
    int label = 0;
    for (int d = column + 1; d < cfg.cols; ++d) label += std::popcount(row[d]);
    check_invariant(std::popcount(row[column]) == 1,
                    "walk terminated at a non-singleton boundary path");
    walk.end = BoundaryBead{side, column, cfg.col_offset + column, color, label};
    walk.segments = static_cast<int>(walk.switch_seq.size()) + 1;
  }

  enum class Side { I, J, K, L };

  // Traverse faces until the walk leaves through the top or bottom boundary.
  // Red travels backward (down/left), blue forward (up/right); the switch
  // fires at the first face matching one of the four rules for the current
  // entry edge.  A walk visits each directed segment at most once, so the
  // step count is bounded by the directed edge count.
  void run(int r, int c, Side entry, ColorMask color) {
    const long step_cap = 4L * (cfg.rows + 1) * (cfg.cols + 1) + 8;
    long steps = 0;
    for (;;) {
      check_invariant(++steps <= step_cap, "walk entered a loop");
      const Face f = cfg.face(r, c);
      if (color == kRed) {
        if (entry == Side::K) {
          check_invariant((f.K & kRed) != 0, "walk lost its red path");
          if (f.L & kBlue) {
            push_switch(1);
            push_edge({EdgeRef::H, r, c + 1}, kBlue);
            color = kBlue;
            ++c;
            entry = Side::J;
            continue;
          }
        } else {
          check_invariant((f.L & kRed) != 0, "walk lost its red path");
          if (f.K & kBlue) {
            push_switch(2);
            push_edge({EdgeRef::V, r + 1, c}, kBlue);
            if (r + 1 == cfg.rows) return finish(BoundarySide::top, c, kBlue);
            color = kBlue;
            ++r;
            entry = Side::I;
            continue;
          }
        }
        if (f.I & kRed) {
          push_edge({EdgeRef::V, r, c}, kRed);
          if (r == 0) return finish(BoundarySide::bottom, c, kRed);
          --r;
          entry = Side::K;
        } else {
          check_invariant((f.J & kRed) != 0, "red path has no entry edge");
          push_edge({EdgeRef::H, r, c}, kRed);
          --c;
          entry = Side::L;
        }
        continue;
      }
      // blue, forward
      if (entry == Side::J) {
        check_invariant((f.J & kBlue) != 0, "walk lost its blue path");
        if (f.I & kRed) {
          push_switch(3);
          push_edge({EdgeRef::V, r, c}, kRed);
          if (r == 0) return finish(BoundarySide::bottom, c, kRed);
          color = kRed;
          --r;
          entry = Side::K;
          continue;
        }
      } else {
        check_invariant((f.I & kBlue) != 0, "walk lost its blue path");
        if (f.J & kRed) {
          push_switch(4);
          push_edge({EdgeRef::H, r, c}, kRed);
          color = kRed;
          --c;
          entry = Side::L;
          continue;
        }
      }
      if (f.K & kBlue) {
        push_edge({EdgeRef::V, r + 1, c}, kBlue);
        if (r + 1 == cfg.rows) return finish(BoundarySide::top, c, kBlue);
        ++r;
        entry = Side::I;
      } else {
        check_invariant((f.L & kBlue) != 0, "blue path has no exit edge");
        push_edge({EdgeRef::H, r, c + 1}, kBlue);
        ++c;
        entry = Side::J;
      }
    }
  }
};

}  // namespace

Walk walk_from(const LatticeConfig& cfg, const BoundaryBead& start) {
  require_two_colors(cfg.k);
  const bool top_red = start.boundary == BoundarySide::top && start.color == kRed;
  const bool bottom_blue = start.boundary == BoundarySide::bottom && start.color == kBlue;
  if (!top_red && !bottom_blue)
    throw precondition_error("walks start at singleton top reds or bottom blues");
  const auto& row = (start.boundary == BoundarySide::top) ? cfg.v_edges[cfg.rows] : cfg.v_edges[0];
  if (start.column < 0 || start.column >= cfg.cols || row[start.column] != start.color)
    throw precondition_error("start is not a singleton of the required color");
  Walker w(cfg);
  w.walk.start = start;
  if (top_red) {
    w.push_edge({EdgeRef::V, cfg.rows, start.column}, kRed);
    w.run(cfg.rows - 1, start.column, Walker::Side::K, kRed);
  } else {
    w.push_edge({EdgeRef::V, 0, start.column}, kBlue);
    w.run(0, start.column, Walker::Side::I, kBlue);
  }
  return w.walk;
}

std::vector<Walk> all_walks(const LatticeConfig& cfg) {
  std::vector<Walk> out;
  const auto beads = singletons(cfg);
  for (const BoundaryBead& b : beads)
    if (b.boundary == BoundarySide::top && b.color == kRed) out.push_back(walk_from(cfg, b));
  for (const BoundaryBead& b : beads)
    if (b.boundary == BoundarySide::bottom && b.color == kBlue) out.push_back(walk_from(cfg, b));
  return out;
}

LatticeConfig flip_walks(const LatticeConfig& cfg, const std::vector<Walk>& walks) {
  require_two_colors(cfg.k);
  LatticeConfig out = cfg;
  for (const Walk& w : walks) {
    for (size_t i = 0; i < w.edges.size(); ++i) {
      const EdgeRef& e = w.edges[i];
      const ColorMask color = w.edge_colors[i];
      const ColorMask other = color ^ (kBlue | kRed);
      ColorMask& m = (e.kind == EdgeRef::V) ? out.v_edges[e.r][e.c] : out.h_edges[e.r][e.c];
      // walks are edge-disjoint and never share an edge with the other color
      check_invariant((m & color) != 0 && (m & other) == 0,
                      "walk segment clashes at an edge; configuration not flippable");
      m = (m & ~color) | other;
    }
  }
  return out;
}

LatticeConfig phi(const LatticeConfig& cfg) { return flip_walks(cfg, all_walks(cfg)); }

Matching matching_from_walks(const BeadSequence& beads, const std::vector<Walk>& walks) {
  auto position_of = [&](const BoundaryBead& b) {
    for (int p = 0; p < beads.size(); ++p)
      if (beads.at(p) == b) return p;
    throw invariant_error("walk endpoint is not a singleton bead");
  };
  Matching m;
  for (const Walk& w : walks) {
    int a = position_of(w.start), b = position_of(w.end);
    if (a > b) std::swap(a, b);
    m.arcs.emplace_back(a, b);
  }
  std::sort(m.arcs.begin(), m.arcs.end());
  // the walks must pair up every bead without chord crossings
  check_invariant(static_cast<int>(m.arcs.size()) * 2 == beads.size(),
                  "walks do not cover every singleton bead");
  for (size_t i = 0; i < m.arcs.size(); ++i)
    for (size_t j = i + 1; j < m.arcs.size(); ++j) {
      const auto& [a1, b1] = m.arcs[i];
      const auto& [a2, b2] = m.arcs[j];
      const bool a2_in = a1 < a2 && a2 < b1, b2_in = a1 < b2 && b2 < b1;
      check_invariant(a2_in == b2_in, "walk-induced arcs cross");
    }
  return m;
}

Matching induced_matching(const LatticeConfig& cfg) {
  return matching_from_walks(bead_sequence_of_config(cfg), all_walks(cfg));
}

long arc_weight(const BeadSequence& beads, const std::pair<int, int>& arc) {
  const BoundaryBead& x = beads.at(arc.first);
  const BoundaryBead& y = beads.at(arc.second);
  long num = 0;
  if (x.boundary != y.boundary) {
    if (x.color != y.color) throw precondition_error("cross-row arc must join equal colors");
    const BoundaryBead& top = (x.boundary == BoundarySide::top) ? x : y;
    const BoundaryBead& bot = (x.boundary == BoundarySide::top) ? y : x;
    num = (x.color == kBlue) ? bot.label - top.label : top.label - bot.label;
  } else {
    if (x.color == y.color) throw precondition_error("same-row arc must join different colors");
    // identify the left bead of the arc within its row
    const bool top_row = x.boundary == BoundarySide::top;
    const BoundaryBead& left = (x.column < y.column) ? x : y;
    const BoundaryBead& right = (x.column < y.column) ? y : x;
    if (top_row) {
      num = (left.color == kRed) ? left.label - right.label + 1 : right.label - left.label - 1;
    } else {
      num = (left.color == kRed) ? right.label - left.label + 1 : left.label - right.label - 1;
    }
  }
  if (num % 2 != 0) {
    std::ostringstream os;
    os << "arc weight exponent " << num << "/2 is not an integer";
    throw precondition_error(os.str());
  }
  return num / 2;
}

long matching_weight(const BeadSequence& beads, const Matching& m) {
  long s = 0;
  for (const auto& arc : m.arcs) s += arc_weight(beads, arc);
  return s;
}

long weight_change(const LatticeConfig& cfg) {
  const BeadSequence beads = bead_sequence_of_config(cfg);
  return matching_weight(beads, induced_matching(cfg));
}

namespace {

bool arc_compatible(const BeadSequence& beads, int a, int b) {
  const BoundaryBead& x = beads.at(a);
  const BoundaryBead& y = beads.at(b);
  if (x.boundary == y.boundary) return x.color != y.color;
  return x.color == y.color;
}

// Non-crossing matchings of the cyclic interval [lo, hi]: bead lo pairs with
// some compatible m splitting the rest into two independent even pieces.
void rec_matchings(const BeadSequence& beads, int lo, int hi, Matching& cur,
                   std::vector<Matching>& out) {
  if (lo > hi) {
    Matching m = cur;
    std::sort(m.arcs.begin(), m.arcs.end());
    out.push_back(std::move(m));
    return;
  }
  for (int m = lo + 1; m <= hi; m += 2) {
    if (!arc_compatible(beads, lo, m)) continue;
    cur.arcs.emplace_back(lo, m);
    // inner piece then outer piece; enumerate inner fully for each choice
    std::vector<Matching> inner;
    Matching tmp;
    rec_matchings(beads, lo + 1, m - 1, tmp, inner);
    for (const Matching& in : inner) {
      const size_t base = cur.arcs.size();
      cur.arcs.insert(cur.arcs.end(), in.arcs.begin(), in.arcs.end());
      rec_matchings(beads, m + 1, hi, cur, out);
      cur.arcs.resize(base);
    }
    cur.arcs.pop_back();
  }
}

}  // namespace

std::vector<Matching> enumerate_noncrossing_matchings(const BeadSequence& beads) {
  const int total = beads.size();
  if (total % 2 != 0) return {};
  Matching cur;
  std::vector<Matching> out;
  rec_matchings(beads, 0, total - 1, cur, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool has_unique_matching(const BeadSequence& beads) {
  return enumerate_noncrossing_matchings(beads).size() == 1;
}

bool matching_exists_criterion(const BeadSequence& beads) {
  auto diff = [](const std::vector<BoundaryBead>& row) {
    int d = 0;
    for (const auto& b : row) d += (b.color == kRed) ? 1 : -1;
    return d;
  };
  return diff(beads.top) == diff(beads.bottom);
}

namespace {

// Maximal color blocks of a row, as (color, count) pairs.
std::vector<std::pair<ColorMask, int>> blocks(const std::vector<BoundaryBead>& row) {
  std::vector<std::pair<ColorMask, int>> out;
  for (const auto& b : row) {
    if (!out.empty() && out.back().first == b.color)
      ++out.back().second;
    else
      out.emplace_back(b.color, 1);
  }
  return out;
}

bool is_block_pattern(const std::vector<std::pair<ColorMask, int>>& bl,
                      const std::vector<ColorMask>& pattern) {
  // pattern with every block count >= 0: bl must be a subsequence of pattern
  // in order (empty blocks skipped)
  size_t p = 0;
  for (const auto& [color, cnt] : bl) {
    while (p < pattern.size() && pattern[p] != color) ++p;
    if (p == pattern.size()) return false;
    ++p;
  }
  return true;
}

}  // namespace

bool classify_unique(const BeadSequence& beads) {
  if (!matching_exists_criterion(beads)) return false;
  const auto t = blocks(beads.top), b = blocks(beads.bottom);
  const ColorMask R = kRed, B = kBlue;
  auto match = [&](const std::vector<std::pair<ColorMask, int>>& top_blocks,
                   const std::vector<std::pair<ColorMask, int>>& bottom_blocks) {
    // pattern 1: top R..RB..B against bottom B..BR..R (and color swap)
    for (ColorMask c : {R, B}) {
      const ColorMask o = c ^ (kBlue | kRed);
      if (is_block_pattern(top_blocks, {c, o}) && is_block_pattern(bottom_blocks, {o, c}))
        return true;
    }
    // pattern 2: top R..RB..BR..R against a single-color bottom B..B (and
    // color swap); subsumes the single-row forms when the bottom is empty
    for (ColorMask c : {R, B}) {
      const ColorMask o = c ^ (kBlue | kRed);
      if (is_block_pattern(top_blocks, {c, o, c}) && is_block_pattern(bottom_blocks, {o}))
        return true;
    }
    return false;
  };
  return match(t, b) || match(b, t);
}

std::optional<long> swap_equivalence_check(const ShapeTuple& tuple, int n) {
  require_two_colors(tuple.k());
  const BeadSequence beads = bead_sequence(tuple);
  if (!has_unique_matching(beads)) return std::nullopt;
  const long s = matching_weight(beads, enumerate_noncrossing_matchings(beads).front());
  const Polynomial lhs = llt_poly(tuple, n);
  const Polynomial rhs = scale_t(llt_poly(swap_adjacent(tuple, 1), n), s);
  if (lhs != rhs) {
    std::ostringstream os;
    os << "swap equivalence falsified for " << to_string(tuple) << " n=" << n << " exponent " << s
       << ": " << lhs.to_string() << " != " << rhs.to_string();
    throw invariant_error(os.str());
  }
  return s;
}

bool walk_statistics_check(const Walk& walk) {
  const long n1 = walk.switch_counts[0], n2 = walk.switch_counts[1];
  const long n3 = walk.switch_counts[2], n4 = walk.switch_counts[3];
  const bool same_boundary = walk.start.boundary == walk.end.boundary;
  // direction count: a same-boundary walk reverses its travel direction one
  // extra time, in favour of backward-to-forward switches when it started
  // backward (top red) and the other way around when it started forward
  long dir_expect = 0;
  if (same_boundary) dir_expect = (walk.start.boundary == BoundarySide::top) ? 1 : -1;
  if (n1 + n2 - n3 - n4 != dir_expect) return false;
  // path count, j paths right of the start and i right of the end
  if (n1 - n2 + n3 - n4 != walk.start.label - walk.end.label) return false;
  // corner count
  long expect;
  if (!same_boundary) {
    expect = 0;
  } else if (walk.start.boundary == BoundarySide::top) {
    expect = (walk.end.column > walk.start.column) ? 1 : -1;
  } else {
    expect = (walk.end.column < walk.start.column) ? 1 : -1;
  }
  if (n1 - n2 - n3 + n4 != expect) return false;
  // forbidden adjacency: no (1,4,1), (4,1,4), (3,2,3), (2,3,2)
  const auto& s = walk.switch_seq;
  for (size_t i = 0; i + 2 < s.size(); ++i) {
    const int a = s[i], b = s[i + 1], c = s[i + 2];
    if (a == c && ((a == 1 && b == 4) || (a == 4 && b == 1) || (a == 3 && b == 2) ||
                   (a == 2 && b == 3)))
      return false;
  }
  return true;
}

}  // namespace llt
