#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "llt/swap.hpp"
#include "llt/tableaux.hpp"

using namespace llt;

namespace {

ShapeTuple running_example() {
  return ShapeTuple{SkewShape::straight(Partition{8, 7, 6}),
                    SkewShape(Partition{4, 3, 2}, Partition{2, 0, 0})};
}

// Builds a configuration from polyline paths in the drawing coordinate
// system (verticals at column + offset, horizontals at row + offset), so the
// worked figures can be transcribed literally.
struct ConfigBuilder {
  LatticeConfig cfg;

  ConfigBuilder(int rows, int cols, int col_offset) {
    cfg.k = 2;
    cfg.rows = rows;
    cfg.cols = cols;
    cfg.col_offset = col_offset;
    cfg.v_edges.assign(rows + 1, std::vector<ColorMask>(cols, 0));
    cfg.h_edges.assign(rows, std::vector<ColorMask>(cols + 1, 0));
  }

  void path(ColorMask color, const std::vector<std::pair<double, double>>& pts) {
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      const auto [x0, y0] = pts[i];
      const auto [x1, y1] = pts[i + 1];
      if (x0 == x1) {
        const int col = static_cast<int>(std::floor(x0));
        for (int y = static_cast<int>(std::ceil(std::min(y0, y1)));
             y <= static_cast<int>(std::floor(std::max(y0, y1))); ++y)
          cfg.v_edges[y][col] |= color;
      } else {
        const int row = static_cast<int>(std::floor(y0));
        for (int x = static_cast<int>(std::ceil(std::min(x0, x1)));
             x <= static_cast<int>(std::floor(std::max(x0, x1))); ++x)
          cfg.h_edges[row][x] |= color;
      }
    }
  }
};

// The worked configuration: 11 columns, drawn with 7 rows.
LatticeConfig worked_config() {
  ConfigBuilder b(7, 11, -2);
  b.path(kRed, {{0.6, 0}, {0.6, 4.4}, {2.6, 4.4}, {2.6, 7}});
  b.path(kRed, {{1.6, 0}, {1.6, 3.4}, {3.6, 3.4}, {3.6, 5.4}, {4.6, 5.4}, {4.6, 7}});
  b.path(kRed, {{4.6, 0}, {4.6, 4.4}, {5.6, 4.4}, {5.6, 6.4}, {6.6, 6.4}, {6.6, 7}});
  b.path(kBlue, {{0.4, 0}, {0.4, 2.6}, {2.4, 2.6}, {2.4, 4.6}, {4.4, 4.6}, {4.4, 5.6},
                 {6.4, 5.6}, {6.4, 7}});
  b.path(kBlue, {{1.4, 0}, {1.4, 1.6}, {5.4, 1.6}, {5.4, 4.6}, {8.4, 4.6}, {8.4, 7}});
  b.path(kBlue, {{2.4, 0}, {2.4, 0.6}, {10.4, 0.6}, {10.4, 7}});
  return b.cfg;
}

// Its image under the swap operator, as drawn.
LatticeConfig worked_config_swapped() {
  ConfigBuilder b(7, 11, -2);
  b.path(kRed, {{0.6, 0}, {0.6, 2.4}, {1.6, 2.4}, {1.6, 3.4}, {2.6, 3.4}, {2.6, 4.4},
                {3.6, 4.4}, {3.6, 5.4}, {5.6, 5.4}, {5.6, 6.4}, {6.6, 6.4}, {6.6, 7}});
  b.path(kRed, {{1.6, 0}, {1.6, 1.4}, {4.6, 1.4}, {4.6, 4.4}, {8.6, 4.4}, {8.6, 7}});
  b.path(kRed, {{2.6, 0}, {2.6, 0.4}, {10.6, 0.4}, {10.6, 7}});
  b.path(kBlue, {{0.4, 0}, {0.4, 4.6}, {2.4, 4.6}, {2.4, 7}});
  b.path(kBlue, {{1.4, 0}, {1.4, 2.6}, {2.4, 2.6}, {2.4, 3.6}, {3.4, 3.6}, {3.4, 4.6},
                 {4.4, 4.6}, {4.4, 7}});
  b.path(kBlue, {{4.4, 0}, {4.4, 1.6}, {5.4, 1.6}, {5.4, 5.6}, {6.4, 5.6}, {6.4, 7}});
  return b.cfg;
}

ShapeTuple nonrealizable_printed() {
  return ShapeTuple{SkewShape(Partition{5, 4, 4}, Partition{2, 2, 0}),
                    SkewShape::straight(Partition{3, 1, 1})};
}

ShapeTuple nonrealizable_sixbead() {
  return ShapeTuple{SkewShape(Partition{5, 4, 4}, Partition{2, 2, 0}),
                    SkewShape::straight(Partition{3, 3, 1})};
}

LatticeConfig nonrealizable_config() {
  ConfigBuilder b(4, 8, -2);
  b.path(kRed, {{0.6, 0}, {0.6, 3.4}, {1.6, 3.4}, {1.6, 4}});
  b.path(kRed, {{1.6, 0}, {1.6, 2.4}, {2.6, 2.4}, {2.6, 4}});
  b.path(kRed, {{2.6, 0}, {2.6, 1.4}, {5.6, 1.4}, {5.6, 4}});
  b.path(kBlue, {{0.4, 0}, {0.4, 2.6}, {4.4, 2.6}, {4.4, 4}});
  b.path(kBlue, {{3.4, 0}, {3.4, 1.6}, {5.4, 1.6}, {5.4, 4}});
  b.path(kBlue, {{4.4, 0}, {4.4, 0.6}, {7.4, 0.6}, {7.4, 4}});
  return b.cfg;
}

std::vector<std::pair<ColorMask, int>> row_view(const std::vector<BoundaryBead>& row) {
  std::vector<std::pair<ColorMask, int>> out;
  for (const auto& b : row) out.emplace_back(b.color, b.label);
  return out;
}

BeadSequence synthetic_beads(const std::vector<ColorMask>& top,
                             const std::vector<ColorMask>& bottom) {
  BeadSequence b;
  const int nt = static_cast<int>(top.size()), nb = static_cast<int>(bottom.size());
  for (int i = 0; i < nt; ++i)
    b.top.push_back(BoundaryBead{BoundarySide::top, i, i, top[i], nt - 1 - i});
  for (int i = 0; i < nb; ++i)
    b.bottom.push_back(BoundaryBead{BoundarySide::bottom, i, i, bottom[i], nb - 1 - i});
  return b;
}

}  // namespace

TEST_CASE("bead sequences from boundary data") {
  const BeadSequence run = bead_sequence(running_example());
  CHECK(row_view(run.top) ==
        std::vector<std::pair<ColorMask, int>>{{kRed, 5}, {kRed, 4}, {kBlue, 1}, {kBlue, 0}});
  CHECK(row_view(run.bottom) ==
        std::vector<std::pair<ColorMask, int>>{{kBlue, 1}, {kRed, 0}});

  // identical shapes: everything doubly occupied, no beads
  const ShapeTuple twins{SkewShape::straight(Partition{2, 1}),
                         SkewShape::straight(Partition{2, 1})};
  const BeadSequence none = bead_sequence(twins);
  CHECK(none.top.empty());
  CHECK(none.bottom.empty());

  // the printed tuple of the non-realizability example carries four top
  // beads (the figure omits two); the six-bead variant matches the figure
  const BeadSequence printed = bead_sequence(nonrealizable_printed());
  CHECK(row_view(printed.top) == std::vector<std::pair<ColorMask, int>>{
                                     {kRed, 5}, {kRed, 4}, {kBlue, 3}, {kBlue, 0}});
  CHECK(row_view(printed.bottom) == std::vector<std::pair<ColorMask, int>>{
                                        {kRed, 3}, {kRed, 2}, {kBlue, 1}, {kBlue, 0}});
  const BeadSequence six = bead_sequence(nonrealizable_sixbead());
  CHECK(row_view(six.top) ==
        std::vector<std::pair<ColorMask, int>>{{kRed, 5}, {kBlue, 0}});
  CHECK(row_view(six.bottom) == std::vector<std::pair<ColorMask, int>>{
                                    {kRed, 3}, {kRed, 2}, {kBlue, 1}, {kBlue, 0}});
}

TEST_CASE("singletons of the skew pair boundary") {
  // ((2,2)/(1,0),(1)): the rightmost blue on top is the only top singleton,
  // all three bottom paths are singletons
  const ShapeTuple t{SkewShape(Partition{2, 2}, Partition{1, 0}),
                     SkewShape::straight(Partition{1})};
  const BeadSequence b = bead_sequence(t);
  CHECK(row_view(b.top) == std::vector<std::pair<ColorMask, int>>{{kBlue, 0}});
  CHECK(row_view(b.bottom) ==
        std::vector<std::pair<ColorMask, int>>{{kBlue, 2}, {kRed, 1}, {kBlue, 0}});
}

TEST_CASE("phi is the identity without singletons") {
  const ShapeTuple twins{SkewShape::straight(Partition{2, 1}),
                         SkewShape::straight(Partition{2, 1})};
  long count = 0;
  for_each_config(twins, 2, [&](const LatticeConfig& c) {
    ++count;
    CHECK(all_walks(c).empty());
    CHECK(phi(c) == c);
    CHECK(weight_change(c) == 0);
  });
  CHECK(count > 0);
}

TEST_CASE("singletons of the worked configuration") {
  const LatticeConfig cfg = worked_config();
  REQUIRE(config_valid(cfg, running_example()));
  const auto beads = bead_sequence_of_config(cfg);
  CHECK(beads == bead_sequence(running_example()));
}

TEST_CASE("the three walks of the worked configuration") {
  const LatticeConfig cfg = worked_config();
  const auto beads = bead_sequence_of_config(cfg);

  const Walk w1 = walk_from(cfg, beads.top[0]);
  CHECK(w1.segments == 10);
  CHECK(w1.switch_seq == std::vector<int>{1, 3, 2, 4, 1, 3, 1, 3, 1});
  CHECK(w1.end.boundary == BoundarySide::top);
  CHECK(w1.end.color == kBlue);
  CHECK(w1.end.label == 0);

  const Walk w2 = walk_from(cfg, beads.top[1]);
  CHECK(w2.segments == 4);
  CHECK(w2.end.boundary == BoundarySide::top);
  CHECK(w2.end.color == kBlue);
  CHECK(w2.end.label == 1);

  const Walk w3 = walk_from(cfg, beads.bottom[0]);
  CHECK(w3.end.boundary == BoundarySide::bottom);
  CHECK(w3.end.color == kRed);
  CHECK(w3.end.label == 0);

  for (const Walk* w : {&w1, &w2, &w3}) CHECK(walk_statistics_check(*w));
  // direction and path counts of the long walk
  CHECK(w1.switch_counts == std::array<long, 4>{4, 1, 3, 1});

  CHECK_THROWS_AS(walk_from(cfg, beads.top[2]), precondition_error);  // blue top
}

TEST_CASE("phi reproduces the drawn swapped configuration") {
  const LatticeConfig cfg = worked_config();
  const LatticeConfig image = phi(cfg);
  CHECK(config_valid(image, swap_adjacent(running_example(), 1)));
  CHECK(image == worked_config_swapped());
  CHECK(phi(image) == cfg);
  CHECK(weight_change(cfg) == 5);
  CHECK(config_weight(cfg).t_exp - config_weight(image).t_exp == 5);
}

TEST_CASE("induced matching of the worked configuration") {
  const Matching m = induced_matching(worked_config());
  CHECK(m.arcs == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}, {4, 5}});
}

TEST_CASE("arc weights from the table") {
  const BeadSequence beads = bead_sequence(running_example());
  CHECK(arc_weight(beads, {0, 3}) == 3);  // top red 5 to blue 0
  CHECK(arc_weight(beads, {1, 2}) == 2);  // top red 4 to blue 1
  CHECK(arc_weight(beads, {4, 5}) == 0);  // bottom blue 1 to red 0
  CHECK(matching_weight(beads, Matching{{{0, 3}, {1, 2}, {4, 5}}}) == 5);
  // color-violating arcs are rejected
  CHECK_THROWS_AS(arc_weight(beads, {2, 3}), precondition_error);  // blue-blue same row
  CHECK_THROWS_AS(arc_weight(beads, {0, 4}), precondition_error);  // red-blue cross row
  // half-integer exponent: synthetic red 2 left of blue 1 on top with a
  // parity-violating gap
  const BeadSequence odd = synthetic_beads({kRed, kBlue}, {});
  // labels 1 and 0: (1 - 0 + 1)/2 = 1 is fine; shift the right label
  BeadSequence bad = odd;
  bad.top[1].label = 1;
  bad.top[0].label = 3;
  CHECK_THROWS_AS(arc_weight(bad, {0, 1}), precondition_error);
}

TEST_CASE("matching enumeration counts") {
  CHECK(enumerate_noncrossing_matchings(bead_sequence(nonrealizable_sixbead())).size() == 2);
  // a single all-singleton row R^3 B^3 has exactly one matching
  const BeadSequence rrbb = synthetic_beads({kRed, kRed, kRed, kBlue, kBlue, kBlue}, {});
  CHECK(enumerate_noncrossing_matchings(rrbb).size() == 1);
  // one red above, one blue below: no matching at all
  const BeadSequence rb = synthetic_beads({kRed}, {kBlue});
  CHECK(enumerate_noncrossing_matchings(rb).empty());
  CHECK(!matching_exists_criterion(rb));
  // empty sequence: the empty matching
  const BeadSequence empty = synthetic_beads({}, {});
  CHECK(has_unique_matching(empty));
}

TEST_CASE("uniqueness classification examples") {
  CHECK(classify_unique(synthetic_beads({kBlue, kRed, kRed, kBlue}, {})));
  CHECK(!classify_unique(synthetic_beads({kRed, kBlue, kRed, kBlue}, {})));
  CHECK(enumerate_noncrossing_matchings(synthetic_beads({kRed, kBlue, kRed, kBlue}, {})).size() ==
        2);
  CHECK(classify_unique(synthetic_beads({kRed, kBlue}, {kBlue, kRed})));
  CHECK(classify_unique(bead_sequence(running_example())));
  CHECK(!classify_unique(bead_sequence(nonrealizable_sixbead())));
  CHECK(has_unique_matching(bead_sequence(running_example())));
  CHECK(!has_unique_matching(bead_sequence(nonrealizable_sixbead())));
}

TEST_CASE("swap_equivalence_check") {
  // identical shapes: trivial equality at exponent 0
  const ShapeTuple twins{SkewShape::straight(Partition{2, 1}),
                         SkewShape::straight(Partition{2, 1})};
  CHECK(swap_equivalence_check(twins, 2) == 0);
  // nested rectangles
  const ShapeTuple rects{SkewShape::straight(Partition{2, 2}),
                         SkewShape::straight(Partition{1, 1})};
  const auto s = swap_equivalence_check(rects, 2);
  REQUIRE(s.has_value());
  CHECK(*s == 2);
  // no unique matching: absent, nothing asserted
  CHECK(!swap_equivalence_check(nonrealizable_sixbead(), 2).has_value());
}

TEST_CASE("phi and the weight law on randomized larger boundaries") {
  // deterministic random tuples beyond the systematic corpus: lengths up to
  // three, parts up to five
  std::mt19937 rng(2024);
  auto random_partition = [&](int len) {
    std::vector<int> parts(len);
    std::uniform_int_distribution<int> d(0, 5);
    for (int& p : parts) p = d(rng);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
  };
  int tested = 0;
  std::uniform_int_distribution<int> len_d(1, 3);
  while (tested < 8) {
    const int len1 = len_d(rng), len2 = len_d(rng);
    const Partition b1 = random_partition(len1), b2 = random_partition(len2);
    Partition g1 = random_partition(len1), g2 = random_partition(len2);
    for (int r = 1; r <= len1; ++r) g1.parts[r - 1] = std::min(g1.part(r), b1.part(r));
    for (int r = 1; r <= len2; ++r) g2.parts[r - 1] = std::min(g2.part(r), b2.part(r));
    g1.validate();
    g2.validate();
    const ShapeTuple t{SkewShape(b1, g1), SkewShape(b2, g2)};
    if (config_count(t, 2) > 3000) continue;
    ++tested;
    const ShapeTuple swapped = swap_adjacent(t, 1);
    for_each_config(t, 2, [&](const LatticeConfig& cfg) {
      const LatticeConfig img = phi(cfg);
      CHECK(config_valid(img, swapped));
      CHECK(phi(img) == cfg);
      CHECK(config_weight(cfg).t_exp - config_weight(img).t_exp == weight_change(cfg));
      for (const Walk& w : all_walks(cfg)) CHECK(walk_statistics_check(w));
    });
  }
}

TEST_CASE("pair swaps inside longer tuples keep the pair's exponent") {
  // swapping shapes i, i+1 of a longer tuple: when the extracted pair has a
  // unique matching, its arc-weight sum gives the full-tuple identity
  struct Case {
    ShapeTuple t;
    int i;
  };
  const std::vector<Case> cases = {
      {ShapeTuple{SkewShape::straight(Partition{1}), SkewShape::straight(Partition{2, 2}),
                  SkewShape::straight(Partition{1, 1})},
       2},
      {ShapeTuple{SkewShape::straight(Partition{2, 2}), SkewShape::straight(Partition{1, 1}),
                  SkewShape::straight(Partition{2})},
       1},
      {ShapeTuple{SkewShape::straight(Partition{3}), SkewShape::straight(Partition{3, 3}),
                  SkewShape::straight(Partition{1})},
       2},
  };
  for (const auto& [t, i] : cases) {
    const ShapeTuple pair{t.shapes[i - 1], t.shapes[i]};
    const BeadSequence beads = bead_sequence(pair);
    const auto ms = enumerate_noncrossing_matchings(beads);
    REQUIRE(ms.size() == 1);
    const long w = matching_weight(beads, ms[0]);
    CHECK(w == 2);
    for (int n = 2; n <= 3; ++n)
      CHECK(llt_poly(t, n) == scale_t(llt_poly(swap_adjacent(t, i), n), w));
  }
}

TEST_CASE("non-realizable matching stays unrealized") {
  // the drawn configuration belongs to the printed tuple and realizes the
  // drawn matching plus the omitted top arc
  const LatticeConfig cfg = nonrealizable_config();
  REQUIRE(config_valid(cfg, nonrealizable_printed()));
  CHECK(induced_matching(cfg).arcs ==
        std::vector<std::pair<int, int>>{{0, 7}, {1, 2}, {3, 4}, {5, 6}});

  // the six-bead figure: two non-crossing matchings, not unique
  const auto ms6 = enumerate_noncrossing_matchings(bead_sequence(nonrealizable_sixbead()));
  CHECK(ms6.size() == 2);
  CHECK(!has_unique_matching(bead_sequence(nonrealizable_sixbead())));

  // on the printed tuple's full bead sequence there are three matchings; the
  // one with the top red-blue arc (the figure's first matching) is never
  // induced by any configuration
  const auto ms = enumerate_noncrossing_matchings(bead_sequence(nonrealizable_printed()));
  REQUIRE(ms.size() == 3);
  const Matching unrealizable{{{0, 3}, {1, 2}, {4, 7}, {5, 6}}};
  CHECK(std::count(ms.begin(), ms.end(), unrealizable) == 1);
  std::set<Matching> seen;
  for (int n = 3; n <= 4; ++n)
    for_each_config(nonrealizable_printed(), n,
                    [&](const LatticeConfig& c) { seen.insert(induced_matching(c)); });
  CHECK(seen.count(unrealizable) == 0);
  CHECK(seen.count(Matching{{{0, 7}, {1, 2}, {3, 4}, {5, 6}}}) == 1);
}
