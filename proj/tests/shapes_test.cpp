#include <doctest.h>

#include <algorithm>
#include <set>

#include "llt/shapes.hpp"

using namespace llt;

namespace {

ShapeTuple single_box() { return ShapeTuple{SkewShape::straight(Partition{1})}; }

ShapeTuple two_boxes() {
  return ShapeTuple{SkewShape::straight(Partition{1}), SkewShape::straight(Partition{1})};
}

ShapeTuple skew_pair_example() {
  return ShapeTuple{SkewShape(Partition{2, 2}, Partition{1, 0}),
                    SkewShape::straight(Partition{1})};
}

// Independent oracle: scan every candidate (u, v, w) position in a bounding
// box and apply the geometric predicate directly.
std::vector<Triple> brute_force_triples(const ShapeTuple& tuple) {
  auto in_shape = [&](int s, int r, int c) {
    const SkewShape& sh = tuple.shapes[s - 1];
    return r >= 1 && r <= sh.rows() && c > sh.inner.part(r) && c <= sh.outer.part(r);
  };
  std::vector<Triple> out;
  const auto all = cells(tuple);
  for (int j = 1; j <= tuple.k(); ++j) {
    const SkewShape& sh = tuple.shapes[j - 1];
    for (int r = 1; r <= sh.rows(); ++r) {
      for (int cu = 0; cu <= sh.outer.part(r) + 1; ++cu) {
        const int cw = cu + 1;
        const bool u_in = in_shape(j, r, cu);
        const bool w_in = in_shape(j, r, cw);
        // out-of-shape ends are only the end of the inner row / just past the
        // outer row; both virtual is the empty-row pair
        if (!u_in && cu != sh.inner.part(r)) continue;
        if (!w_in && cw != sh.outer.part(r) + 1) continue;
        for (const Cell& v : all) {
          if (v.shape_index >= j) continue;
          if (v.content() != cw - r) continue;
          out.push_back(Triple{Cell{j, r, cu}, !u_in, v, Cell{j, r, cw}, !w_in});
        }
      }
    }
  }
  return out;
}

bool same_triples(std::vector<Triple> a, std::vector<Triple> b) {
  auto key = [](const Triple& t) {
    return std::tuple(t.u.shape_index, t.u.row, t.u.col, t.u_virtual, t.v.shape_index, t.v.row,
                      t.v.col, t.w.col, t.w_virtual);
  };
  auto lt = [&](const Triple& x, const Triple& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), lt);
  std::sort(b.begin(), b.end(), lt);
  return a == b;
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({1, 2}), precondition_error);
  CHECK_THROWS_AS(Partition({-1}), precondition_error);
  CHECK_NOTHROW(Partition({3, 3, 0}));
  CHECK_THROWS_AS(SkewShape(Partition{1}, Partition{1, 0}), precondition_error);
  CHECK_THROWS_AS(SkewShape(Partition{1, 0}, Partition{2, 0}), precondition_error);
}

TEST_CASE("cells") {
  CHECK(cells(single_box()) == std::vector<Cell>{Cell{1, 1, 1}});
  const auto c = cells(skew_pair_example());
  CHECK(c == std::vector<Cell>{Cell{1, 1, 2}, Cell{1, 2, 1}, Cell{1, 2, 2}, Cell{2, 1, 1}});
  // fully empty skew shape
  ShapeTuple empty{SkewShape(Partition{2, 2}, Partition{2, 2})};
  CHECK(cells(empty).empty());
}

TEST_CASE("triples of small tuples") {
  CHECK(triples(single_box()).empty());
  CHECK(count_triples(single_box()) == 0);

  const auto t2 = triples(two_boxes());
  REQUIRE(t2.size() == 1);
  CHECK(t2[0].v == Cell{1, 1, 1});
  CHECK(t2[0].w == Cell{2, 1, 1});
  CHECK(!t2[0].w_virtual);
  CHECK(t2[0].u_virtual);

  // the green triple of the worked example (u, v real, w just outside) is
  // present, alongside the virtual-u triple on content line 0
  const auto tp = triples(skew_pair_example());
  REQUIRE(tp.size() == 2);
  const Triple green{Cell{2, 1, 1}, false, Cell{1, 1, 2}, Cell{2, 1, 2}, true};
  CHECK(std::count(tp.begin(), tp.end(), green) == 1);
  const Triple other{Cell{2, 1, 0}, true, Cell{1, 2, 2}, Cell{2, 1, 1}, false};
  CHECK(std::count(tp.begin(), tp.end(), other) == 1);
}

TEST_CASE("triples agree with the exhaustive position scan") {
  std::vector<ShapeTuple> corpus = {
      single_box(), two_boxes(), skew_pair_example(),
      ShapeTuple{SkewShape(Partition{3, 1}, Partition{1, 0}),
                 SkewShape(Partition{2, 2}, Partition{1, 1})},
      ShapeTuple{SkewShape::straight(Partition{2}), SkewShape(Partition{3, 3}, Partition{2, 0}),
                 SkewShape::straight(Partition{1, 1})},
      ShapeTuple{SkewShape::straight(Partition{1}), SkewShape(Partition{2, 2}, Partition{2, 2})},
      // zero-padded variants: the added empty rows carry all-virtual pairs
      ShapeTuple{SkewShape::straight(Partition{1, 0}), SkewShape::straight(Partition{1, 0})},
      ShapeTuple{SkewShape::straight(Partition{2, 0, 0}),
                 SkewShape(Partition{2, 1, 0}, Partition{1, 0, 0})},
  };
  for (const auto& t : corpus) CHECK(same_triples(triples(t), brute_force_triples(t)));
}

TEST_CASE("empty rows carry one all-virtual pair") {
  // both rows of the later shape are empty; their pairs sit on content lines
  // 2 and 1, where the single box has no cell, so no triple arises here
  ShapeTuple t{SkewShape::straight(Partition{1}), SkewShape(Partition{2, 2}, Partition{2, 2})};
  CHECK(count_triples(t) == 0);
  // move the box onto the right content line and the all-virtual pair makes
  // an unconditional coinversion triple
  ShapeTuple t2{SkewShape::straight(Partition{2}), SkewShape(Partition{2, 2}, Partition{2, 2})};
  const auto tr = triples(t2);
  REQUIRE(tr.size() == 1);
  CHECK(tr[0].u_virtual);
  CHECK(tr[0].w_virtual);
  CHECK(tr[0].v == Cell{1, 1, 2});
}

TEST_CASE("zero padding shifts the triple count by always-true pairs") {
  // appending a zero row to every partition adds only all-virtual pairs;
  // each one that meets a cell of an earlier shape is an unconditional
  // coinversion, so the count can grow
  auto pad = [](const ShapeTuple& t) {
    std::vector<SkewShape> shapes;
    for (const auto& s : t.shapes) {
      auto o = s.outer.parts;
      o.push_back(0);
      auto i = s.inner.parts;
      i.push_back(0);
      shapes.emplace_back(Partition(o), Partition(i));
    }
    return ShapeTuple(std::move(shapes));
  };
  const ShapeTuple a = two_boxes();
  CHECK(count_triples(pad(a)) == count_triples(a));
  const ShapeTuple b{SkewShape::straight(Partition{3, 3}), SkewShape::straight(Partition{1})};
  CHECK(count_triples(pad(b)) == count_triples(b) + 1);
  // the padded variants still satisfy the exhaustive scan
  CHECK(same_triples(triples(pad(b)), brute_force_triples(pad(b))));
}

TEST_CASE("swap_adjacent") {
  const auto ab = two_boxes();
  ShapeTuple ba{SkewShape::straight(Partition{1}), SkewShape::straight(Partition{1})};
  CHECK(swap_adjacent(ab, 1) == ba);
  CHECK(swap_adjacent(swap_adjacent(skew_pair_example(), 1), 1) == skew_pair_example());
  CHECK_THROWS_AS(swap_adjacent(single_box(), 1), precondition_error);
  // the running example of the swap sections
  ShapeTuple run{SkewShape::straight(Partition{8, 7, 6}),
                 SkewShape(Partition{4, 3, 2}, Partition{2, 0, 0})};
  ShapeTuple swapped{SkewShape(Partition{4, 3, 2}, Partition{2, 0, 0}),
                     SkewShape::straight(Partition{8, 7, 6})};
  CHECK(swap_adjacent(run, 1) == swapped);
}
