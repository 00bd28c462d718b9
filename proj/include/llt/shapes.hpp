#pragma once

#include <string>
#include <vector>

#include "llt/errors.hpp"

namespace llt {

// Weakly decreasing nonnegative parts with a fixed, meaningful length;
// trailing zeros are kept.  (Boundary vectors depend on the part count.)
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { validate(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

  int length() const { return static_cast<int>(parts.size()); }
  int part(int m) const { return parts[m - 1]; }  // 1-based
  void validate() const;

  bool operator==(const Partition&) const = default;
};

struct SkewShape {
  Partition outer;  // beta
  Partition inner;  // gamma

  SkewShape() = default;
  SkewShape(Partition beta, Partition gamma);
  static SkewShape straight(Partition beta);

  int rows() const { return outer.length(); }
  bool row_empty(int r) const { return outer.part(r) == inner.part(r); }
  int cell_count() const;

  bool operator==(const SkewShape&) const = default;
};

struct ShapeTuple {
  std::vector<SkewShape> shapes;

  ShapeTuple() = default;
  ShapeTuple(std::initializer_list<SkewShape> s) : shapes(s) { validate(); }
  explicit ShapeTuple(std::vector<SkewShape> s) : shapes(std::move(s)) { validate(); }

  int k() const { return static_cast<int>(shapes.size()); }
  int cell_count() const;
  void validate() const;

  bool operator==(const ShapeTuple&) const = default;
};

// French notation, 1-based: row 1 is the bottom (longest) row, columns grow
// rightward.  content = col - row.
struct Cell {
  int shape_index = 0;  // 1-based
  int row = 0;
  int col = 0;

  int content() const { return col - row; }
  bool operator==(const Cell&) const = default;
};

// A triple of the tuple: v in an earlier shape on the content line of w,
// (u, w) horizontally adjacent in a row of a later shape.  u and w may sit
// just outside the skew shape (u at the end of the inner row, w directly
// right of the end of the outer row); the flags record that.
struct Triple {
  Cell u;
  bool u_virtual = false;
  Cell v;
  Cell w;
  bool w_virtual = false;

  bool operator==(const Triple&) const = default;
};

// All cells in (shape, row, column) order.
std::vector<Cell> cells(const ShapeTuple& tuple);

// All triples, deterministic order.  Empty rows of the later shape carry no
// (u, w) pair.
std::vector<Triple> triples(const ShapeTuple& tuple);

long count_triples(const ShapeTuple& tuple);

// Shapes i and i+1 exchanged (i is 1-based).
ShapeTuple swap_adjacent(const ShapeTuple& tuple, int i);

std::string to_string(const Partition& p);
std::string to_string(const ShapeTuple& t);

}  // namespace llt
