#include "llt/shapes.hpp"

#include <sstream>

namespace llt {

void Partition::validate() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw precondition_error("negative partition part");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw precondition_error("partition parts must weakly decrease");
  }
}

SkewShape::SkewShape(Partition beta, Partition gamma)
    : outer(std::move(beta)), inner(std::move(gamma)) {
  if (outer.length() != inner.length())
    throw precondition_error("skew shape needs outer and inner of equal length");
  for (int r = 1; r <= outer.length(); ++r)
    if (inner.part(r) > outer.part(r))
      throw precondition_error("inner partition not contained in outer");
}

SkewShape SkewShape::straight(Partition beta) {
  Partition gamma(std::vector<int>(beta.parts.size(), 0));
  return SkewShape(std::move(beta), std::move(gamma));
}

int SkewShape::cell_count() const {
  int c = 0;
  for (int r = 1; r <= rows(); ++r) c += outer.part(r) - inner.part(r);
  return c;
}

void ShapeTuple::validate() const {
  if (shapes.empty()) throw precondition_error("shape tuple needs k >= 1");
}

int ShapeTuple::cell_count() const {
  int c = 0;
  for (const auto& s : shapes) c += s.cell_count();
  return c;
}

std::vector<Cell> cells(const ShapeTuple& tuple) {
  std::vector<Cell> out;
  for (int s = 1; s <= tuple.k(); ++s) {
    const SkewShape& sh = tuple.shapes[s - 1];
    for (int r = 1; r <= sh.rows(); ++r)
      for (int c = sh.inner.part(r) + 1; c <= sh.outer.part(r); ++c)
        out.push_back(Cell{s, r, c});
  }
  return out;
}

std::vector<Triple> triples(const ShapeTuple& tuple) {
  std::vector<Triple> out;
  std::vector<Cell> all = cells(tuple);
  // (u, w) pairs run over u-columns gamma_r..beta_r of each row of the later
  // shape; u is virtual exactly at column gamma_r, w exactly at beta_r + 1.
  // An empty row carries the single all-virtual pair.
  for (int j = 2; j <= tuple.k(); ++j) {
    const SkewShape& sh = tuple.shapes[j - 1];
    for (int r = 1; r <= sh.rows(); ++r) {
      const int lo = sh.inner.part(r), hi = sh.outer.part(r);
      for (int c = lo; c <= hi; ++c) {
        Triple t;
        t.u = Cell{j, r, c};
        t.u_virtual = (c == lo);
        t.w = Cell{j, r, c + 1};
        t.w_virtual = (c == hi);
        const int line = t.w.content();
        for (const Cell& v : all) {
          if (v.shape_index >= j) break;  // cells() is shape-ordered
          if (v.content() == line) {
            t.v = v;
            out.push_back(t);
          }
        }
      }
    }
  }
  return out;
}

long count_triples(const ShapeTuple& tuple) { return static_cast<long>(triples(tuple).size()); }

ShapeTuple swap_adjacent(const ShapeTuple& tuple, int i) {
  if (i < 1 || i >= tuple.k()) throw precondition_error("swap_adjacent index out of range");
  ShapeTuple out = tuple;
  std::swap(out.shapes[i - 1], out.shapes[i]);
  return out;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (i) os << ",";
    os << p.parts[i];
  }
  os << ")";
  return os.str();
}

std::string to_string(const ShapeTuple& t) {
  std::ostringstream os;
  os << "(";
  for (int s = 0; s < t.k(); ++s) {
    if (s) os << ", ";
    os << to_string(t.shapes[s].outer);
    bool skew = false;
    for (int x : t.shapes[s].inner.parts)
      if (x != 0) skew = true;
    if (skew) os << "/" << to_string(t.shapes[s].inner);
  }
  os << ")";
  return os.str();
}

}  // namespace llt
