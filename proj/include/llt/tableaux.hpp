#pragma once

#include <functional>
#include <vector>

#include "llt/poly.hpp"
#include "llt/shapes.hpp"

namespace llt {

// A semistandard filling of one skew shape: rows weakly increase rightward,
// columns strictly increase upward (French).  rows[r-1][c - inner_r - 1]
// holds the entry of cell (r, c).
using ShapeFilling = std::vector<std::vector<int>>;

struct TupleSSYT {
  const ShapeTuple* tuple = nullptr;  // non-owning; the tuple must outlive it
  std::vector<ShapeFilling> fillings;  // one per shape

  int entry(const Cell& c) const {
    const auto& row = fillings[c.shape_index - 1][c.row - 1];
    return row[c.col - tuple->shapes[c.shape_index - 1].inner.part(c.row) - 1];
  }
};

// All SSYT of one skew shape with entries in 1..n, lexicographic over cells
// in (row, column) order, entries ascending.
std::vector<ShapeFilling> enumerate_shape_ssyt(const SkewShape& shape, int n);

// Streams every filling of the tuple exactly once, deterministic order
// (cartesian product over shapes; shape 1 varies slowest).
void for_each_ssyt(const ShapeTuple& tuple, int n,
                   const std::function<void(const TupleSSYT&)>& fn);

std::vector<TupleSSYT> enumerate_ssyt(const ShapeTuple& tuple, int n);

long ssyt_count(const ShapeTuple& tuple, int n);

// Number of coinversion triples: entries (a, b, c) with a <= b <= c, where
// a = 0 at a virtual u and c = infinity at a virtual w.
long coinv(const TupleSSYT& T);
long coinv(const TupleSSYT& T, const std::vector<Triple>& triple_list);

// The coinversion LLT polynomial, sum over fillings of t^{coinv(T)} x^T.
Polynomial llt_poly(const ShapeTuple& tuple, int n, int workers = 1);

// The inversion LLT polynomial G with L(t) = t^m G(t^{-1}), m = count_triples.
Polynomial inversion_llt(const ShapeTuple& tuple, int n, int workers = 1);

}  // namespace llt
