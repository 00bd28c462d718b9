#include "llt/tableaux.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace llt {

namespace {

// Backtracking over cells in (row, column) order.  The left neighbour bounds
// below weakly, the cell underneath (row r-1, same column) bounds below
// strictly when present.
void rec_shape(const SkewShape& sh, int n, int r, int idx, ShapeFilling& cur,
               std::vector<ShapeFilling>& out) {
  if (r > sh.rows()) {
    out.push_back(cur);
    return;
  }
  const int lo = sh.inner.part(r), hi = sh.outer.part(r);
  if (idx >= hi - lo) {
    rec_shape(sh, n, r + 1, 0, cur, out);
    return;
  }
  const int col = lo + 1 + idx;
  int min_e = 1;
  if (idx > 0) min_e = std::max(min_e, cur[r - 1][idx - 1]);
  if (r > 1) {
    const int blo = sh.inner.part(r - 1), bhi = sh.outer.part(r - 1);
    if (col >= blo + 1 && col <= bhi) min_e = std::max(min_e, cur[r - 2][col - blo - 1] + 1);
  }
  for (int e = min_e; e <= n; ++e) {
    cur[r - 1][idx] = e;
    rec_shape(sh, n, r, idx + 1, cur, out);
  }
}

}  // namespace

std::vector<ShapeFilling> enumerate_shape_ssyt(const SkewShape& shape, int n) {
  if (n < 1) throw precondition_error("alphabet size must be >= 1");
  ShapeFilling cur(shape.rows());
  for (int r = 1; r <= shape.rows(); ++r)
    cur[r - 1].assign(shape.outer.part(r) - shape.inner.part(r), 0);
  std::vector<ShapeFilling> out;
  rec_shape(shape, n, 1, 0, cur, out);
  return out;
}

void for_each_ssyt(const ShapeTuple& tuple, int n,
                   const std::function<void(const TupleSSYT&)>& fn) {
  std::vector<std::vector<ShapeFilling>> per_shape;
  per_shape.reserve(tuple.k());
  for (const auto& sh : tuple.shapes) {
    per_shape.push_back(enumerate_shape_ssyt(sh, n));
    if (per_shape.back().empty()) return;
  }
  TupleSSYT T;
  T.tuple = &tuple;
  T.fillings.resize(tuple.k());
  std::vector<size_t> odo(tuple.k(), 0);
  for (;;) {
    for (int s = 0; s < tuple.k(); ++s) T.fillings[s] = per_shape[s][odo[s]];
    fn(T);
    int s = tuple.k() - 1;
    while (s >= 0 && ++odo[s] == per_shape[s].size()) odo[s--] = 0;
    if (s < 0) break;
  }
}

std::vector<TupleSSYT> enumerate_ssyt(const ShapeTuple& tuple, int n) {
  std::vector<TupleSSYT> out;
  for_each_ssyt(tuple, n, [&](const TupleSSYT& T) { out.push_back(T); });
  return out;
}

long ssyt_count(const ShapeTuple& tuple, int n) {
  long c = 0;
  for_each_ssyt(tuple, n, [&](const TupleSSYT&) { ++c; });
  return c;
}

long coinv(const TupleSSYT& T, const std::vector<Triple>& triple_list) {
  long c = 0;
  for (const Triple& t : triple_list) {
    const int b = T.entry(t.v);
    if (!t.u_virtual && T.entry(t.u) > b) continue;
    if (!t.w_virtual && b > T.entry(t.w)) continue;
    ++c;
  }
  return c;
}

long coinv(const TupleSSYT& T) { return coinv(T, triples(*T.tuple)); }

namespace {

Polynomial sum_over_fillings(const ShapeTuple& tuple, int n,
                             const std::vector<Triple>& trip, long m_shift, bool invert_t,
                             size_t chunk_index, size_t chunk_count) {
  std::map<Monomial, Int, bool (*)(const Monomial&, const Monomial&)> acc(monomial_less);
  size_t i = 0;
  for_each_ssyt(tuple, n, [&](const TupleSSYT& T) {
    if (i++ % chunk_count != chunk_index) return;
    Monomial m;
    long cv = coinv(T, trip);
    m.t_exp = invert_t ? m_shift - cv : cv;
    m.x_exps.assign(n, 0);
    for (int s = 0; s < tuple.k(); ++s)
      for (const auto& row : T.fillings[s])
        for (int e : row) ++m.x_exps[e - 1];
    acc[std::move(m)] += 1;
  });
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
  return Polynomial(n, std::move(terms));
}

Polynomial generating_function(const ShapeTuple& tuple, int n, bool invert_t, int workers) {
  const std::vector<Triple> trip = triples(tuple);
  const long m_shift = static_cast<long>(trip.size());
  if (workers <= 1) return sum_over_fillings(tuple, n, trip, m_shift, invert_t, 0, 1);
  std::vector<Polynomial> parts(workers, Polynomial::zero(n));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      parts[w] = sum_over_fillings(tuple, n, trip, m_shift, invert_t, w, workers);
    });
  for (auto& th : pool) th.join();
  Polynomial total = Polynomial::zero(n);
  for (const auto& p : parts) total = add(total, p);
  return total;
}

}  // namespace

Polynomial llt_poly(const ShapeTuple& tuple, int n, int workers) {
  return generating_function(tuple, n, false, workers);
}

Polynomial inversion_llt(const ShapeTuple& tuple, int n, int workers) {
  // G(t) = t^m L(t^{-1}); per filling the exponent is m - coinv(T).
  return generating_function(tuple, n, true, workers);
}

}  // namespace llt
