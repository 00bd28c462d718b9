#include "llt/lattice.hpp"

#include <bit>
#include <map>
#include <thread>

namespace llt {

ColorMask boundary_vector(const std::vector<Partition>& partitions, int i) {
  ColorMask mask = 0;
  for (size_t j = 0; j < partitions.size(); ++j) {
    const Partition& mu = partitions[j];
    for (int m = 1; m <= mu.length(); ++m)
      if (i == mu.part(m) - m + 1) mask |= ColorMask(1) << j;
  }
  return mask;
}

namespace {

std::vector<Partition> outers(const ShapeTuple& t) {
  std::vector<Partition> v;
  for (const auto& s : t.shapes) v.push_back(s.outer);
  return v;
}

std::vector<Partition> inners(const ShapeTuple& t) {
  std::vector<Partition> v;
  for (const auto& s : t.shapes) v.push_back(s.inner);
  return v;
}

}  // namespace

std::pair<int, int> column_range(const ShapeTuple& tuple) {
  const auto beta = outers(tuple), gamma = inners(tuple);
  bool any = false;
  int r = 0, s = 0;
  // gamma(i) can be nonzero only for i in [1 - max length, max part]; same
  // bound serves beta.
  int max_len = 0, max_part = 0;
  for (const auto& p : beta) {
    max_len = std::max(max_len, p.length());
    if (p.length() > 0) max_part = std::max(max_part, p.part(1));
  }
  for (int i = 1 - max_len; i <= max_part; ++i) {
    if (boundary_vector(gamma, i) != 0) {
      r = i;
      any = true;
      break;
    }
  }
  if (!any) throw precondition_error("tuple has no boundary paths");
  for (int i = max_part; i >= 1 - max_len; --i) {
    if (boundary_vector(beta, i) != 0) {
      s = i;
      break;
    }
  }
  return {r, s};
}

bool face_valid(const Face& f) {
  return (f.I & f.J) == 0 && (f.K & f.L) == 0 && (f.I | f.J) == (f.K | f.L);
}

long face_t_exponent(const Face& f) {
  const ColorMask present = f.I | f.J;
  long e = 0;
  for (ColorMask l = f.L; l != 0; l &= l - 1) {
    const int bit = std::countr_zero(l);
    e += std::popcount(present >> (bit + 1));
  }
  return e;
}

Polynomial face_weight(const Face& f, int k, int var_index, int n) {
  (void)k;
  if (!face_valid(f)) throw precondition_error("invalid face (conservation or intersection)");
  std::vector<int> x(n, 0);
  x[var_index - 1] = std::popcount(f.L);
  return Polynomial::monomial(n, face_t_exponent(f), std::move(x));
}

namespace {

struct Enumerator {
  const ShapeTuple& tuple;
  int n;
  int k;
  int cols;
  int col_offset;
  std::vector<ColorMask> beta_top;
  LatticeConfig cfg;
  const std::function<void(const LatticeConfig&)>* fn = nullptr;

  Enumerator(const ShapeTuple& t, int n_rows) : tuple(t), n(n_rows), k(t.k()) {
    auto [r, s] = column_range(t);
    cols = s - r + 1;
    col_offset = r;
    cfg.k = k;
    cfg.rows = n;
    cfg.cols = cols;
    cfg.col_offset = col_offset;
    cfg.v_edges.assign(n + 1, std::vector<ColorMask>(cols, 0));
    cfg.h_edges.assign(n, std::vector<ColorMask>(cols + 1, 0));
    const auto gam = inners(t), bet = outers(t);
    beta_top.resize(cols);
    for (int c = 0; c < cols; ++c) {
      cfg.v_edges[0][c] = boundary_vector(gam, col_offset + c);
      beta_top[c] = boundary_vector(bet, col_offset + c);
    }
  }

  // Sweep faces left to right within a row, bottom row first.  Each face
  // splits its incoming colors between top and right; the rightmost face must
  // send everything up, and the top row is forced by the beta boundary.
  void rec(int r, int c) {
    if (c == cols) {
      if (r + 1 == n) {
        (*fn)(cfg);
        return;
      }
      rec(r + 1, 0);
      return;
    }
    const ColorMask I = cfg.v_edges[r][c];
    const ColorMask J = cfg.h_edges[r][c];
    if ((I & J) != 0) return;  // a color may not enter a face twice
    const ColorMask in = I | J;
    if (r == n - 1) {
      const ColorMask K = beta_top[c];
      if ((K & ~in) != 0) return;
      const ColorMask L = in & ~K;
      if (c == cols - 1 && L != 0) return;
      cfg.v_edges[r + 1][c] = K;
      cfg.h_edges[r][c + 1] = L;
      rec(r, c + 1);
      return;
    }
    if (c == cols - 1) {
      cfg.v_edges[r + 1][c] = in;
      cfg.h_edges[r][c + 1] = 0;
      rec(r, c + 1);
      return;
    }
    // submasks of `in` ascending
    ColorMask L = 0;
    for (;;) {
      cfg.v_edges[r + 1][c] = in & ~L;
      cfg.h_edges[r][c + 1] = L;
      rec(r, c + 1);
      if (L == in) break;
      L = (L - in) & in;  // next submask
    }
  }

  void run(const std::function<void(const LatticeConfig&)>& f) {
    fn = &f;
    if (n < 1) throw precondition_error("row count must be >= 1");
    rec(0, 0);
  }
};

}  // namespace

void for_each_config(const ShapeTuple& tuple, int n,
                     const std::function<void(const LatticeConfig&)>& fn) {
  Enumerator e(tuple, n);
  e.run(fn);
}

std::vector<LatticeConfig> enumerate_configs(const ShapeTuple& tuple, int n) {
  std::vector<LatticeConfig> out;
  for_each_config(tuple, n, [&](const LatticeConfig& c) { out.push_back(c); });
  return out;
}

long config_count(const ShapeTuple& tuple, int n) {
  long c = 0;
  for_each_config(tuple, n, [&](const LatticeConfig&) { ++c; });
  return c;
}

Monomial config_weight(const LatticeConfig& cfg) {
  Monomial m;
  m.x_exps.assign(cfg.rows, 0);
  for (int r = 0; r < cfg.rows; ++r)
    for (int c = 0; c < cfg.cols; ++c) {
      const Face f = cfg.face(r, c);
      m.x_exps[r] += std::popcount(f.L);
      m.t_exp += face_t_exponent(f);
    }
  return m;
}

Polynomial partition_function(const ShapeTuple& tuple, int n, int workers) {
  auto run_chunk = [&](size_t chunk, size_t nchunks) {
    std::map<Monomial, Int, bool (*)(const Monomial&, const Monomial&)> acc(monomial_less);
    size_t i = 0;
    for_each_config(tuple, n, [&](const LatticeConfig& cfg) {
      if (i++ % nchunks != chunk) return;
      acc[config_weight(cfg)] += 1;
    });
    std::vector<Polynomial::Term> terms;
    for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
    return Polynomial(n, std::move(terms));
  };
  if (workers <= 1) return run_chunk(0, 1);
  std::vector<Polynomial> parts(workers, Polynomial::zero(n));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] { parts[w] = run_chunk(w, workers); });
  for (auto& th : pool) th.join();
  Polynomial total = Polynomial::zero(n);
  for (const auto& p : parts) total = add(total, p);
  return total;
}

bool config_valid(const LatticeConfig& cfg, const ShapeTuple& tuple) {
  const auto gam = inners(tuple), bet = outers(tuple);
  for (int c = 0; c < cfg.cols; ++c) {
    if (cfg.bottom(c) != boundary_vector(gam, cfg.col_offset + c)) return false;
    if (cfg.top(c) != boundary_vector(bet, cfg.col_offset + c)) return false;
  }
  for (int r = 0; r < cfg.rows; ++r)
    if (cfg.h_edges[r][0] != 0 || cfg.h_edges[r][cfg.cols] != 0) return false;
  for (int r = 0; r < cfg.rows; ++r)
    for (int c = 0; c < cfg.cols; ++c)
      if (!face_valid(cfg.face(r, c))) return false;
  // Per color, occupied edges decompose into up-right paths from the bottom
  // boundary to the top boundary.
  for (int col = 0; col < cfg.k; ++col) {
    const ColorMask bit = ColorMask(1) << col;
    auto v_used = cfg.v_edges;  // consumed as paths are traced
    auto h_used = cfg.h_edges;
    for (int c0 = 0; c0 < cfg.cols; ++c0) {
      if (!(v_used[0][c0] & bit)) continue;
      int r = 0, c = c0;
      v_used[0][c0] &= ~bit;
      // enter face (r, c) from below; exit up or right until past the top
      for (;;) {
        const Face f = cfg.face(r, c);
        if (f.K & bit) {
          if (!(v_used[r + 1][c] & bit)) return false;
          v_used[r + 1][c] &= ~bit;
          if (r + 1 == cfg.rows) break;
          ++r;
        } else if (f.L & bit) {
          if (!(h_used[r][c + 1] & bit)) return false;
          h_used[r][c + 1] &= ~bit;
          ++c;
        } else {
          return false;
        }
      }
    }
    for (const auto& row : v_used)
      for (ColorMask m : row)
        if (m & bit) return false;
    for (const auto& row : h_used)
      for (ColorMask m : row)
        if (m & bit) return false;
  }
  return true;
}

}  // namespace llt
