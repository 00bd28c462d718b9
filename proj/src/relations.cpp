#include "llt/relations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "llt/lattice.hpp"
#include "llt/tableaux.hpp"

namespace llt {

std::vector<MatchingClass> group_by_matching(const ShapeTuple& tuple, int n) {
  if (tuple.k() != 2) throw precondition_error("group_by_matching needs k = 2");
  std::map<Matching, Polynomial> classes;
  for_each_config(tuple, n, [&](const LatticeConfig& cfg) {
    const Matching m = induced_matching(cfg);
    const Monomial w = config_weight(cfg);
    auto it = classes.find(m);
    if (it == classes.end()) it = classes.emplace(m, Polynomial::zero(n)).first;
    it->second = add(it->second, Polynomial(n, {{w, 1}}));
  });
  std::vector<MatchingClass> out;
  Polynomial total = Polynomial::zero(n);
  for (auto& [m, g] : classes) {
    total = add(total, g);
    out.push_back(MatchingClass{m, std::move(g)});
  }
  check_invariant(total == llt_poly(tuple, n),
                  "matching classes do not sum to the LLT polynomial");
  return out;
}

std::vector<Matching> canonical_matchings(int num_beads) {
  if (num_beads % 2 != 0) throw precondition_error("canonical_matchings needs an even count");
  const int n = num_beads / 2;
  // memoized lists per half-size, built in the inductive (a, b, c) order:
  // the rightmost bead's arc reaches position 2a, the 2a beads to its left
  // carry the b-th matching, the beads inside carry the c-th.
  std::vector<std::vector<Matching>> memo(n + 1);
  memo[0].push_back(Matching{});
  for (int m = 1; m <= n; ++m) {
    for (int a = 0; a < m; ++a) {
      const int inner = m - a - 1;
      for (const Matching& left : memo[a]) {
        for (const Matching& inside : memo[inner]) {
          Matching out;
          out.arcs = left.arcs;  // positions 0..2a-1 already
          out.arcs.emplace_back(2 * a, 2 * m - 1);
          for (const auto& [x, y] : inside.arcs)
            out.arcs.emplace_back(x + 2 * a + 1, y + 2 * a + 1);
          std::sort(out.arcs.begin(), out.arcs.end());
          memo[m].push_back(std::move(out));
        }
      }
    }
  }
  return memo[n];
}

std::vector<ColorMask> canonical_coloring(const Matching& m, int num_beads) {
  std::vector<ColorMask> colors(num_beads, 0);
  for (const auto& [a, b] : m.arcs) {
    colors[a] = kRed;
    colors[b] = kBlue;
  }
  for (ColorMask c : colors)
    if (c == 0) throw precondition_error("matching is not perfect on the bead row");
  return colors;
}

namespace {

struct BeadGeometry {
  std::vector<std::pair<int, int>> top, bottom;  // (column, label)
};

BeadGeometry geometry(const BeadSequence& b) {
  BeadGeometry g;
  for (const auto& x : b.top) g.top.emplace_back(x.column, x.label);
  for (const auto& x : b.bottom) g.bottom.emplace_back(x.column, x.label);
  return g;
}

bool operator==(const BeadGeometry& a, const BeadGeometry& b) {
  return a.top == b.top && a.bottom == b.bottom;
}

}  // namespace

TransferMatrix transfer_matrix(const std::vector<ShapeTuple>& family, int n,
                               std::vector<Matching> order) {
  if (family.empty()) throw precondition_error("empty family");
  std::vector<BeadSequence> beads;
  beads.reserve(family.size());
  for (const auto& t : family) beads.push_back(bead_sequence(t));
  const BeadGeometry geo = geometry(beads.front());
  for (const auto& b : beads)
    if (!(geometry(b) == geo))
      throw precondition_error("family members have mismatched bead geometry");

  // g_j comes from family member j's own class of matching j
  std::vector<std::vector<MatchingClass>> grouped;
  grouped.reserve(family.size());
  for (const auto& t : family) grouped.push_back(group_by_matching(t, n));

  if (order.empty()) {
    if (beads.front().bottom.empty()) {
      order = canonical_matchings(static_cast<int>(beads.front().top.size()));
    } else {
      // two-row geometry: order = realized matchings, each aligned with a
      // family member that realizes it so the g's stay well defined
      std::set<Matching> seen;
      for (const auto& classes : grouped)
        for (const auto& cls : classes) seen.insert(cls.matching);
      order.assign(seen.begin(), seen.end());
      for (size_t j = 0; j < order.size(); ++j) {
        if (j >= family.size())
          throw precondition_error("family too small to anchor every realized matching");
        bool realized = false;
        for (const auto& cls : grouped[j])
          if (cls.matching == order[j]) realized = true;
        if (!realized)
          throw precondition_error(
              "family member " + std::to_string(j + 1) +
              " does not realize the matching aligned with it; reorder the family");
      }
    }
  }
  std::map<Matching, int> col_of;
  for (size_t j = 0; j < order.size(); ++j) col_of[order[j]] = static_cast<int>(j);

  std::vector<Polynomial> g(order.size(), Polynomial::zero(n));
  for (size_t j = 0; j < order.size() && j < family.size(); ++j) {
    for (const auto& cls : grouped[j])
      if (cls.matching == order[j]) g[j] = cls.g;
  }

  TransferMatrix M;
  M.order = order;
  M.entries.assign(family.size(), std::vector<std::optional<long>>(order.size()));
  for (size_t i = 0; i < family.size(); ++i) {
    Polynomial recon = Polynomial::zero(n);
    for (const auto& cls : grouped[i]) {
      auto it = col_of.find(cls.matching);
      check_invariant(it != col_of.end(), "configuration induced a matching outside the order");
      const int j = it->second;
      check_invariant(!g[j].is_zero(), "class matched against an unrealized canonical matching");
      const auto shift = equivalence_shift(cls.g, g[j]);
      check_invariant(shift.has_value(),
                      "matching class is not a pure t-power multiple of its g");
      M.entries[i][j] = *shift;
      recon = add(recon, scale_t(g[j], *shift));
    }
    check_invariant(recon == llt_poly(family[i], n),
                    "transfer-matrix reconstruction failed for a family member");
  }
  return M;
}

std::vector<Polynomial> solve_g(const TransferMatrix& matrix,
                                const std::vector<Polynomial>& llts) {
  const size_t m = matrix.order.size();
  if (llts.size() < m) throw precondition_error("solve_g needs one LLT per matching");
  for (size_t i = 0; i < m; ++i) {
    if (!matrix.entries[i][i] || *matrix.entries[i][i] != 0)
      throw precondition_error("matrix is not unit-diagonal under the given order");
    for (size_t j = i + 1; j < m; ++j)
      if (matrix.entries[i][j])
        throw precondition_error("matrix is not lower triangular under the given order");
  }
  std::vector<Polynomial> g;
  g.reserve(m);
  for (size_t i = 0; i < m; ++i) {
    Polynomial v = llts[i];
    for (size_t j = 0; j < i; ++j)
      if (matrix.entries[i][j]) v = sub(v, scale_t(g[j], *matrix.entries[i][j]));
    g.push_back(std::move(v));
  }
  return g;
}

namespace {

ShapeTuple one_row_tuple(int b1, int g1, int b2, int g2) {
  return ShapeTuple{SkewShape(Partition{b1}, Partition{g1}), SkewShape(Partition{b2}, Partition{g2})};
}

}  // namespace

bool single_row_exchange_check(int gamma1, int gamma2, int beta1, int beta2, int n) {
  if (!(0 < gamma1 && gamma1 < gamma2 && gamma2 <= beta1 && beta1 < beta2))
    throw precondition_error("single_row_exchange_check needs 0 < gamma1 < gamma2 <= beta1 < beta2");
  const Polynomial lhs = llt_poly(one_row_tuple(beta1, gamma1, beta2, gamma2), n);
  const Polynomial a = llt_poly(one_row_tuple(beta2, gamma2, beta1, gamma1), n);
  const Polynomial b = llt_poly(one_row_tuple(beta2, gamma1, beta1, gamma2), n);
  const Polynomial coeff =
      sub(Polynomial::t_power(n, -1), Polynomial::one(n));  // t^{-1} - 1
  return lhs == add(a, mul(coeff, b));
}

bool small_relation_check(int n) {
  if (n < 2) throw precondition_error("small_relation_check needs n >= 2");
  const ShapeTuple l1{SkewShape::straight(Partition{3, 3}), SkewShape::straight(Partition{1})};
  const ShapeTuple l2{SkewShape::straight(Partition{2, 2}), SkewShape::straight(Partition{3})};
  const ShapeTuple l3{SkewShape::straight(Partition{3, 2}), SkewShape::straight(Partition{2})};
  const Polynomial lhs = llt_poly(l3, n);
  const Polynomial rhs =
      add(scale_t(llt_poly(l1, n), -1), scale_t(llt_poly(l2, n), 1));
  return lhs == rhs;
}

std::vector<ShapeTuple> catalan_family(const std::vector<int>& values) {
  if (values.size() % 2 != 0) throw precondition_error("catalan_family needs 2n values");
  const int n = static_cast<int>(values.size()) / 2;
  if (n == 0) throw precondition_error("catalan_family needs n >= 1");
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) throw precondition_error("catalan_family values must be nonnegative");
    if (i + 1 < values.size() && values[i] <= values[i + 1])
      throw precondition_error("catalan_family values must strictly decrease");
  }
  auto build = [&](const std::vector<int>& chosen) {
    std::vector<int> parts(n);
    for (int m = 1; m <= n; ++m) {
      parts[m - 1] = chosen[m - 1] - n + m;
      if (parts[m - 1] < 0) throw precondition_error("part went negative after the shift");
    }
    return Partition(parts);
  };
  std::vector<ShapeTuple> out;
  const int total = static_cast<int>(values.size());
  for (unsigned mask = 0; mask < (1u << total); ++mask) {
    if (std::popcount(mask) != n) continue;
    std::vector<int> first, second;
    for (int i = 0; i < total; ++i)
      (mask >> i & 1 ? first : second).push_back(values[i]);
    out.push_back(ShapeTuple{SkewShape::straight(build(first)),
                             SkewShape::straight(build(second))});
  }
  return out;
}

ShapeTuple catalan_member(const std::vector<int>& values, const std::vector<ColorMask>& colors) {
  if (colors.size() != values.size())
    throw precondition_error("one color per value expected");
  // position p (left to right) carries the p-th smallest value; values[] is
  // descending, and bead label equals the value's index in it
  const int total = static_cast<int>(values.size());
  const int n = total / 2;
  std::vector<int> first, second;
  for (int idx = 0; idx < total; ++idx) {
    const int pos = total - 1 - idx;  // bead position of values[idx]
    (colors[pos] == kBlue ? first : second).push_back(values[idx]);
  }
  if (static_cast<int>(first.size()) != n)
    throw precondition_error("coloring must use each color n times");
  auto build = [&](const std::vector<int>& chosen) {
    std::vector<int> parts(n);
    for (int m = 1; m <= n; ++m) parts[m - 1] = chosen[m - 1] - n + m;
    return Partition(parts);
  };
  return ShapeTuple{SkewShape::straight(build(first)), SkewShape::straight(build(second))};
}

std::vector<ColoredBead> sorted_bead_row(const Partition& beta1, const Partition& beta2) {
  if (beta1.length() != beta2.length())
    throw precondition_error("sorted_bead_row needs equal part counts");
  const int n = beta1.length();
  std::vector<std::pair<int, ColorMask>> merged;  // (staircase-shifted part, origin)
  for (int m = 1; m <= n; ++m) {
    merged.emplace_back(beta1.part(m) + n - m, kBlue);
    merged.emplace_back(beta2.part(m) + n - m, kRed);
  }
  std::sort(merged.begin(), merged.end(), [](auto& a, auto& b) { return a.first > b.first; });
  std::vector<ColoredBead> out;
  for (size_t i = 0; i < merged.size(); ++i) {
    if (i + 1 < merged.size() && merged[i].first == merged[i + 1].first) {
      ++i;  // equal parts cancel (a doubly occupied column)
      continue;
    }
    int label = 0;
    for (const auto& [v, c] : merged)
      if (v > merged[i].first) ++label;
    out.push_back(ColoredBead{merged[i].second, label});
  }
  std::reverse(out.begin(), out.end());  // left to right = ascending part
  return out;
}

}  // namespace llt
