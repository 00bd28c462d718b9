#include "llt/verify.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "llt/lattice.hpp"
#include "llt/relations.hpp"
#include "llt/swap.hpp"
#include "llt/tableaux.hpp"

namespace llt {

namespace {

std::vector<Partition> small_partitions() {
  std::vector<Partition> out;
  for (int a = 0; a <= 3; ++a) out.push_back(Partition{a});
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= a; ++b) out.push_back(Partition{a, b});
  return out;
}

std::vector<SkewShape> small_skews() {
  std::vector<SkewShape> out;
  const auto parts = small_partitions();
  for (const auto& beta : parts)
    for (const auto& gamma : parts) {
      if (beta.length() != gamma.length()) continue;
      bool ok = true;
      for (int r = 1; r <= beta.length(); ++r)
        if (gamma.part(r) > beta.part(r)) ok = false;
      if (ok) out.emplace_back(beta, gamma);
    }
  return out;
}

// Run fn(i) for i in [0, count) over `workers` threads; failures are
// collected per index so reporting stays deterministic.
void parallel_for(long count, int workers,
                  const std::function<void(long)>& fn) {
  if (workers <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const long i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& t : pool) t.join();
}

struct FailureLog {
  std::mutex mu;
  std::vector<std::string> items;
  void add(std::string s) {
    std::lock_guard<std::mutex> lock(mu);
    if (items.size() < 8) items.push_back(std::move(s));
  }
  std::string summary(long total_cases) {
    std::lock_guard<std::mutex> lock(mu);
    std::ostringstream os;
    if (items.empty()) {
      os << total_cases << " cases";
      return os.str();
    }
    os << items.size() << "+ failures out of " << total_cases << " cases; first: " << items[0];
    return os.str();
  }
  bool ok() {
    std::lock_guard<std::mutex> lock(mu);
    return items.empty();
  }
};

CheckResult criterion_oracle_equivalence(int workers) {
  const auto corpus = desk_corpus();
  FailureLog log;
  std::atomic<long> cases{0};
  parallel_for(static_cast<long>(corpus.size()), workers, [&](long idx) {
    const ShapeTuple& t = corpus[idx];
    for (int n = 1; n <= 3; ++n) {
      ++cases;
      try {
        if (partition_function(t, n) != llt_poly(t, n))
          log.add("Z != L for " + to_string(t) + " n=" + std::to_string(n));
      } catch (const std::exception& e) {
        log.add(to_string(t) + " n=" + std::to_string(n) + ": " + e.what());
      }
    }
  });
  return {"criterion 1: oracle equivalence Z == L on the desk corpus", log.ok(),
          log.summary(cases.load())};
}

CheckResult criterion_running_example() {
  const ShapeTuple t{SkewShape::straight(Partition{8, 7, 6}),
                     SkewShape(Partition{4, 3, 2}, Partition{2, 0, 0})};
  try {
    const auto s = swap_equivalence_check(t, 3);
    if (!s) return {"criterion 2: running example swap exponent", false, "no unique matching"};
    if (*s != 5)
      return {"criterion 2: running example swap exponent", false,
              "exponent " + std::to_string(*s) + " != 5"};
    return {"criterion 2: running example swap exponent", true,
            "exponent 5, identity L = t^5 L_swap exact"};
  } catch (const std::exception& e) {
    return {"criterion 2: running example swap exponent", false, e.what()};
  }
}

CheckResult criterion_small_relation() {
  std::ostringstream detail;
  bool ok = true;
  for (int n = 2; n <= 3; ++n) {
    if (!small_relation_check(n)) {
      ok = false;
      detail << "relation fails at n=" << n << "; ";
    }
    const ShapeTuple l1{SkewShape::straight(Partition{3, 3}), SkewShape::straight(Partition{1})};
    const ShapeTuple l1s{SkewShape::straight(Partition{1}), SkewShape::straight(Partition{3, 3})};
    if (llt_poly(l1, n) != scale_t(llt_poly(l1s, n), 2)) {
      ok = false;
      detail << "L_l1 != t^2 L_swapped at n=" << n << "; ";
    }
  }
  if (ok) detail << "L_l3 = t^-1 L_l1 + t L_l2 and L_l1 = t^2 L_((1),(3,3)) at n=2,3";
  return {"criterion 3: small relation of the three-tuple family", ok, detail.str()};
}

std::vector<ShapeTuple> five_family() {
  auto straight2 = [](std::vector<int> a, std::vector<int> b) {
    return ShapeTuple{SkewShape::straight(Partition(a)), SkewShape::straight(Partition(b))};
  };
  return {straight2({4, 4, 4}, {1, 1, 1}), straight2({4, 4, 3}, {2, 1, 1}),
          straight2({4, 4, 2}, {2, 2, 1}), straight2({4, 3, 3}, {3, 1, 1}),
          straight2({4, 3, 2}, {3, 2, 1})};
}

std::string matrix_to_text(const TransferMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m.entries) {
    os << "(";
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << ", ";
      if (!row[j])
        os << ".";
      else if (*row[j] == 0)
        os << "1";
      else
        os << "t^" << *row[j];
    }
    os << ") ";
  }
  return os.str();
}

std::vector<CheckResult> criterion_matrix_reproduction() {
  std::vector<CheckResult> out;
  const int n = 3;
  auto family = five_family();
  TransferMatrix M = transfer_matrix(family, n);

  // 4a: shape facts the data supports: unit diagonal, lower triangular,
  // row 1 = (1), row 4 = (0, t^-1, 0, 1, 0) with the blank (4,5) entry = 0.
  {
    bool ok = true;
    std::ostringstream d;
    for (int i = 0; i < 5; ++i) {
      if (!M.entries[i][i] || *M.entries[i][i] != 0) ok = false;
      for (int j = i + 1; j < 5; ++j)
        if (M.entries[i][j]) ok = false;
    }
    for (int j = 1; j < 5; ++j)
      if (M.entries[0][j]) ok = false;
    if (!(M.entries[3][1] && *M.entries[3][1] == -1 && !M.entries[3][0] && !M.entries[3][2] &&
          !M.entries[3][4]))
      ok = false;
    d << (ok ? "unit lower-triangular, row 4 = (0,t^-1,0,1,0), entry (4,5) = 0"
             : "computed: " + matrix_to_text(M));
    out.push_back({"criterion 4a: matrix shape, unit diagonal, entry (4,5) = 0", ok, d.str()});
  }

  // 4b: the reference entries, with the blank (4,5) read as 0.
  {
    using E = std::optional<long>;
    const E X = std::nullopt;
    const std::vector<std::vector<E>> reference = {{0L, X, X, X, X},
                                                   {1L, 0L, X, X, X},
                                                   {X, 1L, 0L, X, X},
                                                   {X, -1L, X, 0L, X},
                                                   {2L, -1L, 1L, -1L, 0L}};
    const bool ok = M.entries == reference;
    std::string d = ok ? "matches the reference table"
                       : "computed " + matrix_to_text(M) +
                             " vs reference (1|t,1|0,t,1|0,t^-1,0,1,0|t^2,t^-1,t,t^-1,1)";
    out.push_back({"criterion 4b: matrix equals the reference M(t) table", ok, d});
  }

  // 4c: g3 = L3 - t L2 + t^2 L1 with g3 taken from the configurations.
  {
    Polynomial g3 = Polynomial::zero(n);
    const auto order = canonical_matchings(6);
    for (const auto& cls : group_by_matching(family[2], n))
      if (cls.matching == order[2]) g3 = cls.g;
    const Polynomial rhs = add(sub(llt_poly(family[2], n), scale_t(llt_poly(family[1], n), 1)),
                               scale_t(llt_poly(family[0], n), 2));
    const bool ok = g3 == rhs;
    std::string d = ok ? "holds" : "fails; data supports g3 = L3 - t^-1 L2 + t^-2 L1";
    if (!ok) {
      const Polynomial alt = add(sub(llt_poly(family[2], n), scale_t(llt_poly(family[1], n), -1)),
                                 scale_t(llt_poly(family[0], n), -2));
      d += (g3 == alt) ? " (verified)" : " (UNEXPECTED: alternative also fails)";
    }
    out.push_back({"criterion 4c: reference relation g3 = L3 - t L2 + t^2 L1", ok, d});
  }

  // 4d: the lambda8 row.
  {
    auto fam = family;
    fam.push_back(ShapeTuple{SkewShape::straight(Partition{4, 2, 2}),
                             SkewShape::straight(Partition{3, 3, 1})});
    TransferMatrix M8 = transfer_matrix(fam, n);
    const auto& row = M8.entries[5];
    const bool ok = row[0] && *row[0] == -3 && !row[1] && !row[2] && !row[3] && row[4] &&
                    *row[4] == -1;
    out.push_back({"criterion 4d: L_lambda8 = t^-3 g1 + t^-1 g5", ok,
                   ok ? "holds" : "computed row: " + matrix_to_text(M8)});
  }
  return out;
}

CheckResult criterion_single_row_exchange() {
  const int sets[3][4] = {{1, 2, 2, 3}, {1, 2, 3, 4}, {1, 3, 3, 5}};
  std::ostringstream detail;
  bool ok = true;
  for (const auto& s : sets)
    for (int n = 2; n <= 3; ++n)
      if (!single_row_exchange_check(s[0], s[1], s[2], s[3], n)) {
        ok = false;
        detail << "fails at (" << s[0] << "," << s[1] << "," << s[2] << "," << s[3]
               << ") n=" << n << "; ";
      }
  if (ok) detail << "exact for all three parameter sets at n=2,3";
  return {"criterion 5: single-row exchange relation", ok, detail.str()};
}

void criterion_swap_and_walks(int workers, CheckResult& swap_res, CheckResult& walk_res) {
  const auto corpus = desk_corpus();
  std::vector<ShapeTuple> pairs;
  for (const auto& t : corpus)
    if (t.k() == 2) pairs.push_back(t);
  FailureLog swap_log, walk_log;
  std::atomic<long> configs{0}, walks{0};
  parallel_for(static_cast<long>(pairs.size()), workers, [&](long idx) {
    const ShapeTuple& t = pairs[idx];
    const ShapeTuple swapped = swap_adjacent(t, 1);
    for (int n = 1; n <= 3; ++n) {
      try {
        if (config_count(t, n) != config_count(swapped, n)) {
          swap_log.add("config counts differ for " + to_string(t) + " n=" + std::to_string(n));
          continue;
        }
        for_each_config(t, n, [&](const LatticeConfig& cfg) {
          ++configs;
          const auto ws = all_walks(cfg);
          for (const Walk& w : ws) {
            ++walks;
            if (!walk_statistics_check(w))
              walk_log.add("walk statistics fail in " + to_string(t) + " n=" + std::to_string(n));
          }
          const LatticeConfig img = flip_walks(cfg, ws);
          if (!config_valid(img, swapped))
            swap_log.add("phi image invalid for " + to_string(t) + " n=" + std::to_string(n));
          if (phi(img) != cfg)
            swap_log.add("phi round trip fails for " + to_string(t) + " n=" + std::to_string(n));
          const long direct =
              config_weight(cfg).t_exp - config_weight(img).t_exp;
          const long via_arcs =
              matching_weight(bead_sequence_of_config(cfg), matching_from_walks(
                                  bead_sequence_of_config(cfg), ws));
          if (direct != via_arcs)
            swap_log.add("weight law fails (" + std::to_string(direct) + " vs " +
                         std::to_string(via_arcs) + ") for " + to_string(t) +
                         " n=" + std::to_string(n));
        });
      } catch (const std::exception& e) {
        swap_log.add(to_string(t) + " n=" + std::to_string(n) + ": " + e.what());
      }
    }
  });
  swap_res = {"criterion 6: phi bijection and weight law on the k=2 corpus", swap_log.ok(),
              swap_log.summary(configs.load()) + " (configurations)"};
  walk_res = {"criterion 7: walk-statistics identities for every walk", walk_log.ok(),
              walk_log.summary(walks.load()) + " (walks)"};
}

CheckResult criterion_classification() {
  FailureLog log;
  long cases = 0;
  for (int total = 0; total <= 8; ++total) {
    for (int top = 0; top <= total; ++top) {
      const int bottom = total - top;
      for (unsigned colors = 0; colors < (1u << total); ++colors) {
        ++cases;
        BeadSequence b;
        for (int i = 0; i < top; ++i)
          b.top.push_back(BoundaryBead{BoundarySide::top, i, i,
                                       (colors >> i & 1) ? kRed : kBlue, top - 1 - i});
        for (int i = 0; i < bottom; ++i)
          b.bottom.push_back(BoundaryBead{BoundarySide::bottom, i, i,
                                          (colors >> (top + i) & 1) ? kRed : kBlue,
                                          bottom - 1 - i});
        const auto all = enumerate_noncrossing_matchings(b);
        if ((all.size() == 1) != classify_unique(b))
          log.add("uniqueness classification disagrees at top=" + std::to_string(top) +
                  " colors=" + std::to_string(colors));
        if (!all.empty() != matching_exists_criterion(b))
          log.add("existence criterion disagrees at top=" + std::to_string(top) +
                  " colors=" + std::to_string(colors));
      }
    }
  }
  return {"criterion 8: bead classification, exhaustive to 8 beads", log.ok(),
          log.summary(cases)};
}

CheckResult criterion_catalan() {
  FailureLog log;
  long members = 0;
  for (int n = 2; n <= 3; ++n) {
    std::vector<int> values;
    for (int v = 2 * n - 1; v >= 0; --v) values.push_back(v);
    const auto order = canonical_matchings(2 * n);
    std::vector<ShapeTuple> family;
    for (const auto& m : order)
      family.push_back(catalan_member(values, canonical_coloring(m, 2 * n)));
    for (const auto& t : catalan_family(values)) {
      bool seen = false;
      for (const auto& f : family)
        if (f == t) seen = true;
      if (!seen) family.push_back(t);
    }
    if (static_cast<long>(family.size()) !=
        static_cast<long>(catalan_family(values).size())) {
      log.add("family size mismatch at n=" + std::to_string(n));
      continue;
    }
    try {
      // transfer_matrix verifies the exact single-t-monomial reconstruction
      // for every member internally
      TransferMatrix M = transfer_matrix(family, n, order);
      members += static_cast<long>(family.size());
      const long cn = static_cast<long>(order.size());
      for (long i = 0; i < cn; ++i) {
        if (!M.entries[i][i] || *M.entries[i][i] != 0)
          log.add("diagonal not unit at n=" + std::to_string(n) + " i=" + std::to_string(i));
        for (long j = i + 1; j < cn; ++j)
          if (M.entries[i][j])
            log.add("upper entry present at n=" + std::to_string(n));
      }
      // g symmetry and the solve_g cross-check
      std::vector<Polynomial> llts;
      for (long i = 0; i < cn; ++i) llts.push_back(llt_poly(family[i], n));
      TransferMatrix square;
      square.order = order;
      for (long i = 0; i < cn; ++i)
        square.entries.push_back(
            std::vector<std::optional<long>>(M.entries[i].begin(), M.entries[i].begin() + cn));
      const auto g = solve_g(square, llts);
      for (long j = 0; j < cn; ++j) {
        if (!is_symmetric(g[j])) log.add("g not symmetric at n=" + std::to_string(n));
        Polynomial direct = Polynomial::zero(n);
        for (const auto& cls : group_by_matching(family[j], n))
          if (cls.matching == order[j]) direct = cls.g;
        if (g[j] != direct) log.add("solve_g disagrees with grouping at n=" + std::to_string(n));
      }
    } catch (const std::exception& e) {
      log.add(std::string("n=") + std::to_string(n) + ": " + e.what());
    }
  }
  return {"criterion 9: Catalan family decomposition at n=2,3", log.ok(), log.summary(members)};
}

CheckResult criterion_symmetry(int workers) {
  const auto corpus = desk_corpus();
  FailureLog log;
  std::atomic<long> cases{0};
  parallel_for(static_cast<long>(corpus.size()), workers, [&](long idx) {
    const ShapeTuple& t = corpus[idx];
    const long m = count_triples(t);
    for (int n = 1; n <= 3; ++n) {
      ++cases;
      try {
        const Polynomial L = llt_poly(t, n);
        if (!is_symmetric(L)) log.add("L not symmetric for " + to_string(t));
        const Polynomial G = inversion_llt(t, n);
        if (L != scale_t(substitute_t_inverse(G), m))
          log.add("inv-coinv round trip fails for " + to_string(t));
        if (!G.is_zero() && (G.min_t_exp() < 0 || G.max_t_exp() > m))
          log.add("inversion exponents out of [0, m] for " + to_string(t));
      } catch (const std::exception& e) {
        log.add(to_string(t) + ": " + e.what());
      }
    }
  });
  return {"criterion 10: symmetry and inversion round trip on the corpus", log.ok(),
          log.summary(cases.load())};
}

}  // namespace

std::vector<ShapeTuple> desk_corpus() {
  std::vector<ShapeTuple> out;
  const auto skews = small_skews();
  for (const auto& s : skews) out.push_back(ShapeTuple{s});
  for (const auto& a : skews)
    for (const auto& b : skews) out.push_back(ShapeTuple{a, b});
  return out;
}

std::vector<CheckResult> run_corpus(const std::string& name, int workers,
                                    const std::function<void(const CheckResult&)>& report) {
  std::vector<CheckResult> results;
  auto emit = [&](CheckResult r) {
    if (report) report(r);
    results.push_back(std::move(r));
  };
  const bool all = name == "all";
  if (all || name == "desk") emit(criterion_oracle_equivalence(workers));
  if (all || name == "identities") {
    emit(criterion_running_example());
    emit(criterion_small_relation());
    for (auto& r : criterion_matrix_reproduction()) emit(std::move(r));
    emit(criterion_single_row_exchange());
  }
  if (all || name == "swap") {
    CheckResult a, b;
    criterion_swap_and_walks(workers, a, b);
    emit(std::move(a));
    emit(std::move(b));
  }
  if (all || name == "beads") emit(criterion_classification());
  if (all || name == "catalan") emit(criterion_catalan());
  if (all || name == "symmetry") emit(criterion_symmetry(workers));
  if (results.empty()) throw precondition_error("unknown corpus: " + name);
  return results;
}

}  // namespace llt
