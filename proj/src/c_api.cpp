#include "llt/llt_c.h"

#include <cstdio>
#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "llt/json_io.hpp"
#include "llt/lattice.hpp"
#include "llt/poly.hpp"
#include "llt/relations.hpp"
#include "llt/render.hpp"
#include "llt/shapes.hpp"
#include "llt/swap.hpp"
#include "llt/tableaux.hpp"
#include "llt/verify.hpp"

struct llt_tuple {
  llt::ShapeTuple value;
};
struct llt_poly {
  llt::Polynomial value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
llt_status guarded(Fn&& fn) {
  try {
    fn();
    return LLT_OK;
  } catch (const llt::schema_error& e) {
    g_last_error = e.what();
    return LLT_E_SCHEMA;
  } catch (const llt::precondition_error& e) {
    g_last_error = e.what();
    return LLT_E_PRECONDITION;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LLT_E_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* llt_last_error(void) { return g_last_error.c_str(); }

void llt_free_string(char* s) { std::free(s); }

llt_status llt_tuple_parse(const char* json, llt_tuple** out) {
  if (!json || !out) return LLT_E_NULLARG;
  return guarded([&] {
    *out = new llt_tuple{llt::tuple_from_json_value(llt::parse_json(json))};
  });
}

llt_status llt_job_parse(const char* json, llt_tuple** out, int* n_out) {
  if (!json || !out || !n_out) return LLT_E_NULLARG;
  return guarded([&] {
    const llt::json j = llt::parse_json(json);
    const llt::json& tv = (j.is_object() && j.contains("tuple")) ? j["tuple"] : j;
    *out = new llt_tuple{llt::tuple_from_json_value(tv)};
    *n_out = -1;
    if (j.is_object() && j.contains("n")) {
      if (!j["n"].is_number_integer() || j["n"].get<int>() < 1) {
        delete *out;
        *out = nullptr;
        throw llt::schema_error("\"n\" must be a positive integer");
      }
      *n_out = j["n"].get<int>();
    }
  });
}

llt_status llt_tuple_to_json(const llt_tuple* t, char** out) {
  if (!t || !out) return LLT_E_NULLARG;
  return guarded([&] { *out = dup_string(llt::tuple_to_json(t->value).dump()); });
}

void llt_tuple_free(llt_tuple* t) { delete t; }

llt_status llt_poly_parse(const char* json, llt_poly** out) {
  if (!json || !out) return LLT_E_NULLARG;
  return guarded([&] { *out = new llt_poly{llt::poly_from_json(llt::parse_json(json))}; });
}

llt_status llt_poly_to_json(const llt_poly* p, char** out) {
  if (!p || !out) return LLT_E_NULLARG;
  return guarded([&] { *out = dup_string(llt::poly_to_json(p->value).dump()); });
}

llt_status llt_poly_to_text(const llt_poly* p, int grouped, char** out) {
  if (!p || !out) return LLT_E_NULLARG;
  return guarded([&] {
    *out = dup_string(grouped ? llt::render_poly_grouped(p->value) : p->value.to_string());
  });
}

int llt_poly_equal(const llt_poly* p, const llt_poly* q) {
  if (!p || !q) return 0;
  return p->value == q->value ? 1 : 0;
}

void llt_poly_free(llt_poly* p) { delete p; }

llt_status llt_compute(const llt_tuple* t, int n, int workers, llt_poly** out) {
  if (!t || !out) return LLT_E_NULLARG;
  return guarded([&] { *out = new llt_poly{llt::llt_poly(t->value, n, workers)}; });
}

llt_status llt_partition_function(const llt_tuple* t, int n, int workers, llt_poly** out) {
  if (!t || !out) return LLT_E_NULLARG;
  return guarded([&] { *out = new llt_poly{llt::partition_function(t->value, n, workers)}; });
}

llt_status llt_lattice_report(const llt_tuple* t, int n, int workers, int include_configs,
                              char** json_out) {
  if (!t || !json_out) return LLT_E_NULLARG;
  return guarded([&] {
    llt::json j;
    j["tuple"] = llt::tuple_to_json(t->value);
    j["n"] = n;
    j["partition_function"] = llt::poly_to_json(llt::partition_function(t->value, n, workers));
    j["config_count"] = llt::config_count(t->value, n);
    if (include_configs) {
      llt::json cfgs = llt::json::array();
      llt::for_each_config(t->value, n, [&](const llt::LatticeConfig& c) {
        cfgs.push_back(llt::config_to_json(c));
      });
      j["configs"] = std::move(cfgs);
    }
    *json_out = dup_string(j.dump());
  });
}

llt_status llt_swap_report(const llt_tuple* t, int n, int workers, int include_configs,
                           char** json_out) {
  if (!t || !json_out) return LLT_E_NULLARG;
  (void)workers;
  return guarded([&] {
    const llt::BeadSequence beads = llt::bead_sequence(t->value);
    llt::json j;
    j["tuple"] = llt::tuple_to_json(t->value);
    j["swapped"] = llt::tuple_to_json(llt::swap_adjacent(t->value, 1));
    j["beads"] = llt::beads_to_json(beads);
    const auto ms = llt::enumerate_noncrossing_matchings(beads);
    j["matching_count"] = ms.size();
    j["unique"] = (ms.size() == 1);
    const auto s = llt::swap_equivalence_check(t->value, n);
    j["exponent"] = s ? llt::json(*s) : llt::json(nullptr);
    j["identity_checked"] = s.has_value();
    if (include_configs) {
      llt::json cfgs = llt::json::array();
      llt::for_each_config(t->value, n, [&](const llt::LatticeConfig& c) {
        llt::json e;
        e["weight_change"] = llt::weight_change(c);
        e["matching"] = llt::matching_to_json(llt::bead_sequence_of_config(c),
                                              llt::induced_matching(c));
        llt::json walks = llt::json::array();
        for (const auto& w : llt::all_walks(c)) walks.push_back(llt::walk_to_json(w));
        e["walks"] = std::move(walks);
        e["phi"] = llt::config_to_json(llt::phi(c));
        cfgs.push_back(std::move(e));
      });
      j["configs"] = std::move(cfgs);
    }
    *json_out = dup_string(j.dump());
  });
}

llt_status llt_beads_report(const llt_tuple* t, char** json_out) {
  if (!t || !json_out) return LLT_E_NULLARG;
  return guarded([&] {
    *json_out = dup_string(llt::beads_to_json(llt::bead_sequence(t->value)).dump());
  });
}

llt_status llt_matchings_report(const llt_tuple* t, char** json_out) {
  if (!t || !json_out) return LLT_E_NULLARG;
  return guarded([&] {
    const llt::BeadSequence beads = llt::bead_sequence(t->value);
    const auto ms = llt::enumerate_noncrossing_matchings(beads);
    llt::json arr = llt::json::array();
    for (const auto& m : ms) arr.push_back(llt::matching_to_json(beads, m));
    llt::json j;
    j["beads"] = llt::beads_to_json(beads);
    j["matchings"] = std::move(arr);
    j["unique"] = llt::has_unique_matching(beads);
    j["classified_unique"] = llt::classify_unique(beads);
    j["exists"] = llt::matching_exists_criterion(beads);
    *json_out = dup_string(j.dump());
  });
}

llt_status llt_relations_report(const char* input_json, int n, int workers, char** json_out) {
  if (!input_json || !json_out) return LLT_E_NULLARG;
  (void)workers;
  return guarded([&] {
    const llt::json in = llt::parse_json(input_json);
    if (!in.contains("family")) throw llt::schema_error("relations input needs a \"family\"");
    std::vector<llt::ShapeTuple> family;
    std::vector<llt::Matching> order;
    if (in["family"].is_object() && in["family"].contains("values")) {
      const auto values = in["family"]["values"].get<std::vector<int>>();
      order = llt::canonical_matchings(static_cast<int>(values.size()));
      for (const auto& m : order)
        family.push_back(
            llt::catalan_member(values, llt::canonical_coloring(m, static_cast<int>(values.size()))));
      for (const auto& t : llt::catalan_family(values)) {
        bool seen = false;
        for (const auto& f : family)
          if (f == t) seen = true;
        if (!seen) family.push_back(t);
      }
    } else if (in["family"].is_array()) {
      for (const auto& jt : in["family"]) family.push_back(llt::tuple_from_json_value(jt));
    } else {
      throw llt::schema_error("\"family\" must be a values object or a tuple list");
    }
    llt::TransferMatrix M = llt::transfer_matrix(family, n, order);
    llt::json j = llt::matrix_to_json(M);
    llt::json fam = llt::json::array();
    for (const auto& t : family) fam.push_back(llt::tuple_to_json(t));
    j["family"] = std::move(fam);
    llt::json gs = llt::json::array();
    const size_t cn = M.order.size();
    std::vector<llt::Polynomial> llts;
    for (size_t i = 0; i < cn && i < family.size(); ++i)
      llts.push_back(llt::llt_poly(family[i], n));
    if (llts.size() == cn) {
      llt::TransferMatrix square;
      square.order = M.order;
      for (size_t i = 0; i < cn; ++i)
        square.entries.push_back(std::vector<std::optional<long>>(
            M.entries[i].begin(), M.entries[i].begin() + cn));
      for (const auto& g : llt::solve_g(square, llts)) gs.push_back(llt::poly_to_json(g));
    }
    j["g"] = std::move(gs);
    *json_out = dup_string(j.dump());
  });
}

llt_status llt_render(const llt_tuple* t, int n, const char* what, const char* format,
                      char** out) {
  if (!t || !what || !format || !out) return LLT_E_NULLARG;
  return guarded([&] {
    const std::string w = what, f = format;
    const bool svg = f == "svg";
    if (!svg && f != "tikz") throw llt::schema_error("format must be svg or tikz");
    std::string result;
    if (w == "lattice" || w == "walks") {
      llt::LatticeConfig first;
      bool got = false;
      llt::for_each_config(t->value, n, [&](const llt::LatticeConfig& c) {
        if (!got) {
          first = c;
          got = true;
        }
      });
      if (!got) throw llt::precondition_error("no configuration to draw");
      std::vector<llt::Walk> overlay;
      if (w == "walks") overlay = llt::all_walks(first);
      result = svg ? llt::config_to_svg(first, overlay) : llt::config_to_tikz(first, overlay);
    } else if (w == "beads" || w == "matching") {
      const llt::BeadSequence beads = llt::bead_sequence(t->value);
      const llt::Matching* mp = nullptr;
      llt::Matching m;
      if (w == "matching") {
        const auto ms = llt::enumerate_noncrossing_matchings(beads);
        if (ms.empty()) throw llt::precondition_error("no matching to draw");
        m = ms.front();
        mp = &m;
      }
      result = svg ? llt::beads_to_svg(beads, mp) : llt::beads_to_tikz(beads, mp);
    } else {
      throw llt::schema_error("unknown render target");
    }
    *out = dup_string(result);
  });
}

llt_status llt_verify(const char* corpus, int workers, int stream, char** report_json,
                      int* all_passed) {
  if (!corpus || !report_json || !all_passed) return LLT_E_NULLARG;
  return guarded([&] {
    auto progress = [&](const llt::CheckResult& r) {
      if (stream)
        std::fprintf(stderr, "[%s] %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                     r.detail.c_str());
    };
    const auto results = llt::run_corpus(corpus, workers, progress);
    llt::json arr = llt::json::array();
    bool ok = true;
    for (const auto& r : results) {
      ok = ok && r.passed;
      arr.push_back(llt::json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    *all_passed = ok ? 1 : 0;
    *report_json = dup_string(llt::json{{"corpus", corpus}, {"checks", arr}}.dump());
  });
}

}  // extern "C"
