// Command-line front end for the LLT engine, on top of the C API.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "llt/llt_c.h"

namespace {

int fail(llt_status st) {
  std::cerr << "error: " << llt_last_error() << "\n";
  return static_cast<int>(st);
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(2);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct TupleHandle {
  llt_tuple* t = nullptr;
  ~TupleHandle() { llt_tuple_free(t); }
};

struct PolyHandle {
  llt_poly* p = nullptr;
  ~PolyHandle() { llt_poly_free(p); }
};

struct StringOut {
  char* s = nullptr;
  ~StringOut() { llt_free_string(s); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coinversion LLT engine: tableau and vertex-model routes, "
               "partition swapping, bead matchings, linear relations"};
  app.require_subcommand(1);

  std::string input = "-";
  int n = 0;
  std::string format = "json";
  int workers = 1;
  bool include_configs = false;
  std::string corpus = "all";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "input file or - for stdin");
    sub->add_option("--n", n, "alphabet size / row count (overrides the input's n)");
    sub->add_option("--format", format, "json|text|svg|tikz");
    sub->add_option("--workers", workers, "parallel enumeration workers");
  };

  auto* c_compute = app.add_subcommand("compute", "coinversion LLT polynomial via tableaux");
  add_common(c_compute);
  auto* c_lattice = app.add_subcommand("lattice", "partition function via the vertex model");
  add_common(c_lattice);
  c_lattice->add_flag("--configs", include_configs, "include every configuration");
  auto* c_swap = app.add_subcommand("swap", "partition-swapping analysis");
  add_common(c_swap);
  c_swap->add_flag("--configs", include_configs, "include per-configuration walks and phi");
  auto* c_beads = app.add_subcommand("beads", "bead sequence of the boundary");
  add_common(c_beads);
  auto* c_match = app.add_subcommand("matchings", "non-crossing matchings and verdicts");
  add_common(c_match);
  auto* c_rel = app.add_subcommand("relations", "transfer matrix and g polynomials");
  add_common(c_rel);
  auto* c_verify = app.add_subcommand("verify", "run a named check corpus");
  c_verify->add_option("--corpus", corpus, "desk|identities|swap|beads|catalan|symmetry|all");
  c_verify->add_option("--workers", workers, "parallel workers");

  CLI11_PARSE(app, argc, argv);

  if (c_verify->parsed()) {
    StringOut report;
    int all_passed = 0;
    llt_status st = llt_verify(corpus.c_str(), workers, 1, &report.s, &all_passed);
    if (st != LLT_OK) return fail(st);
    std::cout << report.s << "\n";
    return all_passed ? 0 : 4;
  }

  const std::string text = read_input(input);

  if (c_rel->parsed()) {
    if (n < 1) {
      std::cerr << "error: relations needs --n\n";
      return 2;
    }
    StringOut out;
    llt_status st = llt_relations_report(text.c_str(), n, workers, &out.s);
    if (st != LLT_OK) return fail(st);
    std::cout << out.s << "\n";
    return 0;
  }

  TupleHandle tuple;
  int env_n = -1;
  {
    llt_status st = llt_job_parse(text.c_str(), &tuple.t, &env_n);
    if (st != LLT_OK) return fail(st);
  }
  if (n < 1) n = env_n;
  const bool needs_n = c_compute->parsed() || c_lattice->parsed() || c_swap->parsed();
  if (needs_n && n < 1) {
    std::cerr << "error: no alphabet size; pass --n or include \"n\" in the input\n";
    return 2;
  }

  if (c_compute->parsed() || c_lattice->parsed()) {
    if (c_lattice->parsed() && format == "json" && include_configs) {
      StringOut out;
      llt_status st = llt_lattice_report(tuple.t, n, workers, 1, &out.s);
      if (st != LLT_OK) return fail(st);
      std::cout << out.s << "\n";
      return 0;
    }
    if (format == "svg" || format == "tikz") {
      StringOut out;
      llt_status st = llt_render(tuple.t, n, "lattice", format.c_str(), &out.s);
      if (st != LLT_OK) return fail(st);
      std::cout << out.s;
      return 0;
    }
    PolyHandle poly;
    llt_status st = c_compute->parsed() ? llt_compute(tuple.t, n, workers, &poly.p)
                                        : llt_partition_function(tuple.t, n, workers, &poly.p);
    if (st != LLT_OK) return fail(st);
    StringOut out;
    st = (format == "text") ? llt_poly_to_text(poly.p, 1, &out.s)
                            : llt_poly_to_json(poly.p, &out.s);
    if (st != LLT_OK) return fail(st);
    std::cout << out.s << "\n";
    return 0;
  }

  if (c_swap->parsed()) {
    if (format == "svg" || format == "tikz") {
      StringOut out;
      llt_status st = llt_render(tuple.t, n, "walks", format.c_str(), &out.s);
      if (st != LLT_OK) return fail(st);
      std::cout << out.s;
      return 0;
    }
    StringOut out;
    llt_status st = llt_swap_report(tuple.t, n, workers, include_configs ? 1 : 0, &out.s);
    if (st != LLT_OK) return fail(st);
    std::cout << out.s << "\n";
    return 0;
  }

  // beads / matchings need no n
  if (format == "svg" || format == "tikz") {
    StringOut out;
    llt_status st = llt_render(tuple.t, n < 1 ? 1 : n, c_match->parsed() ? "matching" : "beads",
                               format.c_str(), &out.s);
    if (st != LLT_OK) return fail(st);
    std::cout << out.s;
    return 0;
  }
  StringOut out;
  llt_status st = c_beads->parsed() ? llt_beads_report(tuple.t, &out.s)
                                    : llt_matchings_report(tuple.t, &out.s);
  if (st != LLT_OK) return fail(st);
  std::cout << out.s << "\n";
  return 0;
}
