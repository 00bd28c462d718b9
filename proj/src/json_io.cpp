#include "llt/json_io.hpp"

#include <nlohmann/json.hpp>

namespace llt {

namespace {

json int_to_json(const Int& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw schema_error("coefficient must be an integer or decimal string");
}

}  // namespace

json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    t["t"] = m.t_exp;
    t["x"] = m.x_exps;
    t["c"] = int_to_json(c);
    terms.push_back(std::move(t));
  }
  return json{{"n", p.alphabet_size()}, {"terms", std::move(terms)}};
}

Polynomial poly_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Polynomial::Term> terms;
    for (const auto& t : j.at("terms")) {
      Monomial m;
      m.t_exp = t.at("t").get<long>();
      m.x_exps = t.at("x").get<std::vector<int>>();
      terms.push_back({std::move(m), int_from_json(t.at("c"))});
    }
    return Polynomial(n, std::move(terms));
  } catch (const json::exception& e) {
    throw schema_error(std::string("bad polynomial JSON: ") + e.what());
  }
}

json tuple_to_json(const ShapeTuple& t) {
  json shapes = json::array();
  for (const auto& s : t.shapes)
    shapes.push_back(json{{"outer", s.outer.parts}, {"inner", s.inner.parts}});
  return json{{"shapes", std::move(shapes)}};
}

ShapeTuple tuple_from_json_value(const json& j) {
  const json& arr = j.is_array() ? j : j.at("shapes");
  try {
    std::vector<SkewShape> shapes;
    for (const auto& s : arr) {
      Partition outer(s.at("outer").get<std::vector<int>>());
      Partition inner;
      if (s.contains("inner"))
        inner = Partition(s.at("inner").get<std::vector<int>>());
      else
        inner = Partition(std::vector<int>(outer.parts.size(), 0));
      shapes.emplace_back(std::move(outer), std::move(inner));
    }
    return ShapeTuple(std::move(shapes));
  } catch (const json::exception& e) {
    throw schema_error(std::string("bad shape tuple JSON: ") + e.what());
  } catch (const precondition_error& e) {
    throw schema_error(std::string("bad shape tuple: ") + e.what());
  }
}

ShapeTuple tuple_from_json(const json& j) { return tuple_from_json_value(j); }

namespace {

json mask_to_json(ColorMask m) {
  json a = json::array();
  for (int c = 0; m != 0; ++c, m >>= 1)
    if (m & 1) a.push_back(c + 1);
  return a;
}

}  // namespace

json config_to_json(const LatticeConfig& cfg) {
  json faces = json::array();
  for (int r = 0; r < cfg.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < cfg.cols; ++c) {
      const Face f = cfg.face(r, c);
      row.push_back(json::array(
          {mask_to_json(f.I), mask_to_json(f.J), mask_to_json(f.K), mask_to_json(f.L)}));
    }
    faces.push_back(std::move(row));
  }
  return json{{"k", cfg.k},
              {"rows", cfg.rows},
              {"cols", cfg.cols},
              {"col_offset", cfg.col_offset},
              {"faces", std::move(faces)}};
}

namespace {

json bead_to_json(const BoundaryBead& b) {
  return json{{"row", b.boundary == BoundarySide::top ? "top" : "bottom"},
              {"column", b.column},
              {"content", b.content},
              {"color", b.color == kBlue ? "blue" : "red"},
              {"label", b.label}};
}

}  // namespace

json beads_to_json(const BeadSequence& b) {
  json top = json::array(), bottom = json::array();
  for (const auto& x : b.top) top.push_back(bead_to_json(x));
  for (const auto& x : b.bottom) bottom.push_back(bead_to_json(x));
  return json{{"top", std::move(top)}, {"bottom", std::move(bottom)}};
}

json matching_to_json(const BeadSequence& beads, const Matching& m) {
  json arcs = json::array();
  for (const auto& [a, b] : m.arcs)
    arcs.push_back(json::array({bead_to_json(beads.at(a)), bead_to_json(beads.at(b))}));
  return json{{"arcs", std::move(arcs)}};
}

json walk_to_json(const Walk& w) {
  json edges = json::array();
  for (size_t i = 0; i < w.edges.size(); ++i) {
    const EdgeRef& e = w.edges[i];
    edges.push_back(json{{"kind", e.kind == EdgeRef::V ? "v" : "h"},
                         {"r", e.r},
                         {"c", e.c},
                         {"color", w.edge_colors[i] == kBlue ? "blue" : "red"}});
  }
  return json{{"start", bead_to_json(w.start)},
              {"end", bead_to_json(w.end)},
              {"segments", w.segments},
              {"switches", w.switch_seq},
              {"edges", std::move(edges)}};
}

json matrix_to_json(const TransferMatrix& m) {
  json order = json::array();
  for (const auto& match : m.order) {
    json arcs = json::array();
    for (const auto& [a, b] : match.arcs) arcs.push_back(json::array({a, b}));
    order.push_back(std::move(arcs));
  }
  json rows = json::array();
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const auto& e : row)
      r.push_back(e ? json{{"exp", *e}} : json(nullptr));
    rows.push_back(std::move(r));
  }
  return json{{"order", std::move(order)}, {"rows", std::move(rows)}};
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw schema_error("input is not valid JSON");
  return j;
}

}  // namespace llt
