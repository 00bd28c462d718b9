#include "llt/render.hpp"

#include <map>
#include <sstream>

namespace llt {

std::string render_poly_grouped(const Polynomial& p) {
  if (p.is_zero()) return "0";
  // canonical order already groups equal x-monomials consecutively
  std::ostringstream os;
  const auto& terms = p.terms();
  size_t i = 0;
  bool first_group = true;
  while (i < terms.size()) {
    size_t j = i;
    while (j < terms.size() && terms[j].first.x_exps == terms[i].first.x_exps) ++j;
    std::string xs;
    for (int v = 0; v < p.alphabet_size(); ++v) {
      const int e = terms[i].first.x_exps[v];
      if (e == 0) continue;
      if (!xs.empty()) xs += "*";
      xs += "x" + std::to_string(v + 1);
      if (e != 1) xs += "^" + std::to_string(e);
    }
    std::ostringstream coeff;
    bool single = (j - i == 1);
    for (size_t k = i; k < j; ++k) {
      const auto& [m, c] = terms[k];
      if (k > i) coeff << (c < 0 ? " - " : " + ");
      else if (c < 0) coeff << "-";
      const Int a = c < 0 ? Int(-c) : c;
      std::string tp;
      if (m.t_exp == 1) tp = "t";
      else if (m.t_exp != 0) tp = "t^" + std::to_string(m.t_exp);
      if (a != 1 || tp.empty()) {
        coeff << a.str();
        if (!tp.empty()) coeff << "*";
      }
      coeff << tp;
    }
    if (!first_group) os << " + ";
    first_group = false;
    std::string cs = coeff.str();
    if (xs.empty()) {
      os << cs;
    } else if (single && (cs == "1")) {
      os << xs;
    } else if (single && cs.find(' ') == std::string::npos) {
      os << cs << "*" << xs;
    } else {
      os << "(" << cs << ")*" << xs;
    }
    i = j;
  }
  return os.str();
}

namespace {

struct Pt {
  double x, y;
};

// Per-column drawing offsets: blue 0.4, red 0.6.
double color_offset(ColorMask c) { return c == kBlue ? 0.4 : 0.6; }

// Collect one color's edges as drawable unit segments.
void color_segments(const LatticeConfig& cfg, ColorMask color, std::vector<std::pair<Pt, Pt>>& out) {
  const double off = color_offset(color);
  const double hoff = color == kBlue ? 0.6 : 0.4;  // horizontal run height
  for (int r = 0; r <= cfg.rows; ++r)
    for (int c = 0; c < cfg.cols; ++c)
      if (cfg.v_edges[r][c] & color) {
        // vertical through the edge below row r
        const double x = c + off;
        const double y0 = (r == 0) ? 0.0 : r - 1 + hoff;
        const double y1 = (r == cfg.rows) ? cfg.rows : r + hoff;
        out.push_back({{x, y0}, {x, y1}});
      }
  for (int r = 0; r < cfg.rows; ++r)
    for (int c = 1; c < cfg.cols; ++c)
      if (cfg.h_edges[r][c] & color)
        out.push_back({{c - 1 + off, r + hoff}, {c + off, r + hoff}});
}

}  // namespace

std::string config_to_svg(const LatticeConfig& cfg, const std::vector<Walk>& overlay) {
  const double S = 40.0;  // px per cell
  const double H = cfg.rows * S, W = cfg.cols * S;
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W + 40 << "' height='" << H + 40
     << "' viewBox='-20 -20 " << W + 40 << " " << H + 40 << "'>\n";
  auto X = [&](double x) { return x * S; };
  auto Y = [&](double y) { return H - y * S; };  // flip: row 0 at the bottom
  os << "<g stroke='#cccccc' stroke-width='1'>\n";
  for (int c = 0; c <= cfg.cols; ++c)
    os << "<line x1='" << X(c) << "' y1='" << Y(0) << "' x2='" << X(c) << "' y2='" << Y(cfg.rows)
       << "'/>\n";
  for (int r = 0; r <= cfg.rows; ++r)
    os << "<line x1='" << X(0) << "' y1='" << Y(r) << "' x2='" << X(cfg.cols) << "' y2='" << Y(r)
       << "'/>\n";
  os << "</g>\n";
  for (ColorMask color : {kBlue, kRed}) {
    std::vector<std::pair<Pt, Pt>> segs;
    color_segments(cfg, color, segs);
    os << "<g stroke='" << (color == kBlue ? "#1f4fd8" : "#d82020")
       << "' stroke-width='2' fill='none'>\n";
    for (const auto& [a, b] : segs)
      os << "<line x1='" << X(a.x) << "' y1='" << Y(a.y) << "' x2='" << X(b.x) << "' y2='"
         << Y(b.y) << "'/>\n";
    os << "</g>\n";
  }
  for (const Walk& w : overlay) {
    os << "<g stroke='#000000' stroke-width='4' stroke-opacity='0.25' fill='none'>\n";
    for (size_t i = 0; i < w.edges.size(); ++i) {
      const EdgeRef& e = w.edges[i];
      const double off = color_offset(w.edge_colors[i]);
      const double hoff = w.edge_colors[i] == kBlue ? 0.6 : 0.4;
      if (e.kind == EdgeRef::V) {
        const double x = e.c + off;
        const double y0 = (e.r == 0) ? 0.0 : e.r - 1 + hoff;
        const double y1 = (e.r == cfg.rows) ? cfg.rows : e.r + hoff;
        os << "<line x1='" << X(x) << "' y1='" << Y(y0) << "' x2='" << X(x) << "' y2='" << Y(y1)
           << "'/>\n";
      } else {
        os << "<line x1='" << X(e.c - 1 + off) << "' y1='" << Y(e.r + hoff) << "' x2='"
           << X(e.c + off) << "' y2='" << Y(e.r + hoff) << "'/>\n";
      }
    }
    os << "</g>\n";
  }
  // column content labels
  os << "<g font-size='12' text-anchor='middle'>\n";
  for (int c = 0; c < cfg.cols; ++c)
    os << "<text x='" << X(c + 0.5) << "' y='" << Y(cfg.rows) - 6 << "'>" << cfg.col_offset + c
       << "</text>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string config_to_tikz(const LatticeConfig& cfg, const std::vector<Walk>& overlay) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}\n";
  os << "\\draw[help lines] (0,0) grid (" << cfg.cols << "," << cfg.rows << ");\n";
  for (ColorMask color : {kBlue, kRed}) {
    std::vector<std::pair<Pt, Pt>> segs;
    color_segments(cfg, color, segs);
    for (const auto& [a, b] : segs)
      os << "\\draw[" << (color == kBlue ? "blue" : "red") << "] (" << a.x << "," << a.y
         << ")--(" << b.x << "," << b.y << ");\n";
  }
  for (const Walk& w : overlay)
    for (size_t i = 0; i < w.edges.size(); ++i) {
      const EdgeRef& e = w.edges[i];
      const double off = color_offset(w.edge_colors[i]);
      const double hoff = w.edge_colors[i] == kBlue ? 0.6 : 0.4;
      os << "\\draw[" << (w.edge_colors[i] == kBlue ? "blue" : "red") << ", ultra thick] ";
      if (e.kind == EdgeRef::V) {
        const double x = e.c + off;
        const double y0 = (e.r == 0) ? 0.0 : e.r - 1 + hoff;
        const double y1 = (e.r == cfg.rows) ? cfg.rows : e.r + hoff;
        os << "(" << x << "," << y0 << ")--(" << x << "," << y1 << ");\n";
      } else {
        os << "(" << e.c - 1 + off << "," << e.r + hoff << ")--(" << e.c + off << "," << e.r + hoff
           << ");\n";
      }
    }
  for (int c = 0; c < cfg.cols; ++c)
    os << "\\node[above] at (" << c + 0.5 << "," << cfg.rows << ") {$" << cfg.col_offset + c
       << "$};\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

namespace {

// Bead layout positions within the cyclic order.
std::vector<Pt> bead_points(const BeadSequence& beads) {
  std::vector<Pt> pts;
  for (size_t i = 0; i < beads.top.size(); ++i) pts.push_back({double(i), 2.0});
  for (size_t i = 0; i < beads.bottom.size(); ++i)
    pts.push_back({double(beads.bottom.size() - 1 - i), 0.0});
  return pts;
}

}  // namespace

std::string beads_to_svg(const BeadSequence& beads, const Matching* matching) {
  const double S = 36.0;
  const size_t w = std::max(beads.top.size(), beads.bottom.size());
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << (w + 1) * S + 40 << "' height='"
     << 3 * S + 60 << "' viewBox='-20 -30 " << (w + 1) * S + 40 << " " << 3 * S + 60 << "'>\n";
  auto X = [&](double x) { return (x + 0.5) * S; };
  auto Y = [&](double y) { return (2.5 - y) * S; };
  const auto pts = bead_points(beads);
  os << "<g stroke='#999999' stroke-dasharray='4 3'>\n";
  os << "<line x1='" << X(-0.5) << "' y1='" << Y(2) << "' x2='" << X(w - 0.5) << "' y2='" << Y(2)
     << "'/>\n";
  if (!beads.bottom.empty())
    os << "<line x1='" << X(-0.5) << "' y1='" << Y(0) << "' x2='" << X(w - 0.5) << "' y2='"
       << Y(0) << "'/>\n";
  os << "</g>\n";
  if (matching) {
    os << "<g stroke='#000000' fill='none'>\n";
    for (const auto& [a, b] : matching->arcs) {
      const Pt pa = pts[a], pb = pts[b];
      // arcs stay between the rows
      const double ya = Y(pa.y), yb = Y(pb.y);
      const double bend = (pa.y == pb.y) ? (pa.y == 2.0 ? +S : -S) * (std::abs(pa.x - pb.x) / 2.0)
                                         : 0.0;
      os << "<path d='M " << X(pa.x) << " " << ya << " C " << X(pa.x) << " " << ya + bend << ", "
         << X(pb.x) << " " << yb + bend << ", " << X(pb.x) << " " << yb << "'/>\n";
    }
    os << "</g>\n";
  }
  for (int p = 0; p < beads.size(); ++p) {
    const BoundaryBead& b = beads.at(p);
    const Pt pt = pts[p];
    os << "<circle cx='" << X(pt.x) << "' cy='" << Y(pt.y) << "' r='5' fill='"
       << (b.color == kBlue ? "#1f4fd8" : "#d82020") << "'/>\n";
    os << "<text x='" << X(pt.x) << "' y='" << Y(pt.y) + (pt.y == 2.0 ? -10 : 20)
       << "' font-size='12' text-anchor='middle'>" << b.label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string beads_to_tikz(const BeadSequence& beads, const Matching* matching) {
  std::ostringstream os;
  const auto pts = bead_points(beads);
  os << "\\begin{tikzpicture}\n";
  const double w = std::max(beads.top.size(), beads.bottom.size());
  os << "\\draw[dashed] (-0.5,2)--(" << w - 0.5 << ",2);\n";
  if (!beads.bottom.empty()) os << "\\draw[dashed] (-0.5,0)--(" << w - 0.5 << ",0);\n";
  if (matching)
    for (const auto& [a, b] : matching->arcs) {
      const Pt pa = pts[a], pb = pts[b];
      if (pa.y == pb.y) {
        const double r = std::abs(pa.x - pb.x) / 2.0;
        if (pa.y == 2.0)
          os << "\\draw (" << std::min(pa.x, pb.x) << ",2) arc(180:360:" << r << ");\n";
        else
          os << "\\draw (" << std::max(pa.x, pb.x) << ",0) arc(0:180:" << r << ");\n";
      } else {
        os << "\\draw (" << pa.x << "," << pa.y << ")--(" << pb.x << "," << pb.y << ");\n";
      }
    }
  for (int p = 0; p < beads.size(); ++p) {
    const BoundaryBead& b = beads.at(p);
    const Pt pt = pts[p];
    const char* col = b.color == kBlue ? "blue" : "red";
    os << "\\draw[" << col << ", fill=" << col << "] (" << pt.x << "," << pt.y
       << ") circle (3pt);\n";
    os << "\\node[" << (pt.y == 2.0 ? "above" : "below") << "] at (" << pt.x << "," << pt.y
       << ") {" << b.label << "};\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace llt
