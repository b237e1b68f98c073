#include "bellgrid/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bellgrid {

namespace {

const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                           "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string term_label(const Scenario& sc, const SettingVector& s,
                       const std::vector<std::uint8_t>& o) {
  std::string lab = "P_";
  for (int p = 0; p < sc.parties(); ++p) lab += static_cast<char>('0' + s.s[p]);
  lab += '(';
  for (int p = 0; p < sc.parties(); ++p) {
    if (p > 0) lab += ',';
    lab += static_cast<char>('0' + o[p]);
  }
  lab += ')';
  return lab;
}

// A support is drawn as a line when it is a full row or column of the grid.
LayerStyle support_style(const Scenario& sc, const std::vector<std::size_t>& cells) {
  if (sc.settings() < 2) return LayerStyle::Line;
  bool same_row = true, same_col = true;
  GridIndex first = grid_from_flat(sc, cells.front());
  for (std::size_t cell : cells) {
    const GridIndex g = grid_from_flat(sc, cell);
    same_row = same_row && g.coords[0] == first.coords[0];
    same_col = same_col && g.coords[1] == first.coords[1];
  }
  return (same_row || same_col) && cells.size() == static_cast<std::size_t>(sc.axis_size())
             ? LayerStyle::Line
             : LayerStyle::Ribbon;
}

struct CellPos {
  int row, col, slice;
};

CellPos cell_pos(const Scenario& sc, std::size_t flat) {
  const GridIndex g = grid_from_flat(sc, flat);
  CellPos p{g.coords[0], sc.settings() >= 2 ? g.coords[1] : 0,
            sc.settings() >= 3 ? g.coords[2] : 0};
  return p;
}

const char* style_name(LayerStyle s) {
  switch (s) {
    case LayerStyle::Line: return "line";
    case LayerStyle::Ribbon: return "ribbon";
    case LayerStyle::DashedTarget: return "target";
  }
  return "?";
}

std::string emit_text(const GridDiagram& d, bool ascii) {
  const Scenario& sc = d.scenario;
  if (sc.settings() > 3) throw std::invalid_argument("emit: text rendering supports m <= 3");
  const int size = sc.axis_size();
  const int slices = sc.settings() >= 3 ? size : 1;
  const int width = std::max<int>(1, static_cast<int>(d.layers.size()));

  // membership[slice][row][col] -> string of layer letters
  std::vector<std::vector<std::vector<std::string>>> grid(
      slices, std::vector<std::vector<std::string>>(size, std::vector<std::string>(size,
                                                    std::string(width, '.'))));
  for (std::size_t li = 0; li < d.layers.size(); ++li) {
    const char letter = static_cast<char>('A' + (li % 26));
    for (std::size_t cell : d.layers[li].cells) {
      const CellPos p = cell_pos(sc, cell);
      grid[p.slice][p.row][p.col][li] = letter;
    }
  }

  const std::string v = ascii ? "|" : "│";
  const std::string h = ascii ? "-" : "─";
  std::string hline;
  for (int c = 0; c < size; ++c) {
    hline += ascii ? "+" : "┼";
    for (int k = 0; k < width; ++k) hline += h;
  }
  hline += ascii ? "+" : "┼";

  std::ostringstream out;
  for (int sl = 0; sl < slices; ++sl) {
    if (slices > 1) out << "slice i2=" << sl << "\n";
    out << hline << "\n";
    for (int r = 0; r < size; ++r) {
      out << v;
      for (int c = 0; c < size; ++c) out << grid[sl][r][c] << v;
      out << "\n" << hline << "\n";
    }
  }
  for (std::size_t li = 0; li < d.layers.size(); ++li) {
    out << static_cast<char>('A' + (li % 26)) << " = " << d.layers[li].label << " ["
        << style_name(d.layers[li].style) << "]\n";
  }
  return out.str();
}

std::string emit_svg(const GridDiagram& d) {
  const Scenario& sc = d.scenario;
  if (sc.settings() > 3) throw std::invalid_argument("emit: svg rendering supports m <= 3");
  const int size = sc.axis_size();
  const int slices = sc.settings() >= 3 ? size : 1;
  const int cellpx = 40;
  const int gap = 24;
  const int margin = 16;
  const int legend_h = 20 * static_cast<int>(d.layers.size()) + 16;
  const int w = margin * 2 + slices * size * cellpx + (slices - 1) * gap;
  const int hgt = margin * 2 + size * cellpx + legend_h;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << hgt
      << "\" viewBox=\"0 0 " << w << " " << hgt << "\">\n";
  auto slice_x = [&](int sl) { return margin + sl * (size * cellpx + gap); };

  // base grid
  for (int sl = 0; sl < slices; ++sl)
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c)
        out << "<rect x=\"" << slice_x(sl) + c * cellpx << "\" y=\"" << margin + r * cellpx
            << "\" width=\"" << cellpx << "\" height=\"" << cellpx
            << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

  for (std::size_t li = 0; li < d.layers.size(); ++li) {
    const auto& layer = d.layers[li];
    const char* color = kPalette[layer.color % 8];
    for (std::size_t cell : layer.cells) {
      const CellPos p = cell_pos(sc, cell);
      const int x = slice_x(p.slice) + p.col * cellpx;
      const int y = margin + p.row * cellpx;
      if (layer.style == LayerStyle::DashedTarget) {
        out << "<rect x=\"" << x + 4 << "\" y=\"" << y + 4 << "\" width=\"" << cellpx - 8
            << "\" height=\"" << cellpx - 8 << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"2\" stroke-dasharray=\"5,3\"/>\n";
      } else {
        out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cellpx << "\" height=\""
            << cellpx << "\" fill=\"" << color << "\" fill-opacity=\"0.35\"/>\n";
      }
    }
  }

  // legend
  for (std::size_t li = 0; li < d.layers.size(); ++li) {
    const auto& layer = d.layers[li];
    const int y = margin + size * cellpx + 24 + 20 * static_cast<int>(li);
    out << "<rect x=\"" << margin << "\" y=\"" << y - 10 << "\" width=\"12\" height=\"12\" fill=\""
        << kPalette[layer.color % 8] << "\" fill-opacity=\"0.6\"/>\n";
    out << "<text x=\"" << margin + 18 << "\" y=\"" << y << "\" font-family=\"monospace\" "
        << "font-size=\"13\">" << layer.label << " [" << style_name(layer.style) << "]</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

GridDiagram diagram_of_marginal(const Scenario& sc, const SettingVector& s,
                                const std::vector<std::uint8_t>& o) {
  GridDiagram d;
  d.scenario = sc;
  DiagramLayer layer;
  layer.cells = marginal_support(sc, s, o);
  layer.label = term_label(sc, s, o);
  layer.style = support_style(sc, layer.cells);
  layer.color = 0;
  d.layers.push_back(std::move(layer));
  return d;
}

GridDiagram diagram_of_form(const LinearForm& form) {
  GridDiagram d;
  d.scenario = form.scenario();
  int color = 0;
  std::vector<DiagramLayer> targets;
  for (const auto& t : form.terms()) {
    if (t.coef == 1) {
      DiagramLayer layer;
      layer.cells = marginal_support(form.scenario(), t.settings, t.outcomes);
      layer.label = term_label(form.scenario(), t.settings, t.outcomes);
      layer.style = support_style(form.scenario(), layer.cells);
      layer.color = color++ % 8;
      d.layers.push_back(std::move(layer));
    } else if (t.coef == -1) {
      if (!targets.empty())
        throw std::invalid_argument("diagram_of_form: more than one negative term");
      DiagramLayer layer;
      layer.cells = marginal_support(form.scenario(), t.settings, t.outcomes);
      layer.label = "- " + term_label(form.scenario(), t.settings, t.outcomes);
      layer.style = LayerStyle::DashedTarget;
      targets.push_back(std::move(layer));
    } else {
      throw std::invalid_argument("diagram_of_form: coefficients must be +1 or -1");
    }
  }
  for (auto& t : targets) {
    t.color = 1;  // dashed target drawn in the second palette color
    d.layers.push_back(std::move(t));
  }
  return d;
}

std::string emit(const GridDiagram& diagram, DiagramFormat format, bool ascii) {
  return format == DiagramFormat::Text ? emit_text(diagram, ascii) : emit_svg(diagram);
}

}  // namespace bellgrid
