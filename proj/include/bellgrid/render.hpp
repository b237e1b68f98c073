#pragma once

#include <string>
#include <vector>

#include "bellgrid/inequality.hpp"
#include "bellgrid/scenario.hpp"

namespace bellgrid {

enum class LayerStyle { Line, Ribbon, DashedTarget };

struct DiagramLayer {
  std::string label;
  std::vector<std::size_t> cells;  // flat cell indices, sorted
  LayerStyle style = LayerStyle::Ribbon;
  int color = 0;  // index into the fixed 8-entry palette
};

/// A V-grid overlay: for m=2 a 2^n x 2^n grid, for m=3 rendered as 2^n
/// side-by-side slices indexed by the third coordinate.
struct GridDiagram {
  Scenario scenario{1, 1};
  std::vector<DiagramLayer> layers;
};

GridDiagram diagram_of_marginal(const Scenario& sc, const SettingVector& s,
                                const std::vector<std::uint8_t>& o);

/// Requires unit-coefficient positive terms and at most one -1 term; that
/// term becomes the dashed target layer.
GridDiagram diagram_of_form(const LinearForm& form);

enum class DiagramFormat { Text, Svg };

/// Deterministic rendering. Text mode draws one slot per (cell, layer) with
/// the layer's letter; SVG mode draws colored squares, dashed strokes for
/// target layers. ascii switches the text frame from box-drawing characters.
std::string emit(const GridDiagram& diagram, DiagramFormat format, bool ascii = false);

}  // namespace bellgrid
