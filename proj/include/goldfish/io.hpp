#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "goldfish/types.hpp"

namespace goldfish {

/// Header "t,z1_re,z1_im,...", one row per sample, 17 significant digits.
std::string trajectory_to_csv(const Trajectory& trajectory);
Trajectory trajectory_from_csv(std::string_view text);

/// {"n": N, "times": [...], "samples": [[[re,im],...],...], "closure_permutation": [...]|null}
/// The closure permutation is written 1-based.
std::string trajectory_to_json(const Trajectory& trajectory);

/// [{"family": "real"|"imaginary", "perm": int, "z": [[re,im],...], "residual": float}, ...]
std::string catalog_to_json(const EquilibriumCatalog& catalog);
EquilibriumCatalog catalog_from_json(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

struct PlotMarker {
  Complex point;
  std::string label;
  enum class Kind { kEquilibrium, kInitial, kPoint } kind = Kind::kPoint;
};

/// One polyline per particle, optional markers, axes and legend. Output depends only on the
/// input values.
std::string render_trajectory_svg(const Trajectory& trajectory, const std::vector<PlotMarker>& markers);

/// Every catalog point as a labeled dot; the label is the 1-based entry index.
std::string render_catalog_svg(const EquilibriumCatalog& catalog);

/// Markers placed as in the reference figures: the initial value of every particle and the
/// matching point of the catalog entry nearest to the initial configuration.
std::vector<PlotMarker> figure_markers(const Trajectory& trajectory, bool equilibria, bool initial);

}  // namespace goldfish
