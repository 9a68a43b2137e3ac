#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "axialkit/algebra.hpp"
#include "axialkit/decomp.hpp"
#include "axialkit/io.hpp"
#include "axialkit/miyamoto.hpp"

namespace axialkit {

Json subspace_json(const Subspace& s);

// Per-axis axiom results plus a fusion law summary. all_axes_ok is false if
// any designated axis fails A1 to A3.
Json validate_report(const AxialAlgebra& alg, bool& all_axes_ok);

struct AnalyzeOptions {
  bool radical = false;
  bool form = false;
  bool graphs = false;
  bool group = false;
  bool decompose = false;
  bool body = false;
  std::size_t group_cap = kDefaultGroupCap;
  std::size_t axis_cap = kDefaultAxisCap;
  std::string dot_dir;    // write Gamma, Gamma/G and Delta as DOT files when set
  bool parallel = false;  // evaluate sections concurrently

  // No section selected means all of them.
  bool none_selected() const { return !(radical || form || graphs || group || decompose || body); }
};

// Sections appear in a fixed order regardless of options.parallel. A failing
// section is reported as {"error": message} and does not affect the others.
Json analyze_report(const AxialAlgebra& alg, const AnalyzeOptions& options);

Json closure_report(const AxialAlgebra& alg, std::size_t cap);
Json body_report(const AxialAlgebra& alg);

Json explore_json(std::span<const ExploreRow> rows);
std::string explore_csv(std::span<const ExploreRow> rows);

}  // namespace axialkit
