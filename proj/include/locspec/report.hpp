#pragma once

#include <string>

#include "locspec/code_analysis.hpp"
#include "locspec/config.hpp"

namespace locspec {

/// Machine-readable report for the spectrum command (graph + spectrum +
/// config keys only).
std::string render_spectrum_json(const Graph& g, const Spectrum& s,
                                 const Config& cfg);
std::string render_spectrum_text(const Graph& g, const Spectrum& s,
                                 const Config& cfg);

/// Stable machine-readable report over a full analysis.  Keys appear in a
/// fixed order, numbers are printed with 17 significant digits, arrays
/// follow the eigenvalue-descending / layer-ascending convention, so
/// identical input and config yield byte-identical output.
///
/// `sections` selects the top-level keys:
///   "local"  -> graph, set, spectrum, partition, local_spectrum, config
///   "polys"  -> + polynomials
///   "check"  -> + verdicts, margins
std::string render_analysis_json(const Analysis& an, const Config& cfg,
                                 const std::string& sections);

/// Human-oriented text rendering; layout is not stability-guaranteed.
std::string render_analysis_text(const Analysis& an, const Config& cfg,
                                 const std::string& sections);

}  // namespace locspec
