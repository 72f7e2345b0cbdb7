#pragma once

// Batch pipeline behind the command-line driver: runs the configured tasks for
// each character and assembles a deterministic JSON report.

#include "tamehecke/config.hpp"
#include "tamehecke/shimura.hpp"
#include "tamehecke/svg.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace tamehecke {

using ReportJson = nlohmann::ordered_json;

struct Report {
  ReportJson doc;
  bool pass = true;
  /// "characters[i].task: message" for every failed verdict.
  std::vector<std::string> failures;
  /// (file name, SVG text) for apartment-svg tasks.
  std::vector<std::pair<std::string, std::string>> figures;
  /// (label, seconds); kept out of doc so reports are reproducible.
  std::vector<std::pair<std::string, double>> timings;
};

Report run(const JobConfig& cfg);

ReportJson element_json(const RootDatum& d, const ExtendedAffineElement& w);
ReportJson datum_json(const RootDatum& d);
ReportJson geometry_json(const ChiGeometry& g, int offset_bound);
/// Residue-set equality t_v(Phi_{chi,af}) = Phi^diamond_{chi,af}; empty string when it holds.
std::string shift_failure(const ChiGeometry& g);

}  // namespace tamehecke
