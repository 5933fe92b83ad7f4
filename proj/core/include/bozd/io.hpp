#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bozd/contours.hpp"
#include "bozd/verify.hpp"

namespace bozd {

// Initial data from a JSON document of the form
//   {"poles": [[re,im],...], "residues": [[re,im],...]}.
// Unknown keys are rejected; validation errors name the offending index.
RationalInitialData initial_data_from_json(const nlohmann::json& doc);
RationalInitialData load_initial_data(const std::string& path);

// Named bundled dataset or a JSON file path.
RationalInitialData resolve_dataset(const std::string& name_or_path);

// Manual contour override from {"0": [[re,im],...], "2": ...}.
ManualPaths manual_paths_from_json(const nlohmann::json& doc);

nlohmann::json sweep_report_to_json(const SweepReport& report);
nlohmann::json criteria_to_json(const std::vector<CriterionResult>& results);

// CSV writer with reproducibility header: every file starts with
//   # config: <canonical json>
//   # columns: <names>
// and rows in round-trip-exact scientific notation.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& canonical_config,
            const std::vector<std::string>& columns);
  ~CsvWriter();
  void row(const std::vector<double>& values);
  void raw_row(const std::string& line);

 private:
  struct Impl;
  Impl* impl_;
};

std::string format_double(double v);  // 17 significant digits, scientific

}  // namespace bozd
