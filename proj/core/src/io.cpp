#include "bozd/io.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "bozd/datasets.hpp"

namespace bozd {

using nlohmann::json;

namespace {

Complex complex_from_json(const json& v, const std::string& what, size_t idx) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ConfigError(what + " " + std::to_string(idx) +
                      " must be a [re, im] pair");
  return Complex(v[0].get<double>(), v[1].get<double>());
}

}  // namespace

RationalInitialData initial_data_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("initial data must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "poles" && key != "residues")
      throw ConfigError("unknown key '" + key + "' in initial data");
  }
  if (!doc.contains("poles") || !doc.contains("residues"))
    throw ConfigError("initial data needs 'poles' and 'residues'");
  RationalInitialData data;
  for (size_t n = 0; n < doc["poles"].size(); ++n)
    data.poles.push_back(complex_from_json(doc["poles"][n], "pole", n));
  for (size_t n = 0; n < doc["residues"].size(); ++n)
    data.residues.push_back(complex_from_json(doc["residues"][n], "residue", n));
  data.validate();
  return data;
}

RationalInitialData load_initial_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open initial data file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError("bad JSON in " + path + ": " + e.what());
  }
  return initial_data_from_json(doc);
}

RationalInitialData resolve_dataset(const std::string& name_or_path) {
  if (name_or_path == "lorentzian") return dataset_lorentzian();
  if (name_or_path == "two-pole") return dataset_two_pole();
  return load_initial_data(name_or_path);
}

ManualPaths manual_paths_from_json(const json& doc) {
  if (!doc.is_object())
    throw ConfigError("manual paths must map contour index to node list");
  ManualPaths out;
  for (const auto& [key, nodes] : doc.items()) {
    int index = 0;
    try {
      index = std::stoi(key);
    } catch (...) {
      throw ConfigError("manual path key '" + key + "' is not an index");
    }
    ManualPath path;
    for (size_t i = 0; i < nodes.size(); ++i)
      path.nodes.push_back(complex_from_json(nodes[i], "node", i));
    out[index] = std::move(path);
  }
  return out;
}

json sweep_report_to_json(const SweepReport& report) {
  json out;
  out["t"] = report.t;
  out["interval"] = {report.a, report.b};
  out["epsilons"] = report.epsilons;
  out["m"] = report.m;
  out["max_errors"] = report.max_errors;
  out["wall_times_s"] = report.wall_times_s;
  out["fitted_slope"] = report.fitted_slope;
  return out;
}

json criteria_to_json(const std::vector<CriterionResult>& results) {
  json arr = json::array();
  for (const auto& r : results)
    arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  return arr;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CsvWriter::Impl {
  std::ofstream out;
};

CsvWriter::CsvWriter(const std::string& path, const std::string& canonical_config,
                     const std::vector<std::string>& columns)
    : impl_(new Impl) {
  impl_->out.open(path);
  if (!impl_->out) {
    delete impl_;
    throw ConfigError("cannot open output file: " + path);
  }
  impl_->out << "# config: " << canonical_config << "\n";
  impl_->out << "# columns: ";
  for (size_t i = 0; i < columns.size(); ++i)
    impl_->out << (i ? "," : "") << columns[i];
  impl_->out << "\n";
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::row(const std::vector<double>& values) {
  for (size_t i = 0; i < values.size(); ++i)
    impl_->out << (i ? "," : "") << format_double(values[i]);
  impl_->out << "\n";
}

void CsvWriter::raw_row(const std::string& line) { impl_->out << line << "\n"; }

}  // namespace bozd
