#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "kitebeam/bounds.hpp"
#include "kitebeam/experiments.hpp"
#include "kitebeam/geometry.hpp"
#include "kitebeam/unfolding.hpp"
#include "kitebeam/net_construction.hpp"
#include "kitebeam/nets.hpp"

namespace kitebeam {

using Json = nlohmann::ordered_json;

// 17 significant digits: a lossless decimal rendering of a double.
std::string format_double(double value);

// CSV with fields that never contain commas or quotes.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
  static CsvTable parse(const std::string& text);
};

Json log10_json(double log10_value);

Json witness_to_json(const IntervalNetWitness& witness);
IntervalNetWitness witness_from_json(const Json& j);

Json kite_to_json(const Kite& kite);
Json unfold_to_json(const Kite& kite, const UnfoldResult& result);
Json fold_to_json(const Kite& kite, const FoldResult& result);

Json bound_report_to_json(const BoundReport& report);
Json histogram_to_json(const NetFunctionEstimate& estimate);
Json approximation_to_json(const ApproximationReport& report);
Json splitting_bound_to_json(const SplittingBoundReport& report);

CsvTable rows_to_csv(const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> rows_from_csv(const CsvTable& table);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace kitebeam
