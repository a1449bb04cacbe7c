#include "kitebeam/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kitebeam {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string CsvTable::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

CsvTable CsvTable::parse(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(pos));
        break;
      }
      fields.push_back(line.substr(pos, comma - pos));
      pos = comma + 1;
    }
    if (first) {
      table.header = std::move(fields);
      first = false;
    } else {
      table.rows.push_back(std::move(fields));
    }
  }
  return table;
}

Json log10_json(double log10_value) { return Json{{"log10", log10_value}}; }

Json witness_to_json(const IntervalNetWitness& witness) {
  Json j;
  j["segment"] = {witness.segment.lo, witness.segment.hi};
  j["indices"] = witness.indices;
  j["eps"] = witness.eps;
  return j;
}

IntervalNetWitness witness_from_json(const Json& j) {
  IntervalNetWitness w;
  w.segment.lo = j.at("segment").at(0).get<double>();
  w.segment.hi = j.at("segment").at(1).get<double>();
  w.indices = j.at("indices").get<std::vector<std::size_t>>();
  w.eps = j.at("eps").get<double>();
  return w;
}

Json kite_to_json(const Kite& kite) {
  Json j;
  Json verts = Json::array();
  for (const auto& v : kite.vertices) verts.push_back(Json::array({v.x(), v.y()}));
  j["vertices"] = std::move(verts);
  j["alpha_rad"] = kite.alpha;
  j["beta_rad"] = kite.beta;
  return j;
}

Json unfold_to_json(const Kite& kite, const UnfoldResult& result) {
  Json j;
  j["kite"] = kite_to_json(kite);
  Json crossings = Json::array();
  for (std::size_t i = 0; i < result.crossings.size(); ++i) {
    const auto& c = result.crossings[i];
    crossings.push_back(Json{{"t", c.t},
                             {"side", c.side},
                             {"theta_turns", result.frames[i + 1].theta.turns()},
                             {"point", Json::array({c.point.x(), c.point.y()})}});
  }
  j["crossings"] = std::move(crossings);
  return j;
}

Json fold_to_json(const Kite& kite, const FoldResult& result) {
  Json j;
  j["kite"] = kite_to_json(kite);
  Json reflections = Json::array();
  for (const auto& r : result.reflections) {
    reflections.push_back(Json{{"segment_length", r.segment_length},
                               {"side", r.side},
                               {"point", Json::array({r.point.x(), r.point.y()})}});
  }
  j["reflections"] = std::move(reflections);
  return j;
}

Json bound_report_to_json(const BoundReport& report) {
  Json j;
  j["p"] = report.p;
  j["q"] = report.q;
  j["eps"] = report.eps;
  j["n_index"] = report.n_index;
  j["L"] = log10_json(report.log10_L);
  j["R"] = log10_json(report.log10_R);
  j["M"] = log10_json(report.log10_M);
  return j;
}

Json histogram_to_json(const NetFunctionEstimate& estimate) {
  Json j;
  j["empirical_F_lower"] = estimate.empirical_F_lower;
  j["samples"] = estimate.samples;
  Json hist = Json::array();
  for (const auto& [len, count] : estimate.histogram) {
    hist.push_back(Json{{"len", len}, {"count", count}});
  }
  j["histogram"] = std::move(hist);
  j["censored"] = estimate.censored;
  return j;
}

Json approximation_to_json(const ApproximationReport& report) {
  Json j;
  switch (report.status) {
    case ApproximationStatus::holds: j["status"] = "holds"; break;
    case ApproximationStatus::fails: j["status"] = "fails"; break;
    case ApproximationStatus::indeterminate: j["status"] = "indeterminate"; break;
  }
  j["log10_lhs"] = report.log10_lhs;
  j["log10_rhs"] = report.log10_rhs;
  j["L_used"] = report.L_used;
  j["n_scan_overflow"] = report.n_scan_overflow;
  if (!report.n_scan_overflow) j["N_value"] = report.n_value;
  return j;
}

Json splitting_bound_to_json(const SplittingBoundReport& report) {
  Json j;
  j["eps"] = report.eps;
  j["n16"] = report.n16;
  j["eps_inner"] = log10_json(report.log10_eps_inner);
  j["P"] = log10_json(report.log10_P);
  j["Q"] = log10_json(report.log10_Q);
  j["C"] = report.c_used;
  if (report.n_scan_ok) {
    j["N_at_Q"] = report.n_at_Q;
    j["bound"] = log10_json(report.log10_bound);
  } else {
    j["N_at_Q"] = "budget-exceeded";
    j["bound"] = "symbolic: Q + C/(eps*N(Q))";
  }
  return j;
}

CsvTable rows_to_csv(const std::vector<ExperimentRow>& rows) {
  CsvTable table;
  table.header = {"eps", "direction_turns", "outcome", "T", "period", "kite_count",
                  "C_used"};
  table.rows.reserve(rows.size());
  for (const auto& row : rows) {
    table.rows.push_back({format_double(row.eps), format_double(row.direction_turns),
                          row.outcome, format_double(row.T), format_double(row.period),
                          std::to_string(row.kite_count), format_double(row.c_used)});
  }
  return table;
}

std::vector<ExperimentRow> rows_from_csv(const CsvTable& table) {
  std::vector<ExperimentRow> rows;
  rows.reserve(table.rows.size());
  int index = 0;
  for (const auto& fields : table.rows) {
    if (fields.size() != 7) throw std::runtime_error("rows_from_csv: bad field count");
    ExperimentRow row;
    row.index = index++;
    row.eps = std::stod(fields[0]);
    row.direction_turns = std::stod(fields[1]);
    row.outcome = fields[2];
    row.T = std::stod(fields[3]);
    row.period = std::stod(fields[4]);
    row.kite_count = static_cast<std::size_t>(std::stoull(fields[5]));
    row.c_used = std::stod(fields[6]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace kitebeam
