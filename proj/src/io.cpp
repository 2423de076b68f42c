#include "prisms/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace prisms {

namespace {

using nlohmann::json;

std::size_t write_all(const std::string& text, std::ostream& out) {
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  return text.size();
}

json json_of_row(const SweepRow& row) {
  return json{{"regime", std::string(1, regime_letter(row.regime))},
              {"n", row.n},
              {"epsilon", row.epsilon},
              {"rho", row.rho},
              {"i_value", row.i_value},
              {"i_stderr", row.i_stderr}};
}

json json_of_meta(const EmitMeta& meta) {
  return json{{"mode", meta.mode}, {"seed", meta.seed}, {"version", meta.version}};
}

json json_of_counts(const OutcomeCounts& counts) {
  return json{{"pp", counts.pp}, {"pm", counts.pm}, {"mp", counts.mp}, {"mm", counts.mm}};
}

json json_of_strategy(const LocalStrategy& s) {
  return json{{"roll_left", s.roll_left},
              {"look_left", s.look_left},
              {"roll_right", s.roll_right},
              {"look_right", s.look_right}};
}

std::size_t emit_json(const json& document, std::ostream& out) {
  return write_all(document.dump(2) + "\n", out);
}

}  // namespace

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::size_t emit_rows_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  std::string text = "regime,n,epsilon,rho,i_value,i_stderr\n";
  for (const SweepRow& row : rows) {
    text += regime_letter(row.regime);
    text += ',';
    text += std::to_string(row.n);
    text += ',';
    text += format_real(row.epsilon);
    text += ',';
    text += format_real(row.rho);
    text += ',';
    text += format_real(row.i_value);
    text += ',';
    text += format_real(row.i_stderr);
    text += '\n';
  }
  return write_all(text, out);
}

std::size_t emit_rows_json(const std::vector<SweepRow>& rows, const EmitMeta& meta,
                           std::ostream& out) {
  json document;
  document["meta"] = json_of_meta(meta);
  document["rows"] = json::array();
  for (const SweepRow& row : rows) document["rows"].push_back(json_of_row(row));
  return emit_json(document, out);
}

std::vector<SweepRow> parse_rows_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "regime,n,epsilon,rho,i_value,i_stderr")
    throw std::runtime_error("bad CSV header: " + line);
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string field;
    SweepRow row;
    if (!std::getline(fields, field, ',') || field.size() != 1 ||
        (field[0] != 'A' && field[0] != 'B'))
      throw std::runtime_error("bad regime field: " + line);
    row.regime = field[0] == 'A' ? Regime::A : Regime::B;
    const auto next_field = [&fields, &line](std::string& into) {
      if (!std::getline(fields, into, ','))
        throw std::runtime_error("short CSV row: " + line);
    };
    next_field(field);
    row.n = std::stoi(field);
    next_field(field);
    row.epsilon = std::stod(field);
    next_field(field);
    row.rho = std::stod(field);
    next_field(field);
    row.i_value = std::stod(field);
    next_field(field);
    row.i_stderr = std::stod(field);
    rows.push_back(row);
  }
  return rows;
}

std::size_t emit_report_csv(const EstimateReport& report, std::ostream& out) {
  const std::vector<SweepRow> rows = {SweepRow{report.prep.regime(), report.params.n,
                                               report.params.epsilon, report.params.rho,
                                               report.i_hat, report.se_i}};
  return emit_rows_csv(rows, out);
}

std::size_t emit_report_json(const EstimateReport& report, const EmitMeta& meta,
                             std::ostream& out) {
  json document;
  document["meta"] = json_of_meta(meta);
  json body;
  body["regime"] = std::string(1, regime_letter(report.prep.regime()));
  body["target"] = json::array({report.prep.target().left, report.prep.target().right});
  body["n"] = report.params.n;
  body["epsilon"] = report.params.epsilon;
  body["rho"] = report.params.rho;
  body["trials"] = report.trials;
  body["seed"] = report.seed;
  body["expectations"] = json{{"e_ab", report.table.e_ab},
                              {"e_abp", report.table.e_abp},
                              {"e_apb", report.table.e_apb},
                              {"e_apbp", report.table.e_apbp}};
  body["counts"] = json::object();
  for (std::size_t idx = 0; idx < kCoincidenceExperiments.size(); ++idx)
    body["counts"][label(kCoincidenceExperiments[idx])] = json_of_counts(report.counts[idx]);
  body["branches"] = json{{"detached", report.branches.detached},
                          {"aimed", report.branches.aimed},
                          {"random_orientation", report.branches.random_orientation}};
  body["i_hat"] = report.i_hat;
  body["se_i"] = report.se_i;
  document["report"] = body;
  return emit_json(document, out);
}

std::size_t emit_certificate_csv(const LhvCertificate& cert, std::ostream& out) {
  std::string text = "roll_left,look_left,roll_right,look_right,i_value\n";
  for (const StrategyEvaluation& ev : cert.evaluations) {
    text += std::to_string(ev.strategy.roll_left);
    text += ',';
    text += std::to_string(ev.strategy.look_left);
    text += ',';
    text += std::to_string(ev.strategy.roll_right);
    text += ',';
    text += std::to_string(ev.strategy.look_right);
    text += ',';
    text += format_real(ev.i);
    text += '\n';
  }
  return write_all(text, out);
}

std::size_t emit_certificate_json(const LhvCertificate& cert, const EmitMeta& meta,
                                  std::ostream& out) {
  json document;
  document["meta"] = json_of_meta(meta);
  json body;
  body["max_i"] = cert.max_i;
  body["strategies"] = json::array();
  for (const StrategyEvaluation& ev : cert.evaluations) {
    json entry = json_of_strategy(ev.strategy);
    entry["i_value"] = ev.i;
    body["strategies"].push_back(entry);
  }
  body["maximizers"] = json::array();
  for (const LocalStrategy& s : cert.maximizers) body["maximizers"].push_back(json_of_strategy(s));
  document["certificate"] = body;
  return emit_json(document, out);
}

}  // namespace prisms
