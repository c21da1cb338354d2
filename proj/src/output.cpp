#include "spincorr/output.hpp"

#include "spincorr/estimator.hpp"

namespace spincorr {

void attach_reference(OutputRecord& record, double analytic) {
  record.analytic = analytic;
  if (record.std_error.has_value()) {
    const double z = z_score(record.value, analytic, *record.std_error);
    if (std::isfinite(z)) record.z_score = z;
  }
}

std::string format_double(double v) { return nlohmann::json(v).dump(); }

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string opt_double(const std::optional<double>& v) {
  return v.has_value() ? format_double(*v) : std::string();
}

}  // namespace

std::string csv_header() {
  return "command,model,theta_deg,quantity,value,std_error,analytic,z_score,n,seed";
}

std::string to_csv_row(const OutputRecord& r) {
  std::string row;
  row += csv_escape(r.command);
  row += ',';
  row += r.model;
  row += ',';
  row += opt_double(r.theta_deg);
  row += ',';
  row += r.quantity;
  row += ',';
  row += format_double(r.value);
  row += ',';
  row += opt_double(r.std_error);
  row += ',';
  row += opt_double(r.analytic);
  row += ',';
  row += opt_double(r.z_score);
  row += ',';
  row += std::to_string(r.n);
  row += ',';
  row += std::to_string(r.seed);
  return row;
}

std::string to_csv(const std::vector<OutputRecord>& records) {
  std::string out = csv_header() + "\n";
  for (const OutputRecord& r : records) {
    out += to_csv_row(r);
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const std::vector<OutputRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const OutputRecord& r : records) {
    nlohmann::json obj;
    obj["command"] = r.command;
    obj["model"] = r.model;
    obj["theta_deg"] = r.theta_deg.has_value() ? nlohmann::json(*r.theta_deg)
                                               : nlohmann::json(nullptr);
    obj["quantity"] = r.quantity;
    obj["value"] = r.value;
    obj["std_error"] = r.std_error.has_value() ? nlohmann::json(*r.std_error)
                                               : nlohmann::json(nullptr);
    obj["analytic"] = r.analytic.has_value() ? nlohmann::json(*r.analytic)
                                             : nlohmann::json(nullptr);
    obj["z_score"] = r.z_score.has_value() ? nlohmann::json(*r.z_score)
                                           : nlohmann::json(nullptr);
    obj["n"] = r.n;
    obj["seed"] = r.seed;
    arr.push_back(std::move(obj));
  }
  return arr;
}

}  // namespace spincorr
