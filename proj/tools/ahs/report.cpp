#include "report.hpp"

#include <algorithm>
#include <cmath>

namespace ahs::cli {

namespace {

int digits_for(Precision prec) {
  return std::clamp(static_cast<int>(std::ceil(static_cast<double>(prec) * 0.30103)) + 2, 10, 1300);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_enclosure(const Json& v) { return v.is_object() && v.contains("lo") && v.contains("hi"); }

void flatten(const Json& v, const std::string& path, Table& t) {
  if (is_enclosure(v)) {
    t.rows.push_back({path, "", scalar_text(v["lo"]), scalar_text(v["hi"])});
  } else if (v.is_object()) {
    for (const auto& [k, child] : v.items()) flatten(child, path.empty() ? k : path + "." + k, t);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", t);
  } else {
    t.rows.push_back({path, scalar_text(v), "", ""});
  }
}

}  // namespace

Json enclosure(const Real& x) {
  int d = digits_for(x.precision());
  return Json{{"lo", x.lo_string(d)}, {"hi", x.hi_string(d)}, {"precision", x.precision()}};
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "certified";
    case Verdict::kFalse: return "violated";
    case Verdict::kUnknown: return "undecided";
  }
  return "undecided";
}

Json config_json(const RunConfig& cfg) {
  Json j;
  j["precision_bits"] = cfg.precision_bits;
  j["epsilon"] = cfg.epsilon.value().get_str();
  if (cfg.scan_max) {
    j["scan_max"] = *cfg.scan_max;
  } else {
    j["scan_max"] = "10*delta+100";
  }
  j["enumeration_cap"] = cfg.enumeration_cap;
  j["output_format"] = to_string(cfg.output_format);
  return j;
}

void write_json(std::ostream& os, const Report& r) {
  Json doc;
  doc["schema"] = kJsonSchema;
  doc["command"] = {{"name", r.command}, {"arguments", r.arguments}};
  doc["config"] = r.config;
  doc["results"] = r.results;
  doc["metadata"] = r.metadata;
  os << doc.dump(2) << "\n";
}

void write_csv(std::ostream& os, const Report& r) {
  Table flat;
  const Table* t = &r.table;
  if (r.table.columns.empty()) {
    flat.columns = {"field", "value", "lo", "hi"};
    flatten(r.results, "", flat);
    t = &flat;
  }
  os << "# " << kCsvSchema << " " << r.command;
  for (std::size_t i = 0; i < t->columns.size(); ++i) os << (i ? "," : " columns=") << t->columns[i];
  os << "\n";
  for (std::size_t i = 0; i < t->columns.size(); ++i) os << (i ? "," : "") << csv_field(t->columns[i]);
  os << "\n";
  for (const auto& row : t->rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\n";
  }
}

}  // namespace ahs::cli
