#include "params_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace goldielab::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& context, const std::string& message) {
  throw std::invalid_argument(context + ": " + message);
}

double number_field(const json& j, const std::string& key,
                    const std::string& context) {
  const json& v = j.at(key);
  if (!v.is_number()) fail(context, "field '" + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(context, "field '" + key + "' must be finite");
  return x;
}

Complex complex_field(const json& j, const std::string& key,
                      const std::string& context) {
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    fail(context, "field '" + key + "' must be a [re, im] pair");
  const Complex z{v[0].get<double>(), v[1].get<double>()};
  if (!is_finite(z)) fail(context, "field '" + key + "' must be finite");
  return z;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  for (std::string& f : fields) {
    const auto b = f.find_first_not_of(" \t");
    const auto e = f.find_last_not_of(" \t");
    f = (b == std::string::npos) ? std::string{} : f.substr(b, e - b + 1);
  }
  return fields;
}

double parse_number(const std::string& text, const std::string& context) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    fail(context, "'" + text + "' is not a number");
  }
  if (used != text.size()) fail(context, "'" + text + "' is not a number");
  if (!std::isfinite(v)) fail(context, "non-finite value");
  return v;
}

// Parses a CSV with the given header, returning one row of doubles per line.
std::vector<std::vector<double>> load_csv(const std::string& path,
                                          const std::vector<std::string>& header) {
  std::istringstream in(read_file(path));
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) fail(path, "empty file");
  ++line_no;
  const std::vector<std::string> head = split_csv_line(line);
  if (head != header) {
    std::string want;
    for (const std::string& h : header) want += (want.empty() ? "" : ",") + h;
    fail(path + ":1", "header must be '" + want + "'");
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::string context = path + ":" + std::to_string(line_no);
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size())
      fail(context, "expected " + std::to_string(header.size()) + " fields");
    std::vector<double> row;
    for (const std::string& f : fields) {
      if (f.empty()) fail(context, "missing field");
      row.push_back(parse_number(f, context));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(path, "no data rows");
  return rows;
}

}  // namespace

LoadedParams parse_params_object(const json& j, const std::string& context) {
  if (!j.is_object()) fail(context, "parameter file must be a JSON object");

  const bool pitman = j.contains("c") || j.contains("y") ||
                      j.contains("lambda") || j.contains("alpha");
  const bool canonical =
      j.contains("f1") || j.contains("kappa") || j.contains("gamma");
  if (pitman && canonical)
    fail(context, "fields of both parameter shapes present; use exactly one");
  if (!pitman && !canonical)
    fail(context, "expected fields c,y,lambda,alpha or f1,kappa,gamma");

  const std::vector<std::string> allowed =
      pitman ? std::vector<std::string>{"c", "y", "lambda", "alpha"}
             : std::vector<std::string>{"f1", "kappa", "gamma"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      fail(context, "unknown field '" + key + "'");
  }
  for (const std::string& key : allowed)
    if (!j.contains(key)) fail(context, "missing field '" + key + "'");

  LoadedParams out;
  if (pitman) {
    out.pitman_form = true;
    PitmanParams q;
    q.c = number_field(j, "c", context);
    q.y = number_field(j, "y", context);
    q.lambda = number_field(j, "lambda", context);
    q.alpha = number_field(j, "alpha", context);
    try {
      out.params = from_pitman(q);
    } catch (const std::invalid_argument& e) {
      fail(context, e.what());
    }
  } else {
    out.params.f1 = complex_field(j, "f1", context);
    out.params.kappa = complex_field(j, "kappa", context);
    out.params.gamma = number_field(j, "gamma", context);
    if (!(out.params.gamma > -1.0))
      fail(context, "field 'gamma' must be > -1 (alpha > 0)");
  }
  return out;
}

LoadedParams load_params_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return parse_params_object(j, path);
}

nlohmann::ordered_json complex_json(const Complex& z) {
  return nlohmann::ordered_json::array({z.real(), z.imag()});
}

nlohmann::ordered_json canonical_params_json(const StableParams& p) {
  nlohmann::ordered_json j;
  j["f1"] = complex_json(p.f1);
  j["kappa"] = complex_json(p.kappa);
  j["gamma"] = p.gamma;
  return j;
}

std::vector<GoldieSample> load_complex_samples(const std::string& path) {
  const auto rows = load_csv(path, {"x", "re", "im"});
  std::vector<GoldieSample> samples;
  double prev = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!(rows[i][0] > prev))
      fail(path + ":" + std::to_string(i + 2),
           "column x must be strictly increasing");
    prev = rows[i][0];
    samples.push_back(GoldieSample{rows[i][0], Complex{rows[i][1], rows[i][2]}});
  }
  return samples;
}

std::vector<double> load_sequence_samples(const std::string& path) {
  const auto rows = load_csv(path, {"n", "a_n"});
  std::vector<double> a;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string context = path + ":" + std::to_string(i + 2);
    if (rows[i][0] != static_cast<double>(i + 1))
      fail(context, "column n must run 1, 2, ..., N");
    a.push_back(rows[i][1]);
  }
  return a;
}

}  // namespace goldielab::cli
