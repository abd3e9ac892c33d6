#include "expriordan/format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace expriordan {

using nlohmann::json;

namespace {

json rational_array(std::span<const Rational> v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(to_string(q));
  return arr;
}

std::vector<Rational> parse_rational_array(const json& arr, const char* what) {
  if (!arr.is_array()) throw std::invalid_argument(std::string(what) + ": expected a JSON array");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string()) throw std::invalid_argument(std::string(what) + ": rationals must be strings");
    out.push_back(parse_rational(item.get<std::string>()));
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw std::invalid_argument(std::string("JSON object lacks field '") + key + "'");
  }
  return obj.at(key);
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

std::string matrix_to_json(const TriMatrix& m, std::string_view name) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) rows.push_back(rational_array(m.row(i)));
  json doc;
  doc["name"] = std::string(name);
  doc["order"] = m.dim() - 1;
  doc["rows"] = std::move(rows);
  return doc.dump();
}

NamedMatrix matrix_from_json(std::string_view text) {
  const json doc = parse_json(text);
  const json& name = field(doc, "name");
  const json& order = field(doc, "order");
  const json& rows = field(doc, "rows");
  if (!name.is_string()) throw std::invalid_argument("matrix JSON: 'name' must be a string");
  if (!order.is_number_unsigned()) throw std::invalid_argument("matrix JSON: 'order' must be a non-negative integer");
  const std::size_t dim = order.get<std::size_t>() + 1;
  if (!rows.is_array() || rows.size() != dim) throw std::invalid_argument("matrix JSON: expected order+1 rows");

  std::vector<std::vector<Rational>> values;
  bool hessenberg = false;
  for (std::size_t i = 0; i < dim; ++i) {
    values.push_back(parse_rational_array(rows[i], "matrix JSON row"));
    if (values.back().size() != dim) throw std::invalid_argument("matrix JSON: rows must have order+1 entries");
    if (i + 1 < dim && values.back()[i + 1] != 0) hessenberg = true;
  }
  TriMatrix m(dim, hessenberg ? Band::lower_hessenberg : Band::lower_triangular);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m.set(i, j, values[i][j]);
  }
  return NamedMatrix{name.get<std::string>(), std::move(m)};
}

std::string matrix_to_text(const TriMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.dim(), std::vector<std::string>(m.dim()));
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      cells[i][j] = to_string(m(i, j));
      width = std::max(width, cells[i][j].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << std::string(width - row[j].size(), ' ') << row[j];
    }
    out << '\n';
  }
  return out.str();
}

std::string matrix_to_csv(const TriMatrix& m) {
  std::ostringstream out;
  out << 'n';
  for (std::size_t j = 0; j < m.dim(); ++j) out << ",k" << j;
  out << '\n';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out << i;
    for (std::size_t j = 0; j < m.dim(); ++j) out << ',' << to_string(m(i, j));
    out << '\n';
  }
  return out.str();
}

std::string sequence_to_json(std::span<const Rational> seq) { return rational_array(seq).dump(); }

std::vector<Rational> sequence_from_json(std::string_view text) {
  return parse_rational_array(parse_json(text), "sequence JSON");
}

std::string sequence_to_text(std::span<const Rational> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ", ";
    out += to_string(seq[i]);
  }
  return out + '\n';
}

std::string sequence_to_csv(std::span<const Rational> seq) {
  std::ostringstream out;
  out << "n,value\n";
  for (std::size_t i = 0; i < seq.size(); ++i) out << i << ',' << to_string(seq[i]) << '\n';
  return out.str();
}

std::string recurrence_to_json(const Recurrence& r) {
  json doc;
  doc["b"] = rational_array(r.b);
  doc["lambda"] = rational_array(r.lambda);
  return doc.dump();
}

Recurrence recurrence_from_json(std::string_view text) {
  const json doc = parse_json(text);
  return Recurrence{parse_rational_array(field(doc, "b"), "recurrence b"),
                    parse_rational_array(field(doc, "lambda"), "recurrence lambda")};
}

std::string params_to_json(const JacobiParams& p) {
  json doc;
  doc["alpha"] = to_string(p.alpha);
  doc["beta"] = to_string(p.beta);
  doc["gamma"] = to_string(p.gamma);
  doc["delta"] = to_string(p.delta);
  return doc.dump();
}

JacobiParams params_from_json(std::string_view text) {
  const json doc = parse_json(text);
  auto get = [&](const char* key) {
    const json& v = field(doc, key);
    if (!v.is_string()) throw std::invalid_argument(std::string("params JSON: '") + key + "' must be a string");
    return parse_rational(v.get<std::string>());
  };
  return JacobiParams{get("alpha"), get("beta"), get("gamma"), get("delta")};
}

std::string params_to_text(const JacobiParams& p) {
  return "(alpha, beta, gamma, delta) = (" + to_string(p.alpha) + ", " + to_string(p.beta) + ", " +
         to_string(p.gamma) + ", " + to_string(p.delta) + ")";
}

std::string polynomial_to_text(std::span<const Rational> coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += to_string(mag);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace expriordan
