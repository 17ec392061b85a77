#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "trigsb/errors.hpp"
#include "trigsb/structures.hpp"

namespace trigsb {

namespace detail {

inline std::string field_path(const std::string& source, const std::string& field) {
  return source.empty() ? field : source + ": " + field;
}

inline const nlohmann::json& require_field(const nlohmann::json& doc, const char* key, const std::string& source) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InvalidInput(field_path(source, std::string("missing field '") + key + "'"));
  return *it;
}

inline Rational parse_coefficient(const nlohmann::json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(mpz_class(std::to_string(v.get<long long>())));
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + ": " + e.what());
  }
  throw InvalidInput(where + ": coefficient must be a string \"p/q\"");
}

}  // namespace detail

/// Reads a presentation document:
/// { "name", "kind": "trioid"|"dimonoid"|"trialgebra", "elements": [...],
///   "vdash": [[...]], "dashv": [[...]], "perp": [[...]] }
/// Table rows are left operands. Trioid entries are element indices; trialgebra
/// entries are arrays of coefficient strings of length |elements|.
inline Presentation presentation_from_json(const nlohmann::json& doc, const std::string& source = "") {
  using detail::field_path;
  if (!doc.is_object()) throw InvalidInput(field_path(source, "document must be a JSON object"));
  const auto& name = detail::require_field(doc, "name", source);
  const auto& kind = detail::require_field(doc, "kind", source);
  const auto& elems = detail::require_field(doc, "elements", source);
  if (!name.is_string()) throw InvalidInput(field_path(source, "field 'name' must be a string"));
  if (!kind.is_string()) throw InvalidInput(field_path(source, "field 'kind' must be a string"));
  if (!elems.is_array()) throw InvalidInput(field_path(source, "field 'elements' must be an array of strings"));
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!elems[i].is_string()) throw InvalidInput(field_path(source, "field 'elements'[" + std::to_string(i) + "] must be a string"));
    elements.push_back(elems[i].get<std::string>());
  }
  const std::size_t n = elements.size();
  const std::string k = kind.get<std::string>();

  auto read_rows = [&](const char* key) -> const nlohmann::json& {
    const auto& t = detail::require_field(doc, key, source);
    if (!t.is_array() || t.size() != n) {
      throw InvalidInput(field_path(source, std::string("field '") + key + "' must be an array of " + std::to_string(n) + " rows"));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!t[i].is_array() || t[i].size() != n) {
        throw InvalidInput(field_path(source, std::string("field '") + key + "'[" + std::to_string(i) + "] must have " +
                                                  std::to_string(n) + " entries"));
      }
    }
    return t;
  };

  Presentation out;
  if (k == "trioid" || k == "dimonoid") {
    TrioidTable t;
    t.name = name.get<std::string>();
    t.elements = elements;
    t.has_perp = k == "trioid";
    if (!t.has_perp && doc.contains("perp")) throw InvalidInput(field_path(source, "field 'perp' must be omitted for a dimonoid"));
    for (Op op : kAllOps) {
      if (op == Op::perp && !t.has_perp) continue;
      std::string key(op_name(op));
      const auto& rows = read_rows(key.c_str());
      IndexTable tab(n, std::vector<std::size_t>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const auto& e = rows[i][j];
          std::string where = "field '" + key + "'[" + std::to_string(i) + "][" + std::to_string(j) + "]";
          if (!e.is_number_integer() || e.get<long long>() < 0 || static_cast<std::size_t>(e.get<long long>()) >= n) {
            throw InvalidInput(field_path(source, where + " must be an element index in [0, " + std::to_string(n) + ")"));
          }
          tab[i][j] = static_cast<std::size_t>(e.get<long long>());
        }
      }
      t.tables[static_cast<std::size_t>(op)] = std::move(tab);
    }
    out = std::move(t);
  } else if (k == "trialgebra") {
    TrialgebraTable t;
    t.name = name.get<std::string>();
    t.elements = elements;
    for (Op op : kAllOps) {
      std::string key(op_name(op));
      const auto& rows = read_rows(key.c_str());
      CoeffTensor ten(n, std::vector<DenseVector>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const auto& e = rows[i][j];
          std::string where = "field '" + key + "'[" + std::to_string(i) + "][" + std::to_string(j) + "]";
          if (!e.is_array() || e.size() != n) {
            throw InvalidInput(field_path(source, where + " must be an array of " + std::to_string(n) + " coefficients"));
          }
          for (std::size_t m = 0; m < n; ++m) {
            ten[i][j].push_back(detail::parse_coefficient(e[m], field_path(source, where + "[" + std::to_string(m) + "]")));
          }
        }
      }
      t.tensors[static_cast<std::size_t>(op)] = std::move(ten);
    }
    out = std::move(t);
  } else {
    throw InvalidInput(field_path(source, "field 'kind' must be trioid, dimonoid or trialgebra, got '" + k + "'"));
  }
  try {
    validate(out);
    Alphabet probe;
    probe.add_family(name.get<std::string>(), elements);
  } catch (const InvalidInput& e) {
    throw InvalidInput(field_path(source, e.what()));
  }
  return out;
}

inline Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path + ": cannot open file");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path + ": invalid JSON: " + e.what());
  }
  return presentation_from_json(doc, path);
}

inline nlohmann::json to_json(const Presentation& p) {
  nlohmann::json doc;
  doc["name"] = name_of(p);
  doc["elements"] = elements_of(p);
  if (const auto* t = std::get_if<TrioidTable>(&p)) {
    doc["kind"] = t->has_perp ? "trioid" : "dimonoid";
    for (Op op : kAllOps) {
      if (op == Op::perp && !t->has_perp) continue;
      doc[std::string(op_name(op))] = t->tables[static_cast<std::size_t>(op)];
    }
    return doc;
  }
  const auto& t = std::get<TrialgebraTable>(p);
  doc["kind"] = "trialgebra";
  for (Op op : kAllOps) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.tensors[static_cast<std::size_t>(op)]) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& v : row) {
        nlohmann::json c = nlohmann::json::array();
        for (const auto& q : v) c.push_back(format_rational(q));
        r.push_back(c);
      }
      rows.push_back(r);
    }
    doc[std::string(op_name(op))] = rows;
  }
  return doc;
}

}  // namespace trigsb
