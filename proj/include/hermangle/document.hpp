#ifndef HERMANGLE_DOCUMENT_HPP_
#define HERMANGLE_DOCUMENT_HPP_

// JSON input documents for the command-line front end.
//
//   {
//     "vectors": { "a": [[1, 0], [0, 0]], "b": [[0.5, 0.5], [0.7071, 0]] },
//     "planes":  { "p": {"span": [[1, 0, 0, 0], [0, 1, 0, 0]]},
//                  "q": {"holomorphic": "b"},
//                  "r": {"vectors": ["a", "b"]} },
//     "options": { "tolerance": 1e-9, "angle_unit": "radians" }
//   }
//
// Complex entries are [re, im] pairs. Every section is optional. Duplicate
// keys anywhere in the document are rejected.

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "linalg.hpp"

namespace hermangle
{

/// Malformed document or unresolvable reference; maps to exit status 2.
class InputError : public std::runtime_error
{
  public:
  using std::runtime_error::runtime_error;
};

enum class AngleUnit
{
  radians,
  degrees,
};

/// A plane as its (not necessarily orthonormal) real spanning pair.
struct PlaneSpec
{
  RealVector first;
  RealVector second;
};

struct DocumentOptions
{
  std::optional<double> tolerance;
  std::optional<AngleUnit> unit;
};

struct InputDocument
{
  std::map<std::string, ComplexVector> vectors;
  std::map<std::string, PlaneSpec> planes;
  DocumentOptions options;

  const ComplexVector& vector(const std::string& name) const
  {
    const auto it = vectors.find(name);
    if (it == vectors.end()) throw InputError("unknown vector name '" + name + "'");
    return it->second;
  }

  const PlaneSpec& plane(const std::string& name) const
  {
    const auto it = planes.find(name);
    if (it == planes.end()) throw InputError("unknown plane name '" + name + "'");
    return it->second;
  }
};

namespace detail
{

using json = nlohmann::json;

inline double finite_number(const json& j, const std::string& where)
{
  if (!j.is_number()) throw InputError(where + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw InputError(where + ": number is not finite");
  return x;
}

inline ComplexVector parse_complex_vector(const json& j, const std::string& where)
{
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a non-empty array of [re, im] pairs");
  std::vector<ComplexScalar> entries;
  entries.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const json& z = j[k];
    if (!z.is_array() || z.size() != 2) throw InputError(at + ": expected an [re, im] pair");
    entries.emplace_back(finite_number(z[0], at + "[0]"), finite_number(z[1], at + "[1]"));
  }
  return ComplexVector(std::move(entries));
}

inline RealVector parse_real_vector(const json& j, const std::string& where)
{
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a non-empty array of numbers");
  std::vector<double> entries;
  entries.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    entries.push_back(finite_number(j[k], where + "[" + std::to_string(k) + "]"));
  }
  return RealVector(std::move(entries));
}

inline const ComplexVector& lookup_vector(const std::map<std::string, ComplexVector>& vectors, const json& name,
                                          const std::string& where)
{
  if (!name.is_string()) throw InputError(where + ": expected a vector name");
  const auto it = vectors.find(name.get<std::string>());
  if (it == vectors.end()) throw InputError(where + ": unknown vector name '" + name.get<std::string>() + "'");
  return it->second;
}

inline PlaneSpec parse_plane(const json& j, const std::map<std::string, ComplexVector>& vectors,
                             const std::string& where)
{
  if (!j.is_object() || j.size() != 1) {
    throw InputError(where + ": expected exactly one of \"span\", \"holomorphic\", \"vectors\"");
  }
  const std::string kind = j.begin().key();
  const json& body = j.begin().value();
  const std::string at = where + "." + kind;
  if (kind == "span") {
    if (!body.is_array() || body.size() != 2) throw InputError(at + ": expected two real vectors");
    RealVector first = parse_real_vector(body[0], at + "[0]");
    RealVector second = parse_real_vector(body[1], at + "[1]");
    if (first.size() != second.size()) {
      throw InputError(at + ": dimension mismatch " + std::to_string(first.size()) + " vs "
                       + std::to_string(second.size()));
    }
    if (first.size() % 2 != 0) {
      throw InputError(at + ": planes need an even ambient dimension, got " + std::to_string(first.size()));
    }
    return {std::move(first), std::move(second)};
  }
  if (kind == "holomorphic") {
    const RealVector first = embed(lookup_vector(vectors, body, at));
    return {first, apply_j(first)};
  }
  if (kind == "vectors") {
    if (!body.is_array() || body.size() != 2) throw InputError(at + ": expected two vector names");
    const ComplexVector& a = lookup_vector(vectors, body[0], at + "[0]");
    const ComplexVector& b = lookup_vector(vectors, body[1], at + "[1]");
    if (a.size() != b.size()) {
      throw InputError(at + ": dimension mismatch " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
    return {embed(a), embed(b)};
  }
  throw InputError(where + ": unknown plane kind '" + kind + "'");
}

inline DocumentOptions parse_options(const json& j)
{
  if (!j.is_object()) throw InputError("options: expected an object");
  DocumentOptions out;
  for (const auto& [key, value] : j.items()) {
    if (key == "tolerance") {
      const double tol = finite_number(value, "options.tolerance");
      if (!(tol > 0.0)) throw InputError("options.tolerance: must be positive");
      out.tolerance = tol;
    } else if (key == "angle_unit") {
      if (value == "radians") {
        out.unit = AngleUnit::radians;
      } else if (value == "degrees") {
        out.unit = AngleUnit::degrees;
      } else {
        throw InputError("options.angle_unit: expected \"radians\" or \"degrees\"");
      }
    } else {
      throw InputError("options: unknown key '" + key + "'");
    }
  }
  return out;
}

} // namespace detail

/// Parses and validates a document. Throws InputError on any defect.
inline InputDocument parse_document(std::string_view text)
{
  using detail::json;

  // One key set per open object; a repeated key is an error.
  std::vector<std::set<std::string>> open_objects;
  const json::parser_callback_t reject_duplicates = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start: open_objects.emplace_back(); break;
      case json::parse_event_t::object_end: open_objects.pop_back(); break;
      case json::parse_event_t::key:
        if (!open_objects.back().insert(parsed.get<std::string>()).second) {
          throw InputError("duplicate key '" + parsed.get<std::string>() + "'");
        }
        break;
      default: break;
    }
    return true;
  };

  json root;
  try {
    root = json::parse(text.begin(), text.end(), reject_duplicates);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw InputError("document root must be an object");

  InputDocument doc;
  for (const auto& [key, value] : root.items()) {
    if (key != "vectors" && key != "planes" && key != "options") {
      throw InputError("unknown top-level key '" + key + "'");
    }
  }
  try {
    if (root.contains("vectors")) {
      const json& vs = root["vectors"];
      if (!vs.is_object()) throw InputError("vectors: expected an object");
      for (const auto& [name, value] : vs.items()) {
        doc.vectors.emplace(name, detail::parse_complex_vector(value, "vectors." + name));
      }
    }
    if (root.contains("planes")) {
      const json& ps = root["planes"];
      if (!ps.is_object()) throw InputError("planes: expected an object");
      for (const auto& [name, value] : ps.items()) {
        doc.planes.emplace(name, detail::parse_plane(value, doc.vectors, "planes." + name));
      }
    }
    if (root.contains("options")) doc.options = detail::parse_options(root["options"]);
  } catch (const InvalidArgument& e) {
    throw InputError(e.what());
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  return doc;
}

} // namespace hermangle

#endif
