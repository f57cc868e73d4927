#ifndef HERMANGLE_REPORT_HPP_
#define HERMANGLE_REPORT_HPP_

// JSON report documents. Keys keep insertion order and doubles are written in
// shortest round-trip form, so identical inputs give byte-identical output.
// Undefined angles are written as null with a reason under "undefined".

#include <numbers>
#include <optional>
#include <string>

#include <json.hpp>

#include "angles.hpp"
#include "document.hpp"
#include "subspaces.hpp"

namespace hermangle
{

inline constexpr const char* report_schema = "hermangle.report/1";

using ReportDocument = nlohmann::ordered_json;

struct ReportStyle
{
  AngleUnit unit = AngleUnit::radians;
  bool unoriented_kahler = false;
};

inline const char* to_string(AngleUnit unit) { return unit == AngleUnit::degrees ? "degrees" : "radians"; }

inline double in_unit(double radians, AngleUnit unit)
{
  return unit == AngleUnit::degrees ? radians * (180.0 / std::numbers::pi) : radians;
}

namespace detail
{

inline ReportDocument optional_number(const std::optional<double>& x)
{
  return x ? ReportDocument(*x) : ReportDocument(nullptr);
}

inline double fold_kahler(double theta_k) { return std::min(theta_k, std::numbers::pi - theta_k); }

} // namespace detail

inline ReportDocument report_header(const std::string& command, AngleUnit unit)
{
  ReportDocument doc;
  doc["schema"] = report_schema;
  doc["command"] = command;
  doc["unit"] = to_string(unit);
  return doc;
}

inline ReportDocument to_json(const PrincipalAngles& pa, AngleUnit unit)
{
  ReportDocument j;
  j["alpha_min"] = in_unit(pa.alpha_min, unit);
  j["alpha_max"] = in_unit(pa.alpha_max, unit);
  return j;
}

inline ReportDocument to_json(const RealVector& v)
{
  ReportDocument j = ReportDocument::array();
  for (double x : v.entries()) j.push_back(x);
  return j;
}

/// Angle fields, residuals and plane classification for one vector pair.
/// `classification` is empty when the pair spans no 2-plane.
inline void write_angle_report(ReportDocument& doc, const AngleReport& r, const std::optional<PlaneClass>& classification,
                               const ReportStyle& style)
{
  const AngleUnit unit = style.unit;
  ReportDocument undefined = ReportDocument::object();

  ReportDocument angles;
  angles["euclidean"] = in_unit(r.euclidean, unit);
  angles["complex_cosine"] = {{"re", r.complex_cosine.real()}, {"im", r.complex_cosine.imag()}};
  angles["rho"] = r.rho;
  angles["hermitian"] = in_unit(r.hermitian, unit);
  if (r.pseudo) {
    angles["pseudo"] = in_unit(*r.pseudo, unit);
  } else {
    angles["pseudo"] = nullptr;
    undefined["pseudo"] = to_string(r.pseudo.reason());
  }
  if (r.kahler) {
    const double k = style.unoriented_kahler ? detail::fold_kahler(*r.kahler) : *r.kahler;
    angles["kahler"] = in_unit(k, unit);
  } else {
    angles["kahler"] = nullptr;
    undefined["kahler"] = to_string(r.kahler.reason());
  }
  doc["kahler_orientation"] = style.unoriented_kahler ? "unoriented" : "oriented";
  doc["angles"] = std::move(angles);

  ReportDocument residuals;
  residuals["eq7"] = detail::optional_number(r.residuals.eq7);
  residuals["eq8"] = detail::optional_number(r.residuals.eq8);
  residuals["eq9a"] = detail::optional_number(r.residuals.eq9a);
  residuals["eq9b"] = detail::optional_number(r.residuals.eq9b);
  residuals["eq9c"] = detail::optional_number(r.residuals.eq9c);
  doc["residuals"] = std::move(residuals);

  if (classification) {
    const double k = style.unoriented_kahler ? detail::fold_kahler(classification->kahler_angle)
                                             : classification->kahler_angle;
    doc["classification"] = {{"tag", to_string(classification->tag)}, {"kahler_angle", in_unit(k, unit)}};
  } else {
    doc["classification"] = nullptr;
    undefined["classification"] = to_string(Undefined::degenerate_plane);
  }
  doc["undefined"] = std::move(undefined);
}

inline void write_isocliny(ReportDocument& doc, const PrincipalAngles& pa, const IsoclinyResult& iso, AngleUnit unit)
{
  doc["principal_angles"] = to_json(pa, unit);
  doc["isoclinic"] = iso.isoclinic;
  doc["isocliny_angle"] = iso.isoclinic ? ReportDocument(in_unit(iso.angle, unit)) : ReportDocument(nullptr);
}

inline std::string serialize(const ReportDocument& doc) { return doc.dump(2) + "\n"; }

} // namespace hermangle

#endif
