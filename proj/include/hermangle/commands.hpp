#ifndef HERMANGLE_COMMANDS_HPP_
#define HERMANGLE_COMMANDS_HPP_

// The command-line subcommands as in-process functions. Each takes the raw
// document text plus parsed flags and returns the exit status together with
// what would go to stdout and stderr.
//
// Exit status: 0 success, 1 selftest found a residual out of tolerance,
// 2 usage or input error, 3 mathematical degeneracy.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "angles.hpp"
#include "document.hpp"
#include "report.hpp"
#include "selftest.hpp"
#include "subspaces.hpp"

namespace hermangle
{

enum ExitCode : int
{
  exit_ok = 0,
  exit_selftest_failed = 1,
  exit_input_error = 2,
  exit_degenerate = 3,
};

struct CommandResult
{
  int exit_code = exit_ok;
  std::string out;
  std::string err;
};

struct CommonFlags
{
  std::optional<double> tolerance; // overrides the document option
  bool degrees = false;            // overrides the document option when set
};

struct AnglesRequest
{
  std::string pair; // "a,b"
  CommonFlags common;
  bool unoriented = false;
};

enum class SubspaceQuery
{
  principal_angles,
  isoclinic,
  j_image,
};

struct SubspaceRequest
{
  SubspaceQuery query = SubspaceQuery::principal_angles;
  std::string planes; // "p,q" (or "p" for j-image)
  CommonFlags common;
};

namespace detail
{

inline std::vector<std::string> split_names(const std::string& list, std::size_t min_count, std::size_t max_count,
                                            const char* flag)
{
  std::vector<std::string> names;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) names.push_back(item);
  if (!list.empty() && list.back() == ',') names.emplace_back();
  const bool count_ok = names.size() >= min_count && names.size() <= max_count;
  const bool all_named = std::none_of(names.begin(), names.end(), [](const std::string& s) { return s.empty(); });
  if (!count_ok || !all_named) {
    const std::string expected = min_count == max_count ? std::to_string(min_count)
                                                        : std::to_string(min_count) + " or " + std::to_string(max_count);
    throw InputError(std::string(flag) + " expects " + expected + " comma-separated names, got '" + list + "'");
  }
  return names;
}

inline double resolve_tolerance(const CommonFlags& flags, const InputDocument& doc)
{
  if (flags.tolerance) {
    if (!std::isfinite(*flags.tolerance) || !(*flags.tolerance > 0.0)) {
      throw InputError("--tol must be a positive finite number");
    }
    return *flags.tolerance;
  }
  return doc.options.tolerance.value_or(default_tolerance);
}

inline AngleUnit resolve_unit(const CommonFlags& flags, const InputDocument& doc)
{
  if (flags.degrees) return AngleUnit::degrees;
  return doc.options.unit.value_or(AngleUnit::radians);
}

/// Maps the library's exception types onto exit codes.
template<typename Body>
CommandResult guarded(Body&& body)
{
  CommandResult result;
  try {
    result.out = body();
  } catch (const InputError& e) {
    result = {exit_input_error, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InvalidArgument& e) {
    result = {exit_input_error, "", std::string("error: ") + e.what() + "\n"};
  } catch (const DegenerateInput& e) {
    result = {exit_degenerate, "", std::string("degenerate input: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    result = {exit_input_error, "", std::string("error: ") + e.what() + "\n"};
  }
  return result;
}

inline TwoPlane build_plane(const InputDocument& doc, const std::string& name, double tol)
{
  const PlaneSpec& spec = doc.plane(name);
  try {
    return plane_from_pair(spec.first, spec.second, tol);
  } catch (const DegenerateInput& e) {
    throw DegenerateInput("plane '" + name + "': " + e.what());
  }
}

inline const char* query_name(SubspaceQuery q)
{
  switch (q) {
    case SubspaceQuery::principal_angles: return "principal-angles";
    case SubspaceQuery::isoclinic: return "isoclinic";
    case SubspaceQuery::j_image: return "j-image";
  }
  return "unknown";
}

} // namespace detail

/// `angles <file> --pair a,b`: every angle, residual and the plane class.
inline CommandResult run_angles(std::string_view document_text, const AnglesRequest& request)
{
  return detail::guarded([&] {
    const std::vector<std::string> names = detail::split_names(request.pair, 2, 2, "--pair");
    const InputDocument doc = parse_document(document_text);
    const double tol = detail::resolve_tolerance(request.common, doc);
    const AngleUnit unit = detail::resolve_unit(request.common, doc);
    const ComplexVector& a = doc.vector(names[0]);
    const ComplexVector& b = doc.vector(names[1]);
    if (a.size() != b.size()) {
      throw InputError("dimension mismatch: '" + names[0] + "' has " + std::to_string(a.size()) + " entries, '"
                       + names[1] + "' has " + std::to_string(b.size()));
    }
    if (norm(a) == 0.0) throw DegenerateInput("vector '" + names[0] + "' is zero; angles need nonzero vectors");
    if (norm(b) == 0.0) throw DegenerateInput("vector '" + names[1] + "' is zero; angles need nonzero vectors");

    const AngleReport report = angle_report(a, b, tol);
    std::optional<PlaneClass> cls;
    if (report.kahler) cls = classify_plane(a, b, tol);

    ReportDocument out = report_header("angles", unit);
    out["pair"] = names;
    out["tolerance"] = tol;
    write_angle_report(out, report, cls, {unit, request.unoriented});
    return serialize(out);
  });
}

/// `subspace <principal-angles|isoclinic|j-image> <file> --planes p,q`.
inline CommandResult run_subspace(std::string_view document_text, const SubspaceRequest& request)
{
  return detail::guarded([&] {
    const bool single = request.query == SubspaceQuery::j_image;
    const std::vector<std::string> names = detail::split_names(request.planes, single ? 1 : 2, single ? 1 : 2, "--planes");
    const InputDocument doc = parse_document(document_text);
    const double tol = detail::resolve_tolerance(request.common, doc);
    const AngleUnit unit = detail::resolve_unit(request.common, doc);

    ReportDocument out = report_header(std::string("subspace ") + detail::query_name(request.query), unit);
    out["planes"] = names;
    out["tolerance"] = tol;

    if (single) {
      const TwoPlane p = detail::build_plane(doc, names[0], tol);
      const TwoPlane jp = j_image(p);
      out["kahler_angle"] = in_unit(kahler_angle_of_plane(p), unit);
      out["j_image"] = {{"span_u", to_json(jp.span_u())}, {"span_v", to_json(jp.span_v())}};
      write_isocliny(out, principal_angles(p, jp), is_isoclinic(p, jp, tol), unit);
      return serialize(out);
    }

    const std::size_t dp = doc.plane(names[0]).first.size();
    const std::size_t dq = doc.plane(names[1]).first.size();
    if (dp != dq) {
      throw InputError("dimension mismatch: plane '" + names[0] + "' lives in R^" + std::to_string(dp) + ", plane '"
                       + names[1] + "' in R^" + std::to_string(dq));
    }
    const TwoPlane p = detail::build_plane(doc, names[0], tol);
    const TwoPlane q = detail::build_plane(doc, names[1], tol);
    const PrincipalAngles pa = principal_angles(p, q);
    if (request.query == SubspaceQuery::principal_angles) {
      out["principal_angles"] = to_json(pa, unit);
    } else {
      write_isocliny(out, pa, is_isoclinic(p, q, tol), unit);
    }
    return serialize(out);
  });
}

/// `selftest --samples N --seed S`.
inline CommandResult run_selftest_command(long samples, std::uint64_t seed)
{
  if (samples < 1) return {exit_input_error, "", "error: --samples must be at least 1\n"};
  const SelftestSummary summary = run_selftest(samples, seed);

  ReportDocument out;
  out["schema"] = report_schema;
  out["command"] = "selftest";
  out["samples"] = samples;
  out["seed"] = seed;
  ReportDocument checks = ReportDocument::array();
  for (const SelftestCheck& c : summary.checks) {
    ReportDocument entry;
    entry["name"] = c.name;
    entry["max_residual"] = c.max_residual;
    entry["tolerance"] = c.tolerance;
    entry["evaluated"] = c.evaluated;
    entry["pass"] = c.passed();
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  out["pass"] = summary.passed();
  return {summary.passed() ? exit_ok : exit_selftest_failed, serialize(out), ""};
}

} // namespace hermangle

#endif
