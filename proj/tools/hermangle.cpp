// hermangle: angles between vectors and 2-planes of complex vector spaces.
//
//   hermangle angles <file> --pair a,b [--degrees] [--tol x] [--unoriented]
//   hermangle subspace <principal-angles|isoclinic|j-image> <file> --planes p,q [--degrees] [--tol x]
//   hermangle selftest --samples N --seed S
//
// <file> may be "-" to read the document from stdin.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hermangle/commands.hpp"

namespace
{

bool read_document(const std::string& path, std::string& text, std::string& error)
{
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "error: cannot open '" + path + "'\n";
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  text = buffer.str();
  return true;
}

int emit(const hermangle::CommandResult& r)
{
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Angles between vectors, complex lines and 2-planes in complex vector spaces"};
  app.require_subcommand(1);

  std::string file;
  double tol = 0.0;
  bool degrees = false;
  bool unoriented = false;
  std::string pair, planes;

  auto* angles = app.add_subcommand("angles", "All five angles, identity residuals and plane class for a vector pair");
  angles->add_option("file", file, "Input document (\"-\" for stdin)")->required();
  angles->add_option("--pair", pair, "Two vector names, comma separated")->required();
  auto* angles_tol = angles->add_option("--tol", tol, "Tolerance for definedness and classification");
  angles->add_flag("--degrees", degrees, "Report angles in degrees");
  angles->add_flag("--unoriented", unoriented, "Fold the Kaehler angle into [0, pi/2]");

  std::string query;
  auto* subspace = app.add_subcommand("subspace", "Stationary angles, isocliny or J-image of 2-planes");
  subspace->add_option("query", query, "principal-angles | isoclinic | j-image")
    ->required()
    ->check(CLI::IsMember({"principal-angles", "isoclinic", "j-image"}));
  subspace->add_option("file", file, "Input document (\"-\" for stdin)")->required();
  subspace->add_option("--planes", planes, "Plane names, comma separated")->required();
  auto* subspace_tol = subspace->add_option("--tol", tol, "Isocliny and degeneracy tolerance");
  subspace->add_flag("--degrees", degrees, "Report angles in degrees");

  long samples = 1000;
  std::uint64_t seed = 42;
  auto* selftest = app.add_subcommand("selftest", "Randomized check of every identity and plane theorem");
  selftest->add_option("--samples", samples, "Number of random draws")->capture_default_str();
  selftest->add_option("--seed", seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hermangle::exit_input_error;
  }

  if (selftest->parsed()) return emit(hermangle::run_selftest_command(samples, seed));

  std::string text, error;
  if (!read_document(file, text, error)) {
    std::cerr << error;
    return hermangle::exit_input_error;
  }

  hermangle::CommonFlags common;
  common.degrees = degrees;
  if (angles->parsed()) {
    if (angles_tol->count() > 0) common.tolerance = tol;
    return emit(hermangle::run_angles(text, {pair, common, unoriented}));
  }

  if (subspace_tol->count() > 0) common.tolerance = tol;
  static const std::map<std::string, hermangle::SubspaceQuery> queries{
    {"principal-angles", hermangle::SubspaceQuery::principal_angles},
    {"isoclinic", hermangle::SubspaceQuery::isoclinic},
    {"j-image", hermangle::SubspaceQuery::j_image},
  };
  return emit(hermangle::run_subspace(text, {queries.at(query), planes, common}));
}
