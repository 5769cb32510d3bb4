#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vinberg/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const vinberg::cli::CommandResult& r) {
  if (r.status == vinberg::cli::Status::ok) {
    nlohmann::json out = r.payload;
    out["status"] = "ok";
    std::cout << out.dump() << '\n';
  } else {
    std::cerr << nlohmann::json{{"status", vinberg::cli::to_string(r.status)},
                                {"message", r.message}}
                     .dump()
              << '\n';
  }
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual Vinberg cone: membership checks, decompositions, contraction probes"};
  app.require_subcommand(1);

  std::string input;
  double tol = 1e-9;
  std::string what;
  std::string mode = "triple";
  int max_iter = 100;
  double stop_tol = 1e-12;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::string out;
  bool inject = true;

  auto* check = app.add_subcommand("check", "membership test");
  check->add_option("input", input, "JSON file (default: stdin)");
  check->add_option("--what", what, "cone, closed-cone, symplectic, G, upsilon, gamma, gamma-sp")
      ->required()
      ->check(CLI::IsMember({"cone", "closed-cone", "symplectic", "G", "upsilon", "gamma",
                             "gamma-sp"}));
  check->add_option("--tol", tol, "cone tolerance")->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "triple, Gamma or polar factors");
  decompose->add_option("input", input, "JSON file (default: stdin)");
  decompose->add_option("--mode", mode, "triple, gamma or polar")
      ->check(CLI::IsMember({"triple", "gamma", "polar"}))
      ->capture_default_str();
  decompose->add_option("--tol", tol, "membership tolerance")->capture_default_str();
  decompose->add_option("--max-iter", max_iter, "polar iterations")->capture_default_str();
  decompose->add_option("--stop-tol", stop_tol, "polar stopping tolerance")->capture_default_str();

  auto* polar = app.add_subcommand("polar", "polar factors rho(A) exp(X)");
  polar->add_option("input", input, "JSON file (default: stdin)");
  polar->add_option("--tol", tol, "membership tolerance")->capture_default_str();
  polar->add_option("--max-iter", max_iter, "iterations")->capture_default_str();
  polar->add_option("--stop-tol", stop_tol, "stopping tolerance")->capture_default_str();

  auto* counter = app.add_subcommand("counterexample", "the translation that stretches a tangent vector");

  auto* search = app.add_subcommand("search", "randomized contraction-violation search");
  search->add_option("--seed", seed)->capture_default_str();
  search->add_option("--samples", samples)->check(CLI::PositiveNumber)->capture_default_str();
  search->add_option("--out", out, "CSV path; summary goes next to it as .json");
  search->add_flag("--inject-probe,!--no-probe", inject, "evaluate the known counterexample first")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return emit(vinberg::cli::cmd_check(read_input(input), what, tol));
    if (*decompose) {
      return emit(vinberg::cli::cmd_decompose(read_input(input), mode, tol, max_iter, stop_tol));
    }
    if (*polar) {
      return emit(vinberg::cli::cmd_decompose(read_input(input), "polar", tol, max_iter, stop_tol));
    }
    if (*counter) return emit(vinberg::cli::cmd_counterexample());
    if (*search) return emit(vinberg::cli::cmd_search(seed, samples, out, inject));
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
