#include "vinberg/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>

#include "vinberg/errors.hpp"
#include "vinberg/metric.hpp"
#include "vinberg/search.hpp"
#include "vinberg/semigroup.hpp"

namespace vinberg::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::domain_error: return "domain_error";
    case Status::convergence_error: return "convergence_error";
    case Status::inconsistency: return "inconsistency";
    case Status::parse_error: return "parse_error";
  }
  return "unknown";
}

namespace {

CommandResult ok(json payload) { return {Status::ok, std::move(payload), {}}; }
CommandResult fail(Status s, std::string message) { return {s, json(), std::move(message)}; }

// Maps library exceptions onto statuses.
CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    return fail(Status::parse_error, std::string("parse error: ") + e.what());
  } catch (const ConvergenceError& e) {
    return fail(Status::convergence_error, e.what());
  } catch (const InconsistencyError& e) {
    return fail(Status::inconsistency, e.what());
  } catch (const Error& e) {
    return fail(Status::domain_error, e.what());
  }
}

json verdict(const std::optional<std::string>& violation) {
  json out = {{"verdict", !violation.has_value()}};
  if (violation) out["reason"] = *violation;
  return out;
}

std::optional<std::string> cone_violation(const VVector& x) {
  const Minors d = minors(x);
  if (!(d.d1 > 0.0)) return "minor D1 <= 0";
  if (!(d.d2 > 0.0)) return "minor D2 <= 0";
  if (!(d.d3 > 0.0)) return "minor D3 <= 0";
  return std::nullopt;
}

std::optional<std::string> gamma_sp_violation(const Mat6& m, double tol) {
  if (!is_symplectic(m)) return "not symplectic";
  if (!in_upsilon(m)) return "det D = 0";
  const auto [a, b, c, d] = blocks(m);
  if (!is_psd(c * d.transpose(), tol)) return "C D^T not positive semidefinite";
  if (!is_psd(d.transpose() * b, tol)) return "D^T B not positive semidefinite";
  return std::nullopt;
}

}  // namespace

CommandResult cmd_check(const std::string& input, const std::string& what, double tol) {
  return guarded([&]() -> CommandResult {
    const json j = json::parse(input);
    if (what == "cone") return ok(verdict(cone_violation(vvector_from_json(j))));
    if (what == "closed-cone") {
      const bool in = in_closed_cone(vvector_from_json(j), tol);
      return ok(verdict(in ? std::nullopt
                           : std::optional<std::string>("negative eigenvalue")));
    }
    const Mat6 m = mat6_from_json(j);
    if (what == "symplectic") {
      return ok(verdict(is_symplectic(m) ? std::nullopt
                                         : std::optional<std::string>("not symplectic")));
    }
    if (what == "G") return ok(verdict(g_violation(m)));
    if (what == "upsilon") {
      if (auto v = g_violation(m)) return ok(verdict(v));
      return ok(verdict(in_upsilon(m) ? std::nullopt
                                      : std::optional<std::string>("det D = 0")));
    }
    if (what == "gamma") return ok(verdict(gamma_violation(m, tol)));
    if (what == "gamma-sp") return ok(verdict(gamma_sp_violation(m, tol)));
    return fail(Status::parse_error, "unknown --what: " + what);
  });
}

CommandResult cmd_decompose(const std::string& input, const std::string& mode, double tol,
                            int max_iter, double stop_tol) {
  return guarded([&]() -> CommandResult {
    const GElement g = GElement::from_matrix(mat6_from_json(json::parse(input)));
    if (mode == "triple") {
      if (!in_upsilon(g)) return fail(Status::domain_error, "not in Upsilon");
      const TripleFactors f = triple_decompose(g);
      json out = to_json(f);
      out["residual"] = max_abs(Mat6(triple_compose(f).matrix() - g.matrix()));
      return ok(out);
    }
    if (mode == "gamma") {
      const GammaFactors f = gamma_factor(g, tol);
      json out = to_json(f);
      out["residual"] = max_abs(Mat6(f.compose().matrix() - g.matrix()));
      return ok(out);
    }
    if (mode == "polar") return ok(to_json(polar_factor(g, max_iter, stop_tol, tol)));
    return fail(Status::parse_error, "unknown --mode: " + mode);
  });
}

CommandResult cmd_counterexample() {
  const ContractionRecord r = counterexample();
  return ok({{"before", r.before},
             {"after", r.after},
             {"ratio", r.ratio},
             {"violated", r.violated},
             {"g", to_json(r.g.matrix())},
             {"x", to_json(r.x)},
             {"v", to_json(r.v)}});
}

CommandResult cmd_search(std::uint64_t seed, std::size_t samples, const std::string& out_path,
                         bool inject_probe) {
  return guarded([&]() -> CommandResult {
    const SearchResult r = search_violations({seed, samples, inject_probe});
    const json summary = summary_json(r);
    if (!out_path.empty()) {
      std::filesystem::path csv_path(out_path);
      std::ofstream csv(csv_path, std::ios::binary);
      csv << violations_csv(r);
      std::ofstream js(std::filesystem::path(csv_path).replace_extension(".json"),
                       std::ios::binary);
      js << summary.dump(2) << '\n';
      if (!csv || !js) return fail(Status::domain_error, "cannot write " + out_path);
    }
    return ok(summary);
  });
}

}  // namespace vinberg::cli
