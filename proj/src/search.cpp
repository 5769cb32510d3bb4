#include "vinberg/search.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#include "vinberg/errors.hpp"
#include "vinberg/random.hpp"
#include "vinberg/semigroup.hpp"

namespace vinberg {

ContractionRecord probe_sample(std::uint64_t seed, std::size_t index) {
  Rng rng(derive_seed(seed, index));
  const bool interior = rng.coin();
  const GElement g = sample_gamma(rng, interior);
  const VVector x = sample_cone(rng);
  VVector v;
  for (int i = 0; i < 5; ++i) v[i] = rng.normal();
  v = (1.0 / v.c.norm()) * v;
  return contraction_ratio(g, x, v);
}

namespace {

void check_options(const SearchOptions& opts) {
  if (opts.n_samples == 0) throw DomainError("search: n_samples must be positive");
}

// Serial reduction shared by both kernels; slot 0 holds the injected probe.
SearchResult summarize(const SearchOptions& opts,
                       std::vector<std::optional<ContractionRecord>>& records) {
  SearchResult out;
  out.n_samples = opts.n_samples;
  out.probe_injected = opts.inject_probe;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i]) continue;
    ContractionRecord& r = *records[i];
    out.max_ratio = std::max(out.max_ratio, r.ratio);
    if (r.violated) {
      ++out.violation_count;
      out.violations.push_back({i, std::move(r)});
    }
  }
  return out;
}

}  // namespace

SearchResult search_violations(const SearchOptions& opts) {
  check_options(opts);
  std::vector<std::optional<ContractionRecord>> records(opts.n_samples + 1);
  if (opts.inject_probe) records[0] = counterexample();

  std::vector<std::exception_ptr> errors(records.size());
  const auto n = static_cast<long long>(opts.n_samples);
#pragma omp parallel for schedule(static)
  for (long long i = 1; i <= n; ++i) {
    try {
      records[i] = probe_sample(opts.seed, static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return summarize(opts, records);
}

SearchResult search_violations_serial(const SearchOptions& opts) {
  check_options(opts);
  std::vector<std::optional<ContractionRecord>> records(opts.n_samples + 1);
  if (opts.inject_probe) records[0] = counterexample();
  for (std::size_t i = 1; i <= opts.n_samples; ++i) {
    records[i] = probe_sample(opts.seed, i);
  }
  return summarize(opts, records);
}

double probe_sample_sym(std::uint64_t seed, std::size_t index) {
  Rng rng(derive_seed(seed, index));
  const Mat6 g = sample_gamma_sp(rng);
  Mat3 f;
  Mat3 w;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      f(i, j) = rng.normal();
      w(i, j) = rng.normal();
    }
  }
  const Mat3 x = f * f.transpose() + 1e-3 * Mat3::Identity();
  const Mat3 v = w + w.transpose();
  return contraction_ratio_sym(g, x, v / v.norm());
}

double max_ratio_sym(std::uint64_t seed, std::size_t n_samples) {
  if (n_samples == 0) throw DomainError("max_ratio_sym: n_samples must be positive");
  std::vector<double> ratios(n_samples + 1, 0.0);
  std::vector<std::exception_ptr> errors(n_samples + 1);
  const auto n = static_cast<long long>(n_samples);
#pragma omp parallel for schedule(static)
  for (long long i = 1; i <= n; ++i) {
    try {
      ratios[i] = probe_sample_sym(seed, static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return *std::max_element(ratios.begin() + 1, ratios.end());
}

double max_ratio_sym_serial(std::uint64_t seed, std::size_t n_samples) {
  if (n_samples == 0) throw DomainError("max_ratio_sym: n_samples must be positive");
  double best = 0.0;
  for (std::size_t i = 1; i <= n_samples; ++i) {
    best = std::max(best, probe_sample_sym(seed, i));
  }
  return best;
}

}  // namespace vinberg
