#pragma once

// Randomized contraction probes over Gamma x Omega (and Gamma_Sp x Sym++ for
// contrast). Each probe i draws from its own generator seeded with
// derive_seed(master, i), so the OpenMP kernels and the serial reference
// produce identical results regardless of scheduling.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vinberg/metric.hpp"

namespace vinberg {

struct SearchRecord {
  /// 0 is the injected counterexample; random probes are numbered from 1.
  std::size_t seed_index = 0;
  ContractionRecord record;
};

struct SearchResult {
  /// Violated records in seed_index order.
  std::vector<SearchRecord> violations;
  double max_ratio = 0.0;
  std::size_t violation_count = 0;
  /// Random probes drawn (the injected probe is not counted).
  std::size_t n_samples = 0;
  bool probe_injected = false;
};

struct SearchOptions {
  std::uint64_t seed = 0;
  std::size_t n_samples = 1000;
  bool inject_probe = true;
};

/// Random probe `index` of run `seed`: g from sample_gamma (interior or
/// boundary at random), x from sample_cone, v a unit-norm Gaussian direction.
ContractionRecord probe_sample(std::uint64_t seed, std::size_t index);

/// OpenMP kernel. Throws DomainError if n_samples == 0.
SearchResult search_violations(const SearchOptions& opts);

/// Serial reference for search_violations; same output bit for bit.
SearchResult search_violations_serial(const SearchOptions& opts);

/// Contraction ratio of random probe `index` for Gamma_Sp on Sym++(3).
double probe_sample_sym(std::uint64_t seed, std::size_t index);

/// Largest ratio over probes 1..n_samples (OpenMP).
double max_ratio_sym(std::uint64_t seed, std::size_t n_samples);
double max_ratio_sym_serial(std::uint64_t seed, std::size_t n_samples);

}  // namespace vinberg
