#include <doctest.h>
#include <omp.h>

#include "vinberg/errors.hpp"
#include "vinberg/search.hpp"

using namespace vinberg;

namespace {

void check_same(const SearchResult& a, const SearchResult& b) {
  CHECK(a.max_ratio == b.max_ratio);
  CHECK(a.violation_count == b.violation_count);
  CHECK(a.n_samples == b.n_samples);
  REQUIRE(a.violations.size() == b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i) {
    CHECK(a.violations[i].seed_index == b.violations[i].seed_index);
    CHECK(a.violations[i].record.ratio == b.violations[i].record.ratio);
    CHECK(a.violations[i].record.g.matrix() == b.violations[i].record.g.matrix());
  }
}

}  // namespace

TEST_CASE("OpenMP search matches the serial reference") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  for (std::uint64_t seed : {1ULL, 42ULL, 12345ULL}) {
    const SearchOptions opts{seed, 3000, seed % 2 == 0};
    check_same(search_violations(opts), search_violations_serial(opts));
    CHECK(max_ratio_sym(seed, 2000) == max_ratio_sym_serial(seed, 2000));
  }
  omp_set_num_threads(saved);
}

TEST_CASE("search results") {
  const SearchResult r = search_violations({7, 2000, true});
  CHECK(r.n_samples == 2000);
  CHECK(r.probe_injected);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().seed_index == 0);
  CHECK(r.max_ratio >= 1.0394);
  CHECK(r.violation_count == r.violations.size());
  for (const auto& v : r.violations) CHECK(v.record.violated);

  const SearchResult again = search_violations({7, 2000, true});
  check_same(r, again);

  const SearchResult plain = search_violations({7, 2000, false});
  CHECK(plain.violation_count + 1 == r.violation_count);

  CHECK_THROWS_AS(search_violations({7, 0, true}), DomainError);
  CHECK_THROWS_AS(search_violations_serial({7, 0, true}), DomainError);
}

TEST_CASE("probes use unit tangent vectors") {
  for (std::size_t i = 1; i < 50; ++i) {
    CHECK(probe_sample(3, i).v.c.norm() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("symmetric cone probes never expand") {
  CHECK(max_ratio_sym(99, 5000) <= 1.0 + 1e-9);
}
