#include "vinberg/json_io.hpp"

#include <sstream>

#include "vinberg/errors.hpp"

namespace vinberg {

namespace {

template <int N>
Eigen::Matrix<double, N, 1> fixed_array(const json& j, const char* what) {
  if (!j.is_array() || j.size() != N) {
    throw DomainError(std::string(what) + ": expected an array of " + std::to_string(N) +
                      " numbers");
  }
  Eigen::Matrix<double, N, 1> out;
  for (int i = 0; i < N; ++i) {
    if (!j[i].is_number()) throw DomainError(std::string(what) + ": non-numeric entry");
    out[i] = j[i].get<double>();
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

json to_json(const VVector& x) { return json(std::vector<double>(x.c.begin(), x.c.end())); }
json to_json(const HMatrix& a) { return json(std::vector<double>(a.a.begin(), a.a.end())); }
json to_json(const VPrimeVector& u) { return json::array({u.u1, u.u2}); }

json to_json(const Mat6& m) {
  json out = json::array();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out.push_back(m(i, j));
  return out;
}

json to_json(const TripleFactors& f) {
  return {{"v", to_json(f.v)}, {"L", to_json(f.l)}, {"u", to_json(f.u)}};
}

json to_json(const TubePoint& z) { return {{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

json to_json(const GammaFactors& f) {
  return {{"v", to_json(f.v)}, {"A", to_json(f.a)}, {"u", to_json(f.u)}};
}

json to_json(const PolarFactors& p) {
  return {{"A", to_json(p.a)},
          {"X", {{"v", to_json(p.x.v)}, {"u", to_json(p.x.u)}}},
          {"iterations", p.iterations},
          {"residual", p.residual}};
}

json to_json(const ContractionRecord& r) {
  return {{"g", to_json(r.g.matrix())}, {"x", to_json(r.x)}, {"v", to_json(r.v)},
          {"before", r.before},         {"after", r.after},  {"ratio", r.ratio},
          {"violated", r.violated}};
}

json summary_json(const SearchResult& r) {
  return {{"max_ratio", r.max_ratio},
          {"violation_count", r.violation_count},
          {"n_samples", r.n_samples},
          {"probe_injected", r.probe_injected}};
}

VVector vvector_from_json(const json& j) { return VVector(fixed_array<5>(j, "VVector")); }
HMatrix hmatrix_from_json(const json& j) { return HMatrix(fixed_array<5>(j, "HMatrix")); }

VPrimeVector vprime_from_json(const json& j) {
  const auto u = fixed_array<2>(j, "VPrimeVector");
  return {u[0], u[1]};
}

Mat6 mat6_from_json(const json& j) {
  if (j.is_array() && j.size() == 6 && j[0].is_array()) {
    json flat = json::array();
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != 6) throw DomainError("matrix: expected 6x6 rows");
      for (const auto& e : row) flat.push_back(e);
    }
    return mat6_from_json(flat);
  }
  const auto flat = fixed_array<36>(j, "matrix");
  Mat6 m;
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) m(i, k) = flat[6 * i + k];
  return m;
}

TripleFactors triple_from_json(const json& j) {
  return {vvector_from_json(field(j, "v")), hmatrix_from_json(field(j, "L")),
          vprime_from_json(field(j, "u"))};
}

TubePoint tube_point_from_json(const json& j) {
  return TubePoint::from_parts(vvector_from_json(field(j, "re")),
                               vvector_from_json(field(j, "im")));
}

std::string violations_csv(const SearchResult& r) {
  std::ostringstream out;
  out << "seed_index,ratio,violated,g_json,x_json,v_json\n";
  for (const auto& rec : r.violations) {
    const ContractionRecord& c = rec.record;
    out << rec.seed_index << ',' << json(c.ratio).dump() << ','
        << (c.violated ? "true" : "false") << ",\"" << to_json(c.g.matrix()).dump()
        << "\",\"" << to_json(c.x).dump() << "\",\"" << to_json(c.v).dump() << "\"\n";
  }
  return out.str();
}

}  // namespace vinberg
