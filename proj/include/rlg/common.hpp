#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rlg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using json = nlohmann::json;

inline double inf_norm(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }
inline double inf_norm(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline json vec_to_json(const Vec& v)
{
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

inline Vec vec_from_json(const json& a)
{
  if (!a.is_array()) throw std::invalid_argument("expected a JSON array of numbers");
  Vec v(static_cast<Eigen::Index>(a.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const json& e = a[static_cast<std::size_t>(i)];
    if (!e.is_number()) throw std::invalid_argument("expected a JSON array of numbers");
    v[i] = e.get<double>();
  }
  return v;
}

inline json mat_to_json(const Mat& m)
{
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i).transpose()));
  return rows;
}

inline Mat mat_from_json(const json& a)
{
  if (!a.is_array() || a.empty()) throw std::invalid_argument("expected a JSON array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(a.size());
  Vec first = vec_from_json(a[0]);
  Mat m(rows, first.size());
  m.row(0) = first.transpose();
  for (Eigen::Index i = 1; i < rows; ++i) {
    Vec r = vec_from_json(a[static_cast<std::size_t>(i)]);
    if (r.size() != m.cols()) throw std::invalid_argument("ragged JSON matrix");
    m.row(i) = r.transpose();
  }
  return m;
}

/// One named check with its measured residual.
struct CheckRecord {
  std::string check;
  bool pass = false;
  double residual = 0.0;
  std::string details;
};

inline void to_json(json& j, const CheckRecord& r)
{
  j = json{{"check", r.check}, {"pass", r.pass}, {"residual", r.residual}, {"details", r.details}};
}

inline void from_json(const json& j, CheckRecord& r)
{
  j.at("check").get_to(r.check);
  j.at("pass").get_to(r.pass);
  j.at("residual").get_to(r.residual);
  j.at("details").get_to(r.details);
}

/// Aggregate of check records; passes only if every record passes.
struct ValidationReport {
  std::vector<CheckRecord> checks;

  void add(std::string check, bool pass, double residual, std::string details = "")
  {
    checks.push_back({std::move(check), pass, residual, std::move(details)});
  }

  bool passed() const
  {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const CheckRecord* find(const std::string& name) const
  {
    for (const auto& c : checks)
      if (c.check == name) return &c;
    return nullptr;
  }

  json to_json() const
  {
    json a = json::array();
    for (const auto& c : checks) a.push_back(c);
    return a;
  }
};

/// Result of a seeded sampling check.
struct SampleReport {
  std::string check;
  bool pass = false;
  double worst_residual = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  json witness;
  std::string details;

  json to_json() const
  {
    return json{{"check", check},   {"pass", pass}, {"residual", worst_residual},
                {"samples", samples}, {"seed", seed},  {"witness", witness},
                {"details", details}};
  }
};

/// Deterministic random source. The bit stream comes from std::mt19937_64;
/// the floating-point mappings are pinned here so that identical seeds give
/// identical samples on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform()
  {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double gaussian()
  {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  Vec gaussian_vector(Eigen::Index n)
  {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  Vec uniform_vector(Eigen::Index n, double lo, double hi)
  {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = uniform(lo, hi);
    return v;
  }

  /// Point on the unit sphere of the quadratic form given by `gram`.
  Vec unit_sphere(const Mat& gram)
  {
    while (true) {
      Vec v = gaussian_vector(gram.rows());
      double q = v.dot(gram * v);
      if (q > 1e-30) return v / std::sqrt(q);
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace rlg
