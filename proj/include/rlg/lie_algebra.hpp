#pragma once

#include "rlg/common.hpp"

#include <regex>
#include <set>
#include <utility>

namespace rlg {

/// Finite-dimensional real Lie algebra in a fixed basis, stored as the full
/// structure-constants tensor: [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra {
public:
  LieAlgebra(std::string name, int dim) : name_(std::move(name)), dim_(dim)
  {
    if (dim < 1) throw std::invalid_argument("algebra dimension must be positive");
    tensor_.assign(static_cast<std::size_t>(dim), Mat::Zero(dim, dim));
  }

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }

  /// c^k_{ij}, all indices 0-based.
  double structure_constant(int i, int j, int k) const { return tensor_[static_cast<std::size_t>(k)](i, j); }

  /// Slice of the tensor for output index k: (i, j) -> c^k_{ij}.
  const Mat& component(int k) const { return tensor_[static_cast<std::size_t>(k)]; }

  /// Set c^k_{ij} = c and c^k_{ji} = -c.
  void set_bracket(int i, int j, int k, double c)
  {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j) throw std::invalid_argument("bracket indices must differ");
    tensor_[static_cast<std::size_t>(k)](i, j) = c;
    tensor_[static_cast<std::size_t>(k)](j, i) = -c;
  }

  /// Set one raw tensor entry without the antisymmetric mirror.
  void set_raw(int i, int j, int k, double c)
  {
    check_index(i);
    check_index(j);
    check_index(k);
    tensor_[static_cast<std::size_t>(k)](i, j) = c;
  }

  /// [u, v] in basis coordinates.
  Vec bracket(const Vec& u, const Vec& v) const
  {
    if (u.size() != dim_ || v.size() != dim_)
      throw std::invalid_argument("bracket operands do not match the algebra dimension");
    Vec w(dim_);
    for (int k = 0; k < dim_; ++k) w[k] = u.dot(tensor_[static_cast<std::size_t>(k)] * v);
    return w;
  }

  Vec basis_vector(int i) const
  {
    check_index(i);
    Vec e = Vec::Zero(dim_);
    e[i] = 1.0;
    return e;
  }

private:
  void check_index(int i) const
  {
    if (i < 0 || i >= dim_) throw std::invalid_argument("basis index out of range");
  }

  std::string name_;
  int dim_;
  std::vector<Mat> tensor_;  // tensor_[k](i,j) = c^k_{ij}
};

/// Checks antisymmetry and the Jacobi identity of the stored tensor.
inline ValidationReport validate_algebra(const LieAlgebra& alg, double tol = 1e-9)
{
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  const int n = alg.dim();
  ValidationReport report;

  double worst_antisym = 0.0;
  int aw[3] = {0, 0, 0};
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double r = std::abs(alg.structure_constant(i, j, k) + alg.structure_constant(j, i, k));
        if (r > worst_antisym) {
          worst_antisym = r;
          aw[0] = i;
          aw[1] = j;
          aw[2] = k;
        }
      }
  report.add("antisymmetry", worst_antisym < tol, worst_antisym,
             worst_antisym == 0.0 ? "" : "worst at (i,j,k)=(" + std::to_string(aw[0] + 1) + "," +
                                             std::to_string(aw[1] + 1) + "," + std::to_string(aw[2] + 1) + ")");

  double worst_jacobi = 0.0;
  int jw[4] = {0, 0, 0, 0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int m = 0; m < n; ++m)
            s += alg.structure_constant(i, j, m) * alg.structure_constant(m, k, l) +
                 alg.structure_constant(j, k, m) * alg.structure_constant(m, i, l) +
                 alg.structure_constant(k, i, m) * alg.structure_constant(m, j, l);
          double r = std::abs(s);
          if (r > worst_jacobi) {
            worst_jacobi = r;
            jw[0] = i;
            jw[1] = j;
            jw[2] = k;
            jw[3] = l;
          }
        }
  report.add("jacobi", worst_jacobi < tol, worst_jacobi,
             worst_jacobi == 0.0 ? ""
                                 : "worst at (i,j,k,l)=(" + std::to_string(jw[0] + 1) + "," +
                                       std::to_string(jw[1] + 1) + "," + std::to_string(jw[2] + 1) + "," +
                                       std::to_string(jw[3] + 1) + ")");
  return report;
}

inline const std::vector<std::string>& catalog_names()
{
  static const std::vector<std::string> names = {"abelian(n)", "heisenberg3", "aff1", "so3"};
  return names;
}

/// Standard low-dimensional algebras by name. "abelian(n)" takes a literal n,
/// e.g. "abelian(4)".
inline LieAlgebra catalog_get(const std::string& name)
{
  static const std::regex abelian_re(R"(abelian\((\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, abelian_re)) {
    int n = std::stoi(m[1].str());
    if (n < 1 || n > 32) throw std::out_of_range("abelian(n) supports 1 <= n <= 32");
    return LieAlgebra(name, n);
  }
  if (name == "heisenberg3") {
    LieAlgebra alg(name, 3);
    alg.set_bracket(0, 1, 2, 1.0);
    return alg;
  }
  if (name == "aff1") {
    LieAlgebra alg(name, 2);
    alg.set_bracket(0, 1, 1, 1.0);
    return alg;
  }
  if (name == "so3") {
    LieAlgebra alg(name, 3);
    alg.set_bracket(0, 1, 2, 1.0);
    alg.set_bracket(1, 2, 0, 1.0);
    alg.set_bracket(2, 0, 1, 1.0);
    return alg;
  }
  throw std::out_of_range("unknown catalog algebra: " + name +
                          " (known: abelian(n), heisenberg3, aff1, so3)");
}

/// File format: { "name": str, "dim": int,
///                "brackets": [ {"i": int, "j": int, "k": int, "c": number}, ... ] }
/// with 1-based indices and only i < j entries; loading antisymmetrizes.
inline json algebra_to_json(const LieAlgebra& alg)
{
  json brackets = json::array();
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = i + 1; j < alg.dim(); ++j)
      for (int k = 0; k < alg.dim(); ++k) {
        double c = alg.structure_constant(i, j, k);
        if (c != 0.0) brackets.push_back(json{{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", c}});
      }
  return json{{"name", alg.name()}, {"dim", alg.dim()}, {"brackets", brackets}};
}

inline LieAlgebra algebra_from_json(const json& j)
{
  if (!j.contains("name") || !j.contains("dim") || !j.contains("brackets"))
    throw std::invalid_argument("algebra JSON needs fields name, dim, brackets");
  LieAlgebra alg(j.at("name").get<std::string>(), j.at("dim").get<int>());
  std::set<std::array<int, 3>> seen;
  for (const json& b : j.at("brackets")) {
    int i = b.at("i").get<int>();
    int jj = b.at("j").get<int>();
    int k = b.at("k").get<int>();
    double c = b.at("c").get<double>();
    if (i < 1 || jj < 1 || k < 1 || i > alg.dim() || jj > alg.dim() || k > alg.dim())
      throw std::invalid_argument("bracket entry index out of range");
    if (i >= jj) throw std::invalid_argument("bracket entries must have i < j");
    if (!seen.insert({i, jj, k}).second) throw std::invalid_argument("duplicate bracket entry");
    alg.set_bracket(i - 1, jj - 1, k - 1, c);
  }
  return alg;
}

}  // namespace rlg
