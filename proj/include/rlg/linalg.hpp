#pragma once

#include "rlg/common.hpp"

#include <Eigen/SVD>

namespace rlg {

/// Column-major vectorization of an n x n matrix.
inline Vec mat_to_vec(const Mat& m)
{
  return Eigen::Map<const Vec>(m.data(), m.size());
}

inline Mat vec_to_mat(const Vec& v, Eigen::Index n)
{
  if (v.size() != n * n) throw std::invalid_argument("vector length does not match matrix size");
  return Eigen::Map<const Mat>(v.data(), n, n);
}

/// Flip a vector's sign so its first entry of meaningful magnitude is positive.
inline void fix_sign(Vec& v)
{
  const double scale = inf_norm(v);
  if (scale == 0.0) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-9 * scale) {
      if (v[i] < 0.0) v = -v;
      return;
    }
  }
}

/// Orthonormal basis of { v : constraints * v = 0 }, as right singular vectors
/// whose singular values fall below rel_cutoff * sigma_max. Signs are fixed for
/// determinism. A constraint matrix with no rows means no constraints.
inline std::vector<Vec> nullspace(const Mat& constraints, Eigen::Index unknowns,
                                  double rel_cutoff = 1e-10)
{
  std::vector<Vec> basis;
  if (constraints.rows() == 0) {
    for (Eigen::Index i = 0; i < unknowns; ++i) {
      Vec e = Vec::Zero(unknowns);
      e[i] = 1.0;
      basis.push_back(e);
    }
    return basis;
  }
  if (constraints.cols() != unknowns) throw std::invalid_argument("constraint width mismatch");

  Eigen::JacobiSVD<Mat> svd(constraints, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? rel_cutoff * sv[0] : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;

  for (Eigen::Index i = rank; i < unknowns; ++i) {
    Vec v = svd.matrixV().col(i);
    fix_sign(v);
    basis.push_back(v);
  }
  return basis;
}

/// Nullspace of a constraint system acting on n x n matrices (column-major
/// unknowns), returned as matrices orthonormal under the Frobenius inner
/// product.
inline std::vector<Mat> matrix_nullspace(const Mat& constraints, Eigen::Index n,
                                         double rel_cutoff = 1e-10)
{
  std::vector<Mat> out;
  for (const Vec& v : nullspace(constraints, n * n, rel_cutoff)) out.push_back(vec_to_mat(v, n));
  return out;
}

namespace detail {

// [6/6] Pade approximant coefficients of exp.
inline const double kPade6[7] = {1.0,       1.0 / 2.0,    5.0 / 44.0,   1.0 / 66.0,
                                 1.0 / 792.0, 1.0 / 15840.0, 1.0 / 665280.0};

}  // namespace detail

/// Dense matrix exponential by scaling and squaring with a fixed [6/6] Pade
/// approximant.
inline Mat expm(const Mat& a)
{
  if (a.rows() != a.cols()) throw std::invalid_argument("expm requires a square matrix");
  const Eigen::Index n = a.rows();

  const double norm = inf_norm(a);
  int squarings = 0;
  Mat b = a;
  if (norm > 0.25) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
    b /= std::pow(2.0, squarings);
  }

  Mat b2 = b * b;
  Mat even = detail::kPade6[0] * Mat::Identity(n, n) + detail::kPade6[2] * b2;
  Mat odd = detail::kPade6[1] * Mat::Identity(n, n) + detail::kPade6[3] * b2;
  Mat b4 = b2 * b2;
  even += detail::kPade6[4] * b4;
  odd += detail::kPade6[5] * b4;
  Mat b6 = b4 * b2;
  even += detail::kPade6[6] * b6;
  Mat u = b * odd;

  Mat num = even + u;
  Mat den = even - u;
  Mat r = den.fullPivLu().solve(num);

  for (int s = 0; s < squarings; ++s) r = r * r;
  return r;
}

}  // namespace rlg
