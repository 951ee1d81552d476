#include "mlcd/eigensym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "mlcd/errors.hpp"

namespace mlcd {

namespace {

double offdiag_norm(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

SymmetricEigen sym_eigen(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw NotSymmetric("matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) > 1e-9)
        throw NotSymmetric("matrix is not symmetric within 1e-9");

  Matrix work = (a + a.transpose()) / 2.0;
  Matrix v = Matrix::Identity(n, n);

  const double scale = work.norm();
  const double tol = 1e-12 * (scale > 0.0 ? scale : 1.0);
  const int max_sweeps = 100;

  int sweep = 0;
  while (offdiag_norm(work) > tol) {
    if (++sweep > max_sweeps) throw NoConvergence("Jacobi sweep cap reached");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = work(p, q);
        if (apq == 0.0) continue;
        double theta = (work(q, q) - work(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        for (int i = 0; i < n; ++i) {
          double aip = work(i, p), aiq = work(i, q);
          work(i, p) = c * aip - s * aiq;
          work(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = work(p, i), aqi = work(q, i);
          work(p, i) = c * api - s * aqi;
          work(q, i) = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  // sort descending; stable order by original index on ties
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return work(x, x) > work(y, y); });

  SymmetricEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues(i) = work(order[i], order[i]);
    out.eigenvectors.col(i) = v.col(order[i]);
  }
  return out;
}

Matrix truncated_approx(const Matrix& a, int r) {
  const int n = static_cast<int>(a.rows());
  if (r < 1 || r > n) throw BadRank("rank must satisfy 1 <= r <= n, got " + std::to_string(r));
  SymmetricEigen eig = sym_eigen(a);

  // best rank-r in Frobenius norm keeps the r largest components by |lambda|
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return std::abs(eig.eigenvalues(x)) > std::abs(eig.eigenvalues(y));
  });

  Matrix approx = Matrix::Zero(n, n);
  for (int t = 0; t < r; ++t) {
    int i = order[t];
    approx += eig.eigenvalues(i) * eig.eigenvectors.col(i) * eig.eigenvectors.col(i).transpose();
  }
  return approx;
}

}  // namespace mlcd
