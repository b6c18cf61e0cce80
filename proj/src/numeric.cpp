#include "gspin/numeric.hpp"

#include <Eigen/Dense>

namespace gspin {

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::Index rows = static_cast<Eigen::Index>(m.size());
  Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(m[0].size());
  Eigen::MatrixXcd out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(m[i].size()) != cols)
      throw NumericError("ragged matrix");
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = m[i][j];
  }
  return out;
}

}  // namespace

bool is_hermitian(const CMatrix& h, double tol) {
  Eigen::MatrixXcd m = to_eigen(h);
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool psd_check(const CMatrix& h, double tol) {
  if (h.empty()) return true;
  if (!is_hermitian(h, tol)) throw NumericError("not-hermitian");
  Eigen::MatrixXcd m = to_eigen(h);
  Eigen::MatrixXcd sym = (m + m.adjoint()) / 2.0;
  if (sym.rows() > 200) {
    // Pivoted LDL^T: PSD within tol iff no pivot drops below -tol.
    Eigen::LDLT<Eigen::MatrixXcd> ldlt(sym);
    if (ldlt.info() != Eigen::Success) return false;
    return ldlt.vectorD().real().minCoeff() >= -tol;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

long numeric_rank(const CMatrix& m, double tol) {
  if (m.empty()) return 0;
  Eigen::MatrixXcd a = to_eigen(m);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  long r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return r;
}

}  // namespace gspin
