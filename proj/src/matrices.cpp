#include "cartan3/matrices.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <stdexcept>

namespace cartan3 {

namespace {

void require_square(Eigen::Index rows, Eigen::Index cols) {
    if (rows != cols || rows == 0)
        throw std::invalid_argument("matrix must be square and non-empty");
}

}  // namespace

ComplexSymMatrix::ComplexSymMatrix(int n) : n_(n), packed_(packed_count(n), Complex(0, 0)) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
}

ComplexSymMatrix ComplexSymMatrix::identity(int n) {
    ComplexSymMatrix m(n);
    for (int j = 0; j < n; ++j) m.set(j, j, Complex(1, 0));
    return m;
}

ComplexSymMatrix ComplexSymMatrix::from_dense(const Eigen::MatrixXcd& m, double tol) {
    require_square(m.rows(), m.cols());
    const int n = static_cast<int>(m.rows());
    double dev = 0;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) dev = std::max(dev, std::abs(m(j, k) - m(k, j)));
    if (dev > tol)
        throw std::invalid_argument("matrix is not symmetric (max deviation " + std::to_string(dev) + ")");
    ComplexSymMatrix out(n);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) out.set(j, k, 0.5 * (m(j, k) + m(k, j)));
    return out;
}

int ComplexSymMatrix::index(int j, int k) const {
    if (j < 0 || k < 0 || j >= n_ || k >= n_) throw std::out_of_range("matrix index out of range");
    if (j > k) std::swap(j, k);
    // row-major packed upper triangle
    return j * n_ - j * (j - 1) / 2 + (k - j);
}

Eigen::MatrixXcd ComplexSymMatrix::dense() const {
    Eigen::MatrixXcd out(n_, n_);
    for (int j = 0; j < n_; ++j)
        for (int k = j; k < n_; ++k) {
            out(j, k) = (*this)(j, k);
            out(k, j) = out(j, k);
        }
    return out;
}

std::pair<int, int> ComplexSymMatrix::packed_coords(int idx) const {
    int j = 0;
    int row_len = n_;
    while (idx >= row_len) {
        idx -= row_len;
        ++j;
        --row_len;
    }
    return {j, j + idx};
}

ComplexSymMatrix ComplexSymMatrix::real_part_times(double re_scale, double im_scale) const {
    ComplexSymMatrix out(n_);
    for (int i = 0; i < packed_size(); ++i) {
        const Complex v = packed_[i];
        out.set_packed(i, Complex(re_scale * v.real(), im_scale * v.imag()));
    }
    return out;
}

RealSymMatrix::RealSymMatrix(int n) : n_(n), packed_(ComplexSymMatrix::packed_count(n), 0.0) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
}

RealSymMatrix RealSymMatrix::identity(int n) {
    RealSymMatrix m(n);
    for (int j = 0; j < n; ++j) m.set(j, j, 1.0);
    return m;
}

RealSymMatrix RealSymMatrix::from_dense(const Eigen::MatrixXd& m, double tol) {
    require_square(m.rows(), m.cols());
    const int n = static_cast<int>(m.rows());
    double dev = 0;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) dev = std::max(dev, std::abs(m(j, k) - m(k, j)));
    if (dev > tol)
        throw std::invalid_argument("matrix is not symmetric (max deviation " + std::to_string(dev) + ")");
    RealSymMatrix out(n);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) out.set(j, k, 0.5 * (m(j, k) + m(k, j)));
    return out;
}

int RealSymMatrix::index(int j, int k) const {
    if (j < 0 || k < 0 || j >= n_ || k >= n_) throw std::out_of_range("matrix index out of range");
    if (j > k) std::swap(j, k);
    return j * n_ - j * (j - 1) / 2 + (k - j);
}

Eigen::MatrixXd RealSymMatrix::dense() const {
    Eigen::MatrixXd out(n_, n_);
    for (int j = 0; j < n_; ++j)
        for (int k = j; k < n_; ++k) {
            out(j, k) = (*this)(j, k);
            out(k, j) = out(j, k);
        }
    return out;
}

PosDefMatrix::PosDefMatrix(RealSymMatrix base) : base_(std::move(base)) {
    if (!posdef_check(base_)) throw std::domain_error("matrix is not positive definite");
}

OrthogonalMatrix::OrthogonalMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
    require_square(entries_.rows(), entries_.cols());
    const Eigen::MatrixXd dev =
        entries_.transpose() * entries_ - Eigen::MatrixXd::Identity(entries_.rows(), entries_.cols());
    if (dev.cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("matrix is not orthogonal within 1e-12");
}

bool posdef_check(const Eigen::MatrixXd& m) {
    require_square(m.rows(), m.cols());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("posdef_check: matrix asymmetric beyond 1e-12");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() > 0.0;
}

bool posdef_check(const Eigen::MatrixXcd& m) {
    require_square(m.rows(), m.cols());
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("posdef_check: matrix not Hermitian within 1e-12");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() > 0.0;
}

bool posdef_check(const RealSymMatrix& m) { return posdef_check(m.dense()); }

Complex principal_minor_det(int j, const ComplexSymMatrix& z) {
    if (j < 1 || j > z.dim()) throw std::out_of_range("principal minor index out of range");
    if (j == 1) return z(0, 0);
    const Eigen::MatrixXcd block = z.dense().topLeftCorner(j, j);
    if (j == 2) return block(0, 0) * block(1, 1) - block(0, 1) * block(1, 0);
    return block.determinant();
}

double principal_minor_det(int j, const Eigen::MatrixXd& m) {
    if (j < 1 || j > m.rows()) throw std::out_of_range("principal minor index out of range");
    if (j == 1) return m(0, 0);
    if (j == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return m.topLeftCorner(j, j).determinant();
}

OrthogonalMatrix haar_orthogonal(int n, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    for (;;) {
        Eigen::MatrixXd g(n, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) g(j, k) = rng.normal();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd q = qr.householderQ();
        const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
        bool degenerate = false;
        for (int j = 0; j < n; ++j) {
            if (r(j, j) == 0.0) {
                degenerate = true;  // probability zero; resample
                break;
            }
            if (r(j, j) < 0.0) q.col(j) = -q.col(j);
        }
        if (!degenerate) return OrthogonalMatrix(std::move(q));
    }
}

}  // namespace cartan3
