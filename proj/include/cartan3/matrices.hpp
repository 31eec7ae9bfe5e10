#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "cartan3/rng.hpp"

namespace cartan3 {

using Complex = std::complex<double>;

/**
 * @brief Symmetric n x n complex matrix, stored as the packed upper triangle.
 *
 * Symmetry is a storage invariant, not a runtime property: only the entries
 * with j <= k are kept and the dense view is materialized on demand.
 * Packed order is row-major over the upper triangle:
 * (0,0),(0,1),...,(0,n-1),(1,1),...,(n-1,n-1).
 */
class ComplexSymMatrix {
public:
    explicit ComplexSymMatrix(int n);

    static ComplexSymMatrix zero(int n) { return ComplexSymMatrix(n); }
    static ComplexSymMatrix identity(int n);
    /// Builds from a dense matrix; throws std::invalid_argument if the input
    /// is not square or deviates from symmetry by more than `tol`.
    static ComplexSymMatrix from_dense(const Eigen::MatrixXcd& m, double tol = 1e-10);

    int dim() const { return n_; }
    int packed_size() const { return static_cast<int>(packed_.size()); }

    Complex operator()(int j, int k) const { return packed_[index(j, k)]; }
    void set(int j, int k, Complex v) { packed_[index(j, k)] = v; }

    Complex packed(int idx) const { return packed_[idx]; }
    void set_packed(int idx, Complex v) { packed_[idx] = v; }

    Eigen::MatrixXcd dense() const;

    ComplexSymMatrix real_part_times(double re_scale, double im_scale) const;

    /// Row/column of packed index idx.
    std::pair<int, int> packed_coords(int idx) const;

    static int packed_count(int n) { return n * (n + 1) / 2; }

private:
    int index(int j, int k) const;
    int n_;
    std::vector<Complex> packed_;
};

/// Real symmetric matrix; same packed storage discipline.
class RealSymMatrix {
public:
    explicit RealSymMatrix(int n);

    static RealSymMatrix zero(int n) { return RealSymMatrix(n); }
    static RealSymMatrix identity(int n);
    static RealSymMatrix from_dense(const Eigen::MatrixXd& m, double tol = 1e-10);

    int dim() const { return n_; }
    double operator()(int j, int k) const { return packed_[index(j, k)]; }
    void set(int j, int k, double v) { packed_[index(j, k)] = v; }

    Eigen::MatrixXd dense() const;

private:
    int index(int j, int k) const;
    int n_;
    std::vector<double> packed_;
};

/// Positive definite real symmetric matrix; positivity checked (strictly,
/// no epsilon slack) at construction.
class PosDefMatrix {
public:
    explicit PosDefMatrix(RealSymMatrix base);
    const RealSymMatrix& base() const { return base_; }
    int dim() const { return base_.dim(); }
    Eigen::MatrixXd dense() const { return base_.dense(); }

private:
    RealSymMatrix base_;
};

/// Real orthogonal matrix; ||A^T A - I||_max <= 1e-12 enforced.
class OrthogonalMatrix {
public:
    explicit OrthogonalMatrix(Eigen::MatrixXd entries);
    const Eigen::MatrixXd& dense() const { return entries_; }
    int dim() const { return static_cast<int>(entries_.rows()); }

private:
    Eigen::MatrixXd entries_;
};

/// True iff all eigenvalues are strictly positive. Throws
/// std::invalid_argument for non-square input or asymmetry beyond 1e-12.
bool posdef_check(const Eigen::MatrixXd& m);
bool posdef_check(const Eigen::MatrixXcd& m);  // Hermitian variant
bool posdef_check(const RealSymMatrix& m);

/// det of the leading j x j block, 1 <= j <= n.
Complex principal_minor_det(int j, const ComplexSymMatrix& z);
double principal_minor_det(int j, const Eigen::MatrixXd& m);

/// Haar-distributed sample on O(n): QR of a Gaussian matrix with the signs
/// of the diagonal of R absorbed into Q, which makes the law exactly Haar.
OrthogonalMatrix haar_orthogonal(int n, RngStream& rng);

}  // namespace cartan3
