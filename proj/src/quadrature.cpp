#include "cartan3/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cartan3 {

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights are
// mu0 * (first eigenvector component)^2.
GaussRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag, double mu0) {
    const int n = static_cast<int>(diag.size());
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) jac(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) {
        jac(i, i + 1) = offdiag[i];
        jac(i + 1, i) = offdiag[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

std::mutex cache_mutex;

}  // namespace

const GaussRule& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    std::vector<double> diag(order, 0.0), off(order > 1 ? order - 1 : 0);
    for (int k = 1; k < order; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    auto [pos, ok] = cache.emplace(order, golub_welsch(diag, off, 2.0));
    return pos->second;
}

GaussRule gauss_legendre(int order, double a, double b) {
    const GaussRule& base = gauss_legendre(order);
    GaussRule out;
    out.nodes.resize(order);
    out.weights.resize(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < order; ++i) {
        out.nodes[i] = mid + half * base.nodes[i];
        out.weights[i] = half * base.weights[i];
    }
    return out;
}

GaussRule gauss_laguerre(int order, double alpha) {
    if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
    if (alpha <= -1.0) throw std::domain_error("gauss_laguerre requires alpha > -1");
    std::vector<double> diag(order), off(order > 1 ? order - 1 : 0);
    for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < order; ++k) off[k - 1] = std::sqrt(k * (k + alpha));
    return golub_welsch(diag, off, std::tgamma(alpha + 1.0));
}

GaussRule gauss_hermite(int order) {
    if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
    std::vector<double> diag(order, 0.0), off(order > 1 ? order - 1 : 0);
    for (int k = 1; k < order; ++k) off[k - 1] = std::sqrt(0.5 * k);
    return golub_welsch(diag, off, std::sqrt(3.14159265358979323846));
}

std::complex<double> integrate_box(const std::function<std::complex<double>(std::span<const double>)>& f,
                                   int dim, std::span<const double> lower, std::span<const double> upper,
                                   int order, long budget) {
    if (order < 2) throw std::invalid_argument("integrate_box requires order >= 2");
    if (dim < 1 || static_cast<int>(lower.size()) != dim || static_cast<int>(upper.size()) != dim)
        throw std::invalid_argument("integrate_box: dimension/bounds mismatch");
    double points = 1.0;
    for (int d = 0; d < dim; ++d) {
        points *= order;
        if (points > static_cast<double>(budget))
            throw std::length_error("integrate_box: node budget exceeded");
    }

    std::vector<GaussRule> rules;
    rules.reserve(dim);
    for (int d = 0; d < dim; ++d) rules.push_back(gauss_legendre(order, lower[d], upper[d]));

    std::vector<int> idx(dim, 0);
    std::vector<double> x(dim);
    std::complex<double> total(0, 0);
    for (;;) {
        double w = 1.0;
        for (int d = 0; d < dim; ++d) {
            x[d] = rules[d].nodes[idx[d]];
            w *= rules[d].weights[idx[d]];
        }
        total += w * f(x);
        int d = 0;
        while (d < dim && ++idx[d] == order) idx[d++] = 0;
        if (d == dim) break;
    }
    return total;
}

}  // namespace cartan3
