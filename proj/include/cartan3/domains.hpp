#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "cartan3/matrices.hpp"
#include "cartan3/montecarlo.hpp"

namespace cartan3 {

enum class DomainTag {
    BoundedDIII,  // symmetric Z with I - Z conj(Z) > 0
    SiegelS,      // symmetric Z with Im Z > 0
};

/// Bergman weight. The constructor only requires a finite value; call sites
/// that need lambda > n (or the multi-gamma bound) enforce it explicitly.
class Weight {
public:
    explicit Weight(double lambda);
    double value() const { return lambda_; }
    void require_bergman(int n) const;     // lambda > n
    void require_multigamma(int n) const;  // lambda > (n-1)/2

private:
    double lambda_;
};

/// Domain membership predicate of the tagged realization.
bool contains(DomainTag tag, const ComplexSymMatrix& z);

/// A validated point of the tagged domain.
class DomainPoint {
public:
    DomainPoint(DomainTag tag, ComplexSymMatrix z);  // throws std::domain_error if outside
    DomainTag tag() const { return tag_; }
    const ComplexSymMatrix& matrix() const { return z_; }
    int dim() const { return z_.dim(); }

private:
    DomainTag tag_;
    ComplexSymMatrix z_;
};

/// Cayley transform Z -> (I + iZ)(I - iZ)^{-1}, Siegel onto bounded.
DomainPoint cayley(const DomainPoint& z);
/// Inverse W -> -i(W - I)(W + I)^{-1}, bounded onto Siegel.
DomainPoint cayley_inv(const DomainPoint& w);

/// Multi-gamma of the cone of positive definite n x n matrices:
/// (2 pi)^{n(n-1)/4} prod_j Gamma(lambda - (j-1)/2), for lambda > (n-1)/2.
double multigamma(int n, double lambda);

/// Normalization constant Gamma(lambda) / (pi^{n(n+1)/2} Gamma(lambda - (n+1)/2))
/// shared by the weighted probability measures of both realizations.
double weight_normalization(int n, double lambda);

/// Density of the normalized weighted measure at Z, with respect to the
/// trace-form Lebesgue measure on Symm(n,C); see symm_complex_volume_factor.
double weight_density(DomainTag tag, const Weight& lambda, const ComplexSymMatrix& z);

/// Weighted Bergman kernel det(I - Z conj(W))^{-lambda} resp.
/// det(-i(Z - conj(W)))^{-lambda}, principal branch with continuity tracking
/// along the segment from (Z,Z) to (Z,W) in the second slot.
Complex bergman_kernel(DomainTag tag, const Weight& lambda, const DomainPoint& z, const DomainPoint& w);

/// Complex Jacobian determinant of the Cayley map at Z, computed as the
/// determinant of V -> 2i (I-iZ)^{-1} V (I-iZ)^{-1} in the packed basis.
Complex cayley_jacobian(const ComplexSymMatrix& z);

/// log of cayley_jacobian with the branch continued along the segment from
/// the base point i*I (principal there); single-valued on the domain.
Complex cayley_jacobian_log(const ComplexSymMatrix& z);

/// (U_phi f)(Z) = J(Z)^{lambda/(n+1)} f(phi(Z)) for f defined on the bounded
/// realization; the Jacobian power uses cayley_jacobian_log.
Complex cayley_pullback(const Weight& lambda, const std::function<Complex(const DomainPoint&)>& f,
                        const DomainPoint& z);

/// Branch factor J(Z)^{lambda/(n+1)} alone.
Complex cayley_pullback_factor(const Weight& lambda, const ComplexSymMatrix& z);

// ---- measure conventions ------------------------------------------------
// The trace form <A,B> = tr(A conj(B)) is the inner product under which the
// reference Lebesgue measures are normalized. Relative to the coordinate
// (matrix-entry) Lebesgue measure they differ by these constants.
double symm_real_volume_factor(int n);     // 2^{n(n-1)/4}
double symm_complex_volume_factor(int n);  // 2^{n(n-1)/2}

// ---- samplers ------------------------------------------------------------

/// Uniform sample on the polydisc bounding box {|z_jk| <= 1, j <= k}.
ComplexSymMatrix sample_polydisc(int n, RngStream& rng);

/// Box volume of the polydisc in the trace-normalized measure.
double polydisc_volume(int n);

/// Sample distributed per the weighted probability measure on the bounded
/// domain by rejection from the polydisc (valid for lambda >= n+1, where the
/// density is bounded by its value at 0).
DomainPoint sample_bounded_weighted(int n, const Weight& lambda, RngStream& rng);

/// Importance-weighted sample for Siegel-domain integrals: Z is drawn from a
/// heavy-tailed proposal (Cauchy real parts, half-Cauchy Cholesky factors for
/// the imaginary part) and `weight` is d v̂_lambda / d proposal, so
/// E[weight * g(Z)] estimates the v̂_lambda integral of g.
struct WeightedSample {
    DomainPoint z;
    double weight;
};
WeightedSample sample_siegel_weighted(int n, const Weight& lambda, RngStream& rng, double scale_x = 1.0,
                                      double scale_y = 1.0);

/// Uniform-on-domain sample of the bounded realization (rejection from the
/// polydisc by membership only).
ComplexSymMatrix sample_bounded_uniform(int n, RngStream& rng);

}  // namespace cartan3
