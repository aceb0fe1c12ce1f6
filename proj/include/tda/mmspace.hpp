#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "tda/common.hpp"
#include "tda/complex.hpp"

namespace tda {

/// Finite metric measure space: symmetric distance matrix with zero diagonal
/// satisfying the triangle inequality (tol 1e-9), plus a probability weight
/// vector (sum 1 within 1e-12). Violations are rejected, not repaired.
struct FiniteMMSpace {
    Eigen::MatrixXd dist;
    Eigen::VectorXd weights;

    FiniteMMSpace() = default;
    FiniteMMSpace(Eigen::MatrixXd d, Eigen::VectorXd w);

    int size() const { return static_cast<int>(weights.size()); }
};

/// Joint probability matrix whose row sums are the first space's weights and
/// column sums the second's (tol 1e-9).
struct Coupling {
    Eigen::MatrixXd matrix;
};

Coupling make_coupling(const FiniteMMSpace& x, const FiniteMMSpace& y, Eigen::MatrixXd m);

/// Self-coupling supported on the diagonal.
Coupling diagonal_coupling(const FiniteMMSpace& x);

/// Independence coupling alpha (x) beta.
Coupling product_coupling(const FiniteMMSpace& x, const FiniteMMSpace& y);

/// How the 2eps-homotopy conditions of a matching certificate are attested.
/// Only identity pairings and cone-line retractions are certifiable by this
/// library; anything else is carried as unverified.
enum class HomotopyAttestation { trivial_identity, cone_line, external_unverified };

struct PairingCertificate {
    std::vector<int> phi;  ///< X -> Y index map
    std::vector<int> psi;  ///< Y -> X index map
    Coupling mu;
    double eps = 0.0;
    HomotopyAttestation attestation = HomotopyAttestation::external_unverified;
};

/// Fréchet function of order p: V_p(x_i) = sum_j w_j d(x_i, x_j)^p.
Eigen::VectorXd frechet_function(const FiniteMMSpace& x, double p);

/// p-centrality sigma_p = V_p^(1/p); 1-Lipschitz with respect to d.
Eigen::VectorXd centrality_function(const FiniteMMSpace& x, double p);

/// Centrality as a vertex function on a carrier complex whose vertices are
/// the points of x (functional-data view of the mm-space).
VertexFunction theta_p(const FiniteMMSpace& x, double p, const FilteredComplex& carrier);

/// Pseudo-metric d_{p,alpha}(x_i, x_j) = || d(x_i,.) - d(x_j,.) ||_{p,alpha}.
double dp_alpha(const FiniteMMSpace& x, double p, int i, int j);

/// Cross-space pseudo-metric through a coupling:
/// d_{p,mu}(x, y) = (sum_{i,j} mu_ij |d_X(x, x_i) - d_Y(y, y_j)|^p)^(1/p).
double dp_mu(const FiniteMMSpace& x, const FiniteMMSpace& y, const Coupling& mu, double p,
             int i, int j);

/// Distortions of a pairing (phi, psi) under a coupling:
/// D(phi,mu) = max_x d_{p,mu}(x, phi(x)), D(psi,mu) = max_y d_{p,mu}(psi(y), y).
struct PairingDistortion {
    double d_phi = 0.0;
    double d_psi = 0.0;
    double total = 0.0;  ///< max of the two
};

PairingDistortion pairing_distortion(const FiniteMMSpace& x, const FiniteMMSpace& y,
                                     const std::vector<int>& phi, const std::vector<int>& psi,
                                     const Coupling& mu, double p);

/// Gromov-Wasserstein style p-distortion of a coupling:
/// D_p(mu) = (sum |d_X(i,i') - d_Y(j,j')|^p mu_ij mu_i'j')^(1/p).
double coupling_distortion(const FiniteMMSpace& x, const FiniteMMSpace& y, const Coupling& mu,
                           double p);

/// Gromov-Hausdorff distortion of a correspondence given as index pairs;
/// must be surjective onto both sides.
double correspondence_distortion(const Eigen::MatrixXd& dist_x, const Eigen::MatrixXd& dist_y,
                                 const std::vector<std::pair<int, int>>& relation);

/// Certified upper bound for the matching pseudo-distance delta_p.
struct DeltaPBound {
    double value = 0.0;
    bool certified = false;  ///< false for external-unverified certificates
};

DeltaPBound delta_p_upper_bound(const FiniteMMSpace& x, const FiniteMMSpace& y,
                                const PairingCertificate& cert, double p);

/// Empirical mm-space of a sample: weights multiplicity/n on the support,
/// distances restricted from the base space.
FiniteMMSpace empirical_mm(const std::vector<int>& sample_points, const FiniteMMSpace& base);

/// Length-n empirical weight vector of a sample on the full base space
/// (zero off the support); convenient for theta_p on a fixed carrier.
Eigen::VectorXd empirical_weights(const std::vector<int>& sample_points, int base_size);

}  // namespace tda
