#pragma once

#include <Eigen/Dense>

#include "tda/common.hpp"
#include "tda/persistence.hpp"

namespace tda {

/// Optimal transport plan together with the certified optimal value.
struct WassersteinResult {
    double value = 0.0;          ///< w_p = (sum coupling * dist^p)^(1/p)
    Eigen::MatrixXd coupling;    ///< feasible optimal plan, marginals (alpha, beta)
    double duality_gap = 0.0;    ///< primal cost^p minus reconstructed dual bound
};

/// Exact p-Wasserstein distance between two weight vectors on a common
/// finite metric space (distance matrix `dist`), solved as min-cost flow on
/// the complete bipartite support graph. Optimality is certified by an LP
/// duality gap <= 1e-9.
WassersteinResult wasserstein(const Eigen::MatrixXd& dist, const Eigen::VectorXd& alpha,
                              const Eigen::VectorXd& beta, double p);

/// Bottleneck distance between persistence diagrams: infimum over partial
/// matchings with l-infinity ground distance and diagonal absorption.
/// Infinite-death points match only among themselves by birth value; a count
/// mismatch gives +inf. Exact (search over the finite candidate set with
/// bipartite matching feasibility tests).
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

/// Exhaustive-enumeration oracle for instances with at most 6 points total.
double bottleneck_bruteforce(const PersistenceDiagram& a, const PersistenceDiagram& b);

}  // namespace tda
