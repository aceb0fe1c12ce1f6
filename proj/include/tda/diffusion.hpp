#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tda/common.hpp"
#include "tda/complex.hpp"
#include "tda/mmspace.hpp"
#include "tda/persistence.hpp"

namespace tda {

/// Connected weighted graph with a positive vertex volume measure nu; the
/// discrete surrogate for a closed Riemannian manifold. Edge weights are
/// conductances of the Laplacian, not lengths.
class WeightedGraph {
  public:
    /// edges: (u, v, weight); nu empty means unit volumes.
    WeightedGraph(int n, const std::vector<std::tuple<int, int, double>>& edges,
                  Eigen::VectorXd nu = Eigen::VectorXd());

    int size() const { return n_; }
    const Eigen::MatrixXd& adjacency() const { return w_; }
    const Eigen::VectorXd& volumes() const { return nu_; }
    double total_volume() const { return nu_.sum(); }

    /// Shortest-path distance with unit edge lengths (the geodesic surrogate
    /// used by the Lipschitz constant and its Wasserstein bound).
    Eigen::MatrixXd path_distance() const;

    /// Graph as a simplicial 1-complex (vertices + edges), usable as a
    /// carrier for vertex functions.
    Complex skeleton() const;

  private:
    int n_;
    Eigen::MatrixXd w_;
    Eigen::VectorXd nu_;
};

/// Eigenpairs of the nu-weighted Laplacian L = D_nu^{-1} (deg - W),
/// nu-orthonormal. lambda_0 = 0 with constant eigenvector on a connected
/// graph. Construction certifies residuals and orthonormality to 1e-8.
class SpectralKernel {
  public:
    explicit SpectralKernel(const WeightedGraph& g);

    const Eigen::VectorXd& eigenvalues() const { return lambda_; }
    const Eigen::MatrixXd& eigenvectors() const { return phi_; }  ///< columns
    const WeightedGraph& graph() const { return *graph_; }

    /// Heat kernel K_t(x,y) = sum_j e^{-lambda_j t} phi_j(x) phi_j(y);
    /// conserves nu-mass and satisfies the semigroup law under nu-weighted
    /// composition.
    Eigen::MatrixXd heat_kernel(double t) const;

    /// Diffusion distance of order p at scale t:
    /// d_t(x,x') = (sum_z |K_t(x,z) - K_t(x',z)|^p nu_z)^(1/p).
    Eigen::MatrixXd diffusion_distance(double t, double p) const;

    /// The mm-space (M, d_t, alpha).
    FiniteMMSpace diffusion_mm(double t, double p, const Eigen::VectorXd& alpha) const;

    /// Discrete Lipschitz constant of x -> K_t(x, .) against the graph
    /// path metric: max over x,x',z of |K_t(x,z) - K_t(x',z)| / d_G(x,x').
    double kernel_lipschitz_constant(double t) const;

  private:
    std::shared_ptr<const WeightedGraph> graph_;
    Eigen::VectorXd lambda_;
    Eigen::MatrixXd phi_;
};

/// Multi-scale family of coned centrality diagrams gamma^i(t) over a t-grid,
/// with adjacent-scale bottleneck distances and their certified delta_p
/// upper bounds (identity pairing, diagonal self-coupling).
struct DiagramPath {
    std::vector<double> t_grid;
    std::vector<DiagramSet> diagrams;       ///< per t
    std::vector<double> adjacent_bound;     ///< certified bound, size |grid|-1
    /// bottleneck per dimension for each adjacent pair: [pair][dim]
    std::vector<std::vector<double>> adjacent_bottleneck;
};

/// Certified delta_p upper bound between (M, d_s, alpha) and (M, d_t, alpha):
/// sup_x (sum_y alpha_y |d_s(x,y) - d_t(x,y)|^p)^(1/p).
double scale_change_bound(const Eigen::MatrixXd& dist_s, const Eigen::MatrixXd& dist_t,
                          const Eigen::VectorXd& alpha, double p);

/// Computes gamma^i along t_grid on the given carrier (vertices = graph
/// vertices) and asserts d_B <= certified bound for every adjacent pair and
/// every requested dimension. Throws invariant_error on violation.
DiagramPath diagram_path(const SpectralKernel& spectrum, const Eigen::VectorXd& alpha, double p,
                         const std::vector<double>& t_grid, const FilteredComplex& carrier,
                         const std::vector<int>& dims);

/// Discrete form of the fixed-scale measure-stability bound:
/// C_t * (total volume)^(1/p) * w_p(alpha, beta), with w_p taken in the
/// graph path metric. d_B between the two coned centrality diagrams at scale
/// t is bounded by this.
double scale_stability_bound(const SpectralKernel& spectrum, double t, double p,
                             const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta);

/// Default 16-point geometric grid on [0.01, 10].
std::vector<double> default_t_grid(int points = 16, double t_min = 0.01, double t_max = 10.0);

}  // namespace tda
