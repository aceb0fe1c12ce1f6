#include "tda/mmspace.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tda {

namespace {

constexpr double kTriangleTol = 1e-9;
constexpr double kMarginalTol = 1e-9;
constexpr double kWeightSumTol = 1e-12;

}  // namespace

FiniteMMSpace::FiniteMMSpace(Eigen::MatrixXd d, Eigen::VectorXd w)
    : dist(std::move(d)), weights(std::move(w)) {
    const int n = static_cast<int>(weights.size());
    if (dist.rows() != n || dist.cols() != n)
        throw input_error("FiniteMMSpace: distance matrix / weight size mismatch");
    for (int i = 0; i < n; ++i) {
        if (dist(i, i) != 0.0) throw input_error("FiniteMMSpace: nonzero diagonal");
        if (weights[i] < 0.0) throw input_error("FiniteMMSpace: negative weight");
        for (int j = 0; j < n; ++j) {
            if (dist(i, j) < 0.0) throw input_error("FiniteMMSpace: negative distance");
            if (std::abs(dist(i, j) - dist(j, i)) > 0.0)
                throw input_error("FiniteMMSpace: distance matrix not symmetric");
        }
    }
    if (std::abs(weights.sum() - 1.0) > kWeightSumTol)
        throw input_error("FiniteMMSpace: weights must sum to 1 (tol 1e-12)");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (dist(i, j) > dist(i, k) + dist(k, j) + kTriangleTol)
                    throw input_error("FiniteMMSpace: triangle inequality violated beyond 1e-9");
}

Coupling make_coupling(const FiniteMMSpace& x, const FiniteMMSpace& y, Eigen::MatrixXd m) {
    if (m.rows() != x.size() || m.cols() != y.size())
        throw input_error("Coupling: shape mismatch with the two spaces");
    if ((m.array() < 0.0).any()) throw input_error("Coupling: negative entry");
    for (int i = 0; i < m.rows(); ++i)
        if (std::abs(m.row(i).sum() - x.weights[i]) > kMarginalTol)
            throw input_error("Coupling: row marginal mismatch (tol 1e-9)");
    for (int j = 0; j < m.cols(); ++j)
        if (std::abs(m.col(j).sum() - y.weights[j]) > kMarginalTol)
            throw input_error("Coupling: column marginal mismatch (tol 1e-9)");
    return Coupling{std::move(m)};
}

Coupling diagonal_coupling(const FiniteMMSpace& x) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(x.size(), x.size());
    m.diagonal() = x.weights;
    return Coupling{std::move(m)};
}

Coupling product_coupling(const FiniteMMSpace& x, const FiniteMMSpace& y) {
    return Coupling{x.weights * y.weights.transpose()};
}

Eigen::VectorXd frechet_function(const FiniteMMSpace& x, double p) {
    if (p < 1.0) throw input_error("frechet_function: p must be >= 1");
    const int n = x.size();
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += x.weights[j] * std::pow(x.dist(i, j), p);
        v[i] = acc;
    }
    return v;
}

Eigen::VectorXd centrality_function(const FiniteMMSpace& x, double p) {
    Eigen::VectorXd v = frechet_function(x, p);
    for (int i = 0; i < v.size(); ++i) v[i] = std::pow(v[i], 1.0 / p);
    return v;
}

VertexFunction theta_p(const FiniteMMSpace& x, double p, const FilteredComplex& carrier) {
    if (carrier.vertex_count() != x.size())
        throw input_error("theta_p: carrier vertices must be the points of the space");
    Eigen::VectorXd sigma = centrality_function(x, p);
    VertexFunction f;
    f.values.assign(sigma.data(), sigma.data() + sigma.size());
    return f;
}

double dp_alpha(const FiniteMMSpace& x, double p, int i, int j) {
    const int n = x.size();
    if (i < 0 || i >= n || j < 0 || j >= n) throw input_error("dp_alpha: index out of range");
    double acc = 0.0;
    for (int k = 0; k < n; ++k)
        acc += x.weights[k] * std::pow(std::abs(x.dist(i, k) - x.dist(j, k)), p);
    return std::pow(acc, 1.0 / p);
}

double dp_mu(const FiniteMMSpace& x, const FiniteMMSpace& y, const Coupling& mu, double p,
             int i, int j) {
    if (mu.matrix.rows() != x.size() || mu.matrix.cols() != y.size())
        throw input_error("dp_mu: coupling shape mismatch");
    if (i < 0 || i >= x.size() || j < 0 || j >= y.size())
        throw input_error("dp_mu: index out of range");
    double acc = 0.0;
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < y.size(); ++b) {
            const double m = mu.matrix(a, b);
            if (m == 0.0) continue;
            acc += m * std::pow(std::abs(x.dist(i, a) - y.dist(j, b)), p);
        }
    return std::pow(acc, 1.0 / p);
}

PairingDistortion pairing_distortion(const FiniteMMSpace& x, const FiniteMMSpace& y,
                                     const std::vector<int>& phi, const std::vector<int>& psi,
                                     const Coupling& mu, double p) {
    if (static_cast<int>(phi.size()) != x.size() || static_cast<int>(psi.size()) != y.size())
        throw input_error("pairing_distortion: maps must be total");
    PairingDistortion out;
    for (int i = 0; i < x.size(); ++i)
        out.d_phi = std::max(out.d_phi, dp_mu(x, y, mu, p, i, phi[i]));
    for (int j = 0; j < y.size(); ++j)
        out.d_psi = std::max(out.d_psi, dp_mu(x, y, mu, p, psi[j], j));
    out.total = std::max(out.d_phi, out.d_psi);
    return out;
}

double coupling_distortion(const FiniteMMSpace& x, const FiniteMMSpace& y, const Coupling& mu,
                           double p) {
    if (mu.matrix.rows() != x.size() || mu.matrix.cols() != y.size())
        throw input_error("coupling_distortion: coupling shape mismatch");
    double acc = 0.0;
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < y.size(); ++b) {
            const double m1 = mu.matrix(a, b);
            if (m1 == 0.0) continue;
            for (int c = 0; c < x.size(); ++c)
                for (int d = 0; d < y.size(); ++d) {
                    const double m2 = mu.matrix(c, d);
                    if (m2 == 0.0) continue;
                    acc += m1 * m2 * std::pow(std::abs(x.dist(a, c) - y.dist(b, d)), p);
                }
        }
    return std::pow(acc, 1.0 / p);
}

double correspondence_distortion(const Eigen::MatrixXd& dist_x, const Eigen::MatrixXd& dist_y,
                                 const std::vector<std::pair<int, int>>& relation) {
    const int nx = static_cast<int>(dist_x.rows());
    const int ny = static_cast<int>(dist_y.rows());
    std::vector<char> hit_x(nx, 0), hit_y(ny, 0);
    for (const auto& [i, j] : relation) {
        if (i < 0 || i >= nx || j < 0 || j >= ny)
            throw input_error("correspondence_distortion: index out of range");
        hit_x[i] = 1;
        hit_y[j] = 1;
    }
    if (std::find(hit_x.begin(), hit_x.end(), 0) != hit_x.end() ||
        std::find(hit_y.begin(), hit_y.end(), 0) != hit_y.end())
        throw input_error("correspondence_distortion: relation not surjective");
    double worst = 0.0;
    for (const auto& [i, j] : relation)
        for (const auto& [k, l] : relation)
            worst = std::max(worst, std::abs(dist_x(i, k) - dist_y(j, l)));
    return worst;
}

DeltaPBound delta_p_upper_bound(const FiniteMMSpace& x, const FiniteMMSpace& y,
                                const PairingCertificate& cert, double p) {
    // Re-validate the coupling: certificates may arrive from outside.
    Coupling mu = make_coupling(x, y, cert.mu.matrix);
    if (cert.eps < 0.0) throw input_error("delta_p_upper_bound: negative eps");
    const PairingDistortion d = pairing_distortion(x, y, cert.phi, cert.psi, mu, p);
    DeltaPBound out;
    out.value = d.total;
    out.certified = cert.attestation != HomotopyAttestation::external_unverified;
    return out;
}

FiniteMMSpace empirical_mm(const std::vector<int>& sample_points, const FiniteMMSpace& base) {
    if (sample_points.empty()) throw input_error("empirical_mm: empty sample");
    std::map<int, int> multiplicity;
    for (int s : sample_points) {
        if (s < 0 || s >= base.size()) throw input_error("empirical_mm: unknown point");
        ++multiplicity[s];
    }
    const int m = static_cast<int>(multiplicity.size());
    std::vector<int> support;
    support.reserve(m);
    for (const auto& [pt, cnt] : multiplicity) support.push_back(pt);
    Eigen::MatrixXd d(m, m);
    Eigen::VectorXd w(m);
    for (int a = 0; a < m; ++a) {
        w[a] = static_cast<double>(multiplicity[support[a]]) / sample_points.size();
        for (int b = 0; b < m; ++b) d(a, b) = base.dist(support[a], support[b]);
    }
    return FiniteMMSpace(std::move(d), std::move(w));
}

Eigen::VectorXd empirical_weights(const std::vector<int>& sample_points, int base_size) {
    if (sample_points.empty()) throw input_error("empirical_weights: empty sample");
    Eigen::VectorXd w = Eigen::VectorXd::Zero(base_size);
    for (int s : sample_points) {
        if (s < 0 || s >= base_size) throw input_error("empirical_weights: unknown point");
        w[s] += 1.0;
    }
    return w / static_cast<double>(sample_points.size());
}

}  // namespace tda
