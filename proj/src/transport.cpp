#include "tda/transport.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <vector>

namespace tda {

namespace {

constexpr double kMassEps = 1e-14;

void check_probability(const Eigen::VectorXd& w, const char* name) {
    for (int i = 0; i < w.size(); ++i)
        if (w[i] < 0.0) throw input_error(std::string(name) + ": negative weight");
    if (std::abs(w.sum() - 1.0) > 1e-12)
        throw input_error(std::string(name) + ": weights must sum to 1 (tol 1e-12)");
}

}  // namespace

WassersteinResult wasserstein(const Eigen::MatrixXd& dist, const Eigen::VectorXd& alpha,
                              const Eigen::VectorXd& beta, double p) {
    if (p < 1.0) throw input_error("wasserstein: p must be >= 1");
    if (dist.rows() != dist.cols()) throw input_error("wasserstein: distance matrix not square");
    const int n = static_cast<int>(dist.rows());
    if (alpha.size() != n || beta.size() != n)
        throw input_error("wasserstein: weight vectors must match the space size");
    check_probability(alpha, "alpha");
    check_probability(beta, "beta");

    // Supports only; zero-weight points never carry mass.
    std::vector<int> src, dst;
    for (int i = 0; i < n; ++i)
        if (alpha[i] > 0.0) src.push_back(i);
    for (int j = 0; j < n; ++j)
        if (beta[j] > 0.0) dst.push_back(j);
    const int ns = static_cast<int>(src.size());
    const int nd = static_cast<int>(dst.size());

    Eigen::MatrixXd cost(ns, nd);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nd; ++j) cost(i, j) = std::pow(dist(src[i], dst[j]), p);

    // Successive shortest augmenting paths with Johnson potentials on the
    // bipartite graph {sources} x {sinks}; each augmentation saturates a
    // source or a sink, so there are at most ns + nd rounds.
    std::vector<double> remaining_a(ns), remaining_b(nd);
    for (int i = 0; i < ns; ++i) remaining_a[i] = alpha[src[i]];
    for (int j = 0; j < nd; ++j) remaining_b[j] = beta[dst[j]];
    Eigen::MatrixXd plan = Eigen::MatrixXd::Zero(ns, nd);
    std::vector<double> pot_a(ns, 0.0), pot_b(nd, 0.0);

    auto mass_left = [&](const std::vector<double>& r) {
        double m = 0.0;
        for (double x : r) m = std::max(m, x);
        return m;
    };
    while (mass_left(remaining_a) > kMassEps && mass_left(remaining_b) > kMassEps) {
        // Dijkstra over the layered residual graph. Nodes: sources 0..ns-1,
        // sinks ns..ns+nd-1; forward arcs i->j always, backward j->i iff
        // plan(i,j) > 0.
        const int nn = ns + nd;
        std::vector<double> dist_node(nn, kInf);
        std::vector<int> prev(nn, -1);
        std::vector<char> done(nn, 0);
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        for (int i = 0; i < ns; ++i)
            if (remaining_a[i] > kMassEps) {
                dist_node[i] = 0.0;
                heap.emplace(0.0, i);
            }
        while (!heap.empty()) {
            auto [d, u] = heap.top();
            heap.pop();
            if (done[u]) continue;
            done[u] = 1;
            if (u < ns) {
                for (int j = 0; j < nd; ++j) {
                    const double rc = cost(u, j) - pot_a[u] + pot_b[j];
                    const int v = ns + j;
                    if (!done[v] && d + rc < dist_node[v] - 1e-15) {
                        dist_node[v] = d + rc;
                        prev[v] = u;
                        heap.emplace(dist_node[v], v);
                    }
                }
            } else {
                const int j = u - ns;
                for (int i = 0; i < ns; ++i) {
                    if (plan(i, j) <= kMassEps) continue;
                    const double rc = -(cost(i, j) - pot_a[i] + pot_b[j]);
                    if (!done[i] && d + rc < dist_node[i] - 1e-15) {
                        dist_node[i] = d + rc;
                        prev[i] = u;
                        heap.emplace(dist_node[i], i);
                    }
                }
            }
        }
        // Nearest sink with remaining demand.
        int best = -1;
        for (int j = 0; j < nd; ++j)
            if (remaining_b[j] > kMassEps && dist_node[ns + j] < kInf &&
                (best < 0 || dist_node[ns + j] < dist_node[ns + best]))
                best = j;
        if (best < 0)
            throw invariant_error("wasserstein: no augmenting path with mass outstanding");
        // Bottleneck mass along the path: the origin's remaining supply, the
        // target's remaining demand, and every backward arc's flow.
        double push = remaining_b[best];
        int origin = ns + best;
        for (int v = ns + best; prev[v] >= 0; v = prev[v]) {
            const int u = prev[v];
            if (u >= ns) push = std::min(push, plan(v, u - ns));
            origin = u;
        }
        push = std::min(push, remaining_a[origin]);
        for (int v = ns + best; prev[v] >= 0; v = prev[v]) {
            const int u = prev[v];
            if (u < ns)
                plan(u, v - ns) += push;
            else
                plan(v, u - ns) -= push;
        }
        remaining_a[origin] -= push;
        remaining_b[best] -= push;
        // Johnson potentials, clamped at the target distance so reduced costs
        // stay non-negative beyond it.
        const double dt = dist_node[ns + best];
        for (int i = 0; i < ns; ++i) pot_a[i] -= std::min(dist_node[i], dt);
        for (int j = 0; j < nd; ++j) pot_b[j] -= std::min(dist_node[ns + j], dt);
    }

    // Primal value.
    const double primal = (plan.array() * cost.array()).sum();

    // Dual reconstruction: solve u_i + v_j = c_ij on the support forest, then
    // repair v_j = min_i (c_ij - u_i) to exact feasibility. The gap certifies
    // optimality independently of how the plan was found.
    std::vector<double> u(ns, kInf), v(nd, kInf);
    for (int root = 0; root < ns; ++root) {
        if (u[root] < kInf) continue;
        u[root] = 0.0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const int node = stack.back();
            stack.pop_back();
            if (node < ns) {
                for (int j = 0; j < nd; ++j)
                    if (plan(node, j) > kMassEps && v[j] == kInf) {
                        v[j] = cost(node, j) - u[node];
                        stack.push_back(ns + j);
                    }
            } else {
                const int j = node - ns;
                for (int i = 0; i < ns; ++i)
                    if (plan(i, j) > kMassEps && u[i] == kInf) {
                        u[i] = cost(i, j) - v[j];
                        stack.push_back(i);
                    }
            }
        }
    }
    for (int j = 0; j < nd; ++j) {
        double vj = kInf;
        for (int i = 0; i < ns; ++i) vj = std::min(vj, cost(i, j) - u[i]);
        v[j] = vj;
    }
    double dual = 0.0;
    for (int i = 0; i < ns; ++i) dual += u[i] * alpha[src[i]];
    for (int j = 0; j < nd; ++j) dual += v[j] * beta[dst[j]];

    WassersteinResult out;
    out.duality_gap = primal - dual;
    if (!(std::abs(out.duality_gap) <= 1e-9))
        throw invariant_error("wasserstein: duality gap exceeds certificate tolerance");
    out.value = std::pow(std::max(primal, 0.0), 1.0 / p);
    out.coupling = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nd; ++j) out.coupling(src[i], dst[j]) = plan(i, j);
    return out;
}

namespace {

struct FinitePoint {
    double birth, death;
    double diag() const { return (death - birth) / 2.0; }
};

double linf(const FinitePoint& a, const FinitePoint& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

// Hopcroft-Karp style augmentation (simple Kuhn with shuffled-free ordering
// is enough at diagram scale).
struct BipartiteMatcher {
    int nl, nr;
    std::vector<std::vector<int>> adj;
    std::vector<int> match_l, match_r;

    BipartiteMatcher(int nl_, int nr_) : nl(nl_), nr(nr_), adj(nl_), match_l(nl_, -1), match_r(nr_, -1) {}

    bool try_augment(int u, std::vector<char>& seen) {
        for (int v : adj[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            if (match_r[v] < 0 || try_augment(match_r[v], seen)) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        return false;
    }

    int max_matching() {
        int size = 0;
        for (int u = 0; u < nl; ++u) {
            std::vector<char> seen(nr, 0);
            if (try_augment(u, seen)) ++size;
        }
        return size;
    }
};

// Perfect matching feasibility at threshold tau: left = A-points + |B| diagonal
// slots, right = B-points + |A| diagonal slots. a_i may take b_j if
// linf <= tau, its diagonal slot if diag <= tau; diagonal slots always pair
// with each other.
bool finite_feasible(const std::vector<FinitePoint>& a, const std::vector<FinitePoint>& b,
                     double tau) {
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    BipartiteMatcher m(na + nb, nb + na);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j)
            if (linf(a[i], b[j]) <= tau) m.adj[i].push_back(j);
        if (a[i].diag() <= tau)
            for (int j = nb; j < nb + na; ++j) m.adj[i].push_back(j);
    }
    for (int i = na; i < na + nb; ++i) {
        const int j = i - na;  // b_j's diagonal slot on the left
        if (b[j].diag() <= tau) m.adj[i].push_back(j);
        for (int k = nb; k < nb + na; ++k) m.adj[i].push_back(k);
    }
    return m.max_matching() == na + nb;
}

// Min over pairings of the max birth difference; sorted order is optimal for
// the sup metric on the line.
double infinite_part(std::vector<double> ba, std::vector<double> bb) {
    if (ba.size() != bb.size()) return kInf;
    std::sort(ba.begin(), ba.end());
    std::sort(bb.begin(), bb.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < ba.size(); ++i)
        worst = std::max(worst, std::abs(ba[i] - bb[i]));
    return worst;
}

void split_diagram(const PersistenceDiagram& d, std::vector<FinitePoint>& fin,
                   std::vector<double>& inf_births) {
    for (const auto& [b, death] : d.pairs) {
        if (death == kInf)
            inf_births.push_back(b);
        else
            fin.push_back({b, death});
    }
}

}  // namespace

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    if (a.dim != b.dim) throw input_error("bottleneck: diagrams of different dimensions");
    std::vector<FinitePoint> fa, fb;
    std::vector<double> ia, ib;
    split_diagram(a, fa, ia);
    split_diagram(b, fb, ib);

    const double inf_val = infinite_part(ia, ib);
    if (inf_val == kInf) return kInf;

    // Candidate values: every pairwise l-inf distance and every diagonal
    // absorption cost. The optimum is attained at one of them (or at 0).
    std::vector<double> cand{0.0};
    for (const auto& p : fa) cand.push_back(p.diag());
    for (const auto& q : fb) cand.push_back(q.diag());
    for (const auto& p : fa)
        for (const auto& q : fb) cand.push_back(linf(p, q));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    int lo = 0, hi = static_cast<int>(cand.size()) - 1;
    if (!finite_feasible(fa, fb, cand[hi]))
        throw invariant_error("bottleneck: largest candidate infeasible");
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (finite_feasible(fa, fb, cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max(cand[lo], inf_val);
}

namespace {

void brute_recurse(const std::vector<FinitePoint>& a, const std::vector<FinitePoint>& b,
                   std::size_t i, std::vector<char>& used_b, double current, double& best) {
    if (current >= best) return;
    if (i == a.size()) {
        double worst = current;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!used_b[j]) worst = std::max(worst, b[j].diag());
        best = std::min(best, worst);
        return;
    }
    // a_i to the diagonal
    brute_recurse(a, b, i + 1, used_b, std::max(current, a[i].diag()), best);
    // or to an unused b_j
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (used_b[j]) continue;
        used_b[j] = 1;
        brute_recurse(a, b, i + 1, used_b, std::max(current, linf(a[i], b[j])), best);
        used_b[j] = 0;
    }
}

}  // namespace

double bottleneck_bruteforce(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    if (a.dim != b.dim) throw input_error("bottleneck: diagrams of different dimensions");
    if (a.pairs.size() + b.pairs.size() > 6)
        throw input_error("bottleneck_bruteforce: more than 6 points total");
    std::vector<FinitePoint> fa, fb;
    std::vector<double> ia, ib;
    split_diagram(a, fa, ia);
    split_diagram(b, fb, ib);
    if (ia.size() != ib.size()) return kInf;

    // Infinite points: try all pairings.
    double inf_val = kInf;
    std::sort(ib.begin(), ib.end());
    if (ia.empty()) {
        inf_val = 0.0;
    } else {
        std::vector<std::size_t> perm(ib.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            double worst = 0.0;
            for (std::size_t i = 0; i < ia.size(); ++i)
                worst = std::max(worst, std::abs(ia[i] - ib[perm[i]]));
            inf_val = std::min(inf_val, worst);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    double best = kInf;
    std::vector<char> used(fb.size(), 0);
    brute_recurse(fa, fb, 0, used, 0.0, best);
    return std::max(best, inf_val);
}

}  // namespace tda
