#include "tda/persistence.hpp"

#include <algorithm>

#include "tda/transport.hpp"

namespace tda {

std::size_t PersistenceDiagram::infinite_count() const {
    std::size_t n = 0;
    for (const auto& p : pairs)
        if (p.second == kInf) ++n;
    return n;
}

PersistenceDiagram PersistenceDiagram::sorted() const {
    PersistenceDiagram out = *this;
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

bool operator==(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    return a.dim == b.dim && a.sorted().pairs == b.sorted().pairs;
}

const PersistenceDiagram& DiagramSet::at(int dim) const {
    if (dim < 0) throw input_error("DiagramSet: negative dimension");
    if (dim >= static_cast<int>(dims.size())) {
        // Dimensions beyond the carrier are empty.
        thread_local PersistenceDiagram empty;
        empty = PersistenceDiagram{dim, {}};
        return empty;
    }
    return dims[dim];
}

std::size_t DiagramSet::infinite_count() const {
    std::size_t n = 0;
    for (const auto& d : dims) n += d.infinite_count();
    return n;
}

bool diagrams_equal(const DiagramSet& a, const DiagramSet& b) {
    const std::size_t nd = std::max(a.dims.size(), b.dims.size());
    for (std::size_t d = 0; d < nd; ++d) {
        const auto pa = d < a.dims.size() ? a.dims[d].sorted().pairs
                                          : std::vector<std::pair<double, double>>{};
        const auto pb = d < b.dims.size() ? b.dims[d].sorted().pairs
                                          : std::vector<std::pair<double, double>>{};
        if (pa != pb) return false;
    }
    return true;
}

namespace {

// Symmetric difference of two ascending index lists (GF(2) column addition).
void add_column(std::vector<int>& target, const std::vector<int>& other,
                std::vector<int>& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), other.begin(), other.end(),
                                  std::back_inserter(scratch));
    target.swap(scratch);
}

}  // namespace

DiagramSet reduce(const FilteredComplex& fc) {
    const std::vector<int> order = filtration_order(fc);  // validates
    const int n = static_cast<int>(fc.cells.size());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    // Boundary columns in filtration positions, ascending.
    std::vector<std::vector<int>> col(n);
    for (int i = 0; i < n; ++i) {
        const Cell& c = fc.cells[order[i]];
        col[i].reserve(c.boundary.size());
        for (int b : c.boundary) col[i].push_back(pos[b]);
        std::sort(col[i].begin(), col[i].end());
    }

    const int maxdim = fc.max_dim();
    std::vector<int> pivot_owner(n, -1);  // row -> column with that low
    std::vector<char> cleared(n, 0);
    std::vector<int> scratch;

    // Clearing: process dimensions top-down; a pivot row found in dimension
    // d+1 marks a d-cell as a birth whose own column reduces to zero.
    for (int d = maxdim; d >= 1; --d) {
        for (int j = 0; j < n; ++j) {
            if (fc.cells[order[j]].dim != d) continue;
            if (cleared[j]) {
                col[j].clear();
                continue;
            }
            auto& column = col[j];
            while (!column.empty()) {
                const int low = column.back();
                const int owner = pivot_owner[low];
                if (owner < 0) break;
                add_column(column, col[owner], scratch);
            }
            if (!column.empty()) {
                pivot_owner[column.back()] = j;
                cleared[column.back()] = 1;
            }
        }
    }

    DiagramSet out;
    out.flavor = DiagramFlavor::unreduced;
    out.dims.resize(maxdim + 1);
    for (int d = 0; d <= maxdim; ++d) out.dims[d].dim = d;

    // A column is a birth iff it reduced to zero; it dies at the column
    // owning it as pivot, if any.
    std::vector<int> death_of(n, -1);
    for (int r = 0; r < n; ++r)
        if (pivot_owner[r] >= 0) death_of[r] = pivot_owner[r];
    for (int i = 0; i < n; ++i) {
        const bool is_birth = col[i].empty();
        if (!is_birth) continue;
        const int d = fc.cells[order[i]].dim;
        const double birth = fc.values[order[i]];
        if (death_of[i] >= 0) {
            const double death = fc.values[order[death_of[i]]];
            if (birth != death) out.dims[d].pairs.emplace_back(birth, death);
        } else {
            out.dims[d].pairs.emplace_back(birth, kInf);
        }
    }
    for (auto& dgm : out.dims) std::sort(dgm.pairs.begin(), dgm.pairs.end());
    return out;
}

DiagramSet reduced_diagram(const DiagramSet& d, double min_value) {
    if (d.dims.empty()) throw input_error("reduced_diagram: empty diagram set");
    DiagramSet out = d;
    out.flavor = DiagramFlavor::reduced;
    auto& pairs = out.dims[0].pairs;
    auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(min_value, kInf));
    if (it == pairs.end())
        throw invariant_error("reduced_diagram: no [min,inf) interval at the given minimum");
    pairs.erase(it);
    return out;
}

double interleaving_distance(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    return bottleneck(a, b);
}

}  // namespace tda
