#pragma once

#include <utility>
#include <vector>

#include "tda/common.hpp"
#include "tda/complex.hpp"

namespace tda {

/// Multiset of (birth, death) pairs in one homology dimension; death may be
/// +inf. Pairs with birth == death are dropped at extraction.
struct PersistenceDiagram {
    int dim = 0;
    std::vector<std::pair<double, double>> pairs;

    std::size_t infinite_count() const;
    /// Canonical sorted copy (by birth, then death); used for multiset
    /// comparison and deterministic output.
    PersistenceDiagram sorted() const;
};

bool operator==(const PersistenceDiagram& a, const PersistenceDiagram& b);

enum class DiagramFlavor { unreduced, reduced };

/// Interval-module decomposition per dimension, either for unreduced
/// homology (flavor unreduced; dim 0 keeps the [min f, inf) interval) or for
/// reduced homology.
struct DiagramSet {
    DiagramFlavor flavor = DiagramFlavor::unreduced;
    std::vector<PersistenceDiagram> dims;

    const PersistenceDiagram& at(int dim) const;
    /// Total number of infinite intervals (all dimensions).
    std::size_t infinite_count() const;
};

bool diagrams_equal(const DiagramSet& a, const DiagramSet& b);

/// Persistence of the sublevel filtration over the two-element field, by
/// column reduction of the boundary matrix in filtration order (with the
/// clearing optimization; output is order-independent). Diagrams are indexed
/// by dimension 0..max_dim and use unreduced homology.
DiagramSet reduce(const FilteredComplex& fc);

/// Drops the single [min_value, inf) interval from dimension 0, turning
/// unreduced homology into reduced homology. Throws invariant_error if no
/// such interval exists.
DiagramSet reduced_diagram(const DiagramSet& d, double min_value);

/// Interleaving distance between diagrams of equal dimension; equals the
/// bottleneck distance by the isomorphism theorem. Delegates to
/// transport::bottleneck.
double interleaving_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);

}  // namespace tda
