#pragma once

#include <vector>

#include "tda/complex.hpp"
#include "tda/persistence.hpp"

namespace tda {

/// Cone over a filtered simplicial complex: an apex vertex joined to every
/// base cell, with apex and all cone cells entering at m_f (the maximum base
/// filtration value). Sublevel sets below m_f deformation-retract to the
/// base sublevel sets; at m_f and above the cone is contractible.
struct ConedComplex {
    FilteredComplex complex;
    int apex = -1;   ///< cell id of the apex vertex
    double m_f = 0;  ///< maximum filtration value of the base
};

/// Builds the cone. Cubical inputs are triangulated first (squares split
/// along the smallest-id diagonal; see triangulate()).
ConedComplex cone_complex(const FilteredComplex& fc);

/// r-truncation of a diagram: (b, d) with b < r becomes (b, min(d, r));
/// intervals born at or after r are dropped, as are zero-length results.
PersistenceDiagram truncate_diagram(const PersistenceDiagram& d, double r);
DiagramSet truncate_diagram(const DiagramSet& d, double r);

/// Both computation routes for the coned diagrams: route A reduces the cone,
/// route B truncates the reduced base diagrams at m_f and re-adjoins the
/// [min f, inf) interval in dimension 0. They agree exactly as multisets.
struct ConeDiagramResult {
    DiagramSet cone_route;
    DiagramSet truncate_route;
    bool agree = false;
    double m_f = 0;
    double min_f = 0;
};

ConeDiagramResult cone_diagram_routes(const FilteredComplex& fc);

/// Coned diagrams with the route agreement enforced; a mismatch is an
/// internal invariant error (it signals a bug, never bad input).
DiagramSet cone_diagram(const FilteredComplex& fc);

/// Cone of a vertex map X -> Y: base vertices map as before, apex to apex.
/// The input must be simplicial (images of cells span cells of Y).
std::vector<int> cone_map(const std::vector<int>& phi, const FilteredComplex& domain,
                          const FilteredComplex& codomain);

/// Extends a base vertex function to the coned complex: base values kept,
/// apex at the base maximum.
VertexFunction cone_vertex_function(const VertexFunction& f);

/// Result of checking the strong pairing inequalities
/// |g(phi(x)) - f(x)| <= eps and |f(psi(y)) - g(y)| <= eps on all vertices.
struct PairingCheck {
    bool ok = false;
    int witness = -1;        ///< violating vertex id (on failure)
    bool witness_in_x = true;
    double margin = 0.0;     ///< |deviation| - eps at the witness
};

PairingCheck verify_strong_pairing(const VertexFunction& f_x, const VertexFunction& f_y,
                                   const std::vector<int>& phi, const std::vector<int>& psi,
                                   double eps);

}  // namespace tda
