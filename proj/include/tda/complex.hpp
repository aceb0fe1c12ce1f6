#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tda/common.hpp"

namespace tda {

enum class ComplexKind { simplicial, cubical };

/// One cell of a finite complex. `boundary` lists ids of the codimension-1
/// faces; `vertices` is the sorted list of vertex ids spanning the cell.
struct Cell {
    int id = 0;
    int dim = 0;
    std::vector<int> boundary;
    std::vector<int> vertices;
};

/// A finite complex closed under faces, without filtration values. Vertex
/// cells carry ids 0..vertex_count-1 so a VertexFunction can be indexed by
/// vertex id directly.
struct Complex {
    ComplexKind kind = ComplexKind::simplicial;
    std::vector<Cell> cells;

    int vertex_count() const;
    int max_dim() const;
};

/// Real value per vertex of a target complex.
struct VertexFunction {
    std::vector<double> values;
};

/// Complex plus one finite filtration value per cell. Valid instances are
/// monotone: value(cell) >= value(face) for every face.
struct FilteredComplex {
    ComplexKind kind = ComplexKind::simplicial;
    std::vector<Cell> cells;
    std::vector<double> values;

    int vertex_count() const;
    int max_dim() const;
    double min_value() const;
    double max_value() const;
};

/// Builds a simplicial complex from maximal (or any) simplices given as
/// vertex-id lists; closes under faces. Vertex ids must be 0..V-1.
Complex make_simplicial(int vertex_count, const std::vector<std::vector<int>>& simplices);

/// Structural validation: boundary links exist, dimensions and counts match
/// the simplicial/cubical cell shape, complex closed under faces.
void validate_complex(const Complex& c);

/// Monotonicity check; throws invariant_error naming the offending
/// (cell, face) pair.
void validate_filtration(const FilteredComplex& fc);

/// Sublevel filtration of the piecewise-linear extension of f: each cell
/// enters at the maximum of its vertex values.
FilteredComplex lower_star_filtration(const Complex& complex, const VertexFunction& f);

/// Cubical complex (V-construction) of a rectangular image; one vertex per
/// unmasked pixel, edges/squares present iff all their pixels are unmasked.
/// mask entries: true = excluded.
std::pair<Complex, VertexFunction> grid_to_cubical(
    const std::vector<std::vector<double>>& image,
    const std::optional<std::vector<std::vector<bool>>>& mask = std::nullopt);

/// Cell ids sorted by (value, dim, id); refines the face partial order.
/// Validates monotonicity on the way.
std::vector<int> filtration_order(const FilteredComplex& fc);

/// Replaces each square by two triangles plus the diagonal edge from its
/// smallest-id vertex (all three at the square's filtration value), leaving
/// vertices and edges untouched. Sublevel sets keep their homotopy type, so
/// persistence diagrams are unchanged.
FilteredComplex triangulate(const FilteredComplex& fc);

}  // namespace tda
