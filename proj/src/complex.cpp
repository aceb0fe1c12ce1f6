#include "tda/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tda {

namespace {

int count_vertices(const std::vector<Cell>& cells) {
    int n = 0;
    for (const auto& c : cells)
        if (c.dim == 0) ++n;
    return n;
}

int max_cell_dim(const std::vector<Cell>& cells) {
    int d = -1;
    for (const auto& c : cells) d = std::max(d, c.dim);
    return d;
}

}  // namespace

int Complex::vertex_count() const { return count_vertices(cells); }
int Complex::max_dim() const { return max_cell_dim(cells); }

int FilteredComplex::vertex_count() const { return count_vertices(cells); }
int FilteredComplex::max_dim() const { return max_cell_dim(cells); }

double FilteredComplex::min_value() const {
    if (values.empty()) throw input_error("min_value: empty complex");
    return *std::min_element(values.begin(), values.end());
}

double FilteredComplex::max_value() const {
    if (values.empty()) throw input_error("max_value: empty complex");
    return *std::max_element(values.begin(), values.end());
}

Complex make_simplicial(int vertex_count, const std::vector<std::vector<int>>& simplices) {
    if (vertex_count < 0) throw input_error("make_simplicial: negative vertex count");
    // Collect the face closure as sorted vertex sets, then assign ids by
    // (dim, lexicographic vertices) so vertices come first with ids 0..V-1.
    std::set<std::vector<int>> closure;
    for (int v = 0; v < vertex_count; ++v) closure.insert({v});
    auto add_with_faces = [&](auto&& self, std::vector<int> verts) -> void {
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (int v : verts)
            if (v < 0 || v >= vertex_count)
                throw input_error("make_simplicial: vertex id out of range");
        if (closure.count(verts)) return;
        closure.insert(verts);
        if (verts.size() > 1) {
            for (std::size_t skip = 0; skip < verts.size(); ++skip) {
                std::vector<int> face;
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (i != skip) face.push_back(verts[i]);
                self(self, std::move(face));
            }
        }
    };
    for (const auto& s : simplices) add_with_faces(add_with_faces, s);

    std::vector<std::vector<int>> ordered(closure.begin(), closure.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    std::map<std::vector<int>, int> id_of;
    Complex out;
    out.kind = ComplexKind::simplicial;
    out.cells.reserve(ordered.size());
    for (const auto& verts : ordered) {
        Cell cell;
        cell.id = static_cast<int>(out.cells.size());
        cell.dim = static_cast<int>(verts.size()) - 1;
        cell.vertices = verts;
        if (verts.size() > 1) {
            for (std::size_t skip = 0; skip < verts.size(); ++skip) {
                std::vector<int> face;
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (i != skip) face.push_back(verts[i]);
                cell.boundary.push_back(id_of.at(face));
            }
            std::sort(cell.boundary.begin(), cell.boundary.end());
        }
        id_of[verts] = cell.id;
        out.cells.push_back(std::move(cell));
    }
    return out;
}

namespace {

void validate_cells(const std::vector<Cell>& cells, ComplexKind kind) {
    const int n = static_cast<int>(cells.size());
    for (int i = 0; i < n; ++i) {
        const Cell& c = cells[i];
        if (c.id != i) throw input_error("complex: cell ids must be dense 0..n-1");
        if (c.dim < 0) throw input_error("complex: negative cell dimension");
        if (kind == ComplexKind::simplicial) {
            if (static_cast<int>(c.vertices.size()) != c.dim + 1)
                throw input_error("complex: a d-simplex needs d+1 vertices");
            if (c.dim > 0 && static_cast<int>(c.boundary.size()) != c.dim + 1)
                throw input_error("complex: a d-simplex needs d+1 boundary faces");
        } else {
            if (static_cast<int>(c.vertices.size()) != (1 << c.dim))
                throw input_error("complex: a d-cube needs 2^d vertices");
            if (c.dim > 0 && static_cast<int>(c.boundary.size()) != 2 * c.dim)
                throw input_error("complex: a d-cube needs 2d boundary faces");
        }
        if (c.dim == 0 && !c.boundary.empty())
            throw input_error("complex: vertex with nonempty boundary");
        if (!std::is_sorted(c.vertices.begin(), c.vertices.end()))
            throw input_error("complex: cell vertex list not sorted");
        for (int b : c.boundary) {
            if (b < 0 || b >= n) throw input_error("complex: boundary id out of range");
            if (cells[b].dim != c.dim - 1)
                throw input_error("complex: boundary face of wrong dimension");
            // Face vertices must be a subset of the cell's.
            if (!std::includes(c.vertices.begin(), c.vertices.end(),
                               cells[b].vertices.begin(), cells[b].vertices.end()))
                throw input_error("complex: boundary face is not a face of the cell");
        }
    }
    // Vertex cells must occupy ids 0..V-1 so vertex functions index by id.
    int v = 0;
    for (const auto& c : cells) {
        if (c.dim == 0) {
            if (c.id != v || c.vertices != std::vector<int>{v})
                throw input_error("complex: vertex cells must have ids 0..V-1");
            ++v;
        }
    }
}

}  // namespace

void validate_complex(const Complex& c) { validate_cells(c.cells, c.kind); }

void validate_filtration(const FilteredComplex& fc) {
    validate_cells(fc.cells, fc.kind);
    if (fc.values.size() != fc.cells.size())
        throw input_error("filtration: one value per cell required");
    for (double v : fc.values)
        if (!std::isfinite(v)) throw input_error("filtration: values must be finite");
    for (const Cell& c : fc.cells)
        for (int b : c.boundary)
            if (fc.values[c.id] < fc.values[b])
                throw invariant_error("filtration not monotone: cell " + std::to_string(c.id) +
                                      " has value below its face " + std::to_string(b));
}

FilteredComplex lower_star_filtration(const Complex& complex, const VertexFunction& f) {
    validate_complex(complex);
    const int nv = complex.vertex_count();
    if (static_cast<int>(f.values.size()) != nv)
        throw input_error("lower_star_filtration: function defined on " +
                          std::to_string(f.values.size()) + " vertices, complex has " +
                          std::to_string(nv));
    for (double v : f.values)
        if (!std::isfinite(v)) throw input_error("lower_star_filtration: non-finite value");

    FilteredComplex fc;
    fc.kind = complex.kind;
    fc.cells = complex.cells;
    fc.values.resize(fc.cells.size());
    for (const Cell& c : fc.cells) {
        double v = f.values[c.vertices.front()];
        for (int vid : c.vertices) v = std::max(v, f.values[vid]);
        fc.values[c.id] = v;
    }
    return fc;
}

std::pair<Complex, VertexFunction> grid_to_cubical(
    const std::vector<std::vector<double>>& image,
    const std::optional<std::vector<std::vector<bool>>>& mask) {
    const std::size_t rows = image.size();
    if (rows == 0) throw input_error("grid_to_cubical: empty image");
    const std::size_t cols = image[0].size();
    for (const auto& row : image)
        if (row.size() != cols) throw input_error("grid_to_cubical: image not rectangular");
    if (mask) {
        if (mask->size() != rows) throw input_error("grid_to_cubical: mask shape mismatch");
        for (const auto& row : *mask)
            if (row.size() != cols) throw input_error("grid_to_cubical: mask shape mismatch");
    }
    auto excluded = [&](std::size_t r, std::size_t c) { return mask && (*mask)[r][c]; };

    // Vertex ids: row-major over unmasked pixels.
    std::vector<std::vector<int>> vid(rows, std::vector<int>(cols, -1));
    Complex out;
    out.kind = ComplexKind::cubical;
    VertexFunction f;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (!excluded(r, c)) {
                Cell v;
                v.id = static_cast<int>(out.cells.size());
                v.dim = 0;
                v.vertices = {v.id};
                vid[r][c] = v.id;
                out.cells.push_back(std::move(v));
                f.values.push_back(image[r][c]);
            }
    if (out.cells.empty()) throw input_error("grid_to_cubical: all pixels masked");

    // Edges, then squares; an edge id lookup keyed by its vertex pair.
    std::map<std::pair<int, int>, int> edge_id;
    auto add_edge = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        Cell e;
        e.id = static_cast<int>(out.cells.size());
        e.dim = 1;
        e.vertices = {a, b};
        e.boundary = {a, b};
        edge_id[{a, b}] = e.id;
        out.cells.push_back(std::move(e));
    };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (excluded(r, c)) continue;
            if (c + 1 < cols && !excluded(r, c + 1)) add_edge(vid[r][c], vid[r][c + 1]);
            if (r + 1 < rows && !excluded(r + 1, c)) add_edge(vid[r][c], vid[r + 1][c]);
        }
    auto edge = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return edge_id.at({a, b});
    };
    for (std::size_t r = 0; r + 1 < rows; ++r)
        for (std::size_t c = 0; c + 1 < cols; ++c) {
            if (excluded(r, c) || excluded(r, c + 1) || excluded(r + 1, c) ||
                excluded(r + 1, c + 1))
                continue;
            const int v00 = vid[r][c], v01 = vid[r][c + 1];
            const int v10 = vid[r + 1][c], v11 = vid[r + 1][c + 1];
            Cell sq;
            sq.id = static_cast<int>(out.cells.size());
            sq.dim = 2;
            sq.vertices = {v00, v01, v10, v11};
            std::sort(sq.vertices.begin(), sq.vertices.end());
            sq.boundary = {edge(v00, v01), edge(v00, v10), edge(v01, v11), edge(v10, v11)};
            std::sort(sq.boundary.begin(), sq.boundary.end());
            out.cells.push_back(std::move(sq));
        }
    return {std::move(out), std::move(f)};
}

std::vector<int> filtration_order(const FilteredComplex& fc) {
    validate_filtration(fc);
    std::vector<int> order(fc.cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (fc.values[a] != fc.values[b]) return fc.values[a] < fc.values[b];
        if (fc.cells[a].dim != fc.cells[b].dim) return fc.cells[a].dim < fc.cells[b].dim;
        return a < b;
    });
    return order;
}

FilteredComplex triangulate(const FilteredComplex& fc) {
    if (fc.kind == ComplexKind::simplicial) return fc;
    validate_filtration(fc);
    for (const Cell& c : fc.cells)
        if (c.dim > 2)
            throw input_error("triangulate: cubical cells above dimension 2 unsupported");

    FilteredComplex out;
    out.kind = ComplexKind::simplicial;
    // Vertices and edges carry over; ids shift when squares are interleaved
    // with lower cells, so remap old ids to the compacted numbering.
    std::vector<int> remap(fc.cells.size(), -1);
    for (const Cell& c : fc.cells) {
        if (c.dim >= 2) continue;
        remap[c.id] = static_cast<int>(out.cells.size());
        out.cells.push_back(c);
        out.values.push_back(fc.values[c.id]);
    }
    for (Cell& c : out.cells) {
        c.id = remap[c.id];
        for (int& b : c.boundary) b = remap[b];
    }
    std::map<std::pair<int, int>, int> edge_id;
    for (const Cell& c : out.cells)
        if (c.dim == 1) edge_id[{c.vertices[0], c.vertices[1]}] = c.id;

    for (const Cell& c : fc.cells) {
        if (c.dim != 2) continue;
        // Sorted square vertices {v0<v1<v2<v3} from a row-major grid have v0
        // opposite v3; split along that diagonal.
        const int v0 = c.vertices[0], v1 = c.vertices[1];
        const int v2 = c.vertices[2], v3 = c.vertices[3];
        const double val = fc.values[c.id];
        Cell diag;
        diag.id = static_cast<int>(out.cells.size());
        diag.dim = 1;
        diag.vertices = {v0, v3};
        diag.boundary = {v0, v3};
        edge_id[{v0, v3}] = diag.id;
        out.cells.push_back(diag);
        out.values.push_back(val);
        for (int mid : {v1, v2}) {
            Cell tri;
            tri.id = static_cast<int>(out.cells.size());
            tri.dim = 2;
            tri.vertices = {v0, mid, v3};
            tri.boundary = {edge_id.at({v0, mid}), edge_id.at({std::min(mid, v3), std::max(mid, v3)}),
                            edge_id.at({v0, v3})};
            std::sort(tri.boundary.begin(), tri.boundary.end());
            out.cells.push_back(std::move(tri));
            out.values.push_back(val);
        }
    }
    return out;
}

}  // namespace tda
