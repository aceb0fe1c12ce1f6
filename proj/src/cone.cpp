#include "tda/cone.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace tda {

ConedComplex cone_complex(const FilteredComplex& input) {
    if (input.cells.empty()) throw input_error("cone_complex: empty complex");
    const FilteredComplex fc =
        input.kind == ComplexKind::cubical ? triangulate(input) : input;
    validate_filtration(fc);

    const int n = static_cast<int>(fc.cells.size());
    const int nv = fc.vertex_count();
    const double m_f = fc.max_value();

    ConedComplex out;
    out.m_f = m_f;
    out.complex.kind = ComplexKind::simplicial;
    out.complex.cells = fc.cells;
    out.complex.values = fc.values;

    // Apex vertex, then one cone cell per base cell. The cone over cell k
    // gets id n + 1 + k so boundary links are computable in one pass.
    const int apex_vertex = nv;  // vertex numbering
    Cell apex;
    apex.id = n;
    apex.dim = 0;
    apex.vertices = {apex_vertex};
    out.apex = apex.id;
    out.complex.cells.push_back(apex);
    out.complex.values.push_back(m_f);

    for (int k = 0; k < n; ++k) {
        const Cell& base = fc.cells[k];
        Cell c;
        c.id = n + 1 + k;
        c.dim = base.dim + 1;
        c.vertices = base.vertices;
        c.vertices.push_back(apex_vertex);  // apex_vertex > all base vertices
        // Faces: the base cell, and the cone over each base face (the apex
        // for a coned vertex).
        c.boundary.push_back(base.id);
        if (base.dim == 0) {
            c.boundary.push_back(apex.id);
        } else {
            for (int b : base.boundary) c.boundary.push_back(n + 1 + b);
        }
        std::sort(c.boundary.begin(), c.boundary.end());
        out.complex.cells.push_back(std::move(c));
        out.complex.values.push_back(m_f);
    }

    // Vertex-id contract: apex vertex must be a dim-0 cell with id == its
    // vertex number. Base vertices occupy 0..nv-1; the apex cell sits at id
    // n, not nv, so renumber by moving the apex cell right after the base
    // vertices when the base has higher-dimensional cells.
    if (n != nv) {
        std::vector<int> remap(out.complex.cells.size());
        for (std::size_t i = 0; i < remap.size(); ++i) {
            const int id = static_cast<int>(i);
            if (id < nv)
                remap[i] = id;                     // base vertices stay
            else if (id == n)
                remap[i] = nv;                     // apex right after them
            else if (id < n)
                remap[i] = id + 1;                 // higher base cells shift
            else
                remap[i] = id;                     // cone cells keep ids
        }
        std::vector<Cell> cells(out.complex.cells.size());
        std::vector<double> values(out.complex.values.size());
        for (std::size_t i = 0; i < out.complex.cells.size(); ++i) {
            Cell c = out.complex.cells[i];
            c.id = remap[i];
            for (int& b : c.boundary) b = remap[b];
            std::sort(c.boundary.begin(), c.boundary.end());
            values[c.id] = out.complex.values[i];
            cells[c.id] = std::move(c);
        }
        out.complex.cells = std::move(cells);
        out.complex.values = std::move(values);
        out.apex = nv;
    }
    validate_filtration(out.complex);
    return out;
}

PersistenceDiagram truncate_diagram(const PersistenceDiagram& d, double r) {
    PersistenceDiagram out;
    out.dim = d.dim;
    for (const auto& [b, death] : d.pairs) {
        if (b >= r) continue;
        const double nd = std::min(death, r);
        if (b != nd) out.pairs.emplace_back(b, nd);
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

DiagramSet truncate_diagram(const DiagramSet& d, double r) {
    DiagramSet out;
    out.flavor = d.flavor;
    out.dims.reserve(d.dims.size());
    for (const auto& dgm : d.dims) out.dims.push_back(truncate_diagram(dgm, r));
    return out;
}

ConeDiagramResult cone_diagram_routes(const FilteredComplex& fc) {
    ConeDiagramResult out;
    out.m_f = fc.max_value();
    out.min_f = fc.min_value();

    out.cone_route = reduce(cone_complex(fc).complex);

    DiagramSet base = reduce(fc);
    DiagramSet truncated = truncate_diagram(reduced_diagram(base, out.min_f), out.m_f);
    truncated.flavor = DiagramFlavor::unreduced;
    truncated.dims[0].pairs.emplace_back(out.min_f, kInf);
    std::sort(truncated.dims[0].pairs.begin(), truncated.dims[0].pairs.end());
    // The cone raises the top dimension by one; those diagrams are empty.
    while (truncated.dims.size() < out.cone_route.dims.size()) {
        PersistenceDiagram empty;
        empty.dim = static_cast<int>(truncated.dims.size());
        truncated.dims.push_back(empty);
    }
    out.truncate_route = std::move(truncated);
    out.agree = diagrams_equal(out.cone_route, out.truncate_route);
    return out;
}

DiagramSet cone_diagram(const FilteredComplex& fc) {
    ConeDiagramResult r = cone_diagram_routes(fc);
    if (!r.agree)
        throw invariant_error("cone_diagram: cone route and truncation route disagree");
    return std::move(r.cone_route);
}

namespace {

std::set<std::vector<int>> vertex_sets(const FilteredComplex& fc) {
    std::set<std::vector<int>> s;
    for (const Cell& c : fc.cells) s.insert(c.vertices);
    return s;
}

}  // namespace

std::vector<int> cone_map(const std::vector<int>& phi, const FilteredComplex& domain,
                          const FilteredComplex& codomain) {
    const int nx = domain.vertex_count();
    const int ny = codomain.vertex_count();
    if (static_cast<int>(phi.size()) != nx)
        throw input_error("cone_map: map not defined on every vertex");
    for (int v : phi)
        if (v < 0 || v >= ny) throw input_error("cone_map: image vertex out of range");

    const auto targets = vertex_sets(codomain);
    for (const Cell& c : domain.cells) {
        std::vector<int> image;
        image.reserve(c.vertices.size());
        for (int v : c.vertices) image.push_back(phi[v]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (!targets.count(image))
            throw input_error("cone_map: map is not simplicial on cell " + std::to_string(c.id));
    }
    std::vector<int> out = phi;
    out.push_back(ny);  // apex to apex
    return out;
}

VertexFunction cone_vertex_function(const VertexFunction& f) {
    if (f.values.empty()) throw input_error("cone_vertex_function: empty function");
    VertexFunction out = f;
    out.values.push_back(*std::max_element(f.values.begin(), f.values.end()));
    return out;
}

PairingCheck verify_strong_pairing(const VertexFunction& f_x, const VertexFunction& f_y,
                                   const std::vector<int>& phi, const std::vector<int>& psi,
                                   double eps) {
    const int nx = static_cast<int>(f_x.values.size());
    const int ny = static_cast<int>(f_y.values.size());
    if (static_cast<int>(phi.size()) != nx || static_cast<int>(psi.size()) != ny)
        throw input_error("verify_strong_pairing: maps must cover both vertex sets");
    PairingCheck result;
    result.ok = true;
    result.margin = -kInf;
    for (int x = 0; x < nx; ++x) {
        const int y = phi[x];
        if (y < 0 || y >= ny) throw input_error("verify_strong_pairing: phi out of range");
        const double dev = std::abs(f_y.values[y] - f_x.values[x]);
        if (dev - eps > result.margin && dev > eps) {
            result = {false, x, true, dev - eps};
        }
    }
    for (int y = 0; y < ny; ++y) {
        const int x = psi[y];
        if (x < 0 || x >= nx) throw input_error("verify_strong_pairing: psi out of range");
        const double dev = std::abs(f_x.values[x] - f_y.values[y]);
        if (dev - eps > result.margin && dev > eps) {
            result = {false, y, false, dev - eps};
        }
    }
    return result;
}

}  // namespace tda
