#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mom/pairings.hpp"
#include "mom/polyhedra.hpp"

namespace mom {

// The pseudo-3-complex obtained from the dipyramids of a spec glued along a
// face pairing with the forced corner rule: apex to apex, EqCw(i) to
// EqCcw(p(i)), EqCcw(i) to EqCw(p(i)). The rule reverses the boundary
// orientation of each face, so the glued complex is oriented.
//
// Global numbering within one polyhedron of k sides (offset by per-polyhedron
// bases): vertices N, S, e_0..e_{k-1}; edges N-polar m (N to e_m, m < k),
// S-polar m (S to e_m), equator m (e_m to e_{m+1 mod k}).
class GluedComplex {
  public:
    GluedComplex(const DipyramidSpec& spec, const Pairing& pairing);

    const DipyramidSpec& spec() const { return spec_; }
    const FaceTable& table() const { return table_; }
    const Pairing& pairing() const { return pairing_; }

    int vertex_count() const { return n_vertices_; }
    int edge_count() const { return n_edges_; }

    int vertex_id(int poly, int which) const;  // which: 0 = N, 1 = S, 2+m = e_m
    int polar_vertex(int poly, Hemisphere h) const;
    int corner_vertex(int face, CornerSlot c) const;
    int face_edge(int face, EdgeSlot s) const;
    std::pair<int, int> edge_ends(int edge) const;  // vertex ids

    // the gluing's corner and edge-slot correspondence on face i
    static CornerSlot glued_corner(CornerSlot c);
    static EdgeSlot glued_edge_slot(EdgeSlot s);

    int vertex_class_count() const { return n_vertex_classes_; }
    int edge_class_count() const { return n_edge_classes_; }
    int vertex_class(int vertex) const { return vertex_class_[vertex]; }
    int edge_class(int edge) const { return edge_class_[edge]; }
    // classes of edge ends (2*edge + end); every edge has two distinct ends
    int end_class(int edge, int end) const { return end_class_[2 * edge + end]; }
    int end_class_count() const { return n_end_classes_; }

    // incidence cycle around each edge class: the faces crossed, one full
    // turn; entries are (edge, face) with the crossing leaving through `face`
    const std::vector<std::vector<std::pair<int, int>>>& edge_cycles() const {
        return edge_cycles_;
    }

    struct LinkData {
        int polygons = 0;  // polyhedral vertices in the class
        int sides = 0;     // face corners at the class (2 per link edge)
        int verts = 0;     // edge-class ends at the class
        int chi = 0;
        bool orientable = true;
    };
    const std::vector<LinkData>& links() const { return links_; }

    bool polar_vertices_single_class() const;

  private:
    void build_classes();
    void trace_edge_cycles();
    void build_links();

    DipyramidSpec spec_;
    FaceTable table_;
    Pairing pairing_;
    std::vector<int> vbase_, ebase_;
    int n_vertices_ = 0, n_edges_ = 0;
    std::vector<int> vertex_class_, edge_class_, end_class_;
    int n_vertex_classes_ = 0, n_edge_classes_ = 0, n_end_classes_ = 0;
    std::vector<std::vector<std::pair<int, int>>> edge_cycles_;
    std::vector<LinkData> links_;
};

enum class FilterReason { Passed, PolarClassSplit, NonTorusLink };

struct FilterOutcome {
    bool passed = false;
    FilterReason reason = FilterReason::Passed;
    int boundary_count = 0;    // vertex classes (cusps) when passed
    int edge_class_count = 0;
    std::string describe() const;
};

// A pairing survives when all polar vertices land in one class and the link
// of every vertex class is a torus (chi = 0; orientability holds
// automatically under the corner rule and is asserted).
FilterOutcome filter_pairing(const DipyramidSpec& spec, const Pairing& pairing);
FilterOutcome filter_complex(const GluedComplex& c);

}  // namespace mom
