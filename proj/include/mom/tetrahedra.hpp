#pragma once

#include <array>
#include <string>
#include <vector>

#include "mom/complex.hpp"

namespace mom {

// Ideal triangulation as a face gluing table. Tetrahedron vertices are slots
// 0..3; face j is opposite vertex j; a gluing's permutation maps vertex slots
// of the source to the target (so perm[face] = target face).
struct Triangulation {
    struct Target {
        int tet = -1;
        int face = -1;
        std::array<uint8_t, 4> perm{};
        bool operator==(const Target&) const = default;
    };
    int tet_count = 0;
    std::vector<Target> glue;  // indexed by 4*tet + face

    void validate() const;  // throws ValidationError
    bool operator==(const Triangulation&) const = default;
};

struct SubdividedComplex {
    Triangulation tri;
    // tet vertex slot -> polyhedral vertex id of the source complex
    std::vector<int> tet_vertex_to_poly_vertex;  // 4 * tet_count
};

// Each k-dipyramid splits into k tetrahedra (N, S, e_m, e_{m+1}); internal
// faces (N, S, e_m) are glued between consecutive tetrahedra, external faces
// follow the pairing's corner rule.
SubdividedComplex subdivide_to_tetrahedra(const GluedComplex& c);

std::string emit_triangulation(const Triangulation& t);
Triangulation parse_triangulation(const std::string& text);

// Independent link computation on the tetrahedral model, for cross-checks:
// vertex classes of the triangulation and the Euler characteristic of each
// class's link surface.
std::vector<int> triangulation_vertex_classes(const Triangulation& t);  // 4*tets -> class
std::vector<int> triangulation_link_chi(const Triangulation& t);        // per class

}  // namespace mom
