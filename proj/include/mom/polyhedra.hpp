#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mom {

// Side counts of a multiset of k-sided dipyramids (ideal polyhedra dual to the
// 1-handles of a Mom structure), sorted ascending, each >= 3.
struct DipyramidSpec {
    std::vector<int> sides;

    static DipyramidSpec of(std::vector<int> sides);  // validates and sorts
    int polyhedron_count() const { return static_cast<int>(sides.size()); }
    int face_count() const;  // sum of 2k
    bool operator==(const DipyramidSpec&) const = default;
    bool operator<(const DipyramidSpec& o) const { return sides < o.sides; }
    std::string to_string() const;  // "3,3,4"
};

// The possible dipyramid multisets for a Mom-n (2 <= n <= 4): partitions of 3n
// into n parts >= 2, with the 2s (collapsed digonal pyramids) dropped.
// Deterministic order: ascending lexicographic on the sorted side lists.
std::vector<DipyramidSpec> pyramid_sets_for_mom(int n);

// Faces are numbered: all north faces of polyhedron 0, 1, ... then all south
// faces in the same polyhedron order; within a hemisphere, by position m.
// North face m and south face m of a k-dipyramid share equatorial edge
// (e_m, e_{m+1 mod k}).
enum class Hemisphere : uint8_t { North = 0, South = 1 };

struct FaceInfo {
    int poly;
    Hemisphere hemi;
    int pos;
    bool operator==(const FaceInfo&) const = default;
};

class FaceTable {
  public:
    explicit FaceTable(const DipyramidSpec& spec);
    const DipyramidSpec& spec() const { return spec_; }
    int face_count() const { return total_; }
    int sides(int poly) const { return spec_.sides[poly]; }
    FaceInfo info(int face) const;
    int face(int poly, Hemisphere hemi, int pos) const;

  private:
    DipyramidSpec spec_;
    std::vector<int> north_base_;  // per polyhedron
    int south_offset_ = 0;         // total north faces
    int total_ = 0;
};

// Each triangular face has an apex (polar) corner and two equatorial corners;
// (Apex, EqCw, EqCcw) is the boundary orientation of the face seen from
// outside the polyhedron. Edge slots: Cw joins Apex to EqCw, Ccw joins Apex
// to EqCcw, Equator joins the two equatorial corners.
enum class CornerSlot : uint8_t { Apex = 0, EqCw = 1, EqCcw = 2 };
enum class EdgeSlot : uint8_t { Cw = 0, Ccw = 1, Equator = 2 };

// The other (face, slot) of the same polyhedron along the same physical edge.
std::pair<int, EdgeSlot> intra_adjacency(const FaceTable& t, int face, EdgeSlot slot);

enum class SymmetryMode { Rotational, Full };

// A combinatorial symmetry of the disjoint union of dipyramids: a face
// permutation plus, per source face, whether the map onto the image face
// exchanges the EqCw/EqCcw corners. The swap bit is constant across each
// dipyramid (the restriction there is either a rotation or a reflection);
// orientation-reversing means at least one dipyramid is reflected. Full-mode
// groups contain mixed elements reflecting only some of the dipyramids.
struct SymmetryElement {
    std::vector<uint8_t> face_perm;
    std::vector<uint8_t> corner_swap;  // per face: 1 = EqCw <-> EqCcw
    bool orientation_reversing = false;

    int apply(int face) const { return face_perm[face]; }
    CornerSlot apply(int face, CornerSlot s) const;
    EdgeSlot apply(int face, EdgeSlot s) const;
    bool operator==(const SymmetryElement&) const = default;
    bool operator<(const SymmetryElement& o) const;
};

// Generators: per polyhedron the axis rotation r (e_m -> e_{m+1}) and the
// pole-swapping flip f (N <-> S, e_m -> e_{-m}); a swap for each adjacent pair
// of equal-k polyhedra; in Full mode also the per-polyhedron mirror
// (e_m -> e_{-m}, poles fixed), which reverses orientation.
std::vector<SymmetryElement> symmetry_generators(const DipyramidSpec& spec, SymmetryMode mode);

// Closure of the generators; identity first, rest sorted by face permutation.
std::vector<SymmetryElement> symmetry_group(const DipyramidSpec& spec, SymmetryMode mode);

SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b);  // a after b
SymmetryElement inverse(const SymmetryElement& g);

}  // namespace mom
