#include "mom/polyhedra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace mom {

DipyramidSpec DipyramidSpec::of(std::vector<int> sides) {
    if (sides.empty()) throw std::invalid_argument("empty dipyramid spec");
    for (int k : sides)
        if (k < 3) throw std::invalid_argument("dipyramid needs >= 3 sides");
    std::sort(sides.begin(), sides.end());
    return DipyramidSpec{std::move(sides)};
}

int DipyramidSpec::face_count() const {
    int f = 0;
    for (int k : sides) f += 2 * k;
    return f;
}

std::string DipyramidSpec::to_string() const {
    std::ostringstream s;
    for (size_t i = 0; i < sides.size(); ++i) {
        if (i) s << ',';
        s << sides[i];
    }
    return s.str();
}

static void partitions_rec(int remaining, int parts, int min_part,
                           std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int p = min_part; p * parts <= remaining; ++p) {
        cur.push_back(p);
        partitions_rec(remaining - p, parts - 1, p, cur, out);
        cur.pop_back();
    }
}

std::vector<DipyramidSpec> pyramid_sets_for_mom(int n) {
    if (n < 2 || n > 4) throw std::invalid_argument("n must be 2, 3, or 4");
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_rec(3 * n, n, 2, cur, parts);
    std::set<std::vector<int>> dropped;
    for (auto& p : parts) {
        std::vector<int> sides;
        for (int k : p)
            if (k >= 3) sides.push_back(k);
        dropped.insert(sides);
    }
    std::vector<DipyramidSpec> out;
    for (const auto& s : dropped) out.push_back(DipyramidSpec::of(s));
    return out;
}

FaceTable::FaceTable(const DipyramidSpec& spec) : spec_(spec) {
    int acc = 0;
    for (int k : spec_.sides) {
        north_base_.push_back(acc);
        acc += k;
    }
    south_offset_ = acc;
    total_ = 2 * acc;
}

FaceInfo FaceTable::info(int face) const {
    if (face < 0 || face >= total_) throw std::out_of_range("face index");
    Hemisphere h = Hemisphere::North;
    int f = face;
    if (f >= south_offset_) {
        h = Hemisphere::South;
        f -= south_offset_;
    }
    for (int p = spec_.polyhedron_count() - 1; p >= 0; --p) {
        if (f >= north_base_[p]) return {p, h, f - north_base_[p]};
    }
    throw std::logic_error("unreachable");
}

int FaceTable::face(int poly, Hemisphere hemi, int pos) const {
    if (poly < 0 || poly >= spec_.polyhedron_count()) throw std::out_of_range("polyhedron");
    int k = spec_.sides[poly];
    if (pos < 0 || pos >= k) throw std::out_of_range("face position");
    int base = north_base_[poly] + (hemi == Hemisphere::South ? south_offset_ : 0);
    return base + pos;
}

std::pair<int, EdgeSlot> intra_adjacency(const FaceTable& t, int face, EdgeSlot slot) {
    FaceInfo fi = t.info(face);
    int k = t.sides(fi.poly);
    auto mod = [k](int m) { return ((m % k) + k) % k; };
    if (fi.hemi == Hemisphere::North) {
        switch (slot) {
            // polar edge N-e_m: Cw of north face m, Ccw of north face m-1
            case EdgeSlot::Cw:
                return {t.face(fi.poly, Hemisphere::North, mod(fi.pos - 1)), EdgeSlot::Ccw};
            case EdgeSlot::Ccw:
                return {t.face(fi.poly, Hemisphere::North, mod(fi.pos + 1)), EdgeSlot::Cw};
            case EdgeSlot::Equator:
                return {t.face(fi.poly, Hemisphere::South, fi.pos), EdgeSlot::Equator};
        }
    } else {
        switch (slot) {
            // polar edge S-e_m: Ccw of south face m, Cw of south face m-1
            case EdgeSlot::Cw:
                return {t.face(fi.poly, Hemisphere::South, mod(fi.pos + 1)), EdgeSlot::Ccw};
            case EdgeSlot::Ccw:
                return {t.face(fi.poly, Hemisphere::South, mod(fi.pos - 1)), EdgeSlot::Cw};
            case EdgeSlot::Equator:
                return {t.face(fi.poly, Hemisphere::North, fi.pos), EdgeSlot::Equator};
        }
    }
    throw std::logic_error("unreachable");
}

CornerSlot SymmetryElement::apply(int face, CornerSlot s) const {
    if (!corner_swap[face] || s == CornerSlot::Apex) return s;
    return s == CornerSlot::EqCw ? CornerSlot::EqCcw : CornerSlot::EqCw;
}

EdgeSlot SymmetryElement::apply(int face, EdgeSlot s) const {
    if (!corner_swap[face] || s == EdgeSlot::Equator) return s;
    return s == EdgeSlot::Cw ? EdgeSlot::Ccw : EdgeSlot::Cw;
}

bool SymmetryElement::operator<(const SymmetryElement& o) const {
    if (face_perm != o.face_perm) return face_perm < o.face_perm;
    return corner_swap < o.corner_swap;
}

static bool any_swap(const std::vector<uint8_t>& bits) {
    return std::find(bits.begin(), bits.end(), uint8_t{1}) != bits.end();
}

SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b) {
    SymmetryElement c;
    c.face_perm.resize(b.face_perm.size());
    c.corner_swap.resize(b.face_perm.size());
    for (size_t i = 0; i < b.face_perm.size(); ++i) {
        c.face_perm[i] = a.face_perm[b.face_perm[i]];
        c.corner_swap[i] = b.corner_swap[i] ^ a.corner_swap[b.face_perm[i]];
    }
    c.orientation_reversing = any_swap(c.corner_swap);
    return c;
}

SymmetryElement inverse(const SymmetryElement& g) {
    SymmetryElement inv;
    inv.face_perm.resize(g.face_perm.size());
    inv.corner_swap.resize(g.face_perm.size());
    for (size_t i = 0; i < g.face_perm.size(); ++i) {
        inv.face_perm[g.face_perm[i]] = i;
        inv.corner_swap[g.face_perm[i]] = g.corner_swap[i];
    }
    inv.orientation_reversing = g.orientation_reversing;
    return inv;
}

std::vector<SymmetryElement> symmetry_generators(const DipyramidSpec& spec, SymmetryMode mode) {
    FaceTable t(spec);
    int F = t.face_count();
    auto identity = [F]() {
        SymmetryElement g;
        g.face_perm.resize(F);
        g.corner_swap.assign(F, 0);
        for (int i = 0; i < F; ++i) g.face_perm[i] = i;
        return g;
    };
    std::vector<SymmetryElement> gens;
    int P = spec.polyhedron_count();
    for (int p = 0; p < P; ++p) {
        int k = spec.sides[p];
        auto mod = [k](int m) { return ((m % k) + k) % k; };
        SymmetryElement r = identity();
        SymmetryElement f = identity();
        for (int m = 0; m < k; ++m) {
            for (Hemisphere h : {Hemisphere::North, Hemisphere::South}) {
                // rotation: e_m -> e_{m+1}
                r.face_perm[t.face(p, h, m)] = t.face(p, h, mod(m + 1));
                // flip: N <-> S, e_m -> e_{-m}
                Hemisphere oh = h == Hemisphere::North ? Hemisphere::South : Hemisphere::North;
                f.face_perm[t.face(p, h, m)] = t.face(p, oh, mod(-m - 1));
            }
        }
        gens.push_back(r);
        gens.push_back(f);
        if (mode == SymmetryMode::Full) {
            // mirror: e_m -> e_{-m}, poles fixed; reflects this dipyramid
            SymmetryElement mu = identity();
            for (int m = 0; m < k; ++m)
                for (Hemisphere h : {Hemisphere::North, Hemisphere::South}) {
                    mu.face_perm[t.face(p, h, m)] = t.face(p, h, mod(-m - 1));
                    mu.corner_swap[t.face(p, h, m)] = 1;
                }
            mu.orientation_reversing = true;
            gens.push_back(mu);
        }
    }
    for (int p = 0; p + 1 < P; ++p) {
        if (spec.sides[p] != spec.sides[p + 1]) continue;
        int k = spec.sides[p];
        SymmetryElement s = identity();
        for (int m = 0; m < k; ++m) {
            for (Hemisphere h : {Hemisphere::North, Hemisphere::South}) {
                s.face_perm[t.face(p, h, m)] = t.face(p + 1, h, m);
                s.face_perm[t.face(p + 1, h, m)] = t.face(p, h, m);
            }
        }
        gens.push_back(s);
    }
    return gens;
}

std::vector<SymmetryElement> symmetry_group(const DipyramidSpec& spec, SymmetryMode mode) {
    auto gens = symmetry_generators(spec, mode);
    int F = spec.face_count();
    SymmetryElement id;
    id.face_perm.resize(F);
    id.corner_swap.assign(F, 0);
    for (int i = 0; i < F; ++i) id.face_perm[i] = i;

    auto key = [](const SymmetryElement& g) {
        std::string k(g.face_perm.begin(), g.face_perm.end());
        k.append(g.corner_swap.begin(), g.corner_swap.end());
        return k;
    };
    std::unordered_set<std::string> seen;
    std::vector<SymmetryElement> elems{id};
    seen.insert(key(id));
    for (size_t i = 0; i < elems.size(); ++i) {
        SymmetryElement cur = elems[i];  // copy: elems may reallocate
        for (const auto& g : gens) {
            SymmetryElement next = compose(g, cur);
            if (seen.insert(key(next)).second) elems.push_back(std::move(next));
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

}  // namespace mom
