#include "mom/complex.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace mom {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    // dense ids ordered by smallest member
    int compress(std::vector<int>& out) {
        out.assign(parent.size(), -1);
        int next = 0;
        std::vector<int> root_id(parent.size(), -1);
        for (size_t x = 0; x < parent.size(); ++x) {
            int r = find(static_cast<int>(x));
            if (root_id[r] < 0) root_id[r] = next++;
            out[x] = root_id[r];
        }
        return next;
    }
};

std::pair<CornerSlot, CornerSlot> corners_of_slot(EdgeSlot s) {
    switch (s) {
        case EdgeSlot::Cw: return {CornerSlot::Apex, CornerSlot::EqCw};
        case EdgeSlot::Ccw: return {CornerSlot::Apex, CornerSlot::EqCcw};
        case EdgeSlot::Equator: return {CornerSlot::EqCw, CornerSlot::EqCcw};
    }
    throw std::logic_error("unreachable");
}

constexpr EdgeSlot kEdgeSlots[3] = {EdgeSlot::Cw, EdgeSlot::Ccw, EdgeSlot::Equator};
constexpr CornerSlot kCornerSlots[3] = {CornerSlot::Apex, CornerSlot::EqCw, CornerSlot::EqCcw};

}  // namespace

GluedComplex::GluedComplex(const DipyramidSpec& spec, const Pairing& pairing)
    : spec_(spec), table_(spec), pairing_(pairing) {
    if (!is_valid_pairing(table_.face_count(), pairing_))
        throw std::invalid_argument("not a fixed-point-free involution on the faces");
    for (int k : spec_.sides) {
        vbase_.push_back(n_vertices_);
        ebase_.push_back(n_edges_);
        n_vertices_ += k + 2;
        n_edges_ += 3 * k;
    }
    build_classes();
    trace_edge_cycles();
    build_links();
}

int GluedComplex::vertex_id(int poly, int which) const { return vbase_[poly] + which; }

int GluedComplex::polar_vertex(int poly, Hemisphere h) const {
    return vertex_id(poly, h == Hemisphere::North ? 0 : 1);
}

int GluedComplex::corner_vertex(int face, CornerSlot c) const {
    FaceInfo fi = table_.info(face);
    int k = table_.sides(fi.poly);
    int next = (fi.pos + 1) % k;
    if (fi.hemi == Hemisphere::North) {
        switch (c) {
            case CornerSlot::Apex: return vertex_id(fi.poly, 0);
            case CornerSlot::EqCw: return vertex_id(fi.poly, 2 + fi.pos);
            case CornerSlot::EqCcw: return vertex_id(fi.poly, 2 + next);
        }
    } else {
        switch (c) {
            case CornerSlot::Apex: return vertex_id(fi.poly, 1);
            case CornerSlot::EqCw: return vertex_id(fi.poly, 2 + next);
            case CornerSlot::EqCcw: return vertex_id(fi.poly, 2 + fi.pos);
        }
    }
    throw std::logic_error("unreachable");
}

int GluedComplex::face_edge(int face, EdgeSlot s) const {
    FaceInfo fi = table_.info(face);
    int k = table_.sides(fi.poly);
    int base = ebase_[fi.poly];
    int next = (fi.pos + 1) % k;
    if (fi.hemi == Hemisphere::North) {
        switch (s) {
            case EdgeSlot::Cw: return base + fi.pos;        // N-polar m
            case EdgeSlot::Ccw: return base + next;         // N-polar m+1
            case EdgeSlot::Equator: return base + 2 * k + fi.pos;
        }
    } else {
        switch (s) {
            case EdgeSlot::Cw: return base + k + next;      // S-polar m+1
            case EdgeSlot::Ccw: return base + k + fi.pos;   // S-polar m
            case EdgeSlot::Equator: return base + 2 * k + fi.pos;
        }
    }
    throw std::logic_error("unreachable");
}

std::pair<int, int> GluedComplex::edge_ends(int edge) const {
    int poly = 0;
    while (poly + 1 < spec_.polyhedron_count() && edge >= ebase_[poly + 1]) ++poly;
    int local = edge - ebase_[poly];
    int k = spec_.sides[poly];
    if (local < k) return {vertex_id(poly, 0), vertex_id(poly, 2 + local)};
    if (local < 2 * k) return {vertex_id(poly, 1), vertex_id(poly, 2 + local - k)};
    int m = local - 2 * k;
    return {vertex_id(poly, 2 + m), vertex_id(poly, 2 + (m + 1) % k)};
}

CornerSlot GluedComplex::glued_corner(CornerSlot c) {
    switch (c) {
        case CornerSlot::Apex: return CornerSlot::Apex;
        case CornerSlot::EqCw: return CornerSlot::EqCcw;
        case CornerSlot::EqCcw: return CornerSlot::EqCw;
    }
    throw std::logic_error("unreachable");
}

EdgeSlot GluedComplex::glued_edge_slot(EdgeSlot s) {
    switch (s) {
        case EdgeSlot::Cw: return EdgeSlot::Ccw;
        case EdgeSlot::Ccw: return EdgeSlot::Cw;
        case EdgeSlot::Equator: return EdgeSlot::Equator;
    }
    throw std::logic_error("unreachable");
}

void GluedComplex::build_classes() {
    UnionFind ufv(n_vertices_), ufe(n_edges_), ufend(2 * n_edges_);
    int F = table_.face_count();
    auto end_index = [this](int edge, int vertex) {
        auto [a, b] = edge_ends(edge);
        if (vertex == a) return 0;
        if (vertex == b) return 1;
        throw std::logic_error("vertex not an end of edge");
    };
    for (int i = 0; i < F; ++i) {
        int j = pairing_[i];
        if (j < i) continue;
        for (CornerSlot c : kCornerSlots)
            ufv.unite(corner_vertex(i, c), corner_vertex(j, glued_corner(c)));
        for (EdgeSlot s : kEdgeSlots) {
            int e = face_edge(i, s);
            int e2 = face_edge(j, glued_edge_slot(s));
            ufe.unite(e, e2);
            // ends follow the corners: the end of e at a corner of face i maps
            // to the end of e2 at the glued corner
            auto [c1, c2] = corners_of_slot(s);
            for (CornerSlot c : {c1, c2}) {
                int v = corner_vertex(i, c);
                int v2 = corner_vertex(j, glued_corner(c));
                ufend.unite(2 * e + end_index(e, v), 2 * e2 + end_index(e2, v2));
            }
        }
    }
    n_vertex_classes_ = ufv.compress(vertex_class_);
    n_edge_classes_ = ufe.compress(edge_class_);
    n_end_classes_ = ufend.compress(end_class_);
}

void GluedComplex::trace_edge_cycles() {
    // the two faces of each polyhedral edge
    std::vector<std::array<int, 2>> edge_faces(n_edges_, {-1, -1});
    int F = table_.face_count();
    for (int f = 0; f < F; ++f) {
        for (EdgeSlot s : kEdgeSlots) {
            int e = face_edge(f, s);
            if (edge_faces[e][0] < 0)
                edge_faces[e][0] = f;
            else if (edge_faces[e][1] < 0)
                edge_faces[e][1] = f;
            else
                throw std::logic_error("edge in more than two faces");
        }
    }
    for (auto& ef : edge_faces) {
        if (ef[1] < 0) throw std::logic_error("edge in fewer than two faces");
        if (ef[0] > ef[1]) std::swap(ef[0], ef[1]);
    }
    auto slot_in_face = [this](int face, int edge) {
        for (EdgeSlot s : kEdgeSlots)
            if (face_edge(face, s) == edge) return s;
        throw std::logic_error("edge not in face");
    };

    std::vector<std::vector<int>> members(n_edge_classes_);
    for (int e = 0; e < n_edges_; ++e) members[edge_class_[e]].push_back(e);

    edge_cycles_.assign(n_edge_classes_, {});
    for (int cls = 0; cls < n_edge_classes_; ++cls) {
        int e0 = members[cls].front();  // smallest member: ids ascend
        int f0 = edge_faces[e0][0];
        auto& cycle = edge_cycles_[cls];
        int e = e0, f = f0;
        do {
            cycle.emplace_back(e, f);
            int j = pairing_[f];
            int e2 = face_edge(j, glued_edge_slot(slot_in_face(f, e)));
            // pivot to the other face of e2 within its polyhedron
            f = edge_faces[e2][0] == j ? edge_faces[e2][1] : edge_faces[e2][0];
            e = e2;
            if (cycle.size() > static_cast<size_t>(2 * n_edges_))
                throw std::logic_error("edge cycle does not close");
        } while (!(e == e0 && f == f0));
        // one full turn visits each member edge once; the opposite turn is
        // the mirror traversal and is not traced
        if (cycle.size() != members[cls].size())
            throw std::logic_error("edge cycle length != class size");
    }
}

void GluedComplex::build_links() {
    links_.assign(n_vertex_classes_, {});
    for (int v = 0; v < n_vertices_; ++v) links_[vertex_class_[v]].polygons++;

    int F = table_.face_count();
    for (int f = 0; f < F; ++f)
        for (CornerSlot c : kCornerSlots) links_[vertex_class_[corner_vertex(f, c)]].sides++;

    // one link vertex per edge-class end; attribute it to the vertex class of
    // the end, which is well defined across the end class
    std::vector<int> end_vc(n_end_classes_, -1);
    for (int e = 0; e < n_edges_; ++e) {
        auto [a, b] = edge_ends(e);
        int va[2] = {vertex_class_[a], vertex_class_[b]};
        for (int idx = 0; idx < 2; ++idx) {
            int ec = end_class_[2 * e + idx];
            if (end_vc[ec] < 0)
                end_vc[ec] = va[idx];
            else if (end_vc[ec] != va[idx])
                throw std::logic_error("end class spans vertex classes");
        }
    }
    for (int ec = 0; ec < n_end_classes_; ++ec) links_[end_vc[ec]].verts++;

    for (auto& l : links_) {
        if (l.sides % 2) throw std::logic_error("odd corner count in link");
        l.chi = l.verts - l.sides / 2 + l.polygons;
    }

    // orientability: the link polygons of each class, glued along corners,
    // must admit coherent orientations (sides matched in opposite directions)
    struct Side {
        int face;
        CornerSlot corner;
        int end_before, end_after;  // global end ids (2*edge + end index)
    };
    // polygon per polyhedral vertex, sides in cyclic order around the vertex
    std::vector<std::vector<Side>> polys(n_vertices_);
    std::vector<std::pair<int, int>> corner_pos(F * 3);  // corner -> (vertex, side index)
    auto end_id = [this](int edge, int vertex) {
        auto [a, b] = edge_ends(edge);
        if (vertex == a) return 2 * edge;
        if (vertex == b) return 2 * edge + 1;
        throw std::logic_error("vertex not an end of edge");
    };
    for (int p = 0; p < spec_.polyhedron_count(); ++p) {
        int k = spec_.sides[p];
        int vN = vertex_id(p, 0), vS = vertex_id(p, 1);
        for (int m = 0; m < k; ++m) {
            int next = (m + 1) % k;
            int nf = table_.face(p, Hemisphere::North, m);
            int nf_next = table_.face(p, Hemisphere::North, next);
            int sf = table_.face(p, Hemisphere::South, m);
            int sf_next = table_.face(p, Hemisphere::South, next);
            int npolar_m = ebase_[p] + m, npolar_next = ebase_[p] + next;
            int spolar_m = ebase_[p] + k + m, spolar_next = ebase_[p] + k + next;
            int eq_m = ebase_[p] + 2 * k + m;
            // around N: north faces in rotation order
            polys[vN].push_back({nf, CornerSlot::Apex, end_id(npolar_m, vN), end_id(npolar_next, vN)});
            // around S: south faces in rotation order
            polys[vS].push_back({sf, CornerSlot::Apex, end_id(spolar_m, vS), end_id(spolar_next, vS)});
            // around e_{m+1}: (north m, EqCcw), (north m+1, EqCw),
            //                 (south m+1, EqCcw), (south m, EqCw)
            int ve = vertex_id(p, 2 + next);
            polys[ve].push_back({nf, CornerSlot::EqCcw, end_id(eq_m, ve), end_id(npolar_next, ve)});
            polys[ve].push_back({nf_next, CornerSlot::EqCw, end_id(npolar_next, ve),
                                 end_id(ebase_[p] + 2 * k + next, ve)});
            polys[ve].push_back({sf_next, CornerSlot::EqCcw, end_id(ebase_[p] + 2 * k + next, ve),
                                 end_id(spolar_next, ve)});
            polys[ve].push_back({sf, CornerSlot::EqCw, end_id(spolar_next, ve), end_id(eq_m, ve)});
        }
    }
    for (int v = 0; v < n_vertices_; ++v)
        for (size_t i = 0; i < polys[v].size(); ++i) {
            const Side& s = polys[v][i];
            corner_pos[s.face * 3 + static_cast<int>(s.corner)] = {v, static_cast<int>(i)};
        }

    // image of a raw end under the gluing of face i
    auto end_image = [this, &end_id](int i, int end) {
        int edge = end / 2;
        int j = pairing_[i];
        EdgeSlot s = EdgeSlot::Cw;
        bool found = false;
        for (EdgeSlot es : kEdgeSlots)
            if (face_edge(i, es) == edge) { s = es; found = true; break; }
        if (!found) throw std::logic_error("end not on face");
        int e2 = face_edge(j, glued_edge_slot(s));
        auto [ca, cb] = corners_of_slot(s);
        auto [a, b] = edge_ends(edge);
        int vertex = end % 2 == 0 ? a : b;
        CornerSlot c = corner_vertex(i, ca) == vertex ? ca : cb;
        if (corner_vertex(i, c) != vertex) throw std::logic_error("corner/end mismatch");
        return end_id(e2, corner_vertex(j, glued_corner(c)));
    };

    std::vector<int> sign(n_vertices_, 0);
    for (int start = 0; start < n_vertices_; ++start) {
        if (sign[start] != 0) continue;
        sign[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Side& s : polys[v]) {
                int j = pairing_[s.face];
                CornerSlot cj = glued_corner(s.corner);
                auto [w, wi] = corner_pos[j * 3 + static_cast<int>(cj)];
                const Side& t = polys[w][wi];
                int ib = end_image(s.face, s.end_before);
                int ia = end_image(s.face, s.end_after);
                bool same_dir;
                if (ib == t.end_before && ia == t.end_after)
                    same_dir = true;
                else if (ib == t.end_after && ia == t.end_before)
                    same_dir = false;
                else
                    throw std::logic_error("glued side end mismatch");
                int want = same_dir ? -sign[v] : sign[v];
                if (sign[w] == 0) {
                    sign[w] = want;
                    stack.push_back(w);
                } else if (sign[w] != want) {
                    links_[vertex_class_[v]].orientable = false;
                }
            }
        }
    }
}

bool GluedComplex::polar_vertices_single_class() const {
    int cls = vertex_class_[polar_vertex(0, Hemisphere::North)];
    for (int p = 0; p < spec_.polyhedron_count(); ++p)
        for (Hemisphere h : {Hemisphere::North, Hemisphere::South})
            if (vertex_class_[polar_vertex(p, h)] != cls) return false;
    return true;
}

std::string FilterOutcome::describe() const {
    switch (reason) {
        case FilterReason::Passed:
            return "passed (boundary=" + std::to_string(boundary_count) +
                   ", edge classes=" + std::to_string(edge_class_count) + ")";
        case FilterReason::PolarClassSplit: return "rejected: polar vertices split into classes";
        case FilterReason::NonTorusLink: return "rejected: some vertex link is not a torus";
    }
    return "?";
}

FilterOutcome filter_complex(const GluedComplex& c) {
    FilterOutcome out;
    out.edge_class_count = c.edge_class_count();
    if (!c.polar_vertices_single_class()) {
        out.reason = FilterReason::PolarClassSplit;
        return out;
    }
    for (const auto& l : c.links()) {
        if (l.chi != 0) {
            out.reason = FilterReason::NonTorusLink;
            return out;
        }
    }
    // defense in depth: under the corner rule every link is orientable, so a
    // chi-0 link is a torus; this must never fire
    for (const auto& l : c.links())
        if (!l.orientable) throw std::logic_error("non-orientable link under corner rule");
    out.passed = true;
    out.reason = FilterReason::Passed;
    out.boundary_count = c.vertex_class_count();
    return out;
}

FilterOutcome filter_pairing(const DipyramidSpec& spec, const Pairing& pairing) {
    // cheap polar pre-check before building the full complex
    FaceTable t(spec);
    int P = spec.polyhedron_count();
    UnionFind poles(2 * P);
    for (int i = 0; i < t.face_count(); ++i) {
        int j = pairing[i];
        FaceInfo a = t.info(i), b = t.info(j);
        poles.unite(2 * a.poly + (a.hemi == Hemisphere::South ? 1 : 0),
                    2 * b.poly + (b.hemi == Hemisphere::South ? 1 : 0));
    }
    int root = poles.find(0);
    for (int x = 1; x < 2 * P; ++x)
        if (poles.find(x) != root) {
            FilterOutcome out;
            out.reason = FilterReason::PolarClassSplit;
            // still report the edge class structure for diagnostics
            out.edge_class_count = 0;
            return out;
        }
    return filter_complex(GluedComplex(spec, pairing));
}

}  // namespace mom
