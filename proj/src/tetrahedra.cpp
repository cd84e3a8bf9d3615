#include "mom/tetrahedra.hpp"

#include <numeric>
#include <sstream>

#include "mom/descriptions.hpp"

namespace mom {

void Triangulation::validate() const {
    if (tet_count <= 0) throw ValidationError("triangulation has no tetrahedra");
    if (glue.size() != static_cast<size_t>(4 * tet_count))
        throw ValidationError("gluing table has wrong size");
    for (int t = 0; t < tet_count; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Target& g = glue[4 * t + f];
            if (g.tet < 0 || g.tet >= tet_count || g.face < 0 || g.face > 3)
                throw ValidationError("gluing target out of range");
            if (g.tet == t && g.face == f) throw ValidationError("face glued to itself");
            bool seen[4] = {false, false, false, false};
            for (uint8_t v : g.perm) {
                if (v > 3 || seen[v]) throw ValidationError("gluing map is not a permutation");
                seen[v] = true;
            }
            if (g.perm[f] != g.face)
                throw ValidationError("gluing map does not carry the face to the target face");
            const Target& back = glue[4 * g.tet + g.face];
            if (back.tet != t || back.face != f)
                throw ValidationError("gluing table is not an involution");
            for (int v = 0; v < 4; ++v)
                if (back.perm[g.perm[v]] != v)
                    throw ValidationError("reverse gluing map is not the inverse");
        }
    }
}

SubdividedComplex subdivide_to_tetrahedra(const GluedComplex& c) {
    const DipyramidSpec& spec = c.spec();
    const FaceTable& table = c.table();
    std::vector<int> tbase;
    int T = 0;
    for (int k : spec.sides) {
        tbase.push_back(T);
        T += k;
    }
    SubdividedComplex out;
    out.tri.tet_count = T;
    out.tri.glue.assign(4 * T, {});
    out.tet_vertex_to_poly_vertex.assign(4 * T, -1);

    // tet (p, m): slots 0 = N, 1 = S, 2 = e_m, 3 = e_{m+1}
    for (int p = 0; p < spec.polyhedron_count(); ++p) {
        int k = spec.sides[p];
        for (int m = 0; m < k; ++m) {
            int t = tbase[p] + m;
            out.tet_vertex_to_poly_vertex[4 * t + 0] = c.vertex_id(p, 0);
            out.tet_vertex_to_poly_vertex[4 * t + 1] = c.vertex_id(p, 1);
            out.tet_vertex_to_poly_vertex[4 * t + 2] = c.vertex_id(p, 2 + m);
            out.tet_vertex_to_poly_vertex[4 * t + 3] = c.vertex_id(p, 2 + (m + 1) % k);
            // internal wall (N, S, e_{m+1}): face 2 of tet m is face 3 of tet m+1
            int tn = tbase[p] + (m + 1) % k;
            out.tri.glue[4 * t + 2] = {tn, 3, {0, 1, 3, 2}};
            out.tri.glue[4 * tn + 3] = {t, 2, {0, 1, 3, 2}};
        }
    }

    // external faces: north face m is face 1 of tet (p, m), south face m is
    // face 0; same-hemisphere gluings map slots (0,1,3,2), cross-hemisphere
    // gluings map (1,0,2,3)
    const Pairing& pr = c.pairing();
    for (int i = 0; i < table.face_count(); ++i) {
        FaceInfo a = table.info(i);
        FaceInfo b = table.info(pr[i]);
        int ta = tbase[a.poly] + a.pos;
        int tb = tbase[b.poly] + b.pos;
        int fa = a.hemi == Hemisphere::North ? 1 : 0;
        int fb = b.hemi == Hemisphere::North ? 1 : 0;
        std::array<uint8_t, 4> perm =
            a.hemi == b.hemi ? std::array<uint8_t, 4>{0, 1, 3, 2}
                             : std::array<uint8_t, 4>{1, 0, 2, 3};
        out.tri.glue[4 * ta + fa] = {tb, fb, perm};
    }
    out.tri.validate();
    return out;
}

std::string emit_triangulation(const Triangulation& t) {
    t.validate();
    std::ostringstream out;
    out << "tri v1\n";
    out << "tets " << t.tet_count << "\n";
    for (int tet = 0; tet < t.tet_count; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.glue[4 * tet + f];
            out << "glue " << tet << " " << f << " -> " << g.tet << " " << g.face << " perm "
                << int(g.perm[0]) << "," << int(g.perm[1]) << "," << int(g.perm[2]) << ","
                << int(g.perm[3]) << "\n";
        }
    return out.str();
}

Triangulation parse_triangulation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "tri v1")
        throw ValidationError("missing 'tri v1' header");
    Triangulation t;
    if (!std::getline(in, line) || line.rfind("tets ", 0) != 0)
        throw ValidationError("missing 'tets N' line");
    try {
        t.tet_count = std::stoi(line.substr(5));
    } catch (const std::exception&) {
        throw ValidationError("bad tetrahedron count");
    }
    if (t.tet_count <= 0) throw ValidationError("bad tetrahedron count");
    t.glue.assign(4 * t.tet_count, {});
    std::vector<bool> seen(4 * t.tet_count, false);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw, arrow, permkw, permstr;
        int tet, face;
        Triangulation::Target g;
        if (!(ls >> kw >> tet >> face >> arrow >> g.tet >> g.face >> permkw >> permstr) ||
            kw != "glue" || arrow != "->" || permkw != "perm")
            throw ValidationError("bad gluing line: " + line);
        int vals[4], n = 0;
        std::istringstream ps(permstr);
        std::string tok;
        while (std::getline(ps, tok, ',')) {
            if (n == 4) throw ValidationError("bad permutation: " + permstr);
            vals[n++] = std::stoi(tok);
        }
        if (n != 4) throw ValidationError("bad permutation: " + permstr);
        for (int v = 0; v < 4; ++v) {
            if (vals[v] < 0 || vals[v] > 3) throw ValidationError("bad permutation: " + permstr);
            g.perm[v] = static_cast<uint8_t>(vals[v]);
        }
        if (tet < 0 || tet >= t.tet_count || face < 0 || face > 3)
            throw ValidationError("gluing source out of range");
        if (seen[4 * tet + face]) throw ValidationError("duplicate gluing line");
        seen[4 * tet + face] = true;
        t.glue[4 * tet + face] = g;
    }
    for (bool s : seen)
        if (!s) throw ValidationError("missing gluing line");
    t.validate();
    return t;
}

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

}  // namespace

std::vector<int> triangulation_vertex_classes(const Triangulation& t) {
    t.validate();
    UnionFind uf(4 * t.tet_count);
    for (int tet = 0; tet < t.tet_count; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.glue[4 * tet + f];
            for (int v = 0; v < 4; ++v)
                if (v != f) uf.unite(4 * tet + v, 4 * g.tet + g.perm[v]);
        }
    std::vector<int> cls;
    uf.compress(cls);
    return cls;
}

std::vector<int> triangulation_link_chi(const Triangulation& t) {
    std::vector<int> vcls = triangulation_vertex_classes(t);
    int nclasses = *std::max_element(vcls.begin(), vcls.end()) + 1;

    // link faces: one triangle per tet vertex; link edges: triangle sides are
    // the (vertex, face) corners, glued in pairs
    std::vector<int> faces(nclasses, 0), corners(nclasses, 0);
    for (int x = 0; x < 4 * t.tet_count; ++x) faces[vcls[x]]++;
    for (int tet = 0; tet < t.tet_count; ++tet)
        for (int v = 0; v < 4; ++v)
            for (int f = 0; f < 4; ++f)
                if (f != v) corners[vcls[4 * tet + v]]++;

    // link vertices: ends of tetrahedron edges, merged around each glued edge
    // (end at v of edge {v,w} is indexed by the ordered pair (v, w))
    auto end_id = [&](int tet, int v, int w) { return 12 * tet + 3 * v + (w > v ? w - 1 : w); };
    UnionFind ends(12 * t.tet_count);
    for (int tet = 0; tet < t.tet_count; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.glue[4 * tet + f];
            for (int v = 0; v < 4; ++v)
                for (int w = 0; w < 4; ++w)
                    if (v != w && v != f && w != f)
                        ends.unite(end_id(tet, v, w), end_id(g.tet, g.perm[v], g.perm[w]));
        }
    std::vector<int> ecls;
    int ne = ends.compress(ecls);
    std::vector<int> end_vc(ne, -1);
    std::vector<int> verts(nclasses, 0);
    for (int tet = 0; tet < t.tet_count; ++tet)
        for (int v = 0; v < 4; ++v)
            for (int w = 0; w < 4; ++w) {
                if (v == w) continue;
                int ec = ecls[end_id(tet, v, w)];
                int vc = vcls[4 * tet + v];
                if (end_vc[ec] < 0) {
                    end_vc[ec] = vc;
                    verts[vc]++;
                } else if (end_vc[ec] != vc) {
                    throw std::logic_error("edge end class spans vertex classes");
                }
            }

    std::vector<int> chi(nclasses);
    for (int c = 0; c < nclasses; ++c) {
        if (corners[c] % 2) throw std::logic_error("odd corner count");
        chi[c] = verts[c] - corners[c] / 2 + faces[c];
    }
    return chi;
}

}  // namespace mom
