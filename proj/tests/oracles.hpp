#pragma once

// Brute-force reference implementations used only by tests. Everything here
// favors obviousness over speed and shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "mom/pairings.hpp"
#include "mom/polyhedra.hpp"
#include "mom/tetrahedra.hpp"

namespace oracle {

// every fixed-point-free involution on {0..F-1}, sorted
inline std::vector<mom::Pairing> all_involutions(int F) {
    std::vector<mom::Pairing> out;
    mom::Pairing p(F, 255);
    auto rec = [&](auto&& self) -> void {
        int i = 0;
        while (i < F && p[i] != 255) ++i;
        if (i == F) {
            out.push_back(p);
            return;
        }
        for (int j = i + 1; j < F; ++j) {
            if (p[j] != 255) continue;
            p[i] = static_cast<uint8_t>(j);
            p[j] = static_cast<uint8_t>(i);
            self(self);
            p[i] = p[j] = 255;
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

// Orbit count of fixed-point-free involutions under the group, by Burnside's
// lemma. The involutions commuting with g depend only on g's cycle type: a
// cycle of even length L can be self-matched one way (antipodally), and two
// cycles of equal length L can be matched together L ways.
inline uint64_t involution_orbit_count(int F,
                                       const std::vector<mom::SymmetryElement>& group) {
    uint64_t total = 0;
    for (const auto& g : group) {
        std::vector<char> seen(F, 0);
        std::map<int, int> cycles;  // length -> count
        for (int i = 0; i < F; ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            do {
                seen[j] = 1;
                j = g.face_perm[j];
                ++len;
            } while (j != i);
            ++cycles[len];
        }
        uint64_t fixed = 1;
        for (auto [len, count] : cycles) {
            std::vector<uint64_t> f(count + 1);
            f[0] = 1;
            if (count >= 1) f[1] = len % 2 == 0 ? 1 : 0;
            for (int c = 2; c <= count; ++c)
                f[c] = (len % 2 == 0 ? f[c - 1] : 0) + uint64_t(c - 1) * len * f[c - 2];
            fixed *= f[count];
        }
        total += fixed;
    }
    return total / group.size();
}

// lex-minimal conjugate under the group, computed with raw loops
inline mom::Pairing min_conjugate(const mom::Pairing& p,
                                  const std::vector<mom::SymmetryElement>& group) {
    mom::Pairing best = p;
    const int F = static_cast<int>(p.size());
    for (const auto& g : group) {
        mom::Pairing q(F);
        for (int i = 0; i < F; ++i) q[g.face_perm[i]] = g.face_perm[p[i]];
        if (q < best) best = q;
    }
    return best;
}

// sorted orbit representatives of all fixed-point-free involutions
inline std::vector<mom::Pairing> orbit_minima(int F,
                                              const std::vector<mom::SymmetryElement>& group) {
    std::set<mom::Pairing> reps;
    for (const auto& p : all_involutions(F)) reps.insert(min_conjugate(p, group));
    return {reps.begin(), reps.end()};
}

// -------- closed surfaces from glued polygons --------

// Side s of a polygon with k sides runs from corner s to corner (s+1) mod k.
// A gluing identifies two sides; reverse=true maps the arrow of s1 onto the
// reversed arrow of s2 (start1~end2), reverse=false maps start1~start2.
struct PolySurface {
    std::vector<int> sides;
    struct Glue {
        int p1, s1, p2, s2;
        bool reverse;
    };
    std::vector<Glue> glues;
};

struct SurfaceShape {
    int chi = 0;
    bool orientable = true;
    bool connected = true;
};

inline SurfaceShape surface_shape(const PolySurface& s) {
    std::vector<int> base(s.sides.size() + 1, 0);
    for (size_t p = 0; p < s.sides.size(); ++p) base[p + 1] = base[p] + s.sides[p];
    const int ncorners = base.back();
    std::vector<int> parent(ncorners);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto corner = [&](int p, int c) { return base[p] + c % s.sides[p]; };

    for (const auto& g : s.glues) {
        if (g.reverse) {
            unite(corner(g.p1, g.s1), corner(g.p2, g.s2 + 1));
            unite(corner(g.p1, g.s1 + 1), corner(g.p2, g.s2));
        } else {
            unite(corner(g.p1, g.s1), corner(g.p2, g.s2));
            unite(corner(g.p1, g.s1 + 1), corner(g.p2, g.s2 + 1));
        }
    }
    std::set<int> vclasses;
    for (int c = 0; c < ncorners; ++c) vclasses.insert(find(c));

    SurfaceShape out;
    out.chi = static_cast<int>(vclasses.size()) - static_cast<int>(s.glues.size()) +
              static_cast<int>(s.sides.size());

    // sign propagation: a reverse gluing joins equal signs, a parallel one
    // joins opposite signs
    std::vector<int> sign(s.sides.size(), 0);
    std::vector<std::vector<std::pair<int, bool>>> adj(s.sides.size());
    for (const auto& g : s.glues) {
        adj[g.p1].push_back({g.p2, g.reverse});
        adj[g.p2].push_back({g.p1, g.reverse});
    }
    int components = 0;
    for (size_t start = 0; start < s.sides.size(); ++start) {
        if (sign[start] != 0) continue;
        ++components;
        sign[start] = 1;
        std::vector<int> stack{static_cast<int>(start)};
        while (!stack.empty()) {
            int p = stack.back();
            stack.pop_back();
            for (auto [q, rev] : adj[p]) {
                int want = rev ? sign[p] : -sign[p];
                if (sign[q] == 0) {
                    sign[q] = want;
                    stack.push_back(q);
                } else if (sign[q] != want) {
                    out.orientable = false;
                }
            }
        }
    }
    out.connected = components == 1;
    return out;
}

// -------- vertex links straight from a triangulation --------

// One triangle per tetrahedron corner: the triangle at vertex v of tet t has
// its corners on the three edges {v,w}, w != v, listed in increasing w; the
// side between list positions j and j+1 lies on the face opposite the third
// listed vertex. Face gluings identify sides; the result is one PolySurface
// per vertex class of the triangulation.
struct TetLinks {
    std::vector<int> vertex_class;         // 4*tets -> class
    std::vector<SurfaceShape> link;        // per class
};

inline TetLinks tet_links(const mom::Triangulation& t) {
    TetLinks out;
    out.vertex_class = mom::triangulation_vertex_classes(t);
    int nclasses = *std::max_element(out.vertex_class.begin(), out.vertex_class.end()) + 1;

    // triangle index within its class, per (tet, vertex)
    std::vector<int> tri_index(4 * t.tet_count, -1);
    std::vector<PolySurface> surf(nclasses);
    for (int x = 0; x < 4 * t.tet_count; ++x) {
        PolySurface& s = surf[out.vertex_class[x]];
        tri_index[x] = static_cast<int>(s.sides.size());
        s.sides.push_back(3);
    }

    auto others = [](int v) {
        std::vector<int> w;
        for (int x = 0; x < 4; ++x)
            if (x != v) w.push_back(x);
        return w;
    };
    // side of the triangle at (tet, v) lying on face f
    auto side_on = [&](int v, int f) {
        std::vector<int> w = others(v);
        int pos = static_cast<int>(std::find(w.begin(), w.end(), f) - w.begin());
        return (pos + 1) % 3;  // side j has opposite list vertex w[(j+2)%3]
    };

    for (int tet = 0; tet < t.tet_count; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.glue[4 * tet + f];
            if (std::make_pair(g.tet, g.face) < std::make_pair(tet, f)) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                int v2 = g.perm[v];
                int cls = out.vertex_class[4 * tet + v];
                PolySurface& s = surf[cls];
                int j1 = side_on(v, f);
                int j2 = side_on(v2, g.face);
                // arrow of side j1 starts at the corner on edge {v, w[j1]}
                std::vector<int> w1 = others(v), w2 = others(v2);
                int start_image = g.perm[w1[j1]];
                bool reverse = start_image != w2[j2];
                s.glues.push_back({tri_index[4 * tet + v], j1,
                                   tri_index[4 * g.tet + v2], j2, reverse});
            }
        }

    for (auto& s : surf) out.link.push_back(surface_shape(s));
    return out;
}

// -------- Smith normal form via gcds of minors --------

inline long long det_bareiss(std::vector<std::vector<long long>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    __int128 prev = 1;
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * static_cast<long long>(m[n - 1][n - 1]);
}

inline long long gcd_of_minors(const std::vector<std::vector<long long>>& m, int k) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    if (k == 0) return 1;
    if (k > rows || k > cols) return 0;
    std::vector<int> ri(k), ci(k);
    long long g = 0;
    auto choose = [&](auto&& self, std::vector<int>& idx, int limit, int from, int depth,
                      auto&& body) -> void {
        if (depth == k) {
            body();
            return;
        }
        for (int x = from; x < limit; ++x) {
            idx[depth] = x;
            self(self, idx, limit, x + 1, depth + 1, body);
        }
    };
    choose(choose, ri, rows, 0, 0, [&] {
        choose(choose, ci, cols, 0, 0, [&] {
            std::vector<std::vector<long long>> sub(k, std::vector<long long>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = m[ri[i]][ci[j]];
            g = std::gcd(g, det_bareiss(sub));
        });
    });
    return g < 0 ? -g : g;
}

// nonzero invariant factors d_k / d_{k-1}
inline std::vector<long long> smith_by_minors(const std::vector<std::vector<long long>>& m) {
    std::vector<long long> out;
    long long prev = 1;
    int k = 1;
    while (true) {
        long long d = gcd_of_minors(m, k);
        if (d == 0) break;
        out.push_back(d / prev);
        prev = d;
        ++k;
    }
    return out;
}

// -------- commutator power words --------

// all cyclic words obtainable from x y^n x^-1 y^-n by relabeling {x,y} with
// two distinct letters-with-signs, plus inversion and rotation
inline bool is_commutator_power_word(const std::vector<int>& word, int* n_out = nullptr) {
    const int len = static_cast<int>(word.size());
    if (len < 4 || len % 2 != 0) return false;
    const int n = (len - 2) / 2;
    for (int x : {1, -1, 2, -2})
        for (int y : {1, -1, 2, -2}) {
            if (std::abs(x) == std::abs(y)) continue;
            std::vector<int> base;
            base.push_back(x);
            for (int i = 0; i < n; ++i) base.push_back(y);
            base.push_back(-x);
            for (int i = 0; i < n; ++i) base.push_back(-y);
            for (int dir = 0; dir < 2; ++dir) {
                std::vector<int> w = base;
                if (dir) {
                    std::reverse(w.begin(), w.end());
                    for (int& l : w) l = -l;
                }
                for (int r = 0; r < len; ++r) {
                    std::rotate(w.begin(), w.begin() + 1, w.end());
                    if (w == word) {
                        if (n_out) *n_out = n;
                        return true;
                    }
                }
            }
        }
    return false;
}

}  // namespace oracle
