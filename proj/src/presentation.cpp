#include "mom/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mom {

void Presentation::validate() const {
    for (const auto& r : relators)
        for (int l : r)
            if (l == 0 || std::abs(l) > gens)
                throw std::invalid_argument("relator letter out of range");
}

int Presentation::total_length() const {
    int n = 0;
    for (const auto& r : relators) n += static_cast<int>(r.size());
    return n;
}

std::string Presentation::to_text() const {
    validate();
    if (gens > 26) throw std::invalid_argument("text export supports at most 26 generators");
    std::ostringstream out;
    out << "gens: " << gens << "\n";
    for (const auto& r : relators) {
        for (int l : r) out << static_cast<char>(l > 0 ? 'a' + l - 1 : 'A' - l - 1);
        out << "\n";
    }
    return out.str();
}

Presentation Presentation::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("gens: ", 0) != 0)
        throw std::invalid_argument("presentation text must start with 'gens: n'");
    Presentation p;
    try {
        p.gens = std::stoi(line.substr(6));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad generator count");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<int> rel;
        for (char ch : line) {
            if (ch >= 'a' && ch <= 'z')
                rel.push_back(ch - 'a' + 1);
            else if (ch >= 'A' && ch <= 'Z')
                rel.push_back(-(ch - 'A' + 1));
            else
                throw std::invalid_argument(std::string("bad relator letter '") + ch + "'");
        }
        p.relators.push_back(std::move(rel));
    }
    p.validate();
    return p;
}

std::vector<int> free_reduce(std::vector<int> word) {
    std::vector<int> out;
    for (int l : word) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

std::vector<int> cyclic_reduce(std::vector<int> word) {
    word = free_reduce(std::move(word));
    while (word.size() >= 2 && word.front() == -word.back()) {
        word.erase(word.begin());
        word.pop_back();
        word = free_reduce(std::move(word));
    }
    return word;
}

static std::vector<int> invert_word(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

std::vector<int> cyclic_canonical(const std::vector<int>& word) {
    if (word.empty()) return {};
    std::vector<int> best;
    for (const auto& w : {word, invert_word(word)}) {
        for (size_t r = 0; r < w.size(); ++r) {
            std::vector<int> rot(w.begin() + r, w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + r);
            if (best.empty() || rot < best) best = rot;
        }
    }
    return best;
}

namespace {

// remove generator `g` (1-based) by substituting `expr` for it, renumbering
// the generators above it down by one
std::vector<int> substitute(const std::vector<int>& word, int g, const std::vector<int>& expr) {
    std::vector<int> out;
    for (int l : word) {
        if (l == g)
            out.insert(out.end(), expr.begin(), expr.end());
        else if (l == -g) {
            auto inv = invert_word(expr);
            out.insert(out.end(), inv.begin(), inv.end());
        } else {
            int a = std::abs(l) > g ? (std::abs(l) - 1) : std::abs(l);
            out.push_back(l > 0 ? a : -a);
        }
    }
    return free_reduce(std::move(out));
}

}  // namespace

SimplifyResult tietze_simplify(Presentation p, int budget_factor) {
    p.validate();
    const long long budget =
        std::max<long long>(16, static_cast<long long>(budget_factor) * p.total_length());
    bool blocked = false;
    for (bool changed = true; changed;) {
        changed = false;

        for (auto& r : p.relators) {
            auto red = cyclic_reduce(r);
            if (red != r) {
                r = std::move(red);
                changed = true;
            }
        }
        auto dead = std::remove_if(p.relators.begin(), p.relators.end(),
                                   [](const auto& r) { return r.empty(); });
        if (dead != p.relators.end()) {
            p.relators.erase(dead, p.relators.end());
            changed = true;
        }

        // duplicates up to rotation and inversion; keep the first
        std::map<std::vector<int>, bool> seen;
        for (size_t i = 0; i < p.relators.size();) {
            auto key = cyclic_canonical(p.relators[i]);
            if (seen.count(key)) {
                p.relators.erase(p.relators.begin() + i);
                changed = true;
            } else {
                seen[key] = true;
                ++i;
            }
        }

        // eliminate a generator occurring exactly once in some relator;
        // prefer short relators so substitutions stay small
        std::vector<size_t> order(p.relators.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return p.relators[a].size() < p.relators[b].size();
        });
        bool eliminated = false;
        for (size_t oi = 0; oi < order.size() && !eliminated; ++oi) {
            const auto& r = p.relators[order[oi]];
            for (size_t pos = 0; pos < r.size() && !eliminated; ++pos) {
                int g = std::abs(r[pos]);
                int occur = 0;
                for (int l : r) occur += std::abs(l) == g;
                if (occur != 1) continue;
                // rotate r so the +-g letter is first; then g^e = rest^-1
                std::vector<int> rot(r.begin() + pos, r.end());
                rot.insert(rot.end(), r.begin(), r.begin() + pos);
                std::vector<int> expr = invert_word({rot.begin() + 1, rot.end()});
                if (rot[0] < 0) expr = invert_word(expr);
                // expr is in the old numbering; shift letters above g down
                for (int& l : expr)
                    if (std::abs(l) > g) l += l > 0 ? -1 : 1;
                // g is replaced by expr in every other relator
                Presentation q;
                q.gens = p.gens - 1;
                long long total = 0;
                for (size_t j = 0; j < p.relators.size(); ++j) {
                    if (j == order[oi]) continue;
                    q.relators.push_back(substitute(p.relators[j], g, expr));
                    total += static_cast<long long>(q.relators.back().size());
                }
                if (total > budget) {
                    blocked = true;
                    continue;
                }
                p = std::move(q);
                eliminated = true;
                changed = true;
            }
        }
        if (eliminated) blocked = false;  // re-evaluate blockage after progress
    }
    return {std::move(p), !blocked};
}

std::string AbelianInvariants::to_string() const {
    std::ostringstream out;
    bool first = true;
    if (free_rank == 1) {
        out << "Z";
        first = false;
    } else if (free_rank > 1) {
        out << "Z^" << free_rank;
        first = false;
    }
    for (long long t : torsion) {
        if (!first) out << "+";
        out << "Z/" << t;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");

    std::vector<long long> diag;
    size_t top = 0;
    while (top < rows && top < cols) {
        // find a nonzero pivot of smallest magnitude
        size_t pi = top, pj = top;
        long long best = 0;
        for (size_t i = top; i < rows; ++i)
            for (size_t j = top; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < best)) {
                    best = std::abs(m[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(m[top], m[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pj]);

        // clear the row and column by division steps; restart when a
        // remainder shrinks below the pivot
        for (;;) {
            bool again = false;
            for (size_t i = top + 1; i < rows; ++i) {
                long long q = m[i][top] / m[top][top];
                if (q != 0)
                    for (size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
                if (m[i][top] != 0) again = true;
            }
            for (size_t j = top + 1; j < cols; ++j) {
                long long q = m[top][j] / m[top][top];
                if (q != 0)
                    for (size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
                if (m[top][j] != 0) again = true;
            }
            if (!again) break;
            // a nonzero remainder is smaller than the pivot: re-pivot on it
            size_t qi = top, qj = top;
            long long small = std::abs(m[top][top]);
            for (size_t i = top; i < rows; ++i)
                for (size_t j = top; j < cols; ++j)
                    if (m[i][j] != 0 && std::abs(m[i][j]) < small) {
                        small = std::abs(m[i][j]);
                        qi = i;
                        qj = j;
                    }
            std::swap(m[top], m[qi]);
            for (size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][qj]);
        }
        // divisibility: pivot must divide the remaining submatrix
        bool divides = true;
        for (size_t i = top + 1; i < rows && divides; ++i)
            for (size_t j = top + 1; j < cols && divides; ++j)
                if (m[i][j] % m[top][top] != 0) {
                    // fold that row into the pivot row and redo this step
                    for (size_t jj = top; jj < cols; ++jj) m[top][jj] += m[i][jj];
                    divides = false;
                }
        if (!divides) continue;
        diag.push_back(std::abs(m[top][top]));
        ++top;
    }
    return diag;
}

AbelianInvariants abelianization(const Presentation& p) {
    p.validate();
    std::vector<std::vector<long long>> m(p.relators.size(),
                                          std::vector<long long>(p.gens, 0));
    for (size_t i = 0; i < p.relators.size(); ++i)
        for (int l : p.relators[i]) m[i][std::abs(l) - 1] += l > 0 ? 1 : -1;
    auto diag = smith_invariant_factors(std::move(m));
    AbelianInvariants inv;
    inv.free_rank = p.gens - static_cast<int>(diag.size());
    for (long long d : diag)
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

std::optional<int> recognize_commutator_power(const Presentation& p) {
    if (p.gens != 2 || p.relators.size() != 1) return std::nullopt;
    std::vector<int> w = cyclic_reduce(p.relators[0]);
    size_t L = w.size();
    if (L < 4 || L % 2) return std::nullopt;
    int n = static_cast<int>((L - 2) / 2);

    // candidate letter maps: swap generators, invert either
    for (int swap = 0; swap < 2; ++swap)
        for (int ix = 0; ix < 2; ++ix)
            for (int iy = 0; iy < 2; ++iy) {
                auto map_letter = [&](int l) {
                    int g = std::abs(l), s = l > 0 ? 1 : -1;
                    if (swap) g = 3 - g;
                    if ((g == 1 && ix) || (g == 2 && iy)) s = -s;
                    return s * g;
                };
                for (int dir = 0; dir < 2; ++dir) {
                    std::vector<int> base = dir ? invert_word(w) : w;
                    for (int& l : base) l = map_letter(l);
                    for (size_t r = 0; r < L; ++r) {
                        // pattern: x y^n x^-1 y^-n
                        bool ok = true;
                        auto at = [&](size_t i) { return base[(r + i) % L]; };
                        if (at(0) != 1) continue;
                        for (int i = 0; i < n && ok; ++i) ok = at(1 + i) == 2;
                        if (ok) ok = at(1 + n) == -1;
                        for (int i = 0; i < n && ok; ++i) ok = at(2 + n + i) == -2;
                        if (ok) return n;
                    }
                }
            }
    return std::nullopt;
}

Presentation spine_presentation(const GluedComplex& c) {
    const Pairing& pr = c.pairing();
    const FaceTable& t = c.table();
    int F = t.face_count();
    int P = c.spec().polyhedron_count();

    // arcs in order of their lower face index
    std::vector<int> arc_of_face(F, -1);
    std::vector<std::pair<int, int>> arcs;  // (lower face, partner)
    for (int i = 0; i < F; ++i) {
        if (pr[i] < i) continue;
        arc_of_face[i] = arc_of_face[pr[i]] = static_cast<int>(arcs.size());
        arcs.emplace_back(i, pr[i]);
    }

    // Kruskal spanning tree over the polyhedra
    std::vector<int> comp(P);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    std::vector<int> gen_of_arc(arcs.size(), -1);
    int gens = 0;
    for (size_t a = 0; a < arcs.size(); ++a) {
        int u = find(t.info(arcs[a].first).poly);
        int v = find(t.info(arcs[a].second).poly);
        if (u != v)
            comp[std::max(u, v)] = std::min(u, v);  // tree arc: generator stays identity
        else
            gen_of_arc[a] = gens++;
    }

    Presentation p;
    p.gens = gens;
    for (const auto& cycle : c.edge_cycles()) {
        std::vector<int> rel;
        for (auto [edge, face] : cycle) {
            (void)edge;
            int a = arc_of_face[face];
            int g = gen_of_arc[a];
            if (g < 0) continue;  // spanning tree arc
            rel.push_back(face < pr[face] ? g + 1 : -(g + 1));
        }
        p.relators.push_back(free_reduce(std::move(rel)));
    }
    p.validate();
    return p;
}

}  // namespace mom
