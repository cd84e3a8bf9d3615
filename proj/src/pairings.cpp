#include "mom/pairings.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mom {

bool is_valid_pairing(int face_count, const Pairing& p) {
    if (static_cast<int>(p.size()) != face_count) return false;
    for (int i = 0; i < face_count; ++i) {
        int j = p[i];
        if (j < 0 || j >= face_count || j == i || p[j] != i) return false;
    }
    return true;
}

Pairing conjugate_pairing(const SymmetryElement& g, const Pairing& p) {
    Pairing q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[g.face_perm[i]] = g.face_perm[p[i]];
    return q;
}

bool is_canonical(const Pairing& p, const std::vector<SymmetryElement>& group) {
    for (const auto& g : group)
        if (conjugate_pairing(g, p) < p) return false;
    return true;
}

Pairing canonical_form(const Pairing& p, const std::vector<SymmetryElement>& group) {
    Pairing best = p;
    for (const auto& g : group) best = std::min(best, conjugate_pairing(g, p));
    return best;
}

std::vector<Pairing> orbit_of(const Pairing& p, const std::vector<SymmetryElement>& group) {
    std::set<Pairing> orbit;
    for (const auto& g : group) orbit.insert(conjugate_pairing(g, p));
    if (orbit.empty()) orbit.insert(p);
    return {orbit.begin(), orbit.end()};
}

namespace {

// Group elements flattened for the search inner loop. The identity is
// dropped: it can never witness a smaller conjugate.
struct GroupTable {
    int F = 0;
    int count = 0;
    std::vector<uint8_t> perm;  // count x F
    std::vector<uint8_t> inv;   // count x F

    GroupTable(int face_count, const std::vector<SymmetryElement>& group) : F(face_count) {
        for (const auto& g : group) {
            if (static_cast<int>(g.face_perm.size()) != F)
                throw std::invalid_argument("group element has wrong face count");
            bool ident = true;
            for (int i = 0; i < F; ++i)
                if (g.face_perm[i] != i) { ident = false; break; }
            if (ident) continue;
            perm.insert(perm.end(), g.face_perm.begin(), g.face_perm.end());
            auto gi = inverse(g);
            inv.insert(inv.end(), gi.face_perm.begin(), gi.face_perm.end());
            ++count;
        }
    }
};

struct LiveEntry {
    int32_t g;         // row in the GroupTable
    int32_t frontier;  // first word position not yet known-equal
};

class Enumerator {
  public:
    Enumerator(const DipyramidSpec& spec, const std::vector<SymmetryElement>& group,
               const PairingSink& sink)
        : F_(spec.face_count()), gt_(F_, group), sink_(sink) {
        p_.assign(F_, -1);
        live_.resize(F_ / 2 + 1);
        live_[0].reserve(gt_.count);
        for (int g = 0; g < gt_.count; ++g) live_[0].push_back({g, 0});
    }

    // Applies the decisions of a shard prefix. Returns false if the prefix
    // subtree is pruned outright (possible only for foreign prefixes).
    bool apply_prefix(const ShardPrefix& prefix) {
        for (uint8_t b : prefix) {
            int a = smallest_unpaired();
            if (a < 0 || b <= a || b >= F_ || p_[b] >= 0)
                throw std::invalid_argument("invalid shard prefix");
            p_[a] = static_cast<int8_t>(b);
            p_[b] = static_cast<int8_t>(a);
            ++stats_.nodes;
            if (!advance(depth_)) return false;
            ++depth_;
        }
        return true;
    }

    void run() { dfs(depth_); }

    // Explores only to the given depth, collecting surviving prefixes.
    void collect_prefixes(int depth, std::vector<ShardPrefix>& out) {
        collect_depth_ = depth;
        collect_out_ = &out;
        dfs(depth_);
    }

    const EnumStats& stats() const { return stats_; }

  private:
    int smallest_unpaired() const {
        for (int i = 0; i < F_; ++i)
            if (p_[i] < 0) return i;
        return -1;
    }

    // Advance live entries from level `depth` into level `depth+1` under the
    // current partial pairing. Returns false when some element witnesses a
    // lex-smaller conjugate for every completion (prune).
    bool advance(int depth) {
        auto& out = live_[depth + 1];
        out.clear();
        const uint8_t* perms = gt_.perm.data();
        const uint8_t* invs = gt_.inv.data();
        for (LiveEntry e : live_[depth]) {
            const uint8_t* gp = perms + static_cast<size_t>(e.g) * F_;
            const uint8_t* gi = invs + static_cast<size_t>(e.g) * F_;
            for (;;) {
                if (e.frontier == F_) break;  // full automorphism: never a witness
                int pf = p_[e.frontier];
                if (pf < 0) { out.push_back(e); break; }  // blocked on p
                int pre = p_[gi[e.frontier]];
                if (pre < 0) { out.push_back(e); break; }  // blocked on conjugate
                int qf = gp[pre];
                if (qf < pf) return false;  // witness: conjugate is smaller
                if (qf > pf) break;         // dead: conjugate is larger forever
                ++e.frontier;
            }
        }
        return true;
    }

    bool dfs(int depth) {
        if (collect_out_ && depth == collect_depth_) {
            // record the partner chosen at each decision, in decision order
            ShardPrefix ordered;
            std::vector<bool> used(F_, false);
            for (int step = 0; step < depth; ++step) {
                int a = -1;
                for (int i = 0; i < F_; ++i)
                    if (!used[i]) { a = i; break; }
                ordered.push_back(static_cast<uint8_t>(p_[a]));
                used[a] = used[p_[a]] = true;
            }
            collect_out_->push_back(std::move(ordered));
            return true;
        }
        int a = smallest_unpaired();
        if (a < 0) {
            ++stats_.emitted;
            Pairing out(p_.begin(), p_.end());
            if (!sink_(out)) {
                stats_.completed = false;
                return false;
            }
            return true;
        }
        for (int b = a + 1; b < F_; ++b) {
            if (p_[b] >= 0) continue;
            p_[a] = static_cast<int8_t>(b);
            p_[b] = static_cast<int8_t>(a);
            ++stats_.nodes;
            bool keep_going = true;
            if (advance(depth)) keep_going = dfs(depth + 1);
            p_[a] = -1;
            p_[b] = -1;
            if (!keep_going) return false;
        }
        return true;
    }

    int F_;
    GroupTable gt_;
    const PairingSink& sink_;
    std::vector<int8_t> p_;
    std::vector<std::vector<LiveEntry>> live_;
    int depth_ = 0;
    EnumStats stats_;
    int collect_depth_ = -1;
    std::vector<ShardPrefix>* collect_out_ = nullptr;
};

}  // namespace

EnumStats enumerate_pairings(const DipyramidSpec& spec,
                             const std::vector<SymmetryElement>& group,
                             const PairingSink& sink) {
    Enumerator e(spec, group, sink);
    e.run();
    return e.stats();
}

std::vector<ShardPrefix> shard_prefixes(const DipyramidSpec& spec,
                                        const std::vector<SymmetryElement>& group,
                                        int depth) {
    if (depth < 1 || depth > spec.face_count() / 2)
        throw std::invalid_argument("bad shard depth");
    std::vector<ShardPrefix> out;
    PairingSink nop = [](const Pairing&) { return true; };
    Enumerator e(spec, group, nop);
    e.collect_prefixes(depth, out);
    return out;
}

EnumStats enumerate_shard(const DipyramidSpec& spec,
                          const std::vector<SymmetryElement>& group,
                          const ShardPrefix& prefix, const PairingSink& sink) {
    Enumerator e(spec, group, sink);
    if (e.apply_prefix(prefix)) e.run();
    return e.stats();
}

}  // namespace mom
