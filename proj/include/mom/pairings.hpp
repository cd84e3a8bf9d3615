#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mom/polyhedra.hpp"

namespace mom {

// A face pairing: fixed-point-free involution on the faces of a spec,
// stored as the image array (p[i] = partner of face i).
using Pairing = std::vector<uint8_t>;

bool is_valid_pairing(int face_count, const Pairing& p);

// g p g^-1 as a pairing
Pairing conjugate_pairing(const SymmetryElement& g, const Pairing& p);

// lex-minimal among all conjugates (the orbit representative)
bool is_canonical(const Pairing& p, const std::vector<SymmetryElement>& group);
Pairing canonical_form(const Pairing& p, const std::vector<SymmetryElement>& group);
std::vector<Pairing> orbit_of(const Pairing& p, const std::vector<SymmetryElement>& group);

struct EnumStats {
    uint64_t nodes = 0;    // decision-tree nodes visited
    uint64_t emitted = 0;  // canonical pairings passed to the sink
    bool completed = true; // false when the sink aborted the run
};

// return false to abort the enumeration
using PairingSink = std::function<bool(const Pairing&)>;

// Emits exactly the canonical pairings, in increasing lexicographic order.
// Decision order: repeatedly pair the smallest unpaired face with each larger
// unpaired face; a subtree is pruned when some group element already
// witnesses that every completion has a lex-smaller conjugate.
EnumStats enumerate_pairings(const DipyramidSpec& spec,
                             const std::vector<SymmetryElement>& group,
                             const PairingSink& sink);

// The search tree is sharded by the first `depth` decisions for parallel and
// resumable surveys. A prefix records the partner chosen at each decision.
using ShardPrefix = std::vector<uint8_t>;

std::vector<ShardPrefix> shard_prefixes(const DipyramidSpec& spec,
                                        const std::vector<SymmetryElement>& group,
                                        int depth);

EnumStats enumerate_shard(const DipyramidSpec& spec,
                          const std::vector<SymmetryElement>& group,
                          const ShardPrefix& prefix, const PairingSink& sink);

}  // namespace mom
