#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mom {

// A handle structure on T^2 x I: named 1-handles attached to T^2 x 1, plus
// 2-handles whose attaching curves run over the 1-handles with multiplicity.
// 0-handles are not representable by construction.
struct TwoHandle {
    std::string name;
    // (1-handle name, multiplicity >= 1); repeated names are accumulated
    std::vector<std::pair<std::string, int>> incidences;
};

struct HandleStructure {
    std::vector<std::string> one_handles;  // ordered, unique
    std::vector<TwoHandle> two_handles;

    // throws std::invalid_argument on duplicate names, unknown references,
    // or non-positive multiplicities
    void validate() const;
};

// Fixture format: one line per 2-handle, "name: id*mult id*mult ...".
// "*mult" defaults to 1. Blank lines and lines starting with '#' are skipped.
// 1-handles are collected in order of first appearance.
HandleStructure parse_handle_structure(const std::string& text);
HandleStructure load_handle_structure(const std::string& path);

// times the 2-handles run over this 1-handle, counted with multiplicity
int one_handle_valence(const HandleStructure& h, const std::string& one_handle);
// total multiplicity of the 2-handle's incidences
int two_handle_valence(const HandleStructure& h, const std::string& two_handle);

std::vector<int> one_handle_valences(const HandleStructure& h);
std::vector<int> two_handle_valences(const HandleStructure& h);

enum class StructureKind { Mom, StrictlyWeakMom, Invalid };

struct Classification {
    StructureKind kind;
    int n;  // for Mom: handle count; for weak: number of valence-3 2-handles
    bool operator==(const Classification&) const = default;
};

// Mom-n: n 1-handles of valence >= 2, n 2-handles all of valence 3.
// Weak Mom-n additionally allows valence-2 2-handles (with exactly n of
// valence 3 and equal 1-/2-handle counts); weak but not Mom is "strictly weak".
Classification classify(const HandleStructure& h);

// sum over 1-handles of max(valence - 2, 0); asserts the equivalent form
// sum(2-handle valences) - 2*|1-handles| + #valence-1 + 2*#valence-0
int rho1(const HandleStructure& h);

// (rho1, number of 1-handles), ordered lexicographically
std::pair<int, int> complexity(const HandleStructure& h);

// Multiset of 1-handle valences >= 3, sorted ascending: the side counts of the
// dipyramids dual to the 1-handles (valence-2 handles collapse and are dropped).
// Requires classify(h) == Mom.
std::vector<int> dual_pyramid_spec(const HandleStructure& h);

}  // namespace mom
