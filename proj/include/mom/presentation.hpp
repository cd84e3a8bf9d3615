#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mom/complex.hpp"

namespace mom {

// Finite presentation; relator letters are +g / -g for generator g in 1..gens.
struct Presentation {
    int gens = 0;
    std::vector<std::vector<int>> relators;

    void validate() const;  // throws on out-of-range letters
    int total_length() const;

    // "gens: n" then one relator per line, letters a..z with A..Z as inverses
    std::string to_text() const;
    static Presentation parse(const std::string& text);

    bool operator==(const Presentation&) const = default;
};

std::vector<int> free_reduce(std::vector<int> word);
std::vector<int> cyclic_reduce(std::vector<int> word);
// lex-smallest among all rotations of the word and of its inverse
std::vector<int> cyclic_canonical(const std::vector<int>& word);

struct SimplifyResult {
    Presentation pres;
    bool simplified = true;  // false when the length budget stopped elimination
};

// Deterministic Tietze simplification: free/cyclic reduction, empty and
// duplicate relator removal, elimination of a generator occurring exactly
// once in some relator. Total relator length never exceeds
// budget_factor * initial total length.
SimplifyResult tietze_simplify(Presentation p, int budget_factor = 10);

struct AbelianInvariants {
    int free_rank = 0;
    std::vector<long long> torsion;  // divisibility chain, each > 1
    std::string to_string() const;   // "0", "Z", "Z^2+Z/5", ...
    bool operator==(const AbelianInvariants&) const = default;
};

// Invariant factors (nonzero diagonal of the Smith normal form, divisibility
// ordered). The matrix may be ragged-checked rectangular.
std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> m);

AbelianInvariants abelianization(const Presentation& p);

// Detects relators of the form [x, y^n] = x y^n x^-1 y^-n up to cyclic
// rotation, word inversion, swapping the generators, and inverting either
// generator. Requires a two-generator, one-relator presentation.
std::optional<int> recognize_commutator_power(const Presentation& p);

// Presentation of the fundamental group from the dual spine: one node per
// polyhedron, one arc per face pair, generators the arcs outside a spanning
// tree (lowest-face-index arcs first), one relator per edge class reading the
// crossings around the edge (+ when crossing from the lower-numbered face).
Presentation spine_presentation(const GluedComplex& c);

}  // namespace mom
