#pragma once

#include <stdexcept>
#include <string>

#include "mom/pairings.hpp"
#include "mom/polyhedra.hpp"

namespace mom {

// semantic rejection of well-formed input (bad counts, not an involution, ...)
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// syntax error, with the byte offset of the offending character
struct ParseError : ValidationError {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : ValidationError(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct IOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GluingDescription {
    DipyramidSpec spec;
    Pairing pairing;
    bool operator==(const GluingDescription&) const = default;
};

// Text form "(3,3,4 ; 3,6,8,0,...)": side counts, then the face images of the
// pairing. Parsing is whitespace-tolerant; emission is canonical (single
// spaces around ';' only), and canonical text round-trips byte-exactly.
GluingDescription parse_description(const std::string& text);
std::string emit_description(const GluingDescription& d);

}  // namespace mom
