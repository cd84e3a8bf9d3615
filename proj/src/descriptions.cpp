#include "mom/descriptions.hpp"

#include <sstream>

namespace mom {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' (" + what + ")", i);
    }
    int number(const char* what) {
        skip_ws();
        size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == start) throw ParseError(std::string("expected ") + what, i);
        return std::stoi(s.substr(start, i - start));
    }
};

}  // namespace

GluingDescription parse_description(const std::string& text) {
    Cursor c{text};
    c.expect('(', "start of description");
    std::vector<int> sides;
    sides.push_back(c.number("side count"));
    while (c.eat(',')) sides.push_back(c.number("side count"));
    c.expect(';', "separator between sides and pairing");
    std::vector<int> imgs;
    imgs.push_back(c.number("face image"));
    while (c.eat(',')) imgs.push_back(c.number("face image"));
    c.expect(')', "end of description");
    c.skip_ws();
    if (c.i != text.size()) throw ParseError("trailing characters", c.i);

    for (int k : sides)
        if (k < 3) throw ValidationError("side count " + std::to_string(k) + " below 3");
    DipyramidSpec spec = DipyramidSpec::of(sides);
    if (spec.sides != sides)
        throw ValidationError("side counts must be listed in ascending order");
    int F = spec.face_count();
    if (static_cast<int>(imgs.size()) != F)
        throw ValidationError("pairing lists " + std::to_string(imgs.size()) +
                              " faces, spec has " + std::to_string(F));
    Pairing p(F);
    for (int i = 0; i < F; ++i) {
        if (imgs[i] < 0 || imgs[i] >= F)
            throw ValidationError("face image " + std::to_string(imgs[i]) + " out of range");
        p[i] = static_cast<uint8_t>(imgs[i]);
    }
    for (int i = 0; i < F; ++i) {
        if (p[i] == i) throw ValidationError("face " + std::to_string(i) + " glued to itself");
        if (p[p[i]] != i)
            throw ValidationError("pairing is not an involution at face " + std::to_string(i));
    }
    return {spec, p};
}

std::string emit_description(const GluingDescription& d) {
    std::ostringstream out;
    out << '(' << d.spec.to_string() << " ; ";
    for (size_t i = 0; i < d.pairing.size(); ++i) {
        if (i) out << ',';
        out << static_cast<int>(d.pairing[i]);
    }
    out << ')';
    return out.str();
}

}  // namespace mom
