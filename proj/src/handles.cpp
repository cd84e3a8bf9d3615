#include "mom/handles.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mom {

void HandleStructure::validate() const {
    std::set<std::string> ones(one_handles.begin(), one_handles.end());
    if (ones.size() != one_handles.size())
        throw std::invalid_argument("duplicate 1-handle name");
    std::set<std::string> twos;
    for (const auto& t : two_handles) {
        if (!twos.insert(t.name).second)
            throw std::invalid_argument("duplicate 2-handle name: " + t.name);
        for (const auto& [id, mult] : t.incidences) {
            if (mult <= 0)
                throw std::invalid_argument("non-positive multiplicity in " + t.name);
            if (!ones.count(id))
                throw std::invalid_argument("unknown 1-handle '" + id + "' in " + t.name);
        }
    }
}

HandleStructure parse_handle_structure(const std::string& text) {
    HandleStructure h;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) continue;
        if (name.empty() || name.back() != ':')
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected '<2-handle>:'");
        name.pop_back();
        TwoHandle t{name, {}};
        std::map<std::string, int> mults;
        std::vector<std::string> order;
        std::string item;
        while (ls >> item) {
            std::string id = item;
            int mult = 1;
            if (auto star = item.find('*'); star != std::string::npos) {
                id = item.substr(0, star);
                try {
                    mult = std::stoi(item.substr(star + 1));
                } catch (const std::exception&) {
                    throw std::invalid_argument("line " + std::to_string(lineno) +
                                                ": bad multiplicity in '" + item + "'");
                }
            }
            if (id.empty() || mult <= 0)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": bad incidence '" + item + "'");
            if (!mults.count(id)) order.push_back(id);
            mults[id] += mult;
            if (seen.insert(id).second) h.one_handles.push_back(id);
        }
        for (const auto& id : order) t.incidences.emplace_back(id, mults[id]);
        h.two_handles.push_back(std::move(t));
    }
    h.validate();
    return h;
}

HandleStructure load_handle_structure(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_handle_structure(ss.str());
}

int one_handle_valence(const HandleStructure& h, const std::string& one_handle) {
    bool known = std::find(h.one_handles.begin(), h.one_handles.end(), one_handle) !=
                 h.one_handles.end();
    if (!known) throw std::invalid_argument("unknown 1-handle: " + one_handle);
    int v = 0;
    for (const auto& t : h.two_handles)
        for (const auto& [id, mult] : t.incidences)
            if (id == one_handle) v += mult;
    return v;
}

int two_handle_valence(const HandleStructure& h, const std::string& two_handle) {
    for (const auto& t : h.two_handles) {
        if (t.name != two_handle) continue;
        int v = 0;
        for (const auto& [id, mult] : t.incidences) v += mult;
        return v;
    }
    throw std::invalid_argument("unknown 2-handle: " + two_handle);
}

std::vector<int> one_handle_valences(const HandleStructure& h) {
    std::vector<int> v;
    for (const auto& id : h.one_handles) v.push_back(one_handle_valence(h, id));
    return v;
}

std::vector<int> two_handle_valences(const HandleStructure& h) {
    std::vector<int> v;
    for (const auto& t : h.two_handles) v.push_back(two_handle_valence(h, t.name));
    return v;
}

Classification classify(const HandleStructure& h) {
    h.validate();
    if (h.one_handles.size() != h.two_handles.size()) return {StructureKind::Invalid, 0};
    auto v1 = one_handle_valences(h);
    for (int v : v1)
        if (v < 2) return {StructureKind::Invalid, 0};
    auto v2 = two_handle_valences(h);
    int three = 0;
    for (int v : v2) {
        if (v == 3)
            ++three;
        else if (v != 2)
            return {StructureKind::Invalid, 0};
    }
    if (three == static_cast<int>(v2.size())) return {StructureKind::Mom, three};
    return {StructureKind::StrictlyWeakMom, three};
}

int rho1(const HandleStructure& h) {
    auto v1 = one_handle_valences(h);
    int r = 0;
    for (int v : v1) r += std::max(v - 2, 0);

    // equivalent count via the 2-handle side of the incidences
    int total2 = 0;
    for (const auto& t : h.two_handles) total2 += two_handle_valence(h, t.name);
    int ones = 0, zeros = 0;
    for (int v : v1) {
        if (v == 1) ++ones;
        if (v == 0) ++zeros;
    }
    int alt = total2 - 2 * static_cast<int>(v1.size()) + ones + 2 * zeros;
    if (alt != r) throw std::logic_error("rho1 identity violated");
    return r;
}

std::pair<int, int> complexity(const HandleStructure& h) {
    return {rho1(h), static_cast<int>(h.one_handles.size())};
}

std::vector<int> dual_pyramid_spec(const HandleStructure& h) {
    auto c = classify(h);
    if (c.kind != StructureKind::Mom)
        throw std::invalid_argument("dual_pyramid_spec requires a Mom structure");
    std::vector<int> sides;
    int end_sum = 0;
    for (int v : one_handle_valences(h)) {
        end_sum += 2 * v;  // two ends, each of vertex valence v+1
        if (v >= 3) sides.push_back(v);
    }
    if (end_sum != 6 * c.n) throw std::logic_error("end-valence sum != 6n");
    std::sort(sides.begin(), sides.end());
    return sides;
}

}  // namespace mom
