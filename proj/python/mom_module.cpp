#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mom/complex.hpp"
#include "mom/descriptions.hpp"
#include "mom/handles.hpp"
#include "mom/presentation.hpp"
#include "mom/survey.hpp"
#include "mom/tetrahedra.hpp"

namespace py = pybind11;

namespace {

py::dict analyze(const std::string& text) {
    mom::GluingDescription d = mom::parse_description(text);
    mom::GluedComplex c(d.spec, d.pairing);
    mom::FilterOutcome fo = mom::filter_complex(c);
    py::dict r;
    r["description"] = mom::emit_description(d);
    r["spec"] = d.spec.to_string();
    r["faces"] = c.table().face_count();
    r["passed"] = fo.passed;
    r["filter"] = fo.describe();
    r["boundary"] = c.vertex_class_count();
    r["edge_classes"] = c.edge_class_count();
    std::vector<int> chi;
    for (const auto& l : c.links()) chi.push_back(l.chi);
    r["link_chi"] = chi;
    mom::SimplifyResult sr = mom::tietze_simplify(mom::spine_presentation(c));
    r["h1"] = mom::abelianization(sr.pres).to_string();
    r["presentation"] = sr.pres.to_text();
    auto cp = mom::recognize_commutator_power(sr.pres);
    if (cp)
        r["commpow"] = *cp;
    else
        r["commpow"] = py::none();
    r["tets"] = mom::subdivide_to_tetrahedra(c).tri.tet_count;
    return r;
}

std::vector<std::string> enumerate_descriptions(std::vector<int> sides, const std::string& mode,
                                                bool survivors_only) {
    mom::DipyramidSpec spec = mom::DipyramidSpec::of(std::move(sides));
    auto group = mom::symmetry_group(spec, mom::parse_symmetry_mode(mode));
    std::vector<std::string> out;
    mom::enumerate_pairings(spec, group, [&](const mom::Pairing& p) {
        if (!survivors_only || mom::filter_pairing(spec, p).passed)
            out.push_back(mom::emit_description({spec, p}));
        return true;
    });
    return out;
}

py::dict classify_handles(const std::string& text) {
    mom::HandleStructure h = mom::parse_handle_structure(text);
    mom::Classification c = mom::classify(h);
    py::dict r;
    switch (c.kind) {
        case mom::StructureKind::Mom: r["kind"] = "mom"; break;
        case mom::StructureKind::StrictlyWeakMom: r["kind"] = "strictly-weak"; break;
        case mom::StructureKind::Invalid: r["kind"] = "invalid"; break;
    }
    r["n"] = c.n;
    r["rho1"] = mom::rho1(h);
    auto cx = mom::complexity(h);
    r["complexity"] = py::make_tuple(cx.first, cx.second);
    r["one_handle_valences"] = mom::one_handle_valences(h);
    r["two_handle_valences"] = mom::two_handle_valences(h);
    if (c.kind == mom::StructureKind::Mom) {
        auto sides = mom::dual_pyramid_spec(h);
        r["dual_spec"] = mom::DipyramidSpec::of(sides).to_string();
    }
    return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "census of candidate hyperbolic Mom-n manifolds";

    py::register_exception<mom::ValidationError>(m, "MomValidationError", PyExc_ValueError);

    m.def("sets_for_mom", [](int n) {
        std::vector<std::string> out;
        for (const auto& s : mom::pyramid_sets_for_mom(n)) out.push_back(s.to_string());
        return out;
    }, py::arg("n"), "dipyramid multisets for Mom-n, ascending");

    m.def("canonical_description", [](const std::string& text) {
        return mom::emit_description(mom::parse_description(text));
    }, py::arg("text"), "parse a gluing description and re-emit it canonically");

    m.def("analyze", &analyze, py::arg("text"),
          "filter one gluing description and report its invariants");

    m.def("enumerate_descriptions", &enumerate_descriptions, py::arg("sides"),
          py::arg("mode") = "rotational", py::arg("survivors_only") = false,
          "canonical gluing descriptions of a spec, in lexicographic order");

    m.def("triangulation_text", [](const std::string& text) {
        mom::GluingDescription d = mom::parse_description(text);
        mom::GluedComplex c(d.spec, d.pairing);
        return mom::emit_triangulation(mom::subdivide_to_tetrahedra(c).tri);
    }, py::arg("text"), "tetrahedral subdivision in tri format");

    m.def("classify_handles", &classify_handles, py::arg("text"),
          "classify a handle structure from its fixture text");
}
