#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mom/complex.hpp"
#include "mom/descriptions.hpp"
#include "mom/presentation.hpp"
#include "mom/survey.hpp"
#include "mom/tetrahedra.hpp"

namespace {

int cmd_sets(int n) {
    for (const auto& s : mom::pyramid_sets_for_mom(n)) std::cout << s.to_string() << "\n";
    return 0;
}

int cmd_survey(int n, const mom::SurveyOptions& opt) {
    mom::SurveySummary sum = mom::run_survey(n, opt);
    for (const auto& s : sum.specs)
        std::cout << "spec " << s.spec.to_string() << ": candidates=" << s.candidates
                  << " survivors=" << s.survivors << " nodes=" << s.nodes << "\n";
    std::cout << "total: candidates=" << sum.total_candidates()
              << " survivors=" << sum.total_survivors() << " nodes=" << sum.total_nodes() << "\n";
    std::cout << "complete: " << (sum.complete ? "yes" : "no") << "\n";
    if (!sum.complete) {
        std::cout << "checkpoint: " << opt.out_path << ".ckpt\n";
        return 3;
    }
    return 0;
}

int cmd_analyze(const std::string& text) {
    mom::GluingDescription d = mom::parse_description(text);
    mom::GluedComplex c(d.spec, d.pairing);
    mom::FilterOutcome fo = mom::filter_complex(c);
    std::cout << "description: " << mom::emit_description(d) << "\n";
    std::cout << "spec: " << d.spec.to_string() << "\n";
    std::cout << "faces: " << c.table().face_count() << "\n";
    std::cout << "filter: " << fo.describe() << "\n";
    std::cout << "boundary: " << c.vertex_class_count() << "\n";
    std::cout << "edge classes: " << c.edge_class_count() << "\n";
    std::cout << "links:";
    for (const auto& l : c.links()) std::cout << " chi=" << l.chi;
    std::cout << "\n";
    mom::SimplifyResult sr = mom::tietze_simplify(mom::spine_presentation(c));
    mom::AbelianInvariants h1 = mom::abelianization(sr.pres);
    std::cout << "h1: " << h1.to_string() << "\n";
    std::cout << "pres: gens=" << sr.pres.gens << " relators=" << sr.pres.relators.size()
              << " length=" << sr.pres.total_length()
              << " simplified=" << (sr.simplified ? "yes" : "no") << "\n";
    std::cout << "presentation:\n" << sr.pres.to_text();
    auto cp = mom::recognize_commutator_power(sr.pres);
    std::cout << "commpow: " << (cp ? std::to_string(*cp) : "-") << "\n";
    std::cout << "tets: " << mom::subdivide_to_tetrahedra(c).tri.tet_count << "\n";
    return 0;
}

int cmd_parse(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw mom::IOError("cannot open " + path);
        in = &file;
    }
    std::string line;
    int lineno = 0, count = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == '#') continue;
        try {
            mom::parse_description(line);
        } catch (const mom::ValidationError& e) {
            std::cerr << (path == "-" ? "stdin" : path) << ":" << lineno << ": " << e.what()
                      << "\n";
            return 1;
        }
        ++count;
    }
    std::cout << "ok: " << count << " descriptions\n";
    return 0;
}

int cmd_export_tri(const std::string& text, const std::string& out_path) {
    mom::GluingDescription d = mom::parse_description(text);
    mom::GluedComplex c(d.spec, d.pairing);
    mom::SubdividedComplex sub = mom::subdivide_to_tetrahedra(c);
    std::ofstream out(out_path, std::ios::trunc | std::ios::binary);
    if (!out) throw mom::IOError("cannot write " + out_path);
    out << mom::emit_triangulation(sub.tri);
    out.flush();
    if (!out) throw mom::IOError("write failed: " + out_path);
    std::cout << "wrote " << out_path << " (" << sub.tri.tet_count << " tets)\n";
    return 0;
}

int cmd_stats(const std::string& path) {
    mom::ManifestStats ms = mom::read_manifest_stats(path);
    std::cout << "n: " << ms.n << " mode: " << ms.mode
              << " complete: " << (ms.complete ? "yes" : "no") << "\n";
    for (const auto& [sides, cs] : ms.per_spec)
        std::cout << "spec " << sides << ": candidates=" << cs.first
                  << " survivors=" << cs.second << "\n";
    std::cout << "candidates: " << ms.candidates << "\n";
    std::cout << "survivors: " << ms.survivors << "\n";
    std::cout << "boundary:";
    for (const auto& [k, v] : ms.boundary_hist) std::cout << " " << k << ":" << v;
    std::cout << "\nh1:";
    for (const auto& [k, v] : ms.h1_hist) std::cout << " " << k << ":" << v;
    std::cout << "\ncommpow:";
    for (const auto& [k, v] : ms.commpow_hist) {
        if (k < 0)
            std::cout << " -:" << v;
        else
            std::cout << " " << k << ":" << v;
    }
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"census of candidate Mom-n manifolds"};
    app.require_subcommand(1);

    int n = 0;
    auto* sets = app.add_subcommand("sets", "list the dipyramid multisets for a given n");
    sets->add_option("n", n, "Mom number (2..4)")->required();

    mom::SurveyOptions opt;
    std::string mode_name = "rotational";
    auto* survey = app.add_subcommand("survey", "enumerate and filter all canonical pairings");
    survey->add_option("n", n, "Mom number (2..4)")->required();
    survey->add_option("--out", opt.out_path, "manifest output path")->required();
    survey->add_option("--mode", mode_name, "symmetry mode: rotational or full")
        ->check(CLI::IsMember({"rotational", "full"}));
    survey->add_option("--workers", opt.workers, "worker thread count")
        ->check(CLI::PositiveNumber);
    survey->add_flag("--resume", opt.resume, "resume from the manifest's checkpoint");
    survey->add_option("--only-spec", opt.only_spec, "restrict to one spec, e.g. 3,3,4");
    survey->add_option("--max-nodes", opt.max_nodes,
                       "stop at the next shard boundary past this many search nodes");
    survey->add_option("--checkpoint-every", opt.checkpoint_every,
                       "shards between checkpoint writes");

    std::string desc_text;
    auto* analyze = app.add_subcommand("analyze", "filter and describe one gluing description");
    analyze->add_option("description", desc_text, "gluing description, e.g. \"(3 ; 3,4,5,0,1,2)\"")
        ->required();

    std::string parse_path;
    auto* parse = app.add_subcommand("parse", "validate a file of gluing descriptions");
    parse->add_option("file", parse_path, "description file, or - for stdin")->required();

    std::string tri_desc, tri_out;
    auto* export_tri = app.add_subcommand("export-tri", "write the tetrahedral subdivision");
    export_tri->add_option("description", tri_desc, "gluing description")->required();
    export_tri->add_option("--out", tri_out, "triangulation output path")->required();

    std::string stats_path;
    auto* stats = app.add_subcommand("stats", "summarize a survey manifest");
    stats->add_option("manifest", stats_path, "manifest path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (sets->parsed()) return cmd_sets(n);
        if (survey->parsed()) {
            opt.mode = mom::parse_symmetry_mode(mode_name);
            return cmd_survey(n, opt);
        }
        if (analyze->parsed()) return cmd_analyze(desc_text);
        if (parse->parsed()) return cmd_parse(parse_path);
        if (export_tri->parsed()) return cmd_export_tri(tri_desc, tri_out);
        if (stats->parsed()) return cmd_stats(stats_path);
    } catch (const mom::IOError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mom::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
