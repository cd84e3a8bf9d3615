#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mom/pairings.hpp"
#include "mom/polyhedra.hpp"

namespace mom {

// A survey enumerates every canonical face pairing for every pyramid set of a
// given n, filters each glued complex, and appends one manifest record per
// survivor.  The manifest is written strictly in order, so the bytes produced
// are independent of worker count, and a checkpoint taken at any shard
// boundary can resume the run to a byte-identical file.

std::string to_string(SymmetryMode mode);
SymmetryMode parse_symmetry_mode(const std::string& name);

struct SurveyOptions {
    SymmetryMode mode = SymmetryMode::Rotational;
    int workers = 1;
    bool resume = false;
    std::string out_path;
    std::string only_spec;           // restrict to one pyramid spec, e.g. "3,3,4"
    uint64_t max_nodes = 0;          // stop at the next shard boundary past this many
                                     // search nodes (0 = unlimited)
    uint64_t checkpoint_every = 64;  // shards committed between checkpoint writes
};

struct SpecStats {
    DipyramidSpec spec;
    uint64_t candidates = 0;  // canonical pairings enumerated
    uint64_t survivors = 0;   // records written
    uint64_t nodes = 0;       // search tree nodes visited
    std::map<int, uint64_t> boundary_hist;
};

struct SurveySummary {
    int n = 0;
    SymmetryMode mode = SymmetryMode::Rotational;
    bool complete = false;
    std::vector<SpecStats> specs;
    uint64_t total_candidates() const;
    uint64_t total_survivors() const;
    uint64_t total_nodes() const;
};

SurveySummary run_survey(int n, const SurveyOptions& opt);

// one manifest record per surviving pairing
std::string survivor_record(const DipyramidSpec& spec, const Pairing& pairing);

struct ManifestStats {
    int n = -1;
    std::string mode;
    bool complete = false;
    uint64_t candidates = 0;
    uint64_t survivors = 0;
    std::map<std::string, std::pair<uint64_t, uint64_t>> per_spec;  // sides -> (cand, surv)
    std::map<int, uint64_t> boundary_hist;
    std::map<std::string, uint64_t> h1_hist;
    std::map<int, uint64_t> commpow_hist;  // -1 counts records with no match
};

ManifestStats read_manifest_stats(const std::string& path);

}  // namespace mom
