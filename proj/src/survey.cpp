#include "mom/survey.hpp"

#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "mom/complex.hpp"
#include "mom/descriptions.hpp"
#include "mom/presentation.hpp"

namespace mom {

std::string to_string(SymmetryMode mode) {
    return mode == SymmetryMode::Rotational ? "rotational" : "full";
}

SymmetryMode parse_symmetry_mode(const std::string& name) {
    if (name == "rotational") return SymmetryMode::Rotational;
    if (name == "full") return SymmetryMode::Full;
    throw ValidationError("unknown symmetry mode: " + name);
}

uint64_t SurveySummary::total_candidates() const {
    uint64_t t = 0;
    for (const auto& s : specs) t += s.candidates;
    return t;
}

uint64_t SurveySummary::total_survivors() const {
    uint64_t t = 0;
    for (const auto& s : specs) t += s.survivors;
    return t;
}

uint64_t SurveySummary::total_nodes() const {
    uint64_t t = 0;
    for (const auto& s : specs) t += s.nodes;
    return t;
}

std::string survivor_record(const DipyramidSpec& spec, const Pairing& pairing) {
    GluedComplex c(spec, pairing);
    FilterOutcome fo = filter_complex(c);
    if (!fo.passed) throw std::logic_error("survivor_record on a rejected pairing");
    SimplifyResult sr = tietze_simplify(spine_presentation(c));
    AbelianInvariants h1 = abelianization(sr.pres);
    std::optional<int> cp = recognize_commutator_power(sr.pres);
    std::ostringstream out;
    out << emit_description({spec, pairing}) << "\tboundary=" << fo.boundary_count
        << "\tedges=" << fo.edge_class_count << "\th1=" << h1.to_string() << "\tpres="
        << sr.pres.gens << "/" << sr.pres.relators.size() << "/" << sr.pres.total_length()
        << "\tcommpow=" << (cp ? std::to_string(*cp) : "-") << "\n";
    return out.str();
}

namespace {

struct ShardOutcome {
    std::string records;
    uint64_t candidates = 0;
    uint64_t survivors = 0;
    uint64_t nodes = 0;
    std::map<int, uint64_t> boundary_hist;
};

ShardOutcome process_shard(const DipyramidSpec& spec, const std::vector<SymmetryElement>& group,
                           const ShardPrefix& prefix) {
    ShardOutcome r;
    EnumStats st = enumerate_shard(spec, group, prefix, [&](const Pairing& p) {
        r.candidates++;
        FilterOutcome fo = filter_pairing(spec, p);
        if (fo.passed) {
            r.survivors++;
            r.boundary_hist[fo.boundary_count]++;
            r.records += survivor_record(spec, p);
        }
        return true;
    });
    r.nodes = st.nodes;
    return r;
}

std::string hist_text(const std::map<int, uint64_t>& h) {
    if (h.empty()) return "-";
    std::string s;
    for (const auto& [k, v] : h) {
        if (!s.empty()) s += ';';
        s += std::to_string(k) + ":" + std::to_string(v);
    }
    return s;
}

std::map<int, uint64_t> parse_hist(const std::string& s) {
    std::map<int, uint64_t> h;
    if (s == "-") return h;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ';')) {
        size_t colon = item.find(':');
        if (colon == std::string::npos) throw ValidationError("bad histogram: " + s);
        h[std::stoi(item.substr(0, colon))] = std::stoull(item.substr(colon + 1));
    }
    return h;
}

struct Checkpoint {
    int n = 0;
    std::string mode;
    std::string only;
    size_t spec_index = 0;
    size_t shard_index = 0;
    uint64_t manifest_bytes = 0;
    std::vector<SpecStats> stats;
};

void save_checkpoint(const std::string& path, const Checkpoint& ck) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
        if (!out) throw IOError("cannot write checkpoint: " + tmp);
        out << "census-checkpoint v1\n";
        out << "n " << ck.n << "\n";
        out << "mode " << ck.mode << "\n";
        out << "only " << (ck.only.empty() ? "-" : ck.only) << "\n";
        out << "spec_index " << ck.spec_index << "\n";
        out << "shard_index " << ck.shard_index << "\n";
        out << "manifest_bytes " << ck.manifest_bytes << "\n";
        out << "specs " << ck.stats.size() << "\n";
        for (size_t i = 0; i < ck.stats.size(); ++i) {
            const SpecStats& s = ck.stats[i];
            out << "spec " << i << " sides=" << s.spec.to_string() << " candidates="
                << s.candidates << " survivors=" << s.survivors << " nodes=" << s.nodes
                << " boundary=" << hist_text(s.boundary_hist) << "\n";
        }
        out << "end\n";
        out.flush();
        if (!out) throw IOError("cannot write checkpoint: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

// returns the value of "key value" or throws
std::string expect_kv(std::istream& in, const std::string& key) {
    std::string line;
    if (!std::getline(in, line) || line.rfind(key + " ", 0) != 0)
        throw ValidationError("checkpoint missing '" + key + "' line");
    return line.substr(key.size() + 1);
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open checkpoint: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "census-checkpoint v1")
        throw ValidationError("not a census checkpoint: " + path);
    Checkpoint ck;
    ck.n = std::stoi(expect_kv(in, "n"));
    ck.mode = expect_kv(in, "mode");
    ck.only = expect_kv(in, "only");
    if (ck.only == "-") ck.only.clear();
    ck.spec_index = std::stoull(expect_kv(in, "spec_index"));
    ck.shard_index = std::stoull(expect_kv(in, "shard_index"));
    ck.manifest_bytes = std::stoull(expect_kv(in, "manifest_bytes"));
    size_t nspecs = std::stoull(expect_kv(in, "specs"));
    for (size_t i = 0; i < nspecs; ++i) {
        if (!std::getline(in, line)) throw ValidationError("truncated checkpoint");
        std::istringstream ls(line);
        std::string kw, sides, cand, surv, nodes, bnd;
        size_t idx;
        if (!(ls >> kw >> idx >> sides >> cand >> surv >> nodes >> bnd) || kw != "spec" ||
            idx != i || sides.rfind("sides=", 0) != 0 || cand.rfind("candidates=", 0) != 0 ||
            surv.rfind("survivors=", 0) != 0 || nodes.rfind("nodes=", 0) != 0 ||
            bnd.rfind("boundary=", 0) != 0)
            throw ValidationError("bad checkpoint spec line: " + line);
        SpecStats st;
        std::vector<int> sv;
        std::istringstream ss(sides.substr(6));
        std::string tok;
        while (std::getline(ss, tok, ',')) sv.push_back(std::stoi(tok));
        st.spec = DipyramidSpec::of(sv);
        st.candidates = std::stoull(cand.substr(11));
        st.survivors = std::stoull(surv.substr(10));
        st.nodes = std::stoull(nodes.substr(6));
        st.boundary_hist = parse_hist(bnd.substr(9));
        ck.stats.push_back(std::move(st));
    }
    if (!std::getline(in, line) || line != "end") throw ValidationError("truncated checkpoint");
    return ck;
}

DipyramidSpec parse_spec_string(const std::string& s) {
    std::vector<int> sides;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            sides.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ValidationError("bad side count in spec: " + s);
        }
    }
    return DipyramidSpec::of(sides);
}

}  // namespace

SurveySummary run_survey(int n, const SurveyOptions& opt) {
    if (opt.out_path.empty()) throw ValidationError("survey needs an output path");
    std::vector<DipyramidSpec> specs = pyramid_sets_for_mom(n);
    if (!opt.only_spec.empty()) {
        DipyramidSpec want = parse_spec_string(opt.only_spec);
        std::vector<DipyramidSpec> kept;
        for (const auto& s : specs)
            if (s == want) kept.push_back(s);
        if (kept.empty())
            throw ValidationError("spec " + want.to_string() + " is not a pyramid set for n=" +
                                  std::to_string(n));
        specs = std::move(kept);
    }

    SurveySummary sum;
    sum.n = n;
    sum.mode = opt.mode;
    for (const auto& s : specs) {
        SpecStats st;
        st.spec = s;
        sum.specs.push_back(std::move(st));
    }

    const std::string ckpt_path = opt.out_path + ".ckpt";
    size_t si = 0, sj = 0;
    std::ofstream out;

    if (opt.resume) {
        Checkpoint ck = load_checkpoint(ckpt_path);
        if (ck.n != n || ck.mode != to_string(opt.mode) || ck.only != opt.only_spec)
            throw ValidationError("checkpoint does not match the requested survey");
        if (ck.stats.size() != specs.size())
            throw ValidationError("checkpoint spec list does not match");
        for (size_t i = 0; i < specs.size(); ++i)
            if (!(ck.stats[i].spec == specs[i]))
                throw ValidationError("checkpoint spec list does not match");
        std::error_code ec;
        uint64_t size = std::filesystem::file_size(opt.out_path, ec);
        if (ec) throw IOError("cannot stat manifest: " + opt.out_path);
        if (size < ck.manifest_bytes) throw IOError("manifest shorter than checkpoint");
        std::filesystem::resize_file(opt.out_path, ck.manifest_bytes, ec);
        if (ec) throw IOError("cannot truncate manifest: " + opt.out_path);
        sum.specs = ck.stats;
        si = ck.spec_index;
        sj = ck.shard_index;
        out.open(opt.out_path, std::ios::app | std::ios::binary);
        if (!out) throw IOError("cannot append to manifest: " + opt.out_path);
    } else {
        out.open(opt.out_path, std::ios::trunc | std::ios::binary);
        if (!out) throw IOError("cannot write manifest: " + opt.out_path);
        out << "# mom census manifest v1\n";
        out << "# n " << n << " mode " << to_string(opt.mode);
        if (!opt.only_spec.empty()) out << " only " << specs[0].to_string();
        out << "\n";
    }

    uint64_t total_nodes = sum.total_nodes();

    auto write_ckpt = [&](size_t csi, size_t csj) {
        out.flush();
        if (!out) throw IOError("manifest write failed: " + opt.out_path);
        Checkpoint ck;
        ck.n = n;
        ck.mode = to_string(opt.mode);
        ck.only = opt.only_spec;
        ck.spec_index = csi;
        ck.shard_index = csj;
        ck.manifest_bytes = static_cast<uint64_t>(out.tellp());
        ck.stats = sum.specs;
        save_checkpoint(ckpt_path, ck);
    };

    if (!opt.resume) {
        out << "# spec " << specs[0].to_string() << "\n";
        write_ckpt(0, 0);
    }

    const int nworkers = std::max(1, opt.workers);
    for (; si < specs.size(); ++si, sj = 0) {
        const DipyramidSpec& spec = specs[si];
        SpecStats& st = sum.specs[si];
        auto group = symmetry_group(spec, opt.mode);
        auto prefixes = shard_prefixes(spec, group, 2);
        if (sj > prefixes.size()) throw ValidationError("checkpoint shard index out of range");

        std::atomic<size_t> next_claim{sj};
        std::atomic<bool> stop{false};
        std::mutex mu;
        std::condition_variable cv;
        std::map<size_t, ShardOutcome> done;
        std::exception_ptr worker_error;
        const size_t backlog = 4 * static_cast<size_t>(nworkers);

        auto work = [&]() {
            try {
                for (;;) {
                    {
                        std::unique_lock<std::mutex> lk(mu);
                        cv.wait(lk, [&] { return stop.load() || done.size() <= backlog; });
                    }
                    if (stop.load()) return;
                    size_t j = next_claim.fetch_add(1);
                    if (j >= prefixes.size()) return;
                    ShardOutcome r = process_shard(spec, group, prefixes[j]);
                    {
                        std::lock_guard<std::mutex> lk(mu);
                        done.emplace(j, std::move(r));
                    }
                    cv.notify_all();
                }
            } catch (...) {
                {
                    std::lock_guard<std::mutex> lk(mu);
                    if (!worker_error) worker_error = std::current_exception();
                }
                stop.store(true);
                cv.notify_all();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(work);

        bool budget_hit = false;
        size_t commit = sj;
        while (commit < prefixes.size()) {
            ShardOutcome r;
            {
                std::unique_lock<std::mutex> lk(mu);
                cv.wait(lk, [&] { return done.count(commit) > 0 || worker_error; });
                if (worker_error && done.count(commit) == 0) break;
                r = std::move(done[commit]);
                done.erase(commit);
            }
            cv.notify_all();
            out << r.records;
            st.candidates += r.candidates;
            st.survivors += r.survivors;
            st.nodes += r.nodes;
            total_nodes += r.nodes;
            for (const auto& [k, v] : r.boundary_hist) st.boundary_hist[k] += v;
            ++commit;
            if (opt.max_nodes && total_nodes >= opt.max_nodes) {
                budget_hit = true;
                break;
            }
            if (opt.checkpoint_every && (commit - sj) % opt.checkpoint_every == 0)
                write_ckpt(si, commit);
        }
        stop.store(true);
        cv.notify_all();
        for (auto& t : pool) t.join();
        if (worker_error) std::rethrow_exception(worker_error);

        if (budget_hit) {
            write_ckpt(si, commit);
            sum.complete = false;
            return sum;
        }

        out << "# endspec " << spec.to_string() << " candidates=" << st.candidates
            << " survivors=" << st.survivors << "\n";
        if (si + 1 < specs.size()) {
            out << "# spec " << specs[si + 1].to_string() << "\n";
            write_ckpt(si + 1, 0);
        }
    }

    out << "# total candidates=" << sum.total_candidates()
        << " survivors=" << sum.total_survivors() << "\n";
    out << "# complete\n";
    out.flush();
    if (!out) throw IOError("manifest write failed: " + opt.out_path);
    out.close();
    std::error_code ec;
    std::filesystem::remove(ckpt_path, ec);
    sum.complete = true;
    return sum;
}

ManifestStats read_manifest_stats(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open manifest: " + path);
    ManifestStats ms;
    std::string line;
    uint64_t record_count = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line);
            std::string hash, kw;
            ls >> hash >> kw;
            if (kw == "n") {
                std::string modekw;
                ls >> ms.n >> modekw >> ms.mode;
            } else if (kw == "endspec") {
                std::string sides, cand, surv;
                ls >> sides >> cand >> surv;
                if (cand.rfind("candidates=", 0) != 0 || surv.rfind("survivors=", 0) != 0)
                    throw ValidationError("bad endspec line: " + line);
                uint64_t c = std::stoull(cand.substr(11));
                uint64_t s = std::stoull(surv.substr(10));
                ms.per_spec[sides] = {c, s};
                ms.candidates += c;
            } else if (kw == "complete") {
                ms.complete = true;
            }
            continue;
        }
        // record: description \t boundary=B \t edges=E \t h1=H \t pres=G/R/L \t commpow=N|-
        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() != 6 || fields[1].rfind("boundary=", 0) != 0 ||
            fields[3].rfind("h1=", 0) != 0 || fields[5].rfind("commpow=", 0) != 0)
            throw ValidationError("bad manifest record: " + line);
        record_count++;
        ms.boundary_hist[std::stoi(fields[1].substr(9))]++;
        ms.h1_hist[fields[3].substr(3)]++;
        std::string cp = fields[5].substr(8);
        ms.commpow_hist[cp == "-" ? -1 : std::stoi(cp)]++;
    }
    ms.survivors = record_count;
    if (ms.complete) {
        uint64_t per_spec_surv = 0;
        for (const auto& [k, v] : ms.per_spec) per_spec_surv += v.second;
        if (per_spec_surv != record_count)
            throw ValidationError("manifest record count does not match spec footers");
    }
    return ms;
}

}  // namespace mom
