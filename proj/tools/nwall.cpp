// nwall: number walls, tilings and certificates from the command line.
// Exit codes: 0 pass, 2 usage or domain error, 3 verification or discovery failure.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "numberwall/laurent.hpp"
#include "numberwall/verify.hpp"

using namespace nwall;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kUsage = 2, kFailed = 3;

struct Range {
    std::int64_t lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    const auto colon = s.find(':', 1);
    if (colon == std::string::npos) throw DomainError("range `" + s + "` must look like lo:hi");
    Range r;
    try {
        std::size_t used = 0;
        r.lo = std::stoll(s.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument(s);
        const std::string rest = s.substr(colon + 1);
        r.hi = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
        throw DomainError("range `" + s + "` must look like lo:hi");
    }
    if (r.lo > r.hi) throw DomainError("range `" + s + "` has lo > hi");
    return r;
}

struct SeqOpts {
    std::string seq = "paperfolding";
    std::string file;
    int mod = 3;
    int threads = 0;
    CLI::Option* mod_opt = nullptr;

    void add(CLI::App* app) {
        app->add_option("--seq", seq, "paperfolding, pagoda, thuemorse, const0, const1 or file")
            ->check(CLI::IsMember({"paperfolding", "pagoda", "thuemorse", "const0", "const1", "file"}));
        app->add_option("--file", file, "sequence file for --seq file");
        mod_opt = app->add_option("--mod", mod, "prime modulus (for --seq file, defaults to the file's)");
        app->add_option("--threads", threads, "worker threads (default NW_THREADS or 1)");
    }
    SequenceSource source() const {
        const Modulus m(mod);
        if (seq == "paperfolding") return SequenceSource::paper_folding(m);
        if (seq == "pagoda") return SequenceSource::pagoda(m);
        if (seq == "thuemorse") return SequenceSource::thue_morse(m);
        if (seq == "const0") return SequenceSource::constant(m, 0);
        if (seq == "const1") return SequenceSource::constant(m, 1);
        if (file.empty()) throw DomainError("--seq file needs --file");
        auto s = SequenceSource::read_file(file);
        if (mod_opt->count() > 0 && s.modulus() != m) throw DomainError("--mod disagrees with the modulus in " + file);
        return s;
    }
};

struct RegionOpts {
    std::string rows = "0:39", cols = "-41:41";
    void add(CLI::App* app) {
        app->add_option("--rows", rows, "row range lo:hi");
        app->add_option("--cols", cols, "column range lo:hi");
    }
};

struct DiscoverOpts {
    DiscoveryParams params;
    std::string region;
    std::string out_dir;
    void add(CLI::App* app) {
        app->add_option("--k", params.k, "substitution factor");
        app->add_option("--tel", params.tel, "tile edge length (l - 1), even");
        app->add_option("--cid", params.cid, "centre distance (l - r), even");
        app->add_option("--region", region, "wall region a:b,c:d (rows a..b, columns c..d)");
        app->add_option("--closure-growth", params.max_closure_growth, "times the closure pair may be scaled by k");
        app->add_option("--out-dir", out_dir, "write codes.txt, tetrads.txt and summary.json here");
    }
    DiscoveryParams resolved() const {
        DiscoveryParams p = params;
        if (!region.empty()) {
            const auto comma = region.find(',');
            if (comma == std::string::npos) throw DomainError("--region must look like a:b,c:d");
            const Range r = parse_range(region.substr(0, comma)), c = parse_range(region.substr(comma + 1));
            p.a = r.lo;
            p.b = r.hi;
            p.c = c.lo;
            p.d = c.hi;
        }
        p.validate();
        return p;
    }
};

void write_outputs(const DiscoveryResult& r, const std::string& dir) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::ofstream codes(dir + "/codes.txt"), tetrads(dir + "/tetrads.txt"), summary(dir + "/summary.json");
    if (!codes || !tetrads || !summary) throw DomainError("cannot write into " + dir);
    write_codes(codes, r.system.tau);
    write_tetrads(tetrads, r);
    summary << summary_json(r) << "\n";
}

json census_json(const Census& c) {
    json j = json::object();
    for (const auto& [d, cnt] : c.counts) j[d < 0 ? "broken" : std::to_string(d)] = cnt;
    return j;
}

PipelineOptions pipeline_options(const SequenceSource& src, int max_side, bool tables) {
    PipelineOptions o;
    const bool paper = src.kind() == SequenceKind::PaperFolding && src.modulus().value() == 3;
    if (paper && tables) o = paper_folding_options();
    o.max_side = max_side;
    o.zeroth.paper_folding_tables = paper && tables;
    return o;
}

int report(const Certificate& c) {
    std::cout << c.to_json() << "\n";
    return c.pass() ? kOk : kFailed;
}

// reproduction targets with pinned parameters
int reproduce_thm_main(int threads) {
    const auto src = SequenceSource::paper_folding(Modulus(3));
    PipelineOptions o = paper_folding_options();
    o.threads = threads;
    DiscoveryResult r;
    const Certificate c = full_pipeline(src, DiscoveryParams{}, o, &r);
    for (const auto& ob : c.obligations) std::cout << (ob.pass ? "PASS " : "FAIL ") << ob.name << ": " << ob.detail << "\n";
    if (!c.pass()) {
        std::cout << "FAIL thm-main\n";
        return kFailed;
    }
    const std::int64_t deficiency = c.max_side + 1;
    std::cout << "tiles " << c.tiles << ", tetrads " << c.tetrads << ", deficiency " << deficiency << "\n";
    std::cout << "inf_{N,k} |N| |<N t^k Theta>| = 3^-" << deficiency << " (exponent -" << deficiency << ")\n";
    std::cout << "PASS thm-main\n";
    return kOk;
}

int reproduce_f2_quadratic() {
    const bool phi = check_quadratic_f2(Quadratic::Phi, 1024, Modulus(2));
    const bool pi = check_quadratic_f2(Quadratic::Pi, 1024, Modulus(2));
    std::cout << (phi ? "PASS" : "FAIL") << " Phi^2 + Phi + t/(1+t^4) = 0 through t^-1024\n";
    std::cout << (pi ? "PASS" : "FAIL") << " Pi^2 + ((1+t^2)/t) Pi + 1/t = 0 through t^-1024\n";
    std::cout << (phi && pi ? "PASS" : "FAIL") << " f2-quadratic\n";
    return phi && pi ? kOk : kFailed;
}

int reproduce_pagoda(int threads) {
    const auto src = SequenceSource::pagoda(Modulus(3));
    BuildOptions bo;
    bo.threads = threads;
    const auto w = build(src, 499, -1000, 999, -2, bo);
    const Census cen = census(w, {0, 499, -1000, 999});
    const bool isolated = max_deficiency(cen) <= 2;
    std::cout << (isolated ? "PASS" : "FAIL") << " 500x2000 census " << census_json(cen).dump() << "\n";
    DiscoveryParams p;
    p.tel = 10;
    p.cid = 8;
    p.a = p.padding_bound();
    p.b = 800;
    p.c = -1600;
    p.d = 1600;
    PipelineOptions o = pipeline_options(src, 1, false);
    o.threads = threads;
    const Certificate c = full_pipeline(src, p, o);
    std::cout << (c.pass() ? "PASS" : "FAIL") << " tiling at tel=10 cid=8 a=" << p.a << " b=800 c=-1600 d=1600: "
              << c.tiles << " tiles, " << c.tetrads << " tetrads\n";
    const bool ok = isolated && c.pass();
    std::cout << (ok ? "PASS" : "FAIL") << " pagoda\n";
    return ok ? kOk : kFailed;
}

int reproduce_cf() {
    const auto pf = deficiency_via_cf(SequenceSource::paper_folding(Modulus(3)), 64, 2048);
    const auto pg = deficiency_via_cf(SequenceSource::pagoda(Modulus(3)), 64, 2048);
    const bool ok = pf == 4 && pg == 2;
    std::cout << "paper-folding " << pf << ", pagoda " << pg << " (K=64, N=2048)\n" << (ok ? "PASS" : "FAIL") << " cf\n";
    return ok ? kOk : kFailed;
}

int reproduce_conjecture(int mod, std::int64_t size, int threads) {
    BuildOptions bo;
    bo.threads = threads;
    const auto w = build(SequenceSource::paper_folding(Modulus(mod)), size - 1, -size / 2, size - size / 2 - 1, -2, bo);
    std::cout << "EMPIRICAL paper-folding over F_" << mod << ", " << size << "x" << size
              << " segment: max deficiency " << max_deficiency(w) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Number walls over prime fields, their automatic tilings and certificates"};
    app.require_subcommand(1);
    bool dense = false;
    app.add_flag("--dense", dense, "keep full in-memory grids (always the case; accepted for scripts)");

    SeqOpts wall_seq;
    RegionOpts wall_reg;
    std::string csv_path, pgm_path;
    auto* wall = app.add_subcommand("wall", "build a wall segment; CSV to stdout unless --csv or --pgm");
    wall_seq.add(wall);
    wall_reg.add(wall);
    wall->add_option("--csv", csv_path, "write the segment as CSV");
    wall->add_option("--pgm", pgm_path, "write a grayscale PGM render");
    wall->add_flag("--dense", dense, "keep full in-memory grids");

    SeqOpts cen_seq;
    RegionOpts cen_reg;
    bool cen_summary = false;
    auto* cen = app.add_subcommand("census", "window multiset as JSON {deficiency: count}");
    cen_seq.add(cen);
    cen_reg.add(cen);
    cen->add_flag("--summary", cen_summary, "wrap the multiset with the max deficiency and region");
    cen->add_flag("--dense", dense, "keep full in-memory grids");

    SeqOpts dis_seq;
    DiscoverOpts dis_opts;
    auto* dis = app.add_subcommand("discover", "find a substitution tiling generating the wall");
    dis_seq.add(dis);
    dis_opts.add(dis);

    SeqOpts ver_seq;
    DiscoverOpts ver_opts;
    int ver_side = 3;
    bool ver_no_tables = false;
    auto* ver = app.add_subcommand("verify", "discover, then check every obligation of the certificate");
    ver_seq.add(ver);
    ver_opts.add(ver);
    ver->add_option("--max-side", ver_side, "window side bound to certify");
    ver->add_flag("--no-tables", ver_no_tables, "skip the fixed zeroth-row tables");

    SeqOpts cf_seq;
    std::int64_t cf_shift = 0, cf_terms = 2048, cf_max_shift = -1;
    auto* cf = app.add_subcommand("cf", "continued fraction of the fractional part of t^shift * Theta");
    cf_seq.add(cf);
    cf->add_option("--shift", cf_shift, "power of t");
    cf->add_option("--terms", cf_terms, "coefficients of Theta used");
    cf->add_option("--max-shift", cf_max_shift, "also report the max certified degree over shifts 0..K");

    std::string tag;
    int rep_mod = 7, rep_threads = 0;
    std::int64_t rep_size = 1000;
    auto* rep = app.add_subcommand("reproduce", "pinned runs: thm-main, f2-quadratic, pagoda, cf, conjecture");
    rep->add_option("tag", tag, "target")
        ->required()
        ->check(CLI::IsMember({"thm-main", "f2-quadratic", "pagoda", "cf", "conjecture"}));
    rep->add_option("--mod", rep_mod, "modulus for conjecture");
    rep->add_option("--size", rep_size, "segment side for conjecture");
    rep->add_option("--threads", rep_threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*wall) {
            const auto src = wall_seq.source();
            const Range r = parse_range(wall_reg.rows), c = parse_range(wall_reg.cols);
            BuildOptions bo;
            bo.threads = wall_seq.threads;
            const auto w = build(src, r.hi, c.lo, c.hi, std::min<std::int64_t>(r.lo, -2), bo)
                               .crop(r.lo, r.hi, c.lo, c.hi);
            if (!pgm_path.empty()) {
                std::ofstream out(pgm_path);
                if (!out) throw DomainError("cannot write " + pgm_path);
                out << render_pgm(w, default_palette(w.p()));
            }
            if (!csv_path.empty()) {
                std::ofstream out(csv_path);
                if (!out) throw DomainError("cannot write " + csv_path);
                write_csv(out, w);
            }
            if (csv_path.empty() && pgm_path.empty()) write_csv(std::cout, w);
            return kOk;
        }
        if (*cen) {
            const auto src = cen_seq.source();
            const Range r = parse_range(cen_reg.rows), c = parse_range(cen_reg.cols);
            BuildOptions bo;
            bo.threads = cen_seq.threads;
            // one extra row and column each side so windows on the border are classified
            const auto w = build(src, r.hi + 1, c.lo - 1, c.hi + 1, std::min<std::int64_t>(r.lo - 1, -2), bo);
            const Census cs = census(w, {r.lo, r.hi, c.lo, c.hi});
            if (cen_summary) {
                json j;
                j["sequence"] = src.name();
                j["modulus"] = src.modulus().value();
                j["rows"] = {r.lo, r.hi};
                j["cols"] = {c.lo, c.hi};
                j["max_deficiency"] = max_deficiency(cs);
                j["counts"] = census_json(cs);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << census_json(cs).dump() << "\n";
            }
            return kOk;
        }
        if (*dis) {
            const auto src = dis_seq.source();
            const DiscoveryParams p = dis_opts.resolved();
            const auto w = build_discovery_wall(src, p, dis_seq.threads);
            try {
                const DiscoveryResult r = discover(w, p);
                write_outputs(r, dis_opts.out_dir);
                std::cout << summary_json(r) << "\n";
                return kOk;
            } catch (const DiscoveryFailure& e) {
                json j;
                j["status"] = "FAIL";
                j["pass"] = e.pass();
                j["reason"] = e.what();
                j["at"] = {e.i(), e.j()};
                std::cout << j.dump(2) << "\n";
                return kFailed;
            }
        }
        if (*ver) {
            const auto src = ver_seq.source();
            const DiscoveryParams p = ver_opts.resolved();
            PipelineOptions o = pipeline_options(src, ver_side, !ver_no_tables);
            o.threads = ver_seq.threads;
            try {
                DiscoveryResult r;
                const Certificate c = full_pipeline(src, p, o, &r);
                write_outputs(r, ver_opts.out_dir);
                return report(c);
            } catch (const DiscoveryFailure& e) {
                std::cout << "{\"overall\": \"FAIL\", \"discovery\": " << json(e.what()).dump() << "}\n";
                return kFailed;
            }
        }
        if (*cf) {
            const auto src = cf_seq.source();
            const CFProfile prof = continued_fraction(LaurentTruncation::from_source(src, cf_shift, cf_terms));
            json j;
            j["sequence"] = src.name();
            j["shift"] = cf_shift;
            j["terms"] = cf_terms;
            j["degrees"] = prof.degrees;
            j["certified"] = prof.certified;
            j["max_certified"] = prof.max_certified();
            if (cf_max_shift >= 0) j["max_over_shifts"] = deficiency_via_cf(src, cf_max_shift, cf_terms);
            std::cout << j.dump(2) << "\n";
            return kOk;
        }
        if (*rep) {
            if (tag == "thm-main") return reproduce_thm_main(rep_threads);
            if (tag == "f2-quadratic") return reproduce_f2_quadratic();
            if (tag == "pagoda") return reproduce_pagoda(rep_threads);
            if (tag == "cf") return reproduce_cf();
            return reproduce_conjecture(rep_mod, rep_size, rep_threads);
        }
    } catch (const DomainError& e) {
        std::cerr << "nwall: " << e.what() << "\n";
        return kUsage;
    } catch (const DivisionByZero& e) {
        std::cerr << "nwall: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
