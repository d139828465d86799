// Command-line front end: combinatorial checks, ideal computations, ACM
// decisions, verification suites, conjecture scans, and configuration
// generation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "acm/acm.hpp"
#include "acm/lab.hpp"

namespace {

using namespace acm;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitUndecided = 4;

std::uint64_t env_prime() {
    if (const char* p = std::getenv("ACMTOOL_PRIME")) {
        try {
            return std::stoull(p);
        } catch (...) {
            throw parse_error("ACMTOOL_PRIME is not a valid integer");
        }
    }
    return kDefaultPrime;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Loaded {
    ConfigData data;
    Fp unit;
    Configuration<Fp> config;
    std::uint64_t prime;
};

Loaded load(const std::string& path, std::uint64_t prime_flag) {
    Loaded l{ConfigData{}, Fp(1, kDefaultPrime), Configuration<Fp>{}, 0};
    l.data = parse_config(read_file(path));
    l.prime = prime_flag ? prime_flag : (l.data.prime ? *l.data.prime : env_prime());
    l.unit = fp_unit(l.prime);
    l.config = to_configuration(l.data, l.unit);
    if (l.config.empty()) throw invariant_error("configuration has no points");
    return l;
}

std::string join_pairs(const std::vector<std::pair<int, int>>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? ";" : "") + ("(" + std::to_string(v[k].first) + "," + std::to_string(v[k].second) + ")");
    return s;
}

std::string oneline(std::string s) {
    for (auto& c : s)
        if (c == '\n') c = ';';
    return s;
}

void emit(const Report& rep) {
    std::cout << rep.human;
    std::cout << rep.machine_text();
}

int cmd_check(const std::string& file, std::uint64_t prime_flag, int trials, std::uint64_t seed) {
    Loaded l = load(file, prime_flag);
    const Configuration<Fp>& x = l.config;
    const int n = x.shape().factors();
    Report rep;
    rep.line("configuration: " + std::to_string(x.size()) + " points in P^" + x.shape().str());
    if (!l.data.labels.empty()) {
        std::string names;
        for (std::size_t i = 0; i < l.data.labels.size(); ++i)
            names += (i ? ", " : "") + l.data.labels[i] + "=" + x.points()[i].str();
        rep.line("labels: " + names);
    }
    rep.kv("shape", x.shape().str());
    rep.kv("points", static_cast<long long>(x.size()));
    for (int i = 1; i <= n; ++i) {
        auto lv = level_sets(x, i);
        rep.line("level sets over factor " + std::to_string(i) + ": " + std::to_string(lv.classes.size()));
        rep.kv("levels_" + std::to_string(i), static_cast<long long>(lv.classes.size()));
    }

    std::function<bool(const Configuration<Fp>&)> oracle;
    if (n >= 3)
        oracle = [&](const Configuration<Fp>& img) { return acm_decide(img, trials, mix_seed(seed, 3), l.unit).acm; };
    bool incl = has_inclusion(x, 1, oracle);
    if (n == 2) {
        bool star = has_star(x);
        rep.line(std::string("(*)-property: ") + (star ? "yes" : "no"));
        rep.kv("star", star);
        if (star) {
            Staircase<Fp> st = staircase(x);
            rep.line("staircase corners: " + join_pairs(st.corners));
            rep.kv("corners", join_pairs(st.corners));
        }
    }
    rep.line(std::string("inclusion property (factor 1): ") + (incl ? "yes" : "no"));
    rep.kv("inclusion", incl);

    if (n == 2 && x.shape().dims[0] == 1) {
        ABPartition<Fp> ab = ab_partition(x);
        rep.line("A/B partition: |A|=" + std::to_string(ab.a_part.size()) + " |B|=" + std::to_string(ab.b_part.size()) +
                 " N0=" + std::to_string(ab.n0) + " N1=" + std::to_string(ab.n1));
        rep.kv("n0", static_cast<long long>(ab.n0));
        rep.kv("n1", static_cast<long long>(ab.n1));
        if (x.shape().dims[1] >= 2) {
            Thm47Report t47 = thm47_hypotheses(x, l.unit);
            if (ab.n0 >= 2) {
                rep.line(std::string("D-membership: ") + (t47.d_member ? "yes" : "no") +
                         (t47.d_witness ? " (witness i=" + std::to_string(*t47.d_witness) + ")" : ""));
                rep.kv("d_member", t47.d_member);
                if (t47.d_witness) rep.kv("d_witness", *t47.d_witness);
            }
            rep.line(std::string("criterion hypotheses: pairwise-intersections-in-B=") +
                     (t47.pairwise_in_by ? "yes" : "no") + " genericity=" + (t47.genericity ? "yes" : "no") +
                     " no-inclusion=" + (t47.no_inclusion ? "yes" : "no"));
            rep.kv("thm47_pairwise", t47.pairwise_in_by);
            rep.kv("thm47_generic", t47.genericity);
            rep.kv("thm47_no_inclusion", t47.no_inclusion);
        }
    }
    emit(rep);
    return kExitOk;
}

int cmd_ideal(const std::string& file, std::uint64_t prime_flag, bool groebner, const std::vector<int>& hilbert_d,
              bool mingens) {
    Loaded l = load(file, prime_flag);
    RingPtr ring = make_ring(l.config.shape());
    Ideal<Fp> ix = config_ideal(l.config, ring, l.unit);
    Report rep;
    rep.line("defining ideal of " + std::to_string(l.config.size()) + " points in P^" + l.config.shape().str());
    rep.kv("points", static_cast<long long>(l.config.size()));
    rep.kv("gb_size", static_cast<long long>(ix.groebner().size()));
    if (groebner) {
        rep.line("reduced Groebner basis:");
        for (const auto& g : ix.groebner()) rep.line("  " + g.str());
    }
    if (!hilbert_d.empty()) {
        if (static_cast<int>(hilbert_d.size()) != l.config.shape().factors())
            throw invariant_error("--hilbert needs one degree per factor");
        long long h = hilbert_multi(ix, hilbert_d);
        std::string dstr;
        for (std::size_t k = 0; k < hilbert_d.size(); ++k) dstr += (k ? "," : "") + std::to_string(hilbert_d[k]);
        rep.line("hilbert(" + dstr + ") = " + std::to_string(h));
        rep.kv("hilbert", "(" + dstr + "):" + std::to_string(h));
    }
    if (mingens) {
        auto mg = min_gens(ix, l.unit);
        std::string summary;
        rep.line("minimal generators:");
        for (const auto& e : mg) {
            std::string dstr;
            for (std::size_t k = 0; k < e.mdeg.size(); ++k) dstr += (k ? "," : "") + std::to_string(e.mdeg[k]);
            rep.line("  degree (" + dstr + "): " + std::to_string(e.count));
            for (const auto& g : e.reps) rep.line("    " + g.str());
            summary += (summary.empty() ? "" : ";") + ("(" + dstr + "):" + std::to_string(e.count));
        }
        rep.kv("mingens", summary);
    }
    emit(rep);
    return kExitOk;
}

int cmd_acm(const std::string& file, std::uint64_t prime_flag, int trials, std::uint64_t seed, bool trust) {
    Loaded l = load(file, prime_flag);
    std::uint64_t s = seed ? seed : (l.data.seed ? *l.data.seed : 1);
    Report rep;
    auto fast = acm_fast_paths(l.config, trials, s, l.unit);
    if (trust && fast) {
        rep.line(std::string("ACM: ") + (fast->acm ? "yes" : "no") + " (trusted fast path " + fast->path + ")");
        rep.kv("acm", fast->acm);
        rep.kv("certificate", "theorem:" + fast->path);
        rep.kv("fast_path", fast->path);
        rep.kv("trials", static_cast<long long>(trials));
        rep.kv("seed", static_cast<long long>(s));
        emit(rep);
        return kExitOk;
    }
    Ideal<Fp> ix = config_ideal(l.config, l.unit);
    AcmVerdict<Fp> v = acm_decide(l.config, ix, trials, s, l.unit);
    if (fast) v.fast_path = fast->path;
    if (fast && fast->acm != v.acm) {
        rep.line("fast path " + fast->path + " disagrees with the regular-sequence test; this is a bug");
        rep.kv("acm", v.acm);
        rep.kv("fast_path_mismatch", true);
        emit(rep);
        return kExitInvariant;
    }
    rep.line(std::string("ACM: ") + (v.acm ? "yes" : "no"));
    if (v.acm) {
        rep.line("regular-sequence witness:");
        for (const auto& f : v.witness->forms) rep.line("  " + f.str());
        if (!verify_witness(ix, v.witness->forms, l.unit)) throw error("internal: witness failed re-verification");
    } else {
        for (const auto& f : v.failures)
            rep.line("trial " + std::to_string(f.trial) + ": quotient grew at step " + std::to_string(f.step));
        rep.line("confidence: " + v.confidence_note);
    }
    rep.kv("acm", v.acm);
    rep.kv("certificate", v.acm ? "regular-sequence" : "monte-carlo");
    rep.kv("fast_path", v.fast_path ? *v.fast_path : "none");
    rep.kv("trials", static_cast<long long>(trials));
    rep.kv("seed", static_cast<long long>(s));
    emit(rep);
    return kExitOk;
}

void emit_suite(const SuiteReport& r, std::uint64_t seed) {
    Report rep;
    rep.line("suite " + r.suite + ": " + std::to_string(r.passed) + "/" + std::to_string(r.cases) + " passed (" +
             std::to_string(r.wall_ms / 1000.0) + " s)");
    for (const auto& f : r.failures)
        rep.line("  case " + std::to_string(f.index) + " (seed " + std::to_string(f.seed) + "): " + f.note);
    rep.kv("suite", r.suite);
    rep.kv("cases", static_cast<long long>(r.cases));
    rep.kv("pass", static_cast<long long>(r.passed));
    rep.kv("fail", static_cast<long long>(r.failed));
    rep.kv("seed", static_cast<long long>(seed));
    for (const auto& f : r.failures)
        rep.kv("fail_case_" + std::to_string(f.index), std::to_string(f.seed) + " " + oneline(f.note));
    emit(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ACM classification for finite point sets in products of projective spaces"};
    app.require_subcommand(1);

    std::string file, out, pattern = "random", corners;
    std::uint64_t prime_flag = 0, seed = 0;
    int trials = 3, cases = 0, npoints = 6, n0 = 2, n1 = 1, levels = 2, max_points = 12, max_vars = 9;
    bool groebner = false, mingens = false, trust = false, intersect = false;
    std::vector<int> hilbert_d, shape_dims;

    auto* check = app.add_subcommand("check", "combinatorial structure of a configuration");
    check->add_option("file", file)->required();
    check->add_option("--prime", prime_flag);
    check->add_option("--trials", trials);
    check->add_option("--seed", seed);

    auto* ideal = app.add_subcommand("ideal", "defining ideal: Groebner basis, Hilbert values, minimal generators");
    ideal->add_option("file", file)->required();
    ideal->add_option("--prime", prime_flag);
    ideal->add_flag("--groebner", groebner);
    ideal->add_option("--hilbert", hilbert_d, "multidegree, one value per factor");
    ideal->add_flag("--min-gens", mingens);

    auto* acmc = app.add_subcommand("acm", "decide the ACM property");
    acmc->add_option("file", file)->required();
    acmc->add_option("--prime", prime_flag);
    acmc->add_option("--trials", trials);
    acmc->add_option("--seed", seed);
    acmc->add_flag("--trust-theorems", trust);

    auto* verifyc = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verifyc->add_option("suite", suite)->required();
    verifyc->add_option("--cases", cases);
    verifyc->add_option("--seed", seed);

    auto* scanc = app.add_subcommand("scan", "scan a conjecture for counterexamples");
    std::string conj;
    scanc->add_option("conjecture", conj)->required();
    scanc->add_option("--budget", cases, "number of cases");
    scanc->add_option("--max-points", max_points);
    scanc->add_option("--max-vars", max_vars);
    scanc->add_option("--seed", seed);

    auto* genc = app.add_subcommand("generate", "generate a configuration file");
    genc->add_option("--shape", shape_dims, "factor dimensions, e.g. --shape 1 2")->required();
    genc->add_option("--pattern", pattern, "random | star | inclusion | ab");
    genc->add_option("--points", npoints);
    genc->add_option("--n0", n0);
    genc->add_option("--n1", n1);
    genc->add_option("--levels", levels);
    genc->add_flag("--intersect", intersect, "allow level images to share non-common points (ab)");
    genc->add_option("--corners", corners, "star profile, e.g. \"4,0;3,1;0,4\"");
    genc->add_option("--seed", seed);
    genc->add_option("--prime", prime_flag);
    genc->add_option("--out", out, "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*check) return cmd_check(file, prime_flag, trials, seed);
        if (*ideal) return cmd_ideal(file, prime_flag, groebner, hilbert_d, mingens);
        if (*acmc) return cmd_acm(file, prime_flag, trials, seed, trust);
        if (*verifyc) {
            const auto& names = acm::verify_suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end())
                throw acm::parse_error("unknown suite '" + suite + "'");
            if (cases <= 0) cases = 50;
            emit_suite(acm::verify(suite, cases, seed ? seed : 1), seed ? seed : 1);
            return kExitOk;
        }
        if (*scanc) {
            const auto& names = acm::scan_conjecture_names();
            if (std::find(names.begin(), names.end(), conj) == names.end())
                throw acm::parse_error("unknown conjecture '" + conj + "'");
            acm::ScanBudget b;
            b.cases = cases > 0 ? cases : 30;
            b.max_points = max_points;
            b.max_ambient_vars = max_vars;
            emit_suite(acm::scan(conj, b, seed ? seed : 1), seed ? seed : 1);
            return kExitOk;
        }
        if (*genc) {
            acm::GenSpec gs;
            gs.shape = acm::FactorShape(shape_dims);
            gs.points = npoints;
            gs.n0 = n0;
            gs.n1 = n1;
            gs.levels = levels;
            gs.intersect_allowed = intersect;
            gs.seed = seed ? seed : 1;
            gs.prime = prime_flag ? prime_flag : env_prime();
            if (pattern == "random") gs.pattern = acm::Pattern::Random;
            else if (pattern == "star") gs.pattern = acm::Pattern::Star;
            else if (pattern == "inclusion") gs.pattern = acm::Pattern::Inclusion;
            else if (pattern == "ab") gs.pattern = acm::Pattern::AB;
            else throw acm::parse_error("unknown pattern '" + pattern + "'");
            if (!corners.empty()) {
                std::istringstream cs(corners);
                std::string tok;
                while (std::getline(cs, tok, ';')) {
                    auto comma = tok.find(',');
                    if (comma == std::string::npos) throw acm::parse_error("bad corner '" + tok + "'");
                    gs.corners.emplace_back(std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1)));
                }
            }
            acm::ConfigData d = acm::generate(gs);
            std::string text = acm::serialize_config(d);
            // Round-trip guarantee: the emitted file reloads to the same set.
            acm::Fp unit = acm::fp_unit(gs.prime);
            if (!acm::to_configuration(acm::parse_config(text), unit).set_equal(acm::to_configuration(d, unit)))
                throw acm::error("internal: generated file failed the round-trip check");
            if (out.empty()) {
                std::cout << text;
            } else {
                std::ofstream of(out);
                if (!of) throw acm::error("cannot write '" + out + "'");
                of << text;
            }
            acm::Report rep;
            rep.kv("pattern", pattern);
            rep.kv("points", static_cast<long long>(d.points.size()));
            rep.kv("seed", static_cast<long long>(gs.seed));
            if (!out.empty()) {
                rep.kv("out", out);
                emit(rep);
            }
            return kExitOk;
        }
        return kExitUndecided;
    } catch (const acm::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const acm::invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const acm::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
