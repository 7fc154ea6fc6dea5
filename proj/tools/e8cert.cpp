// command line driver: builds the degree-240 polynomial, certifies its Galois
// group, and runs the supporting experiments

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "e8/certify.hpp"
#include "e8/charpoly.hpp"
#include "e8/disc.hpp"
#include "e8/factor.hpp"
#include "e8/perm.hpp"
#include "e8/sieve.hpp"
#include "e8/unipotent.hpp"
#include "e8/util.hpp"
#include "e8/weyl.hpp"

using namespace e8;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string default_cache_dir() {
    const char* env = std::getenv("E8_CACHE_DIR");
    return env && *env ? env : ".e8cache";
}

Word load_word(const std::string& spec) {
    if (spec.empty() || spec == "default") return default_word();
    return read_word_file(spec);
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

std::vector<u64> parse_prime_list(const std::string& s) {
    std::vector<u64> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoull(tok));
    }
    if (out.empty()) throw CLI::ValidationError("--primes", "empty prime list");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact adjoint-matrix pipeline for W(E8) Galois certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string cache_dir = default_cache_dir();
    app.add_option("--cache-dir", cache_dir, "structure-constant cache directory");

    // build-poly
    auto* cmd_build = app.add_subcommand("build-poly",
                                         "exact characteristic polynomial of Ad(word), stripped "
                                         "and halved; writes P.txt and Q.txt");
    std::string bp_word = "default", bp_out = ".", bp_report;
    bool bp_stabilize = false;
    cmd_build->add_option("--word", bp_word, "word file, or 'default'");
    cmd_build->add_option("--out", bp_out, "output directory");
    cmd_build->add_option("--report", bp_report, "also write a JSON summary here ('-' = stdout)");
    cmd_build->add_flag("--stabilize", bp_stabilize, "stop the CRT early once coefficients settle");

    // certify
    auto* cmd_cert = app.add_subcommand("certify", "emit a W(E8) Galois certificate for a word");
    std::string ct_word = "default", ct_primes = "7,11", ct_report = "-";
    int ct_budget = 0;
    bool ct_rigorous = false, ct_stabilize = false;
    uint64_t ct_seed = 1;
    cmd_cert->add_option("--word", ct_word, "word file, or 'default'");
    cmd_cert->add_option("--primes", ct_primes, "comma-separated test primes");
    cmd_cert->add_option("--scan-budget", ct_budget,
                         "scan ascending primes (mod-p only) instead of fixed test primes");
    cmd_cert->add_flag("--rigorous-annihilation", ct_rigorous,
                       "prove (M-Id)P(M)=0 over Z instead of sampling evidence");
    cmd_cert->add_flag("--stabilize", ct_stabilize, "stop the CRT early once coefficients settle");
    cmd_cert->add_option("--seed", ct_seed, "seed for randomized evidence");
    cmd_cert->add_option("--report", ct_report, "certificate destination ('-' = stdout)");

    // validate
    auto* cmd_val = app.add_subcommand(
        "validate", "re-check the logical gate of an emitted certificate, no recomputation");
    std::string va_cert;
    cmd_val->add_option("--cert", va_cert, "certificate JSON file")->required();

    // factor
    auto* cmd_factor = app.add_subcommand("factor", "factorization pattern of a polynomial mod p");
    std::string fa_poly;
    u64 fa_mod = 7;
    bool fa_split = false;
    uint64_t fa_seed = 1;
    cmd_factor->add_option("--poly", fa_poly, "polynomial file")->required();
    cmd_factor->add_option("--mod", fa_mod, "prime modulus")->required();
    cmd_factor->add_flag("--split", fa_split, "list the irreducible factors, not just degrees");
    cmd_factor->add_option("--seed", fa_seed, "seed for equal-degree splitting");

    // disc
    auto* cmd_disc = app.add_subcommand("disc", "exact discriminant of a monic polynomial");
    std::string di_poly, di_out = "-";
    cmd_disc->add_option("--poly", di_poly, "polynomial file")->required();
    cmd_disc->add_option("--out", di_out, "destination ('-' = stdout)");

    // sieve
    auto* cmd_sieve = app.add_subcommand(
        "sieve", "factorization degrees reachable as subset sums of every given pattern");
    std::string sv_poly, sv_primes = "7,11";
    cmd_sieve->add_option("--poly", sv_poly, "polynomial file")->required();
    cmd_sieve->add_option("--primes", sv_primes, "comma-separated primes to reduce by");

    // weyl
    auto* cmd_weyl = app.add_subcommand("weyl", "reflection group order and sampling statistics");
    long wy_samples = 0;
    uint64_t wy_seed = 1;
    cmd_weyl->add_option("--samples", wy_samples, "uniform samples for class frequencies");
    cmd_weyl->add_option("--seed", wy_seed, "sampling seed");

    // walk
    auto* cmd_walk = app.add_subcommand(
        "walk", "random products of the default letters mod p, pattern statistics");
    u64 wk_mod = 101;
    int wk_steps = 40;
    long wk_samples = 5000;
    uint64_t wk_seed = 1;
    cmd_walk->add_option("--mod", wk_mod, "prime modulus");
    cmd_walk->add_option("--steps", wk_steps, "letters per sampled product");
    cmd_walk->add_option("--samples", wk_samples, "number of sampled products");
    cmd_walk->add_option("--seed", wk_seed, "sampling seed");

    // dump-roots
    auto* cmd_roots = app.add_subcommand("dump-roots", "the 240 roots in canonical order");

    // dump-constants
    auto* cmd_consts = app.add_subcommand("dump-constants", "structure-constant table as text");
    std::string dc_out = "-";
    cmd_consts->add_option("--out", dc_out, "destination ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RootSystem rs = RootSystem::build();

        if (cmd_build->parsed()) {
            auto t0 = std::chrono::steady_clock::now();
            Chevalley ch = load_or_build_constants(rs, cache_dir);
            Word w = load_word(bp_word);
            ZMat M = word_product(ch, w);
            IntPoly cp = charpoly_exact(M, make_crt_plan(M), bp_stabilize);
            IntPoly P = strip_unit_eigenvalue(cp, 8);
            IntPoly Q = reciprocal_transform(P);
            write_poly_file(bp_out + "/P.txt", P);
            write_poly_file(bp_out + "/Q.txt", Q);
            json j;
            j["matrix"] = {{"nonzeros", M.nonzero_count()},
                           {"max_abs_entry", M.max_abs_entry().get_str()}};
            j["P"] = {{"degree", P.degree()},
                      {"sha256", sha256_hex(poly_to_text(P))},
                      {"at_one", P.eval(1).get_str()}};
            j["Q"] = {{"degree", Q.degree()}, {"sha256", sha256_hex(poly_to_text(Q))}};
            j["seconds"] = seconds_since(t0);
            if (!bp_report.empty()) write_text(bp_report, j.dump(2) + "\n");
            std::cerr << "P deg " << P.degree() << ", Q deg " << Q.degree() << ", "
                      << j["seconds"].get<double>() << "s\n";
            return 0;
        }

        if (cmd_cert->parsed()) {
            Chevalley ch = load_or_build_constants(rs, cache_dir);
            CertifyOptions opt;
            opt.primes = parse_prime_list(ct_primes);
            opt.scan_budget = ct_budget;
            opt.rigorous_annihilation = ct_rigorous;
            opt.stabilize_crt = ct_stabilize;
            opt.seed = ct_seed;
            CertifyResult res = certify_w_e8(ch, load_word(ct_word), opt);
            write_text(ct_report, res.certificate.dump(2) + "\n");
            if (ct_report != "-")
                std::cerr << "conclusion: " << res.conclusion
                          << (res.reason.empty() ? "" : " (" + res.reason + ")") << "\n";
            return res.certified ? 0 : 1;
        }

        if (cmd_val->parsed()) {
            std::ifstream f(va_cert);
            if (!f) throw std::runtime_error("cannot read " + va_cert);
            json cert = json::parse(f);
            bool ok = validate_certificate(cert);
            std::cout << (ok ? "valid: the gate holds" : "invalid: the gate does not hold")
                      << "\n";
            return ok ? 0 : 1;
        }

        if (cmd_factor->parsed()) {
            IntPoly P = read_poly_file(fa_poly);
            PatternResult pr = factor_degree_pattern(P, fa_mod);
            json j;
            j["p"] = pr.p;
            j["squarefree"] = pr.squarefree;
            j["pattern"] = pattern_to_string(pr.degrees);
            json d = json::object();
            for (auto [deg, cnt] : pr.degrees) d[std::to_string(deg)] = cnt;
            j["degrees"] = d;
            if (pr.squarefree) j["signature"] = pattern_signature(pr.degrees);
            if (fa_split) {
                json fs = json::array();
                for (const auto& [f, mult] : factor_mod_p(P, fa_mod, fa_seed)) {
                    json e;
                    e["degree"] = (int)f.size() - 1;
                    e["multiplicity"] = mult;
                    std::ostringstream os;
                    for (size_t i = 0; i < f.size(); i++) os << (i ? " " : "") << f[i];
                    e["coeffs"] = os.str();
                    fs.push_back(e);
                }
                j["factors"] = fs;
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (cmd_disc->parsed()) {
            IntPoly P = read_poly_file(di_poly);
            auto t0 = std::chrono::steady_clock::now();
            mpz_class d = discriminant_exact(P);
            std::string s = d.get_str();
            write_text(di_out, s + "\n");
            std::cerr << "digits " << (s.size() - (s[0] == '-' ? 1 : 0)) << ", "
                      << seconds_since(t0) << "s\n";
            return 0;
        }

        if (cmd_sieve->parsed()) {
            IntPoly P = read_poly_file(sv_poly);
            std::vector<DegreePattern> pats;
            json used = json::array();
            for (u64 p : parse_prime_list(sv_primes)) {
                PatternResult pr = factor_degree_pattern(P, p);
                if (!pr.squarefree) {
                    std::cerr << "skipping " << p << ": not squarefree\n";
                    continue;
                }
                pats.push_back(pr.degrees);
                json e;
                e["p"] = p;
                e["pattern"] = pattern_to_string(pr.degrees);
                used.push_back(e);
            }
            auto feasible = factor_degree_sieve(pats);
            json j;
            j["primes"] = used;
            j["feasible_degrees"] = feasible;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (cmd_weyl->parsed()) {
            WeylGroup w = WeylGroup::build(rs);
            json j;
            j["order"] = w.order().get_str();
            Perm c = w.coxeter_element();
            j["coxeter"] = {{"order", perm_order(c)},
                            {"cycle_type", cycle_type_to_string(cycle_type(c))},
                            {"square_cycle_type", cycle_type_to_string(cycle_type(c * c))}};
            if (wy_samples > 0) {
                auto freq = class_frequency_experiment(w, wy_samples, wy_seed);
                json fj = json::object();
                for (const auto& [k, v] : freq) fj[k] = v;
                j["samples"] = wy_samples;
                j["seed"] = wy_seed;
                j["cycle_type_counts"] = fj;
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (cmd_walk->parsed()) {
            Chevalley ch = load_or_build_constants(rs, cache_dir);
            WalkReport rep = walk_statistics(ch, wk_mod, wk_steps, wk_samples, wk_seed);
            std::cout << rep.to_json().dump(2) << "\n";
            return rep.odd_witness.within && rep.regular_witness.within ? 0 : 1;
        }

        if (cmd_roots->parsed()) {
            json arr = json::array();
            for (int i = 0; i < 240; i++) {
                json e;
                e["index"] = i;
                e["doubled"] = rs.roots[i];
                e["coeffs"] = rs.coeffs[i];
                e["height"] = rs.heights[i];
                arr.push_back(e);
            }
            json j;
            j["ordering"] = rs.ordering_hash();
            j["roots"] = arr;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (cmd_consts->parsed()) {
            Chevalley ch = load_or_build_constants(rs, cache_dir);
            std::string tmp = cache_dir + "/constants-dump.tmp";
            if (!ch.save_cache(tmp)) throw std::runtime_error("cannot write " + tmp);
            std::ifstream f(tmp);
            std::stringstream ss;
            ss << f.rdbuf();
            std::remove(tmp.c_str());
            write_text(dc_out, ss.str());
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
