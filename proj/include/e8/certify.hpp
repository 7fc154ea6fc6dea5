#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "e8/chevalley.hpp"
#include "e8/factor.hpp"
#include "e8/intpoly.hpp"
#include "e8/unipotent.hpp"
#include "e8/zmat.hpp"

namespace e8 {

using json = nlohmann::ordered_json;

// Factorization patterns of the degree-240 quotient of det(T - M) by
// (T-1)^8, reduced mod ascending primes 2, 3, 5, ...; stops early once both
// witness classes have appeared (a squarefree pattern with odd signature and
// the squarefree pattern 15^16).  Works prime by prime on reductions of M,
// so no exact characteristic polynomial is needed.
struct ScanOutcome {
    std::vector<PatternResult> results;
    bool found_odd = false;
    bool found_regular = false;
    bool unit_value_nonzero = false;  // some stripped reduction has P(1) != 0 mod p
};
ScanOutcome prime_scan(const ZMat& M, int budget);

struct CertifyOptions {
    std::vector<u64> primes{7, 11};  // fixed test primes (used when scan_budget == 0)
    int scan_budget = 0;             // > 0: scan ascending primes instead, deferring exact work
    bool rigorous_annihilation = false;
    bool skip_annihilation = false;
    bool stabilize_crt = false;      // heuristic CRT early stop (control primes still checked)
    uint64_t seed = 1;
};

struct CertifyResult {
    bool certified = false;
    std::string conclusion;          // "W(E8)-certified" or "inconclusive"
    std::string reason;              // set when inconclusive
    bool have_poly = false;
    IntPoly P;                       // the degree-240 quotient, when computed
    json certificate;
};

// Certifies that the splitting field of the unit-stripped characteristic
// polynomial of Ad(word) has Galois group all of W(E8).  The logical gate:
//   - det(T - M) = (T-1)^8 P(T) exactly, deg P = 240, P(1) != 0
//   - P is squarefree mod some prime (separability)
//   - some good prime realizes a factorization pattern of odd signature
//   - some good prime realizes the pattern 15^16
// plus two externally cited group-theoretic facts recorded as assumptions.
CertifyResult certify_w_e8(const Chevalley& ch, const Word& word, const CertifyOptions& opt);

// Re-checks the logical gate of an emitted certificate from its JSON alone
// (no recomputation): degree bookkeeping, witness patterns, assumptions.
bool validate_certificate(const json& cert);

// The default element's full pipeline: exact characteristic polynomial,
// stripping, the palindromic change of variable, and the certificate.
struct PipelineResult {
    ZMat M;
    IntPoly charpoly;  // degree 248
    IntPoly P;         // degree 240
    IntPoly Q;         // degree 120, P(T) = T^120 Q(T + 1/T)
    CertifyResult cert;
};
PipelineResult run_default_pipeline(const Chevalley& ch, const CertifyOptions& opt);

// Random-walk statistics over the group generated by the default letters,
// reduced mod p: samples products of `steps` uniform letters (the 16 default
// generators and their inverses), and tallies factorization patterns of the
// stripped characteristic polynomial.
struct WalkBand {
    long count = 0;
    double freq = 0, expected = 0, radius = 0;
    bool within = false;
};
struct WalkReport {
    u64 p = 0;
    int steps = 0;
    long samples = 0;
    uint64_t seed = 0;
    std::map<std::string, long> patterns;  // "d^c ..." -> count, "nsf" prefix if not squarefree
    WalkBand odd_witness;                  // pattern 4^2 8^29
    WalkBand regular_witness;              // pattern 15^16
    json to_json() const;
};
WalkReport walk_statistics(const Chevalley& ch, u64 p, int steps, long samples, uint64_t seed);

// cache-aware constructor for the default sign convention
Chevalley load_or_build_constants(const RootSystem& rs, const std::string& cache_dir);

}  // namespace e8
