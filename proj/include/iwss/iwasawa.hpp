#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwss/cyclotomic.hpp"
#include "iwss/ec.hpp"
#include "iwss/lmfdb.hpp"
#include "iwss/torsion.hpp"

namespace iwss {

struct DefectEntry {
    BigInt l;
    SplittingNumber s;
    TorsionDimension dim;   // first-layer dimension used in the sum
    BigInt contribution;    // s * dim
};

// delta(E) = sum over bad primes of s(l) * dim_{F_p} E(L_w)[p]; over Q with
// supersingular p the ordinary-prime term is structurally empty.
struct DefectReport {
    std::string curve;  // "[a1,...,a6]" of the minimal model
    BigInt p;
    std::vector<DefectEntry> entries;
    BigInt delta = 0;
};

struct RhoCalibration {
    BigInt p;
    char sign;  // '+' or '-'
    std::string reference_label;
    int reference_lambda = 0;
    BigInt reference_delta = 0;
    BigInt rho = 0;
};

enum class MuStatus { ZeroByReference, ZeroByPropagation, Unknown };
std::string to_string(MuStatus m);

struct LambdaReport {
    std::string curve;
    std::string label;  // may be empty
    BigInt p;
    BigInt rho_plus = 0, rho_minus = 0;
    BigInt delta = 0;
    BigInt lambda_plus = 0, lambda_minus = 0;
    MuStatus mu_status = MuStatus::Unknown;
    bool discarded = false;            // a_p != 0 member
    std::string discard_reason;
    std::vector<std::string> warnings;  // discrepancy flags etc.
    std::optional<DefectReport> defect;
    std::optional<HypOneVerdict> hyp1;
    // published-vs-computed comparison, when the fixture has published values
    std::optional<bool> matches_published;
};

struct FamilyMember {
    long t = 0;
    std::string label;                      // optional
    std::optional<std::array<BigInt, 5>> ainvs;  // optional explicit model
    std::optional<IwasawaData> published;
};

struct FamilyFixture {
    BigInt p;
    std::string name;
    std::string reference_label;
    std::optional<std::array<BigInt, 5>> reference_ainvs;
    std::vector<FamilyMember> members;
};

FamilyFixture fixture_from_json_text(const std::string& text);
FamilyFixture load_fixture(const std::string& path);

DefectReport defect(const WeierstrassCurve& E, const BigInt& p);

// rho = lambda - delta per sign; requires published lambda and mu = 0.
std::pair<RhoCalibration, RhoCalibration> calibrate_rho(const DefectReport& reference,
                                                        const std::string& reference_label,
                                                        const IwasawaData& published);

LambdaReport predict_lambda(const WeierstrassCurve& E, const BigInt& p,
                            const RhoCalibration& rho_plus, const RhoCalibration& rho_minus);

// Necessary congruence screen: a_l(E1) = a_l(E2) mod p for good l <= bound,
// l not dividing p*N1*N2. Returns (ok, witness l on failure).
std::pair<bool, std::optional<BigInt>> congruence_check(const WeierstrassCurve& E1,
                                                        const WeierstrassCurve& E2, const BigInt& p,
                                                        const BigInt& bound);

struct FamilyRunResult {
    FamilyFixture fixture;
    std::vector<LambdaReport> reports;     // fixture order, reference first
    bool lambda_difference_constant = true;
    std::vector<std::string> warnings;
};

FamilyRunResult run_family(const FamilyFixture& fixture, LmfdbClient& client, int parallel = 1);

}  // namespace iwss
