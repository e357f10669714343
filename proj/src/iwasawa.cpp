#include "iwss/iwasawa.hpp"

#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace iwss {

using nlohmann::json;

std::string to_string(MuStatus m) {
    switch (m) {
        case MuStatus::ZeroByReference: return "zero-by-reference";
        case MuStatus::ZeroByPropagation: return "zero-by-propagation";
        case MuStatus::Unknown: return "unknown";
    }
    return "?";
}

DefectReport defect(const WeierstrassCurve& E, const BigInt& p) {
    HypOneVerdict v = check_hyp1(E, p);
    if (!v.ok())
        throw std::runtime_error("defect: curve fails the supersingularity hypothesis at p=" +
                                 p.str() + ": " + v.failures.front());
    auto [Em, tr] = minimal_model(E);
    DefectReport rep;
    rep.curve = Em.to_label_string();
    rep.p = p;
    Factorization fd = factor(abs(Em.discriminant()));
    if (!fd.complete)
        throw std::runtime_error("defect: incomplete factorization of the minimal discriminant");
    for (const auto& [l, e] : fd.factors) {
        LocalReductionData ld = tate_local(Em, l);
        if (ld.f == 0) continue;  // good prime
        DefectEntry entry;
        entry.l = l;
        entry.s = splitting_number(l, p);
        entry.dim = torsion_dim_first_layer(Em, p, l);
        entry.contribution = entry.s.s * entry.dim.dim;
        rep.delta += entry.contribution;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

std::pair<RhoCalibration, RhoCalibration> calibrate_rho(const DefectReport& reference,
                                                        const std::string& reference_label,
                                                        const IwasawaData& published) {
    if (!published.lambda_plus || !published.lambda_minus)
        throw std::runtime_error("calibrate_rho: reference lambda values not published");
    if (!published.mu_plus || !published.mu_minus || *published.mu_plus != 0 ||
        *published.mu_minus != 0)
        throw std::runtime_error("calibrate_rho: reference mu values must be published zero");
    auto make = [&](char sign, int lambda) {
        RhoCalibration r;
        r.p = reference.p;
        r.sign = sign;
        r.reference_label = reference_label;
        r.reference_lambda = lambda;
        r.reference_delta = reference.delta;
        r.rho = BigInt(lambda) - reference.delta;
        if (r.rho < 0)
            throw std::runtime_error("calibrate_rho: negative rho (inconsistent fixture)");
        return r;
    };
    return {make('+', *published.lambda_plus), make('-', *published.lambda_minus)};
}

LambdaReport predict_lambda(const WeierstrassCurve& E, const BigInt& p,
                            const RhoCalibration& rho_plus, const RhoCalibration& rho_minus) {
    LambdaReport rep;
    rep.p = p;
    rep.rho_plus = rho_plus.rho;
    rep.rho_minus = rho_minus.rho;
    HypOneVerdict v = check_hyp1(E, p);
    rep.hyp1 = v;
    auto [Em, tr] = minimal_model(E);
    rep.curve = Em.to_label_string();
    if (!v.ok()) {
        rep.discarded = true;
        rep.discard_reason = v.failures.front();
        return rep;
    }
    DefectReport d = defect(E, p);
    rep.delta = d.delta;
    rep.lambda_plus = rho_plus.rho + d.delta;
    rep.lambda_minus = rho_minus.rho + d.delta;
    rep.mu_status = MuStatus::ZeroByPropagation;
    rep.defect = std::move(d);
    return rep;
}

std::pair<bool, std::optional<BigInt>> congruence_check(const WeierstrassCurve& E1,
                                                        const WeierstrassCurve& E2, const BigInt& p,
                                                        const BigInt& bound) {
    if (bound > 10000) throw std::domain_error("congruence_check: bound too large");
    BigInt N1 = E1.discriminant(), N2 = E2.discriminant();
    for (BigInt l = 2; l <= bound; ++l) {
        if (!is_prime(l)) continue;
        if (l == p || N1 % l == 0 || N2 % l == 0) continue;
        BigInt a1 = trace_of_frobenius(E1, l);
        BigInt a2 = trace_of_frobenius(E2, l);
        if (mod_floor(a1 - a2, p) != 0) return {false, l};
    }
    return {true, std::nullopt};
}

FamilyFixture fixture_from_json_text(const std::string& text) {
    json j = json::parse(text);
    FamilyFixture f;
    f.p = BigInt(j.at("p").get<int>());
    f.name = j.at("name").get<std::string>();
    f.reference_label = j.at("reference").get<std::string>();
    auto parse_ainvs = [](const json& a) {
        std::array<BigInt, 5> out;
        for (int i = 0; i < 5; ++i)
            out[i] = a[i].is_string() ? BigInt(a[i].get<std::string>())
                                      : BigInt(a[i].get<long long>());
        return out;
    };
    if (j.contains("reference_ainvs")) f.reference_ainvs = parse_ainvs(j["reference_ainvs"]);
    auto parse_iw = [](const json& e) {
        IwasawaData iw;
        iw.p = e.at("p").get<int>();
        auto opt = [&](const char* k) -> std::optional<int> {
            if (!e.contains(k) || e[k].is_null()) return std::nullopt;
            return e[k].get<int>();
        };
        iw.lambda_plus = opt("lambda_plus");
        iw.lambda_minus = opt("lambda_minus");
        iw.mu_plus = opt("mu_plus");
        iw.mu_minus = opt("mu_minus");
        return iw;
    };
    for (const auto& m : j.at("members")) {
        FamilyMember fm;
        fm.t = m.at("t").get<long>();
        if (m.contains("label")) fm.label = m["label"].get<std::string>();
        if (m.contains("ainvs")) fm.ainvs = parse_ainvs(m["ainvs"]);
        if (m.contains("published") && !m["published"].is_null())
            fm.published = parse_iw(m["published"]);
        f.members.push_back(std::move(fm));
    }
    return f;
}

FamilyFixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("fixture not found: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return fixture_from_json_text(ss.str());
}

namespace {

WeierstrassCurve resolve_member(const std::optional<std::array<BigInt, 5>>& ainvs,
                                const std::string& label, LmfdbClient& client) {
    if (ainvs) return WeierstrassCurve((*ainvs)[0], (*ainvs)[1], (*ainvs)[2], (*ainvs)[3],
                                       (*ainvs)[4]);
    if (label.empty()) throw std::runtime_error("family member has neither ainvs nor label");
    return client.fetch_by_label(label).curve();
}

}  // namespace

FamilyRunResult run_family(const FamilyFixture& fixture, LmfdbClient& client, int parallel) {
    FamilyRunResult out;
    out.fixture = fixture;
    const BigInt& p = fixture.p;

    // reference: calibrate rho from published invariants
    WeierstrassCurve ref = resolve_member(fixture.reference_ainvs, fixture.reference_label, client);
    HypOneVerdict refv = check_hyp1(ref, p);
    if (!refv.ok()) throw std::runtime_error("fixture reference fails Hyp 1");
    CurveRecord refrec;
    bool have_refrec = true;
    try {
        refrec = client.fetch_by_label(fixture.reference_label);
    } catch (const record_not_found&) {
        have_refrec = false;
    }
    std::optional<IwasawaData> published;
    if (have_refrec && refrec.iwasawa) published = refrec.iwasawa;
    if (!published)
        throw std::runtime_error("fixture reference has no published Iwasawa invariants");
    DefectReport refd = defect(ref, p);
    auto [rp, rm] = calibrate_rho(refd, fixture.reference_label, *published);

    LambdaReport refrep;
    refrep.curve = minimal_model(ref).first.to_label_string();
    refrep.label = fixture.reference_label;
    refrep.p = p;
    refrep.rho_plus = rp.rho;
    refrep.rho_minus = rm.rho;
    refrep.delta = refd.delta;
    refrep.lambda_plus = rp.rho + refd.delta;
    refrep.lambda_minus = rm.rho + refd.delta;
    refrep.mu_status = MuStatus::ZeroByReference;
    refrep.defect = refd;
    refrep.hyp1 = refv;
    refrep.matches_published = (*published->lambda_plus == refrep.lambda_plus &&
                                *published->lambda_minus == refrep.lambda_minus);
    out.reports.push_back(refrep);

    // members (deterministic aggregation in fixture order)
    std::vector<LambdaReport> mreps(fixture.members.size());
    auto work = [&](size_t i) {
        const FamilyMember& m = fixture.members[i];
        LambdaReport rep;
        try {
            WeierstrassCurve E = resolve_member(m.ainvs, m.label, client);
            rep = predict_lambda(E, p, rp, rm);
            rep.label = m.label;
            if (!rep.discarded) {
                // congruence sanity screen against the reference
                auto [ok, witness] = congruence_check(E, ref, p, 100);
                if (!ok)
                    rep.warnings.push_back("congruence screen failed at l=" + witness->str());
                // splitting-number discrepancy annotations are attached by the
                // oracle cross-check below
                for (const auto& e : rep.defect->entries) {
                    auto trace = splitting_number_oracle(e.l, p, 8);
                    if (trace.back() != e.s.s)
                        rep.warnings.push_back("splitting oracle disagrees at l=" + e.l.str());
                }
                if (m.published) {
                    bool match = true;
                    if (m.published->lambda_plus && *m.published->lambda_plus != rep.lambda_plus)
                        match = false;
                    if (m.published->lambda_minus && *m.published->lambda_minus != rep.lambda_minus)
                        match = false;
                    rep.matches_published = match;
                    if (!match)
                        rep.warnings.push_back(
                            "computed lambda disagrees with published value (computed value "
                            "drives the report)");
                }
            }
        } catch (const std::exception& ex) {
            rep.p = p;
            rep.label = m.label;
            rep.discarded = true;
            rep.discard_reason = std::string("error: ") + ex.what();
        }
        mreps[i] = std::move(rep);
    };

    if (parallel <= 1) {
        for (size_t i = 0; i < fixture.members.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < parallel; ++t)
            pool.emplace_back([&] {
                for (size_t i = next++; i < fixture.members.size(); i = next++) work(i);
            });
        for (auto& th : pool) th.join();
    }
    for (auto& r : mreps) out.reports.push_back(std::move(r));

    // family invariant: lambda_plus - lambda_minus constant across members
    std::optional<BigInt> diff;
    for (const auto& r : out.reports) {
        if (r.discarded) continue;
        BigInt d = r.lambda_plus - r.lambda_minus;
        if (!diff)
            diff = d;
        else if (*diff != d)
            out.lambda_difference_constant = false;
    }
    if (!out.lambda_difference_constant)
        out.warnings.push_back("lambda_plus - lambda_minus is not constant across the family");
    return out;
}

}  // namespace iwss
