// Command-line surface for the local-invariant / Iwasawa-prediction pipeline.
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "iwss/report.hpp"

using namespace iwss;
using nlohmann::json;

namespace {

int run_guarded(bool as_json, const std::string& command, const json& inputs,
                const std::function<std::pair<json, std::vector<std::string>>()>& body,
                const std::function<void(const json&)>& human) {
    try {
        auto [result, warnings] = body();
        json env = make_envelope(command, inputs, result, warnings);
        if (as_json) {
            std::cout << env.dump(2) << "\n";
        } else {
            human(result);
            for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
        }
        return 0;
    } catch (const std::exception& ex) {
        json env = {{"command", command}, {"inputs", inputs},   {"result", nullptr},
                    {"warnings", json::array()}, {"status", "error"}, {"error", ex.what()}};
        if (as_json)
            std::cout << env.dump(2) << "\n";
        else
            std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}

WeierstrassCurve curve_from_arg(const std::string& arg, LmfdbClient& client) {
    if (!arg.empty() && (arg[0] == '[' || arg[0] == '-' || std::isdigit(arg[0])))
        return WeierstrassCurve::parse(arg);
    return client.fetch_by_label(arg).curve();
}

std::string dims_line(const DefectReport& d) {
    std::string s;
    for (const auto& e : d.entries) {
        if (!s.empty()) s += ", ";
        s += e.l.str() + ": s=" + e.s.s.str() + " dim=" + std::to_string(e.dim.dim);
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"supersingular Iwasawa invariant calculator"};
    app.require_subcommand(1);
    bool as_json = false;
    bool offline = false;
    app.add_flag("--json", as_json, "emit a JSON report envelope");
    app.add_flag("--offline", offline, "never touch the network");

    auto client_opts = [&]() {
        ClientOptions o = LmfdbClient::options_from_env();
        if (offline) o.offline = true;
        return o;
    };

    // curve report
    auto* curve_cmd = app.add_subcommand("curve", "curve invariants and local data");
    auto* report_cmd = curve_cmd->add_subcommand("report", "full per-curve report");
    std::string curve_arg, p_arg = "3";
    report_cmd->add_option("--curve", curve_arg, "a-invariants [a1,..,a6] | [a4,a6] | label")
        ->required();
    report_cmd->add_option("--p", p_arg, "supersingular prime p");
    report_cmd->callback([&] {
        LmfdbClient client(client_opts());
        json inputs = {{"curve", curve_arg}, {"p", p_arg}};
        std::exit(run_guarded(as_json, "curve report", inputs, [&] {
            WeierstrassCurve E = curve_from_arg(curve_arg, client);
            BigInt p(p_arg);
            auto [Em, tr] = minimal_model(E);
            json result;
            result["input_curve"] = E.to_label_string();
            result["minimal_model"] = Em.to_label_string();
            result["u"] = tr.u.str();
            result["c4"] = Em.c4().str();
            result["c6"] = Em.c6().str();
            result["disc"] = Em.discriminant().str();
            Factorization N = conductor(Em);
            result["conductor"] = to_json(N);
            json local = json::array();
            for (const auto& [l, e] : N.factors) local.push_back(to_json(tate_local(Em, l)));
            result["local_data"] = local;
            result["hyp1"] = to_json(check_hyp1(Em, p));
            return std::make_pair(result, std::vector<std::string>{});
        }, [&](const json& r) {
            std::cout << "curve " << r["minimal_model"].get<std::string>() << "\n"
                      << "conductor " << r["conductor"]["value"].get<std::string>() << "\n";
            for (const auto& ld : r["local_data"])
                std::cout << "  p=" << ld["p"].get<std::string>() << " " << ld["kodaira"].get<std::string>()
                          << " f=" << ld["f"] << " c=" << ld["c"].get<std::string>() << " ("
                          << ld["type"].get<std::string>() << ")\n";
            std::cout << "a_p(" << p_arg << ") = " << r["hyp1"]["a_p"].get<std::string>()
                      << (r["hyp1"]["supersingular"].get<bool>() ? " (supersingular)" : " (rejected)")
                      << "\n";
        }));
    });

    // torsion
    auto* torsion_cmd = app.add_subcommand("torsion", "local p-torsion dimension");
    std::string t_curve, t_p = "3", t_ell, t_layer = "base";
    torsion_cmd->add_option("--curve", t_curve)->required();
    torsion_cmd->add_option("--p", t_p);
    torsion_cmd->add_option("--ell", t_ell)->required();
    torsion_cmd->add_option("--layer", t_layer)->check(CLI::IsMember({"base", "first"}));
    torsion_cmd->callback([&] {
        LmfdbClient client(client_opts());
        json inputs = {{"curve", t_curve}, {"p", t_p}, {"ell", t_ell}, {"layer", t_layer}};
        std::exit(run_guarded(as_json, "torsion", inputs, [&] {
            WeierstrassCurve E = minimal_model(curve_from_arg(t_curve, client)).first;
            TorsionDimension td = t_layer == "base"
                                      ? torsion_dim_base(E, BigInt(t_p), BigInt(t_ell))
                                      : torsion_dim_first_layer(E, BigInt(t_p), BigInt(t_ell));
            return std::make_pair(to_json(td), std::vector<std::string>{});
        }, [](const json& r) {
            std::cout << "dim E(" << (r["layer"] == "base" ? "Q_l" : "L_w") << ")[p] = "
                      << r["dim"] << "  (l=" << r["l"].get<std::string>() << ")\n";
        }));
    });

    // split
    auto* split_cmd = app.add_subcommand("split", "splitting number in the cyclotomic tower");
    std::string s_ell, s_p = "3";
    int oracle_layers = 0;
    split_cmd->add_option("--ell", s_ell)->required();
    split_cmd->add_option("--p", s_p);
    split_cmd->add_option("--oracle-layers", oracle_layers, "also print the layer-count oracle");
    split_cmd->callback([&] {
        json inputs = {{"ell", s_ell}, {"p", s_p}, {"oracle_layers", oracle_layers}};
        std::exit(run_guarded(as_json, "split", inputs, [&] {
            SplittingNumber s = splitting_number(BigInt(s_ell), BigInt(s_p));
            json result = to_json(s);
            std::vector<std::string> warnings;
            if (oracle_layers > 0) {
                json tr = json::array();
                for (const auto& v : splitting_number_oracle(BigInt(s_ell), BigInt(s_p), oracle_layers))
                    tr.push_back(v.str());
                result["oracle_trace"] = tr;
                if (BigInt(tr.back().get<std::string>()) != s.s)
                    warnings.push_back("oracle did not stabilize at s within the requested layers");
            }
            return std::make_pair(result, warnings);
        }, [](const json& r) {
            std::cout << "s(" << r["l"].get<std::string>() << ") = " << r["s"].get<std::string>()
                      << "  (k = " << r["k"] << ")\n";
            if (r.contains("oracle_trace")) {
                std::cout << "layer counts:";
                for (const auto& v : r["oracle_trace"]) std::cout << " " << v.get<std::string>();
                std::cout << "\n";
            }
        }));
    });

    // defect
    auto* defect_cmd = app.add_subcommand("defect", "defect delta(E)");
    std::string d_curve, d_p = "3";
    defect_cmd->add_option("--curve", d_curve)->required();
    defect_cmd->add_option("--p", d_p);
    defect_cmd->callback([&] {
        LmfdbClient client(client_opts());
        json inputs = {{"curve", d_curve}, {"p", d_p}};
        std::exit(run_guarded(as_json, "defect", inputs, [&] {
            DefectReport d = defect(curve_from_arg(d_curve, client), BigInt(d_p));
            return std::make_pair(to_json(d), std::vector<std::string>{});
        }, [](const json& r) {
            std::cout << "delta = " << r["delta"].get<std::string>() << "\n";
            for (const auto& e : r["entries"])
                std::cout << "  l=" << e["l"].get<std::string>() << " s=" << e["s"].get<std::string>()
                          << " dim=" << e["dim"] << " -> " << e["contribution"].get<std::string>()
                          << "\n";
        }));
    });

    // lambda
    auto* lambda_cmd = app.add_subcommand("lambda", "predicted signed lambda invariants");
    std::string l_curve, l_p = "3", l_rp = "0", l_rm = "0";
    lambda_cmd->add_option("--curve", l_curve)->required();
    lambda_cmd->add_option("--p", l_p);
    lambda_cmd->add_option("--rho-plus", l_rp)->required();
    lambda_cmd->add_option("--rho-minus", l_rm)->required();
    lambda_cmd->callback([&] {
        LmfdbClient client(client_opts());
        json inputs = {{"curve", l_curve}, {"p", l_p}, {"rho_plus", l_rp}, {"rho_minus", l_rm}};
        std::exit(run_guarded(as_json, "lambda", inputs, [&] {
            RhoCalibration rp{BigInt(l_p), '+', "(cli)", 0, 0, BigInt(l_rp)};
            RhoCalibration rm{BigInt(l_p), '-', "(cli)", 0, 0, BigInt(l_rm)};
            LambdaReport rep =
                predict_lambda(curve_from_arg(l_curve, client), BigInt(l_p), rp, rm);
            return std::make_pair(to_json(rep), rep.warnings);
        }, [](const json& r) {
            if (r["discarded"].get<bool>()) {
                std::cout << "discarded: " << r["discard_reason"].get<std::string>() << "\n";
                return;
            }
            std::cout << "delta = " << r["delta"].get<std::string>()
                      << ", lambda+ = " << r["lambda_plus"].get<std::string>()
                      << ", lambda- = " << r["lambda_minus"].get<std::string>()
                      << ", mu: " << r["mu_status"].get<std::string>() << "\n";
        }));
    });

    // family run
    auto* family_cmd = app.add_subcommand("family", "family pipeline");
    auto* frun = family_cmd->add_subcommand("run", "run a family fixture");
    std::string fixture_path;
    int parallel = 1;
    frun->add_option("--fixture", fixture_path)->required();
    frun->add_option("--parallel", parallel)->check(CLI::Range(1, 64));
    frun->callback([&] {
        LmfdbClient client(client_opts());
        json inputs = {{"fixture", fixture_path}, {"parallel", parallel}};
        std::exit(run_guarded(as_json, "family run", inputs, [&] {
            FamilyRunResult res = run_family(load_fixture(fixture_path), client, parallel);
            std::vector<std::string> warnings = res.warnings;
            for (const auto& r : res.reports)
                for (const auto& w : r.warnings) warnings.push_back(r.label + ": " + w);
            return std::make_pair(to_json(res), warnings);
        }, [](const json& r) {
            std::cout << "family " << r["family"].get<std::string>() << " (p="
                      << r["p"].get<std::string>() << ")\n";
            for (const auto& rep : r["reports"]) {
                std::cout << "  " << (rep["label"].get<std::string>().empty()
                                          ? rep["curve"].get<std::string>()
                                          : rep["label"].get<std::string>());
                if (rep["discarded"].get<bool>())
                    std::cout << "  discarded (" << rep["discard_reason"].get<std::string>() << ")\n";
                else
                    std::cout << "  delta=" << rep["delta"].get<std::string>()
                              << " lambda+=" << rep["lambda_plus"].get<std::string>()
                              << " lambda-=" << rep["lambda_minus"].get<std::string>()
                              << " mu=" << rep["mu_status"].get<std::string>() << "\n";
            }
        }));
    });

    // fetch
    auto* fetch_cmd = app.add_subcommand("fetch", "fetch a curve record by label");
    std::string fetch_label;
    bool do_check = false;
    fetch_cmd->add_option("--label", fetch_label)->required();
    fetch_cmd->add_flag("--cross-check", do_check, "recompute local data and compare");
    fetch_cmd->callback([&] {
        LmfdbClient client(client_opts());
        json inputs = {{"label", fetch_label}, {"cross_check", do_check}};
        std::exit(run_guarded(as_json, "fetch", inputs, [&] {
            CurveRecord rec = client.fetch_by_label(fetch_label);
            std::vector<std::string> warnings;
            json result = to_json(rec);
            if (do_check) {
                auto mismatches = LmfdbClient::cross_check(rec);
                result["mismatches"] = mismatches;
                for (const auto& m : mismatches) warnings.push_back(m);
            }
            return std::make_pair(result, warnings);
        }, [](const json& r) {
            std::cout << r["label"].get<std::string>() << ": ainvs = [";
            for (size_t i = 0; i < 5; ++i)
                std::cout << r["ainvs"][i].get<std::string>() << (i + 1 < 5 ? "," : "");
            std::cout << "], N = " << r["conductor"].get<std::string>() << " (source "
                      << r["source"].get<std::string>() << ")\n";
        }));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage errors
    }
    return 0;
}
