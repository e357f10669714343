#include "iwss/lmfdb.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#endif

namespace iwss {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

BigInt big_from_json(const json& v) {
    if (v.is_string()) return BigInt(v.get<std::string>());
    if (v.is_number_integer()) return BigInt(v.get<long long>());
    throw std::runtime_error("malformed record: expected integer or string");
}

bool label_ok(const std::string& label) {
    if (label.empty() || label.size() > 32) return false;
    for (char c : label)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.') return false;
    return true;
}

}  // namespace

CurveRecord record_from_json_text(const std::string& text, const std::string& source) {
    json j = json::parse(text);
    CurveRecord rec;
    rec.label = j.at("label").get<std::string>();
    auto arr = j.at("ainvs");
    if (arr.size() != 5) throw std::runtime_error("malformed record: ainvs must have 5 entries");
    for (int i = 0; i < 5; ++i) rec.ainvs[i] = big_from_json(arr[i]);
    rec.conductor = big_from_json(j.at("conductor"));
    if (j.contains("local_data")) {
        for (const auto& e : j["local_data"]) {
            LocalDataEntry le;
            le.p = big_from_json(e.at("p"));
            le.kodaira = e.at("kodaira").get<std::string>();
            le.f = e.at("f").get<int>();
            le.c = big_from_json(e.at("c"));
            rec.local_data.push_back(le);
        }
    }
    if (j.contains("iwasawa") && !j["iwasawa"].is_null()) {
        IwasawaData iw;
        const auto& e = j["iwasawa"];
        iw.p = e.at("p").get<int>();
        auto opt = [&](const char* k) -> std::optional<int> {
            if (!e.contains(k) || e[k].is_null()) return std::nullopt;
            return e[k].get<int>();
        };
        iw.lambda_plus = opt("lambda_plus");
        iw.lambda_minus = opt("lambda_minus");
        iw.mu_plus = opt("mu_plus");
        iw.mu_minus = opt("mu_minus");
        rec.iwasawa = iw;
    }
    rec.source = source;
    if (j.contains("retrieved_at")) rec.retrieved_at = j["retrieved_at"].get<std::string>();
    // validate nonsingularity
    rec.curve();
    return rec;
}

std::string record_to_json_text(const CurveRecord& rec) {
    json j;
    j["label"] = rec.label;
    j["ainvs"] = json::array();
    for (const auto& a : rec.ainvs) j["ainvs"].push_back(a.str());
    j["conductor"] = rec.conductor.str();
    j["local_data"] = json::array();
    for (const auto& e : rec.local_data) {
        j["local_data"].push_back(
            {{"p", e.p.str()}, {"kodaira", e.kodaira}, {"f", e.f}, {"c", e.c.str()}});
    }
    if (rec.iwasawa) {
        json iw;
        iw["p"] = rec.iwasawa->p;
        auto put = [&](const char* k, const std::optional<int>& v) {
            if (v)
                iw[k] = *v;
            else
                iw[k] = nullptr;
        };
        put("lambda_plus", rec.iwasawa->lambda_plus);
        put("lambda_minus", rec.iwasawa->lambda_minus);
        put("mu_plus", rec.iwasawa->mu_plus);
        put("mu_minus", rec.iwasawa->mu_minus);
        j["iwasawa"] = iw;
    } else {
        j["iwasawa"] = nullptr;
    }
    j["source"] = rec.source;
    j["retrieved_at"] = rec.retrieved_at;
    return j.dump(2);
}

ClientOptions LmfdbClient::options_from_env() {
    ClientOptions o;
    if (const char* c = std::getenv("IWSS_LMFDB_CACHE")) o.cache_dir = c;
    if (o.cache_dir.empty()) o.cache_dir = "lmfdb-cache";
    std::string data = "data";
    if (const char* d = std::getenv("IWSS_DATA_DIR")) data = d;
    o.fixture_dir = data + "/fixtures/curves";
    if (const char* off = std::getenv("IWSS_OFFLINE")) o.offline = std::string(off) == "1";
    return o;
}

LmfdbClient::LmfdbClient(ClientOptions opts) : opts_(std::move(opts)) {
    if (opts_.cache_dir.empty() || opts_.fixture_dir.empty()) {
        ClientOptions env = options_from_env();
        if (opts_.cache_dir.empty()) opts_.cache_dir = env.cache_dir;
        if (opts_.fixture_dir.empty()) opts_.fixture_dir = env.fixture_dir;
    }
}

std::optional<CurveRecord> LmfdbClient::load_from_dir(const std::string& dir,
                                                      const std::string& label,
                                                      const std::string& source) {
    fs::path p = fs::path(dir) / (label + ".json");
    if (!fs::exists(p)) return std::nullopt;
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return record_from_json_text(ss.str(), source);
}

void LmfdbClient::store_cache(const CurveRecord& rec) {
    fs::create_directories(opts_.cache_dir);
    fs::path p = fs::path(opts_.cache_dir) / (rec.label + ".json");
    std::ofstream out(p);
    out << record_to_json_text(rec);
}

CurveRecord LmfdbClient::fetch_remote(const std::string& label) {
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
    static std::chrono::steady_clock::time_point last_request{};
    auto elapsed = std::chrono::steady_clock::now() - last_request;
    auto gap = std::chrono::milliseconds(opts_.min_request_gap_ms);
    if (elapsed < gap)
        std::this_thread::sleep_for(gap - elapsed);
    last_request = std::chrono::steady_clock::now();

    httplib::SSLClient cli(opts_.host);
    cli.set_connection_timeout(10);
    cli.set_read_timeout(20);
    // ec_curvedata keyed by Cremona label, falling back to the LMFDB label
    for (const char* key : {"Clabel", "lmfdb_label"}) {
        std::string path = std::string("/api/ec_curvedata/?_format=json&_fields=ainvs,conductor&") +
                           key + "=" + label;
        auto res = cli.Get(path.c_str());
        if (!res || res->status != 200) continue;
        json j = json::parse(res->body, nullptr, false);
        if (j.is_discarded() || !j.contains("data") || j["data"].empty()) continue;
        const auto& row = j["data"][0];
        CurveRecord rec;
        rec.label = label;
        auto arr = row.at("ainvs");
        for (int i = 0; i < 5; ++i) rec.ainvs[i] = big_from_json(arr[i]);
        rec.conductor = big_from_json(row.at("conductor"));
        // local data recomputed on our side
        auto N = conductor(rec.curve());
        for (const auto& [p, e] : N.factors) {
            auto ld = tate_local(minimal_model(rec.curve()).first, p);
            rec.local_data.push_back({p, ld.kodaira, ld.f, ld.c});
        }
        rec.source = "remote";
        rec.retrieved_at = now_iso8601();
        return rec;
    }
    throw record_not_found("label not found on remote: " + label);
#else
    (void)label;
    throw network_unavailable("built without TLS support; remote fetch unavailable");
#endif
}

CurveRecord LmfdbClient::fetch_by_label(const std::string& label) {
    if (!label_ok(label)) throw std::invalid_argument("malformed label: " + label);
    std::lock_guard<std::mutex> lock(mu_);
    if (auto rec = load_from_dir(opts_.cache_dir, label, "cache")) return *rec;
    if (auto rec = load_from_dir(opts_.fixture_dir, label, "fixture")) return *rec;
    if (opts_.offline)
        throw record_not_found("offline mode and no cached/fixture record for " + label);
    CurveRecord rec = fetch_remote(label);
    store_cache(rec);
    return rec;
}

std::vector<std::string> LmfdbClient::cross_check(const CurveRecord& rec) {
    std::vector<std::string> mismatches;
    WeierstrassCurve E = rec.curve();
    Factorization N = conductor(E);
    if (N.value() != rec.conductor)
        mismatches.push_back("conductor: recomputed " + N.value().str() + " != recorded " +
                             rec.conductor.str());
    auto [Em, tr] = minimal_model(E);
    for (const auto& e : rec.local_data) {
        LocalReductionData ld = tate_local(Em, e.p);
        if (ld.kodaira != e.kodaira)
            mismatches.push_back("kodaira at " + e.p.str() + ": recomputed " + ld.kodaira +
                                 " != recorded " + e.kodaira);
        if (ld.f != e.f)
            mismatches.push_back("f at " + e.p.str() + ": recomputed " + std::to_string(ld.f) +
                                 " != recorded " + std::to_string(e.f));
        if (ld.c != e.c)
            mismatches.push_back("c at " + e.p.str() + ": recomputed " + ld.c.str() +
                                 " != recorded " + e.c.str());
    }
    return mismatches;
}

}  // namespace iwss
