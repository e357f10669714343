#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "iwss/bigint.hpp"
#include "iwss/ec.hpp"

namespace iwss {

struct record_not_found : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct network_unavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IwasawaData {
    int p = 0;
    // absent values stay unset; LMFDB coverage is partial
    std::optional<int> lambda_plus, lambda_minus, mu_plus, mu_minus;
};

struct LocalDataEntry {
    BigInt p;
    std::string kodaira;
    int f = 0;
    BigInt c = 1;
};

struct CurveRecord {
    std::string label;
    std::array<BigInt, 5> ainvs{};
    BigInt conductor = 0;
    std::vector<LocalDataEntry> local_data;
    std::optional<IwasawaData> iwasawa;
    std::string source;  // remote | cache | fixture
    std::string retrieved_at;

    WeierstrassCurve curve() const {
        return WeierstrassCurve(ainvs[0], ainvs[1], ainvs[2], ainvs[3], ainvs[4]);
    }
};

CurveRecord record_from_json_text(const std::string& text, const std::string& source);
std::string record_to_json_text(const CurveRecord& rec);

struct ClientOptions {
    std::string cache_dir;     // default: $IWSS_LMFDB_CACHE or ./lmfdb-cache
    std::string fixture_dir;   // default: $IWSS_DATA_DIR/fixtures/curves
    bool offline = false;      // $IWSS_OFFLINE=1 forces true
    int min_request_gap_ms = 750;
    std::string host = "www.lmfdb.org";
};

// Label-keyed curve store: cache, then shipped fixtures, then (unless offline)
// the LMFDB REST API. Internally synchronized.
class LmfdbClient {
  public:
    explicit LmfdbClient(ClientOptions opts = ClientOptions());
    static ClientOptions options_from_env();

    CurveRecord fetch_by_label(const std::string& label);

    // Recomputes conductor, local data and a_p from the a-invariants and
    // reports any disagreement with the stored record (mismatches are data).
    static std::vector<std::string> cross_check(const CurveRecord& rec);

    bool offline() const { return opts_.offline; }

  private:
    ClientOptions opts_;
    std::mutex mu_;
    std::optional<CurveRecord> load_from_dir(const std::string& dir, const std::string& label,
                                             const std::string& source);
    CurveRecord fetch_remote(const std::string& label);
    void store_cache(const CurveRecord& rec);
};

}  // namespace iwss
