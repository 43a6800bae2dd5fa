#ifndef SMF_IO_HPP
#define SMF_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "smf/formal_fj.hpp"
#include "smf/paramodular.hpp"
#include "smf/series.hpp"

namespace smf {

using Json = nlohmann::ordered_json;

// Coefficient file schema: exact rationals as strings, keys as row-major
// integer matrices, header pinning genus/weight/scale/trunc. The scale is
// fixed to 8 (keys are E = 8T).
Json series_to_json(const SiegelFourierSeries& f);
SiegelFourierSeries series_from_json(const Json& j);

Json fourier_table_to_json(const FourierTable& t);
FourierTable fourier_table_from_json(const Json& j);

Json paramodular_table_to_json(const ParamodularTable& t);
ParamodularTable paramodular_table_from_json(const Json& j);

Json fj_to_json(const FormalFJSeries& s);
FormalFJSeries fj_from_json(const Json& j);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

uint64_t fnv64_file(const std::string& path);

// Deterministic run report: one entry per check, witnesses included, byte
// stable for a fixed seed.
struct ReportCheck {
    std::string name;
    bool pass = false;
    Json details;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, uint64_t>> inputs;  // path, fnv64
    uint64_t seed = 0;
    std::vector<ReportCheck> checks;
    std::vector<std::pair<std::string, int64_t>> timings_ms;
    bool inconclusive = false;

    void add(const std::string& name, bool pass, Json details = Json::object());
    bool pass() const;
    // 0 pass, 1 verification failure, 3 inconclusive
    int exit_code() const;
    Json to_json() const;
};

}  // namespace smf

#endif
