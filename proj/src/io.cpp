#include "smf/io.hpp"

#include <fstream>
#include <stdexcept>

namespace smf {

namespace {

Json header_json(int genus, const Rational& weight, int64_t trunc, const std::string& field) {
    Json h;
    h["genus"] = genus;
    h["weight"] = rational_str(weight);
    h["scale"] = 8;
    h["trunc"] = trunc;
    h["coefficient_field"] = field;
    return h;
}

void check_header(const Json& j, const std::string& expected_field) {
    if (!j.contains("header")) throw std::invalid_argument("coefficient file: missing header");
    const Json& h = j.at("header");
    if (h.at("scale").get<int>() != 8)
        throw std::invalid_argument("coefficient file: unsupported scale (expected 8)");
    std::string field = h.at("coefficient_field").get<std::string>();
    if (expected_field == "rational" && field != "rational")
        throw std::invalid_argument("coefficient file: rational coefficients expected");
}

std::vector<int64_t> key_entries(const Json& e) {
    std::vector<int64_t> v;
    for (const auto& x : e.at("E")) v.push_back(x.get<int64_t>());
    return v;
}

void validate_key(const ExponentMatrix& e, int64_t trunc) {
    if (!is_psd(e)) throw std::invalid_argument("coefficient file: key not psd: " + e.str());
    if (e.trace() > trunc)
        throw std::invalid_argument("coefficient file: key exceeds trunc: " + e.str());
}

}  // namespace

Json series_to_json(const SiegelFourierSeries& f) {
    Json j;
    bool rational = true;
    for (const auto& [e, c] : f.coeffs)
        if (!c.is_real()) rational = false;
    j["header"] = header_json(f.genus, f.weight, f.trunc, rational ? "rational" : "gaussian");
    Json entries = Json::array();
    for (const auto& [e, c] : f.coeffs) {
        Json entry;
        entry["E"] = to_row_major(e);
        entry["re"] = rational_str(c.re);
        if (!rational) entry["im"] = rational_str(c.im);
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    return j;
}

SiegelFourierSeries series_from_json(const Json& j) {
    check_header(j, "any");
    const Json& h = j.at("header");
    int genus = h.at("genus").get<int>();
    SiegelFourierSeries f(genus, parse_rational(h.at("weight").get<std::string>()),
                          h.at("trunc").get<int64_t>());
    for (const auto& e : j.at("entries")) {
        ExponentMatrix key = from_row_major(genus, key_entries(e));
        validate_key(key, f.trunc);
        GaussianRational c(parse_rational(e.at("re").get<std::string>()),
                           e.contains("im") ? parse_rational(e.at("im").get<std::string>())
                                            : Rational(0));
        if (f.coeffs.count(key)) throw std::invalid_argument("coefficient file: duplicate key");
        if (!c.is_zero()) f.coeffs.emplace(key, c);
    }
    return f;
}

Json fourier_table_to_json(const FourierTable& t) {
    Json j;
    j["header"] = header_json(2, t.weight, t.trunc, "rational");
    Json entries = Json::array();
    for (const auto& [e, c] : t.coeffs) {
        Json entry;
        entry["E"] = to_row_major(e);
        entry["re"] = rational_str(c);
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    return j;
}

FourierTable fourier_table_from_json(const Json& j) {
    check_header(j, "rational");
    const Json& h = j.at("header");
    if (h.at("genus").get<int>() != 2)
        throw std::invalid_argument("fourier table: genus 2 expected");
    FourierTable t;
    t.weight = parse_rational(h.at("weight").get<std::string>());
    t.trunc = h.at("trunc").get<int64_t>();
    for (const auto& e : j.at("entries")) {
        ExponentMatrix key = from_row_major(2, key_entries(e));
        validate_key(key, t.trunc);
        if (t.coeffs.count(key)) throw std::invalid_argument("fourier table: duplicate key");
        Rational c = parse_rational(e.at("re").get<std::string>());
        if (sgn(c) != 0) t.coeffs.emplace(key, c);
    }
    return t;
}

Json paramodular_table_to_json(const ParamodularTable& t) {
    Json j = fourier_table_to_json(FourierTable{t.weight, t.trunc, t.coeffs});
    j["header"]["N"] = t.N;
    return j;
}

ParamodularTable paramodular_table_from_json(const Json& j) {
    FourierTable base = fourier_table_from_json(j);
    long long n = j.at("header").value("N", 1ll);
    return paramodular_table(base, n);  // lattice validation happens here
}

Json fj_to_json(const FormalFJSeries& s) {
    Json j;
    j["header"] = {{"kind", "formal-fj"},
                   {"genus", 2},
                   {"weight", rational_str(s.weight)},
                   {"denom", s.denom}};
    Json tables = Json::array();
    for (const auto& t : s.tables) {
        Json tj;
        tj["index"] = t.index;
        Json entries = Json::array();
        for (const auto& [key, c] : t.coeffs) {
            Json e;
            e["n"] = key.first;
            e["r"] = key.second;
            e["c"] = rational_str(c);
            entries.push_back(std::move(e));
        }
        tj["entries"] = std::move(entries);
        tables.push_back(std::move(tj));
    }
    j["tables"] = std::move(tables);
    return j;
}

FormalFJSeries fj_from_json(const Json& j) {
    const Json& h = j.at("header");
    if (h.at("kind").get<std::string>() != "formal-fj")
        throw std::invalid_argument("formal-fj file expected");
    FormalFJSeries s;
    s.weight = parse_rational(h.at("weight").get<std::string>());
    s.denom = h.at("denom").get<int64_t>();
    int64_t maxidx = -1;
    for (const auto& tj : j.at("tables")) maxidx = std::max(maxidx, tj.at("index").get<int64_t>());
    s.tables.resize(maxidx + 1);
    for (int64_t m = 0; m <= maxidx; ++m) {
        s.tables[m].index = m;
        s.tables[m].weight = s.weight;
        s.tables[m].denom = s.denom;
    }
    for (const auto& tj : j.at("tables")) {
        JacobiTable& t = s.tables[tj.at("index").get<int64_t>()];
        for (const auto& e : tj.at("entries")) {
            auto key = std::make_pair(e.at("n").get<int64_t>(), e.at("r").get<int64_t>());
            if (t.coeffs.count(key))
                throw std::invalid_argument("formal-fj file: duplicate key");
            t.coeffs.emplace(key, parse_rational(e.at("c").get<std::string>()));
        }
    }
    return s;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << j.dump(2) << "\n";
}

Json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    Json j;
    is >> j;
    return j;
}

uint64_t fnv64_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open: " + path);
    uint64_t h = 1469598103934665603ull;
    char c;
    while (is.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

void Report::add(const std::string& name, bool p, Json details) {
    checks.push_back({name, p, std::move(details)});
}

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

int Report::exit_code() const {
    if (inconclusive) return 3;
    return pass() ? 0 : 1;
}

Json Report::to_json() const {
    Json j;
    j["command"] = command;
    Json ins = Json::array();
    for (const auto& [path, hash] : inputs) {
        Json e;
        e["path"] = path;
        char buf[19];
        snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(hash));
        e["fnv64"] = buf;
        ins.push_back(std::move(e));
    }
    j["inputs"] = std::move(ins);
    j["seed"] = seed;
    Json cs = Json::array();
    for (const auto& c : checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.details.empty()) e["details"] = c.details;
        cs.push_back(std::move(e));
    }
    j["checks"] = std::move(cs);
    Json ts = Json::object();
    for (const auto& [name, ms] : timings_ms) ts[name] = ms;
    j["timings_ms"] = std::move(ts);
    j["pass"] = pass();
    j["inconclusive"] = inconclusive;
    return j;
}

}  // namespace smf
