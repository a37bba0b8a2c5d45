#include "modspace/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace modspace {

namespace {

// Single registry so set()/dump() can't drift apart.
struct Entry {
    std::function<void(Config&, const std::string&)> set;
    std::function<std::string(const Config&)> get;
};

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw std::invalid_argument("trailing junk in number: '" + s + "'");
    return v;
}

long long parse_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw std::invalid_argument("trailing junk in integer: '" + s + "'");
    return v;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const std::map<std::string, Entry>& registry() {
#define MS_DBL(name) \
    {#name, {[](Config& c, const std::string& s) { c.name = parse_double(s); }, \
             [](const Config& c) { return fmt_double(c.name); }}}
#define MS_INT(name) \
    {#name, {[](Config& c, const std::string& s) { c.name = static_cast<int>(parse_int(s)); }, \
             [](const Config& c) { return std::to_string(c.name); }}}
#define MS_SIZE(name) \
    {#name, {[](Config& c, const std::string& s) { c.name = static_cast<std::size_t>(parse_int(s)); }, \
             [](const Config& c) { return std::to_string(c.name); }}}
    static const std::map<std::string, Entry> reg = {
        MS_DBL(tol_identity),
        MS_DBL(tol_geometry),
        MS_DBL(blowup_threshold),
        MS_DBL(newton_residual),
        MS_INT(newton_max_iter),
        MS_DBL(newton_fd_step),
        MS_INT(lap_max_level),
        MS_SIZE(lap_budget),
        MS_DBL(lap_error_floor),
        MS_SIZE(cycle_budget),
        MS_INT(cycle_max_period),
        MS_DBL(cycle_tol),
        MS_DBL(barrier_sigma1_min),
        MS_DBL(barrier_step),
        MS_DBL(barrier_snap),
        MS_DBL(demo_anchor_right_s1),
        MS_DBL(demo_anchor_right_s2),
        MS_DBL(demo_anchor_wedge_s1),
        MS_DBL(demo_anchor_wedge_s2),
        MS_INT(demo_scan_samples),
        MS_DBL(demo_witness_tol),
        MS_INT(threads),
        MS_INT(sweep_max_level),
        MS_SIZE(sweep_lap_budget),
    };
#undef MS_DBL
#undef MS_INT
#undef MS_SIZE
    return reg;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

void Config::set(const std::string& key, const std::string& value) {
    auto it = registry().find(key);
    if (it == registry().end())
        throw std::invalid_argument("unknown config key '" + key + "'");
    it->second.set(*this, value);
}

void Config::merge_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        set(trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
    }
}

Config Config::load_default() {
    Config c;
    if (const char* env = std::getenv("MODSPACE_CONFIG")) {
        if (*env) c.merge_file(env);
    }
    return c;
}

Config Config::load_file(const std::string& path) {
    Config c = load_default();
    c.merge_file(path);
    return c;
}

std::string Config::dump() const {
    std::ostringstream out;
    for (const auto& [key, entry] : registry())
        out << key << " = " << entry.get(*this) << "\n";
    return out.str();
}

} // namespace modspace
