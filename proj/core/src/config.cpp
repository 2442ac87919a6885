#include "jrcsim/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jrcsim {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw std::invalid_argument("config: " + field + " " + why);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

void SystemConfig::validate() const {
    if (n_tx < 1) fail("n_tx", "must be >= 1");
    if (n_rx < 1) fail("n_rx", "must be >= 1");
    if (n_rx % 2 != 0) fail("n_rx", "must be even");
    if (n_rf < 1) fail("n_rf", "must be >= 1");
    if (n_rf > n_tx) fail("n_rf", "must not exceed n_tx");
    if (n_clusters < 1) fail("n_clusters", "must be >= 1");
    if (n_targets < 1) fail("n_targets", "must be >= 1");
    if (n_targets > n_tx) fail("n_targets", "must not exceed n_tx");
    if (rho < 0.0 || rho > 1.0) fail("rho", "must lie in [0,1]");
    if (p_max_com <= 0.0) fail("p_max_com", "must be > 0");
    if (p_max_rad <= 0.0) fail("p_max_rad", "must be > 0");
    if (spacing_ratio <= 0.0) fail("spacing_ratio", "must be > 0");
}

SystemConfig parse_config_text(const std::string& text) {
    SystemConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "n_tx") cfg.n_tx = std::stoi(value);
            else if (key == "n_rx") cfg.n_rx = std::stoi(value);
            else if (key == "n_rf") cfg.n_rf = std::stoi(value);
            else if (key == "n_clusters") cfg.n_clusters = std::stoi(value);
            else if (key == "n_targets") cfg.n_targets = std::stoi(value);
            else if (key == "rho") cfg.rho = std::stod(value);
            else if (key == "p_max_com") cfg.p_max_com = std::stod(value);
            else if (key == "p_max_rad") cfg.p_max_rad = std::stod(value);
            else if (key == "snr_db") cfg.snr_db = std::stod(value);
            else if (key == "spacing_ratio") cfg.spacing_ratio = std::stod(value);
            else
                throw std::invalid_argument("config: unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            fail(key, "has unparsable value '" + value + "'");
        }
    }
    cfg.validate();
    return cfg;
}

SystemConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace jrcsim
