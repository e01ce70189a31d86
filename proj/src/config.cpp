#include "wigner/config.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wigner {

std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string token;
    while (is >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("expected key=value, got '" + token + "'");
        std::string key = token.substr(0, eq);
        if (kv.count(key)) throw std::invalid_argument("duplicate key '" + key + "'");
        kv[key] = token.substr(eq + 1);
    }
    return kv;
}

namespace {

Rat take_rat(std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument("missing key '" + key + "'");
    Rat v = parse_rat(it->second);
    kv.erase(it);
    return v;
}

void reject_leftovers(const std::map<std::string, std::string>& kv, const std::string& what) {
    if (kv.empty()) return;
    std::string keys;
    for (const auto& [k, v] : kv) keys += (keys.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown key(s) for " + what + ": " + keys);
}

}  // namespace

AtomSpec parse_atom_spec(const std::string& text) {
    auto kv = parse_kv(text);
    auto it = kv.find("kind");
    if (it == kv.end()) throw std::invalid_argument("atom spec needs kind=...");
    std::string kind = it->second;
    kv.erase(it);

    AtomSpec spec;
    if (kind == "gauss-real") {
        spec = AtomSpec::gauss_real(take_rat(kv, "sigma2"));
    } else if (kind == "gauss-complex") {
        spec = AtomSpec::gauss_complex(take_rat(kv, "v"));
    } else if (kind == "rademacher") {
        spec = AtomSpec::rademacher();
    } else if (kind == "uniform-sym") {
        spec = AtomSpec::uniform_sym_h2(take_rat(kv, "h2"));
    } else if (kind == "two-point-sym") {
        Rat a2 = kv.count("m4") ? take_rat(kv, "m4") : take_rat(kv, "a2");
        if (kv.count("p"))
            spec = AtomSpec::two_point_sym(a2, take_rat(kv, "p"));
        else
            spec = AtomSpec::two_point_sym_m4(a2);
    } else if (kind == "two-point-asym") {
        Rat a = take_rat(kv, "a");
        spec = AtomSpec::two_point_asym(a, take_rat(kv, "b"));
    } else if (kind == "pareto-sym") {
        spec = AtomSpec::pareto_sym(take_rat(kv, "alpha"));
    } else {
        throw std::invalid_argument("unknown atom kind '" + kind + "'");
    }
    reject_leftovers(kv, "kind=" + kind);
    return spec;
}

EnsembleSpec parse_ensemble(const std::string& name, int n) {
    if (name == "goe") return EnsembleSpec::goe(n);
    if (name == "gue") return EnsembleSpec::gue(n);
    if (name == "rademacher")
        return {1, n, AtomSpec::rademacher(), AtomSpec::rademacher()};
    if (name == "pareto")
        return {1, n, AtomSpec::pareto_sym(Rat(11, 5)), AtomSpec::pareto_sym(Rat(11, 5))};
    if (name.rfind("two-point(", 0) == 0 && name.back() == ')') {
        auto kv = parse_kv(name.substr(10, name.size() - 11));
        Rat m4 = take_rat(kv, "m4");
        reject_leftovers(kv, "two-point ensemble");
        return {1, n, goe_diag_spec(), AtomSpec::two_point_sym_m4(m4)};
    }
    throw std::invalid_argument("unknown ensemble '" + name +
                                "' (try goe, gue, rademacher, pareto, two-point(m4=X), "
                                "or --diag/--offdiag)");
}

EnsembleSpec make_custom_ensemble(int beta, int n, const std::string& diag_kv,
                                  const std::string& offdiag_kv) {
    EnsembleSpec spec;
    spec.beta = beta;
    spec.n = n;
    spec.diag = parse_atom_spec(diag_kv);
    spec.offdiag = parse_atom_spec(offdiag_kv);
    spec.validate();
    return spec;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto notspace = line.find_first_not_of(" \t\r");
        if (notspace == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": empty key or value");
        if (kv.count(key))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": duplicate key '" + key + "'");
        kv[key] = value;
    }
    return kv;
}

void write_output_header(std::ostream& os,
                         const std::vector<std::pair<std::string, std::string>>& config,
                         std::uint64_t seed) {
    os << "# wigner-bridge " << kVersion << "\n";
    os << "# config:";
    for (const auto& [k, v] : config) os << " " << k << "=" << v;
    os << "\n";
    os << "# seed: " << seed << "\n";
}

}  // namespace wigner
