#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wigner/atoms.hpp"
#include "wigner/matrices.hpp"

namespace wigner {

inline constexpr const char* kVersion = "0.1.0";

// "kind=gauss-real sigma2=2" style key-value strings (space separated,
// values rational-friendly: "2", "1/2", "2.2").  Unknown keys are rejected.
std::map<std::string, std::string> parse_kv(const std::string& text);

AtomSpec parse_atom_spec(const std::string& text);

// Ensemble presets: goe, gue, rademacher, pareto, or "custom" assembled from
// explicit atom spec strings.  two-point(m4=X) keeps the GOE diagonal.
EnsembleSpec parse_ensemble(const std::string& name, int n);
EnsembleSpec make_custom_ensemble(int beta, int n, const std::string& diag_kv,
                                  const std::string& offdiag_kv);

// Config files: one "key = value" per line, '#' comments, keys validated by
// the caller against its known set.
std::map<std::string, std::string> read_config_file(const std::string& path);

// Every output file starts with the version, the resolved configuration and
// the seed, enough to reproduce it exactly.
void write_output_header(std::ostream& os,
                         const std::vector<std::pair<std::string, std::string>>& config,
                         std::uint64_t seed);

}  // namespace wigner
