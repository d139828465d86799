#pragma once

// The configuration file format and the two-part report (human summary +
// stable machine-readable key=value lines).
//
//   # comment
//   factors: 1 2
//   prime: 32003        (optional)
//   seed: 42            (optional)
//   labels: a b c d     (optional, one token per point)
//   point: 1 1 | 1 0 0
//   point: 1 2 | 0 1 0

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acm/geometry.hpp"

namespace acm {

struct ConfigData {
    FactorShape shape;
    std::vector<std::vector<std::vector<std::int64_t>>> points;
    std::optional<std::uint64_t> prime;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> labels;
};

ConfigData parse_config(const std::string& text);
std::string serialize_config(const ConfigData& d);

template <class K>
Configuration<K> to_configuration(const ConfigData& d, const K& unit) {
    return Configuration<K>::from_integers(d.shape, d.points, unit);
}

struct Report {
    std::string human;
    std::vector<std::pair<std::string, std::string>> machine;

    void line(const std::string& s) { human += s + "\n"; }
    void kv(const std::string& k, const std::string& v) { machine.emplace_back(k, v); }
    void kv(const std::string& k, long long v) { machine.emplace_back(k, std::to_string(v)); }
    void kv(const std::string& k, bool v) { machine.emplace_back(k, v ? "true" : "false"); }
    std::string machine_text() const;
};

// The field unit for a validated prime (primality and size are checked
// here once, not per element).
Fp fp_unit(std::uint64_t prime);

}  // namespace acm
