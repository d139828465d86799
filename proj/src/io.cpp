#include "acm/io.hpp"

#include <sstream>

#include "acm/errors.hpp"
#include "acm/field.hpp"

namespace acm {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::int64_t parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw parse_error("bad integer '" + tok + "'", line);
        return v;
    } catch (const parse_error&) {
        throw;
    } catch (...) {
        throw parse_error("bad integer '" + tok + "'", line);
    }
}

std::uint64_t parse_uint(const std::string& s, int line) {
    std::int64_t v = parse_int(trim(s), line);
    if (v < 0) throw parse_error("expected a nonnegative integer", line);
    return static_cast<std::uint64_t>(v);
}

}  // namespace

ConfigData parse_config(const std::string& text) {
    ConfigData d;
    bool have_factors = false;
    int labels_line = 0;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (auto h = s.find('#'); h != std::string::npos) s = s.substr(0, h);
        s = trim(s);
        if (s.empty()) continue;
        auto colon = s.find(':');
        if (colon == std::string::npos) throw parse_error("expected 'key: value'", line);
        std::string key = trim(s.substr(0, colon));
        std::string val = trim(s.substr(colon + 1));

        if (key == "factors") {
            if (have_factors) throw parse_error("duplicate 'factors' line", line);
            std::vector<int> dims;
            for (const auto& t : tokens(val)) {
                std::int64_t a = parse_int(t, line);
                if (a < 1) throw invariant_error("factor dimensions must be >= 1", line);
                dims.push_back(static_cast<int>(a));
            }
            if (dims.empty()) throw parse_error("'factors' needs at least one dimension", line);
            d.shape = FactorShape(dims);
            have_factors = true;
        } else if (key == "prime") {
            if (d.prime) throw parse_error("duplicate 'prime' line", line);
            d.prime = parse_uint(val, line);
        } else if (key == "seed") {
            if (d.seed) throw parse_error("duplicate 'seed' line", line);
            d.seed = parse_uint(val, line);
        } else if (key == "labels") {
            if (!d.labels.empty()) throw parse_error("duplicate 'labels' line", line);
            d.labels = tokens(val);
            labels_line = line;
        } else if (key == "point") {
            if (!have_factors) throw parse_error("'factors' must precede 'point' lines", line);
            std::vector<std::vector<std::int64_t>> tuples;
            std::string part;
            std::istringstream ps(val);
            while (std::getline(ps, part, '|')) {
                std::vector<std::int64_t> c;
                for (const auto& t : tokens(part)) c.push_back(parse_int(t, line));
                tuples.push_back(std::move(c));
            }
            if (static_cast<int>(tuples.size()) != d.shape.factors())
                throw invariant_error("point has " + std::to_string(tuples.size()) + " tuples, expected " +
                                          std::to_string(d.shape.factors()),
                                      line);
            for (int i = 0; i < d.shape.factors(); ++i) {
                if (static_cast<int>(tuples[i].size()) != d.shape.dims[i] + 1)
                    throw invariant_error("tuple for factor " + std::to_string(i + 1) + " has length " +
                                              std::to_string(tuples[i].size()) + ", expected " +
                                              std::to_string(d.shape.dims[i] + 1),
                                          line);
                bool all_zero = true;
                for (std::int64_t v : tuples[i])
                    if (v != 0) { all_zero = false; break; }
                if (all_zero) throw invariant_error("coordinate tuple is identically zero", line);
            }
            d.points.push_back(std::move(tuples));
        } else {
            throw parse_error("unknown key '" + key + "'", line);
        }
    }
    if (!have_factors) throw parse_error("missing 'factors' line");
    if (!d.labels.empty() && d.labels.size() != d.points.size())
        throw invariant_error("labels count (" + std::to_string(d.labels.size()) + ") does not match points (" +
                                  std::to_string(d.points.size()) + ")",
                              labels_line);
    return d;
}

std::string serialize_config(const ConfigData& d) {
    std::ostringstream out;
    out << "factors:";
    for (int a : d.shape.dims) out << " " << a;
    out << "\n";
    if (d.prime) out << "prime: " << *d.prime << "\n";
    if (d.seed) out << "seed: " << *d.seed << "\n";
    if (!d.labels.empty()) {
        out << "labels:";
        for (const auto& l : d.labels) out << " " << l;
        out << "\n";
    }
    for (const auto& p : d.points) {
        out << "point:";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << " |";
            for (std::int64_t v : p[i]) out << " " << v;
        }
        out << "\n";
    }
    return out.str();
}

std::string Report::machine_text() const {
    std::string out;
    for (const auto& [k, v] : machine) out += k + "=" + v + "\n";
    return out;
}

Fp fp_unit(std::uint64_t prime) {
    if (prime <= 10000)
        throw invariant_error("prime must exceed 10^4 for randomization soundness, got " + std::to_string(prime));
    return Fp(1, prime);  // Fp's constructor checks primality and size
}

}  // namespace acm
