#pragma once

/**
 * @file specio.hpp
 * @brief Parsing and printing of system/class specs.  Two interchangeable
 *        forms: the compact text "n=<int> d=<int> m=<int>,<int>,..." and a
 *        JSON object {"n":..., "d":..., "m":[...]}.  Printing emits the
 *        padded multiplicity vector, so parse(print(x)) == x.
 */

#include <json.hpp>

#include "conelab/core.hpp"

namespace conelab {

namespace detail {

struct RawSpec {
    int n = 0;
    long long d = 0;
    std::vector<long long> m;
};

inline RawSpec parse_raw(const std::string& text) {
    RawSpec raw;
    std::string trimmed = text;
    const auto a = trimmed.find_first_not_of(" \t\r\n");
    const auto b = trimmed.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) throw std::invalid_argument("empty spec");
    trimmed = trimmed.substr(a, b - a + 1);

    if (trimmed.front() == '{') {
        nlohmann::json j = nlohmann::json::parse(trimmed, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded()) throw std::invalid_argument("spec: malformed JSON");
        if (!j.contains("n") || !j.contains("d"))
            throw std::invalid_argument("spec: JSON needs \"n\" and \"d\"");
        raw.n = j.at("n").get<int>();
        raw.d = j.at("d").get<long long>();
        if (j.contains("m")) raw.m = j.at("m").get<std::vector<long long>>();
        return raw;
    }

    bool saw_n = false, saw_d = false;
    std::istringstream is(trimmed);
    std::string tok;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("spec: expected key=value tokens, got '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        try {
            if (key == "n") {
                raw.n = std::stoi(val);
                saw_n = true;
            } else if (key == "d") {
                raw.d = std::stoll(val);
                saw_d = true;
            } else if (key == "m") {
                if (!val.empty()) {
                    std::istringstream ms(val);
                    std::string item;
                    while (std::getline(ms, item, ','))
                        raw.m.push_back(std::stoll(item));
                }
            } else {
                throw std::invalid_argument("spec: unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("spec: bad integer in '" + tok + "'");
        }
    }
    if (!saw_n || !saw_d) throw std::invalid_argument("spec: both n and d are required");
    return raw;
}

inline std::string print_raw(int n, long long d, const std::vector<long long>& m) {
    std::ostringstream os;
    os << "n=" << n << " d=" << d << " m=";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ',';
        os << m[i];
    }
    return os.str();
}

}  // namespace detail

inline LinearSystemSpec parse_system(const std::string& text) {
    auto raw = detail::parse_raw(text);
    return LinearSystemSpec(raw.n, raw.d, std::move(raw.m));
}

inline DivisorClass parse_class(const std::string& text) {
    auto raw = detail::parse_raw(text);
    return DivisorClass(raw.n, raw.d, std::move(raw.m));
}

inline std::string print_system(const LinearSystemSpec& L) {
    return detail::print_raw(L.n(), L.d(), L.mults());
}

inline std::string print_class(const DivisorClass& D) {
    return detail::print_raw(D.n(), D.d(), D.m());
}

inline nlohmann::json system_json(const LinearSystemSpec& L) {
    return nlohmann::json{{"n", L.n()}, {"d", L.d()}, {"m", L.mults()}};
}

inline nlohmann::json class_json(const DivisorClass& D) {
    return nlohmann::json{{"n", D.n()}, {"d", D.d()}, {"m", D.m()}};
}

/// mpz values as JSON numbers when they fit, decimal strings otherwise.
inline nlohmann::json int_json(const Int& v) {
    if (v.fits_slong_p()) return nlohmann::json(static_cast<long long>(v.get_si()));
    return nlohmann::json(v.get_str());
}

}  // namespace conelab
