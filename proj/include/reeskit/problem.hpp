#ifndef REESKIT_PROBLEM_HPP
#define REESKIT_PROBLEM_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "reeskit/errors.hpp"

namespace reeskit {

/// Field selection as written in a problem file or on the command line:
/// "qq" or "fp:<prime>".
struct FieldSpec {
    bool is_fp = false;
    std::uint32_t p = 0;

    static FieldSpec parse(const std::string& s) {
        if (s == "qq") return {false, 0};
        if (s.rfind("fp:", 0) == 0) {
            const std::string num = s.substr(3);
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                throw Error(ErrorCode::BadProblemFile, "field must be qq or fp:<prime>, got '" + s + "'");
            unsigned long long v = 0;
            for (char c : num) {
                v = v * 10 + static_cast<unsigned long long>(c - '0');
                if (v > 4000000000ULL)
                    throw Error(ErrorCode::BadProblemFile, "prime too large in '" + s + "'");
            }
            if (v < 2) throw Error(ErrorCode::BadProblemFile, "field characteristic must be a prime >= 2");
            for (unsigned long long q = 2; q * q <= v; ++q)
                if (v % q == 0)
                    throw Error(ErrorCode::BadProblemFile, std::to_string(v) + " is not prime");
            return {true, static_cast<std::uint32_t>(v)};
        }
        throw Error(ErrorCode::BadProblemFile, "field must be qq or fp:<prime>, got '" + s + "'");
    }

    std::string to_string() const { return is_fp ? "fp:" + std::to_string(p) : "qq"; }
};

/// One value read from a problem file, kept as text with its source position
/// so polynomial parse errors can point at the right place.
struct RawEntry {
    std::string value;
    int line = 0;
    int col = 1;
};

/// A parsed problem file: keys and raw values only. Polynomials stay as text
/// until the field is known.
struct ProblemFile {
    std::string case_name;
    int case_line = 0;
    std::string field_spec;  // empty when the file does not pin a field
    int n = -1;
    std::vector<RawEntry> u;
    std::vector<RawEntry> mu_basis;
    RawEntry f_top, f_deg;
    bool has_f_top = false, has_f_deg = false;
    bool asserted_lci = false;

    static ProblemFile parse(const std::string& text);
    void validate() const;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace detail

inline ProblemFile ProblemFile::parse(const std::string& text) {
    ProblemFile pf;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool seen_field = false, seen_n = false, seen_lci = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::size_t colon = raw.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorCode::BadProblemFile,
                        "line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = detail::trim(raw.substr(0, colon));
        std::size_t vstart = raw.find_first_not_of(" \t", colon + 1);
        std::string value = vstart == std::string::npos ? "" : detail::trim(raw.substr(vstart));
        int vcol = vstart == std::string::npos ? static_cast<int>(colon) + 2
                                               : static_cast<int>(vstart) + 1;
        auto once = [&](bool& seen, const std::string& k) {
            if (seen)
                throw Error(ErrorCode::BadProblemFile,
                            "line " + std::to_string(lineno) + ": duplicate key '" + k + "'");
            seen = true;
        };
        if (key == "case") {
            bool dummy = !pf.case_name.empty();
            once(dummy, key);
            pf.case_name = value;
            pf.case_line = lineno;
        } else if (key == "field") {
            once(seen_field, key);
            FieldSpec::parse(value);  // reject malformed specs at read time
            pf.field_spec = value;
        } else if (key == "n") {
            once(seen_n, key);
            try {
                pf.n = std::stoi(value);
            } catch (const std::exception&) {
                throw Error(ErrorCode::BadProblemFile,
                            "line " + std::to_string(lineno) + ": n must be an integer");
            }
        } else if (key == "u") {
            pf.u.push_back({value, lineno, vcol});
        } else if (key == "mu_basis") {
            pf.mu_basis.push_back({value, lineno, vcol});
        } else if (key == "f_top") {
            once(pf.has_f_top, key);
            pf.f_top = {value, lineno, vcol};
        } else if (key == "f_deg") {
            once(pf.has_f_deg, key);
            pf.f_deg = {value, lineno, vcol};
        } else if (key == "asserted_lci") {
            once(seen_lci, key);
            if (value == "true")
                pf.asserted_lci = true;
            else if (value == "false")
                pf.asserted_lci = false;
            else
                throw Error(ErrorCode::BadProblemFile,
                            "line " + std::to_string(lineno) + ": asserted_lci must be true or false");
        } else {
            throw Error(ErrorCode::BadProblemFile,
                        "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    pf.validate();
    return pf;
}

inline void ProblemFile::validate() const {
    if (case_name.empty())
        throw Error(ErrorCode::BadProblemFile, "missing required key 'case'");
    auto reject = [&](bool present, const std::string& what) {
        if (present)
            throw Error(ErrorCode::BadProblemFile,
                        "'" + what + "' does not apply to case '" + case_name + "'");
    };
    if (case_name == "curve") {
        if (u.size() != 3)
            throw Error(ErrorCode::BadProblemFile,
                        "case 'curve' needs exactly 3 'u:' lines, found " + std::to_string(u.size()));
        reject(!mu_basis.empty(), "mu_basis");
        reject(has_f_top || has_f_deg, "f_top/f_deg");
        reject(n != -1 && n != 2, "n other than 2");
    } else if (case_name == "monoid") {
        if (n < 2 || n > 9)
            throw Error(ErrorCode::BadProblemFile, "case 'monoid' needs 'n' between 2 and 9");
        if (!has_f_top || !has_f_deg)
            throw Error(ErrorCode::BadProblemFile, "case 'monoid' needs 'f_top' and 'f_deg'");
        reject(!u.empty(), "u");
        reject(!mu_basis.empty(), "mu_basis");
    } else if (case_name == "surface") {
        bool by_u = !u.empty(), by_mb = !mu_basis.empty();
        if (by_u == by_mb)
            throw Error(ErrorCode::BadProblemFile,
                        "case 'surface' needs either 4 'u:' lines or 3 'mu_basis:' lines");
        if (by_u && u.size() != 4)
            throw Error(ErrorCode::BadProblemFile,
                        "case 'surface' needs exactly 4 'u:' lines, found " + std::to_string(u.size()));
        if (by_mb && mu_basis.size() != 3)
            throw Error(ErrorCode::BadProblemFile,
                        "case 'surface' needs exactly 3 'mu_basis:' lines, found " +
                            std::to_string(mu_basis.size()));
        reject(has_f_top || has_f_deg, "f_top/f_deg");
        reject(n != -1 && n != 3, "n other than 3");
    } else {
        throw Error(ErrorCode::BadProblemFile,
                    "line " + std::to_string(case_line) + ": case must be curve, monoid, or surface");
    }
}

}  // namespace reeskit

#endif
