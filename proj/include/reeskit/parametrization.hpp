#ifndef REESKIT_PARAMETRIZATION_HPP
#define REESKIT_PARAMETRIZATION_HPP

#include <random>
#include <string>
#include <vector>

#include "reeskit/errors.hpp"
#include "reeskit/multipoly.hpp"

namespace reeskit {

enum class CaseTag { Curve, MonoidHypersurface, Surface };

inline const char* case_name(CaseTag c) {
    switch (c) {
        case CaseTag::Curve: return "curve";
        case CaseTag::MonoidHypersurface: return "monoid";
        case CaseTag::Surface: return "surface";
    }
    return "unknown";
}

/// The input map: n+1 forms of common degree d in the t-variables. The
/// coprimality of u is certified at construction time (exactly for n = 2,
/// by pencil restriction for n >= 3).
template <class K>
struct Parametrization {
    int n = 0;
    int d = 0;
    std::vector<MultiPoly<K>> u;
    CaseTag case_tag = CaseTag::Curve;
    bool asserted_lci = false;
    std::string coprimality_note;
};

/// Validates degrees and coprimality and assembles the parametrization.
template <class K>
Parametrization<K> make_parametrization(std::vector<MultiPoly<K>> u, CaseTag tag, bool asserted_lci,
                                        std::mt19937_64& rng, int coprime_trials = 8) {
    if (u.empty()) throw Error(ErrorCode::PreconditionViolation, "no coordinate forms given");
    const int n = u[0].n();
    if (static_cast<int>(u.size()) != n + 1)
        throw Error(ErrorCode::ArityMismatch, "expected n+1 coordinate forms for n t-variables");
    for (const auto& f : u) {
        if (f.is_zero()) throw Error(ErrorCode::DegenerateInput, "a coordinate form is zero");
        if (f.n() != n || !(f.context() == u[0].context()))
            throw Error(ErrorCode::ArityMismatch, "coordinate forms disagree on variables or field");
        if (!f.is_t_only() || !f.is_bihomogeneous())
            throw Error(ErrorCode::PreconditionViolation, "coordinate forms must be homogeneous in t only");
    }
    const int d = u[0].t_degree();
    for (const auto& f : u)
        if (f.t_degree() != d)
            throw Error(ErrorCode::PreconditionViolation, "coordinate forms must share one degree");

    switch (tag) {
        case CaseTag::Curve:
            if (n != 2) throw Error(ErrorCode::PreconditionViolation, "curve case requires n = 2");
            if (d < 2) throw Error(ErrorCode::PreconditionViolation, "curve case requires d >= 2");
            break;
        case CaseTag::Surface:
            if (n != 3) throw Error(ErrorCode::PreconditionViolation, "surface case requires n = 3");
            if (d < 3) throw Error(ErrorCode::PreconditionViolation, "surface case requires d >= 3");
            break;
        case CaseTag::MonoidHypersurface:
            if (n < 2 || n > 9)
                throw Error(ErrorCode::PreconditionViolation, "monoid case requires 2 <= n <= 9");
            if (d < 2) throw Error(ErrorCode::PreconditionViolation, "monoid case requires d >= 2");
            break;
    }

    Parametrization<K> p;
    p.n = n;
    p.d = d;
    p.u = std::move(u);
    p.case_tag = tag;
    p.asserted_lci = asserted_lci;

    if (n == 2) {
        if (!is_coprime_binary(p.u))
            throw Error(ErrorCode::DegenerateInput, "the coordinate forms have a common factor");
        p.coprimality_note = "coprime (exact binary-form gcd)";
    } else {
        CoprimeVerdict v = is_coprime_probabilistic(p.u, coprime_trials, rng);
        if (!v.coprime)
            throw Error(ErrorCode::DegenerateInput,
                        "the coordinate forms appear to have a common factor (" + v.note + ")");
        p.coprimality_note = v.note;
    }
    return p;
}

}  // namespace reeskit

#endif
