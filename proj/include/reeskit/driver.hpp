#ifndef REESKIT_DRIVER_HPP
#define REESKIT_DRIVER_HPP

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "reeskit/errors.hpp"
#include "reeskit/field.hpp"
#include "reeskit/multipoly.hpp"
#include "reeskit/oracle.hpp"
#include "reeskit/parametrization.hpp"
#include "reeskit/problem.hpp"
#include "reeskit/reesgen.hpp"
#include "reeskit/syzygy.hpp"
#include "reeskit/text.hpp"

namespace reeskit {

struct RunOptions {
    std::string field_override;  // empty: use the problem file's field, default qq
    int bound = -1;              // verify bidegree bound; -1 means d + 3
    unsigned long long seed = 0;
    int samples = 10;
    int monomial_cap = 20000;
    int coprime_trials = 8;
};

struct RunResult {
    std::string output;
    int exit_code = 0;
};

/// A previously emitted generator document, re-read for verification. Only
/// the echoed inputs and the generator polynomials matter; bidegrees and
/// provenance are re-derived.
struct ResultDocument {
    std::string case_name;
    std::string field_spec;
    std::vector<RawEntry> u;
    struct GenEntry {
        std::string name;
        RawEntry poly;
    };
    std::vector<GenEntry> generators;

    static std::optional<ResultDocument> try_parse(const std::string& text);
};

inline std::optional<ResultDocument> ResultDocument::try_parse(const std::string& text) {
    ResultDocument doc;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::size_t colon = raw.find(':');
        if (colon == std::string::npos) continue;
        std::string key = detail::trim(raw.substr(0, colon));
        std::size_t vstart = raw.find_first_not_of(" \t", colon + 1);
        if (vstart == std::string::npos) continue;
        std::string value = detail::trim(raw.substr(vstart));
        if (key == "case") {
            doc.case_name = value;
        } else if (key == "field") {
            doc.field_spec = value;
        } else if (key == "u") {
            doc.u.push_back({value, lineno, static_cast<int>(vstart) + 1});
        } else if (key == "generator") {
            // name | (i,j) | provenance | polynomial
            std::size_t first = raw.find('|', vstart);
            std::size_t last = raw.rfind('|');
            if (first == std::string::npos || last == first)
                throw Error(ErrorCode::BadProblemFile,
                            "line " + std::to_string(lineno) +
                                ": generator line needs 'name | bidegree | provenance | polynomial'");
            std::string name = detail::trim(raw.substr(vstart, first - vstart));
            std::size_t pstart = raw.find_first_not_of(" \t", last + 1);
            if (name.empty() || pstart == std::string::npos)
                throw Error(ErrorCode::BadProblemFile,
                            "line " + std::to_string(lineno) + ": empty generator name or polynomial");
            doc.generators.push_back(
                {name, {detail::trim(raw.substr(pstart)), lineno, static_cast<int>(pstart) + 1}});
        }
    }
    if (doc.generators.empty()) return std::nullopt;
    return doc;
}

namespace detail {

inline FieldSpec resolve_field(const std::string& file_spec, const std::string& override_spec) {
    if (!override_spec.empty()) return FieldSpec::parse(override_spec);
    if (!file_spec.empty()) return FieldSpec::parse(file_spec);
    return FieldSpec{false, 0};
}

inline CaseTag tag_from_name(const std::string& name) {
    if (name == "curve") return CaseTag::Curve;
    if (name == "monoid") return CaseTag::MonoidHypersurface;
    if (name == "surface") return CaseTag::Surface;
    throw Error(ErrorCode::BadProblemFile, "case must be curve, monoid, or surface, got '" + name + "'");
}

template <class K>
std::vector<MultiPoly<K>> parse_entries(const std::vector<RawEntry>& entries, int n,
                                        typename K::Context ctx) {
    std::vector<MultiPoly<K>> out;
    for (const auto& e : entries) out.push_back(parse_poly<K>(e.value, n, ctx, e.line, e.col));
    return out;
}

template <class K>
struct Construction {
    Parametrization<K> p;
    GeneratorSet<K> gs;
};

template <class K>
Construction<K> construct(const ProblemFile& pf, typename K::Context ctx, const RunOptions& opts,
                          std::mt19937_64& rng) {
    if (pf.case_name == "curve") {
        auto p = make_parametrization(parse_entries<K>(pf.u, 2, ctx), CaseTag::Curve, false, rng,
                                      opts.coprime_trials);
        auto gs = curve_generators(p);
        return {std::move(p), std::move(gs)};
    }
    if (pf.case_name == "monoid") {
        auto f_top = parse_poly<K>(pf.f_top.value, pf.n, ctx, pf.f_top.line, pf.f_top.col);
        auto f_deg = parse_poly<K>(pf.f_deg.value, pf.n, ctx, pf.f_deg.line, pf.f_deg.col);
        auto gs = hypersurface_generators(f_top, f_deg, rng, opts.coprime_trials);
        auto p = make_parametrization(monoid_u(f_top, f_deg), CaseTag::MonoidHypersurface, false, rng,
                                      opts.coprime_trials);
        return {std::move(p), std::move(gs)};
    }
    std::optional<MuBasis<K>> candidate;
    std::vector<MultiPoly<K>> u;
    if (!pf.mu_basis.empty()) {
        auto planes = parse_entries<K>(pf.mu_basis, 3, ctx);
        u = u_from_moving_planes(planes);
        candidate = MuBasis<K>{planes, {1, 1, u[0].t_degree() - 2}};
    } else {
        u = parse_entries<K>(pf.u, 3, ctx);
    }
    auto p = make_parametrization(u, CaseTag::Surface, pf.asserted_lci, rng, opts.coprime_trials);
    MuBasis<K> mb = surface_mu_shape(p, candidate);
    auto gs = surface_generators(p, mb);
    return {std::move(p), std::move(gs)};
}

template <class K>
void render_header(std::ostringstream& out, const std::string& command, const std::string& case_name,
                   const FieldSpec& fs, const Parametrization<K>& p) {
    out << "command: " << command << "\n";
    out << "case: " << case_name << "\n";
    out << "field: " << fs.to_string() << "\n";
    out << "n: " << p.n << "\n";
    out << "d: " << p.d << "\n";
    for (const auto& ui : p.u) out << "u: " << to_text(ui) << "\n";
}

template <class K>
void render_note(std::ostringstream& out, const Parametrization<K>& p) {
    if (!p.coprimality_note.empty()) out << "note: coprimality: " << p.coprimality_note << "\n";
}

inline void render_report(std::ostringstream& out, int bound, const VerificationReport& gen_rep,
                          const VerificationReport& min_rep, bool verdict,
                          const std::vector<std::string>& extra_notes) {
    out << "bound: " << bound << "\n";
    out << "verdict: " << (verdict ? "Certified" : "Failed") << "\n";
    for (const auto& s : gen_rep.slices)
        out << "slice: " << s.bidegree.to_string() << " | kernel " << s.kernel_dim << " | ideal "
            << s.ideal_dim << " | " << (s.ok ? "ok" : "MISMATCH") << "\n";
    for (const auto& m : min_rep.minimality)
        out << "minimal: " << m.name << " | " << m.bidegree.to_string() << " | "
            << (m.necessary ? "necessary" : "REDUNDANT") << "\n";
    for (const auto& n : gen_rep.notes) out << "note: " << n << "\n";
    for (const auto& n : min_rep.notes) out << "note: " << n << "\n";
    for (const auto& n : extra_notes) out << "note: " << n << "\n";
    out << "note: the certificate is degree-bounded: it covers all bidegrees with i+j <= "
        << bound << "\n";
}

template <class K>
RunResult run_typed(const std::string& command, const ProblemFile& pf, const FieldSpec& fs,
                    const RunOptions& opts, typename K::Context ctx) {
    std::mt19937_64 rng(opts.seed);
    try {
        Construction<K> built = construct<K>(pf, ctx, opts, rng);
        const Parametrization<K>& p = built.p;
        const GeneratorSet<K>& gs = built.gs;
        std::ostringstream out;
        render_header(out, command, pf.case_name, fs, p);

        if (command == "generators") {
            for (const auto& g : gs.generators)
                out << "generator: " << g.name << " | " << g.bidegree.to_string() << " | "
                    << g.provenance << " | " << to_text(g.poly) << "\n";
            out << "E: " << to_text(gs.E) << "\n";
            for (const auto& m : gs.inverse.M) out << "inverse: " << to_text(m) << "\n";
            for (const auto& [name, val] : gs.scalars)
                out << "scalar: " << name << " = " << val.to_string() << "\n";
            render_note(out, p);
            return {out.str(), 0};
        }
        if (command == "implicitize") {
            out << "E: " << to_text(implicit_equation(gs)) << "\n";
            render_note(out, p);
            return {out.str(), 0};
        }
        if (command == "invert") {
            for (const auto& m : gs.inverse.M) out << "inverse: " << to_text(m) << "\n";
            InverseCertificate cert = sample_inverse_certificate(p, gs.inverse, opts.samples, rng);
            out << "certificate: samples = " << cert.samples << "\n";
            out << "certificate: passes = " << cert.passes << "\n";
            out << "certificate: verdict = " << (cert.all_pass ? "pass" : "fail") << "\n";
            render_note(out, p);
            return {out.str(), cert.all_pass ? 0 : 1};
        }

        const int bound = opts.bound > 0 ? opts.bound : p.d + 3;
        VerificationReport gen_rep = verify_generation(p, gs, bound, opts.monomial_cap);
        VerificationReport min_rep = verify_minimality(gs, opts.monomial_cap);
        bool ok = gen_rep.certified() && min_rep.certified();
        render_report(out, bound, gen_rep, min_rep, ok, {});
        render_note(out, p);
        return {out.str(), ok ? 0 : 1};
    } catch (const DegenerateSurfaceError& e) {
        std::ostringstream out;
        out << "command: " << command << "\n";
        out << "case: " << pf.case_name << "\n";
        out << "field: " << fs.to_string() << "\n";
        out << "degenerate: surface\n";
        for (const auto& m : e.minors()) out << "minor: " << m << "\n";
        out << "note: " << e.what() << "\n";
        return {out.str(), 2};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateCurve) throw;
        std::ostringstream out;
        out << "command: " << command << "\n";
        out << "case: " << pf.case_name << "\n";
        out << "field: " << fs.to_string() << "\n";
        out << "degenerate: curve\n";
        out << "note: " << e.what() << "\n";
        return {out.str(), 2};
    }
}

template <class K>
RunResult run_verify_doc(const ResultDocument& doc, const FieldSpec& fs, const RunOptions& opts,
                         typename K::Context ctx) {
    std::mt19937_64 rng(opts.seed);
    if (doc.u.size() < 3)
        throw Error(ErrorCode::BadProblemFile,
                    "result document must echo the parametrization as 'u:' lines");
    const int n = static_cast<int>(doc.u.size()) - 1;
    CaseTag tag = tag_from_name(doc.case_name);
    auto u = parse_entries<K>(doc.u, n, ctx);
    auto p = make_parametrization(u, tag, true, rng, opts.coprime_trials);

    std::vector<Generator<K>> gens;
    std::vector<std::string> extra_notes;
    bool members_ok = true;
    for (const auto& e : doc.generators) {
        auto poly = parse_poly<K>(e.poly.value, n, ctx, e.poly.line, e.poly.col);
        if (poly.is_zero())
            throw Error(ErrorCode::BadProblemFile, "generator " + e.name + " is zero");
        gens.push_back({e.name, poly, poly.bidegree(), "document"});
        if (!substitute_X(poly, p.u).is_zero()) {
            members_ok = false;
            extra_notes.push_back("generator " + e.name + " is not a relation of the parametrization");
        }
    }

    const int bound = opts.bound > 0 ? opts.bound : p.d + 3;
    std::vector<MultiPoly<K>> polys;
    for (const auto& g : gens) polys.push_back(g.poly);
    VerificationReport gen_rep = verify_generation(p, polys, bound, opts.monomial_cap);
    VerificationReport min_rep = verify_minimality(gens, opts.monomial_cap);
    bool ok = members_ok && gen_rep.certified() && min_rep.certified();

    std::ostringstream out;
    render_header(out, "verify", doc.case_name, fs, p);
    render_report(out, bound, gen_rep, min_rep, ok, extra_notes);
    render_note(out, p);
    return {out.str(), ok ? 0 : 1};
}

}  // namespace detail

/// Entry point shared by the command-line tool and the tests. Throws on
/// errors (exit code 1 at the tool level); returns exit code 2 with a report
/// for degenerate inputs.
inline RunResult run_command(const std::string& command, const std::string& input_text,
                             const RunOptions& opts) {
    if (command != "generators" && command != "implicitize" && command != "invert" &&
        command != "verify")
        throw Error(ErrorCode::PreconditionViolation, "unknown command '" + command + "'");

    if (command == "verify") {
        if (auto doc = ResultDocument::try_parse(input_text)) {
            FieldSpec fs = detail::resolve_field(doc->field_spec, opts.field_override);
            if (fs.is_fp) return detail::run_verify_doc<Fp>(*doc, fs, opts, Fp::Context{fs.p});
            return detail::run_verify_doc<QQ>(*doc, fs, opts, QQ::Context{});
        }
    }
    ProblemFile pf = ProblemFile::parse(input_text);
    FieldSpec fs = detail::resolve_field(pf.field_spec, opts.field_override);
    if (fs.is_fp) return detail::run_typed<Fp>(command, pf, fs, opts, Fp::Context{fs.p});
    return detail::run_typed<QQ>(command, pf, fs, opts, QQ::Context{});
}

}  // namespace reeskit

#endif
