#ifndef REESKIT_REESGEN_HPP
#define REESKIT_REESGEN_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "reeskit/errors.hpp"
#include "reeskit/multipoly.hpp"
#include "reeskit/parametrization.hpp"
#include "reeskit/syzygy.hpp"
#include "reeskit/text.hpp"

namespace reeskit {

/// The substitution vector realizing the rational inverse: the descent step
/// replaces each t_k by M_k.
template <class K>
struct InverseSubstitution {
    std::vector<MultiPoly<K>> M;
    CaseTag source = CaseTag::Curve;
};

template <class K>
struct Generator {
    std::string name;
    MultiPoly<K> poly;
    Bidegree bidegree;
    std::string provenance;  // "syzygy" | "descent-F<j>" | "p_{i,j}"
};

/// Ordered generating set with the implicit equation, the inverse vector,
/// and the recorded scalars: sigma_F<j> relates the specialization t -> M of
/// the normalized F_j to E exactly.
template <class K>
struct GeneratorSet {
    CaseTag case_tag = CaseTag::Curve;
    std::vector<Generator<K>> generators;
    MultiPoly<K> E;
    InverseSubstitution<K> inverse;
    std::vector<std::pair<std::string, K>> scalars;

    GeneratorSet(int n, typename K::Context ctx) : E(n, ctx) {}

    const K* scalar(const std::string& name) const {
        for (const auto& [k, v] : scalars)
            if (k == name) return &v;
        return nullptr;
    }
};

/// Curve and surface inverse vectors from the mu-basis; monoids use
/// monoid_inverse below. A vanishing surface minor means the image has
/// degree < 3 and the construction halts with the minors reported.
template <class K>
InverseSubstitution<K> inverse_substitution(const MuBasis<K>& mb, CaseTag tag) {
    if (mb.elements.empty()) throw Error(ErrorCode::PreconditionViolation, "empty mu-basis");
    const int n = mb.elements[0].n();
    auto ctx = mb.elements[0].context();

    if (tag == CaseTag::Curve) {
        if (n != 2 || mb.degrees.empty() || mb.degrees[0] != 1)
            throw Error(ErrorCode::PreconditionViolation, "curve inverse needs a degree-1 mu-basis element");
        auto parts = split_on_t(mb.elements[0]);  // q1 = A*t1 + B*t2
        const MultiPoly<K>& A = parts[0];
        const MultiPoly<K>& B = parts[1];
        MonomialIndex idx(2, 0, 1);
        ExactMatrix<K> m(2, idx.size(), ctx);
        auto ra = coefficient_row(A, idx);
        auto rb = coefficient_row(B, idx);
        for (int c = 0; c < idx.size(); ++c) {
            m.at(0, c) = ra[static_cast<std::size_t>(c)];
            m.at(1, c) = rb[static_cast<std::size_t>(c)];
        }
        if (rank(m) < 2)
            throw Error(ErrorCode::DegenerateCurve,
                        "the split parts of the degree-1 moving line are linearly dependent; "
                        "the image lies in a line");
        return {{-B, A}, CaseTag::Curve};
    }

    if (tag == CaseTag::Surface) {
        if (n != 3 || mb.elements.size() != 3)
            throw Error(ErrorCode::PreconditionViolation, "surface inverse needs a 3-element mu-basis");
        // L[k][i] = X-linear coefficient of t_i in p_{k+1}
        std::vector<std::vector<MultiPoly<K>>> L(2, std::vector<MultiPoly<K>>(3, MultiPoly<K>::zero(3, ctx)));
        for (int k = 0; k < 2; ++k) {
            const MultiPoly<K>& pk = mb.elements[static_cast<std::size_t>(k)];
            if (pk.bidegree() != Bidegree{1, 1})
                throw Error(ErrorCode::PreconditionViolation, "surface inverse needs two bidegree-(1,1) planes");
            for (const auto& [m, c] : pk.terms()) {
                int i = -1;
                for (int q = 0; q < 3; ++q)
                    if (m.t_exp[static_cast<std::size_t>(q)] == 1) { i = q; break; }
                Monomial xm = m;
                xm.t_exp.assign(3, 0);
                L[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)].add_term(xm, c);
            }
        }
        MultiPoly<K> M1 = L[0][1] * L[1][2] - L[0][2] * L[1][1];
        MultiPoly<K> M2 = L[0][2] * L[1][0] - L[0][0] * L[1][2];
        MultiPoly<K> M3 = L[0][0] * L[1][1] - L[0][1] * L[1][0];
        if (M1.is_zero() || M2.is_zero() || M3.is_zero())
            throw DegenerateSurfaceError(
                "a signed minor of the two linear moving planes vanishes, so the surface has degree < 3; "
                "any nonzero minor is a candidate low-degree implicit equation",
                {to_text(M1), to_text(M2), to_text(M3)});
        return {{M1, M2, M3}, CaseTag::Surface};
    }

    throw Error(ErrorCode::PreconditionViolation, "monoid inverse is built by monoid_inverse");
}

/// (X1, ..., Xn) for a monoid hypersurface.
template <class K>
InverseSubstitution<K> monoid_inverse(int n, typename K::Context ctx) {
    std::vector<MultiPoly<K>> M;
    for (int k = 0; k < n; ++k) M.push_back(MultiPoly<K>::variable_X(n, k, ctx));
    return {std::move(M), CaseTag::MonoidHypersurface};
}

/// One descent step: split F on t by the canonical rule and recombine against
/// M, lowering t-degree by 1. The result is checked to be a nonzero member of
/// the kernel.
template <class K>
MultiPoly<K> descend(const MultiPoly<K>& F, const InverseSubstitution<K>& sub,
                     const std::vector<MultiPoly<K>>& u) {
    Bidegree b = F.bidegree();
    if (F.is_zero() || b.t_deg < 1)
        throw Error(ErrorCode::PreconditionViolation, "descent needs a nonzero input of positive t-degree");
    auto parts = split_on_t(F);
    if (parts.size() != sub.M.size())
        throw Error(ErrorCode::ArityMismatch, "inverse vector does not match the t-variable count");
    MultiPoly<K> out(F.n(), F.context());
    for (std::size_t k = 0; k < parts.size(); ++k) out += parts[k] * sub.M[k];
    if (out.is_zero())
        throw Error(ErrorCode::InternalError, "descent produced zero");
    if (!substitute_X(out, u).is_zero())
        throw Error(ErrorCode::InternalError,
                    "descent left the kernel; the input was not a kernel member");
    return out;
}

namespace detail {

/// Runs the descent chain from the top element F_top (t-degree top_j) and
/// appends generators F_{top_j-1} ... F_0 with their specialization scalars.
/// On the unnormalized chain the specialization t -> M telescopes to F_0 on
/// the nose; when each step is content-normalized the recorded sigma_F<j>
/// (product of the normalization scalars below j) restores the exact
/// identity substitute(F_j, t -> M) = sigma_F<j> * E. The monoid case skips
/// normalization, keeping every sigma equal to 1.
template <class K>
void run_descent_chain(GeneratorSet<K>& gs, const MultiPoly<K>& F_top, int top_j,
                       const InverseSubstitution<K>& sub, const std::vector<MultiPoly<K>>& u,
                       bool normalize) {
    std::vector<MultiPoly<K>> Fhat;
    std::vector<K> c;
    Fhat.push_back(F_top);
    for (int j = top_j; j >= 1; --j) {
        MultiPoly<K> raw = descend(Fhat.back(), sub, u);
        c.push_back(normalize ? raw.normalize_content() : K::one(F_top.context()));
        Fhat.push_back(std::move(raw));
    }
    // c[top_j - j] is the scalar removed when producing F_{j-1}
    auto ctx = F_top.context();
    std::vector<K> sigma(static_cast<std::size_t>(top_j) + 1, K::one(ctx));
    for (int j = 1; j <= top_j; ++j) {
        K s = K::one(ctx);
        for (int k = 0; k < j; ++k) s *= c[static_cast<std::size_t>(top_j - 1 - k)];
        sigma[static_cast<std::size_t>(j)] = s;
    }
    for (int j = top_j - 1; j >= 0; --j) {
        const MultiPoly<K>& F = Fhat[static_cast<std::size_t>(top_j - j)];
        gs.generators.push_back({"F" + std::to_string(j), F, F.bidegree(), "descent-F" + std::to_string(j)});
        gs.scalars.emplace_back("sigma_F" + std::to_string(j), sigma[static_cast<std::size_t>(j)]);
    }
    gs.E = Fhat.back();
    // scalar for the top element itself, used by the cross-checks
    gs.scalars.emplace_back("sigma_F" + std::to_string(top_j), sigma[static_cast<std::size_t>(top_j)]);
}

}  // namespace detail

/// Generators for a plane curve with mu = 1: the two moving lines and the
/// descent chain F_{d-2}, ..., F_0; F_0 is the implicit equation.
template <class K>
GeneratorSet<K> curve_generators(const Parametrization<K>& p) {
    if (p.n != 2) throw Error(ErrorCode::PreconditionViolation, "curve generators require n = 2");
    MuBasis<K> mb = curve_mu_basis(p);
    InverseSubstitution<K> sub = inverse_substitution(mb, CaseTag::Curve);

    GeneratorSet<K> gs(2, p.u[0].context());
    gs.case_tag = CaseTag::Curve;
    gs.inverse = sub;
    gs.generators.push_back({"q1", mb.elements[0], {1, 1}, "syzygy"});
    gs.generators.push_back({"F" + std::to_string(p.d - 1), mb.elements[1], {p.d - 1, 1}, "syzygy"});
    detail::run_descent_chain(gs, mb.elements[1], p.d - 1, sub, p.u, true);

    if (gs.E.bidegree() != Bidegree{0, p.d})
        throw Error(ErrorCode::InternalError, "implicit equation has the wrong bidegree");
    return gs;
}

/// u = (t1 f_top, ..., tn f_top, f_deg) for a monoid hypersurface.
template <class K>
std::vector<MultiPoly<K>> monoid_u(const MultiPoly<K>& f_top, const MultiPoly<K>& f_deg) {
    const int n = f_top.n();
    auto ctx = f_top.context();
    std::vector<MultiPoly<K>> u;
    for (int k = 0; k < n; ++k) u.push_back(f_top * MultiPoly<K>::variable_t(n, k, ctx));
    u.push_back(f_deg);
    return u;
}

/// Generators for a monoid hypersurface: all p_{i,j} = t_i X_j - t_j X_i,
/// then F_{d-1} = f_top(t) X_{n+1} - sum_j f_{d,j}(t) X_j and its descent
/// chain; E = f_top(X) X_{n+1} - f_deg(X). The scalar ee_scalar relates the
/// normalized E to that formula exactly.
template <class K>
GeneratorSet<K> hypersurface_generators(const MultiPoly<K>& f_top, const MultiPoly<K>& f_deg,
                                        std::mt19937_64& rng, int coprime_trials = 8) {
    const int n = f_top.n();
    auto ctx = f_top.context();
    if (f_top.is_zero() || f_deg.is_zero())
        throw Error(ErrorCode::PreconditionViolation, "monoid parts must be nonzero");
    if (f_deg.n() != n || !(f_deg.context() == ctx))
        throw Error(ErrorCode::ArityMismatch, "monoid parts disagree on variables or field");
    if (!f_top.is_t_only() || !f_deg.is_t_only() || !f_top.is_bihomogeneous() || !f_deg.is_bihomogeneous())
        throw Error(ErrorCode::PreconditionViolation, "monoid parts must be homogeneous in t only");
    const int d = f_deg.t_degree();
    if (f_top.t_degree() != d - 1 || d < 2)
        throw Error(ErrorCode::PreconditionViolation,
                    "monoid parts must have degrees d-1 and d with d >= 2");

    if (n == 2) {
        if (gcd_binary_forms(f_top, f_deg).t_degree() != 0)
            throw Error(ErrorCode::CommonFactor, "the monoid parts share a factor");
    } else {
        CoprimeVerdict v = is_coprime_probabilistic<K>({f_top, f_deg}, coprime_trials, rng);
        if (!v.coprime) throw Error(ErrorCode::CommonFactor, "the monoid parts share a factor (" + v.note + ")");
    }

    std::vector<MultiPoly<K>> u = monoid_u(f_top, f_deg);
    InverseSubstitution<K> sub = monoid_inverse<K>(n, ctx);

    GeneratorSet<K> gs(n, ctx);
    gs.case_tag = CaseTag::MonoidHypersurface;
    gs.inverse = sub;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            MultiPoly<K> pij = MultiPoly<K>::variable_t(n, i, ctx) * MultiPoly<K>::variable_X(n, j, ctx)
                             - MultiPoly<K>::variable_t(n, j, ctx) * MultiPoly<K>::variable_X(n, i, ctx);
            std::string tag = "p_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
            gs.generators.push_back({"p" + std::to_string(i + 1) + std::to_string(j + 1),
                                     pij, {1, 1}, tag});
        }
    }

    auto fd_parts = split_on_t(f_deg);
    MultiPoly<K> F = f_top * MultiPoly<K>::variable_X(n, n, ctx);
    for (int j = 0; j < n; ++j) F -= fd_parts[static_cast<std::size_t>(j)] * MultiPoly<K>::variable_X(n, j, ctx);
    // the chain stays unnormalized so that E = f_top(X) X_{n+1} - f_deg(X)
    // holds on the nose, not merely up to scalar
    gs.generators.push_back({"F" + std::to_string(d - 1), F, {d - 1, 1}, "syzygy"});
    detail::run_descent_chain(gs, F, d - 1, sub, u, false);

    std::vector<MultiPoly<K>> x_of_t;
    for (int k = 0; k < n; ++k) x_of_t.push_back(MultiPoly<K>::variable_X(n, k, ctx));
    MultiPoly<K> formula = substitute_t(f_top, x_of_t) * MultiPoly<K>::variable_X(n, n, ctx)
                         - substitute_t(f_deg, x_of_t);
    if (gs.E != formula)
        throw Error(ErrorCode::CrossCheckMismatch,
                    "descent output disagrees with the closed-form implicit equation");

    if (gs.E.bidegree() != Bidegree{0, d})
        throw Error(ErrorCode::InternalError, "implicit equation has the wrong bidegree");
    return gs;
}

/// Generators for a surface with mu-type (1,1,d-2): the two linear planes and
/// the descent chain from p3; E = F_0 has degree 2d-3.
template <class K>
GeneratorSet<K> surface_generators(const Parametrization<K>& p, const MuBasis<K>& mb) {
    if (p.n != 3 || p.d < 3)
        throw Error(ErrorCode::PreconditionViolation, "surface generators require n = 3 and d >= 3");
    if (!p.asserted_lci)
        throw Error(ErrorCode::PreconditionViolation,
                    "the surface construction requires the local-complete-intersection assertion");
    InverseSubstitution<K> sub = inverse_substitution(mb, CaseTag::Surface);

    GeneratorSet<K> gs(3, p.u[0].context());
    gs.case_tag = CaseTag::Surface;
    gs.inverse = sub;
    gs.generators.push_back({"p1", mb.elements[0], {1, 1}, "syzygy"});
    gs.generators.push_back({"p2", mb.elements[1], {1, 1}, "syzygy"});
    gs.generators.push_back({"F" + std::to_string(p.d - 2), mb.elements[2], {p.d - 2, 1}, "syzygy"});
    detail::run_descent_chain(gs, mb.elements[2], p.d - 2, sub, p.u, true);

    for (const auto& g : gs.generators) {
        if (g.name.empty() || g.name[0] != 'F') continue;
        int j = std::stoi(g.name.substr(1));
        Bidegree want{j, 1 + 2 * (p.d - 2 - j)};
        if (g.bidegree != want)
            throw Error(ErrorCode::InternalError,
                        "generator " + g.name + " has bidegree " + g.bidegree.to_string() +
                            ", expected " + want.to_string());
    }
    if (gs.E.bidegree() != Bidegree{0, 2 * p.d - 3})
        throw Error(ErrorCode::InternalError, "implicit equation degree is not 2d-3");
    return gs;
}

/// The normalized implicit equation, cross-checked: specializing the top
/// chain element at t -> M must reproduce E times its recorded scalar.
template <class K>
MultiPoly<K> implicit_equation(const GeneratorSet<K>& gs) {
    int top_j = -1;
    const Generator<K>* top = nullptr;
    for (const auto& g : gs.generators) {
        if (g.name.empty() || g.name[0] != 'F') continue;
        int j = std::stoi(g.name.substr(1));
        if (j > top_j) { top_j = j; top = &g; }
    }
    if (!top) throw Error(ErrorCode::PreconditionViolation, "generator set carries no descent chain");
    const K* sigma = gs.scalar("sigma_F" + std::to_string(top_j));
    if (!sigma) throw Error(ErrorCode::InternalError, "missing specialization scalar");
    if (substitute_t(top->poly, gs.inverse.M) != gs.E * (*sigma))
        throw Error(ErrorCode::CrossCheckMismatch,
                    "specializing " + top->name + " at t -> M does not reproduce E");
    return gs.E;
}

/// Sampling certificate for the rational inverse: at random parameter points
/// away from the degeneracy loci, M(u(t0)) must be projectively equal to t0.
struct InverseCertificate {
    int samples = 0;
    int passes = 0;
    bool all_pass = false;
};

template <class K>
InverseCertificate sample_inverse_certificate(const Parametrization<K>& p,
                                              const InverseSubstitution<K>& sub, int samples,
                                              std::mt19937_64& rng) {
    auto ctx = p.u[0].context();
    const int n = p.n;
    InverseCertificate cert;
    cert.samples = samples;
    for (int s = 0; s < samples; ++s) {
        bool pass = false;
        for (int attempt = 0; attempt < 200; ++attempt) {
            std::vector<K> t0;
            for (int k = 0; k < n; ++k) t0.push_back(K::random(rng, ctx));
            bool t_zero = true;
            for (const auto& v : t0) t_zero = t_zero && v.is_zero();
            if (t_zero) continue;

            std::vector<K> dummy_x(static_cast<std::size_t>(n) + 1, K::zero(ctx));
            std::vector<K> ux;
            bool u_zero = true;
            for (const auto& f : p.u) {
                ux.push_back(evaluate(f, t0, dummy_x));
                u_zero = u_zero && ux.back().is_zero();
            }
            if (u_zero) continue;

            std::vector<K> dummy_t(static_cast<std::size_t>(n), K::zero(ctx));
            std::vector<K> w;
            bool w_zero = true;
            for (const auto& m : sub.M) {
                w.push_back(evaluate(m, dummy_t, ux));
                w_zero = w_zero && w.back().is_zero();
            }
            if (w_zero) continue;

            bool parallel = true;
            for (int i = 0; i < n && parallel; ++i)
                for (int j = i + 1; j < n && parallel; ++j)
                    parallel = (w[static_cast<std::size_t>(i)] * t0[static_cast<std::size_t>(j)]
                              - w[static_cast<std::size_t>(j)] * t0[static_cast<std::size_t>(i)]).is_zero();
            pass = parallel;
            break;
        }
        if (pass) ++cert.passes;
    }
    cert.all_pass = cert.passes == cert.samples;
    return cert;
}

}  // namespace reeskit

#endif
