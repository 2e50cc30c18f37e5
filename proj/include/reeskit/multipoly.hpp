#ifndef REESKIT_MULTIPOLY_HPP
#define REESKIT_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "reeskit/errors.hpp"
#include "reeskit/field.hpp"
#include "reeskit/monomial.hpp"

namespace reeskit {

/// Exact sparse polynomial in the blocks t = (t1..tn), X = (X1..X_{n+1}) over
/// the field K. Terms are kept in descending graded-lex order, so begin() is
/// always the leading term; zero coefficients are never stored.
template <class K>
class MultiPoly {
  public:
    using Context = typename K::Context;
    using Terms = std::map<Monomial, K, MonomialDescending>;

    MultiPoly(int n, Context ctx) : n_(n), ctx_(ctx) {}

    static MultiPoly zero(int n, Context ctx) { return MultiPoly(n, ctx); }

    static MultiPoly constant(int n, const K& c, Context ctx) {
        MultiPoly r(n, ctx);
        r.add_term(Monomial::unit(n), c);
        return r;
    }

    static MultiPoly variable_t(int n, int k, Context ctx) {
        if (k < 0 || k >= n) throw Error(ErrorCode::ArityMismatch, "t-variable index out of range");
        Monomial m = Monomial::unit(n);
        m.t_exp[static_cast<std::size_t>(k)] = 1;
        MultiPoly r(n, ctx);
        r.add_term(m, K::one(ctx));
        return r;
    }

    static MultiPoly variable_X(int n, int k, Context ctx) {
        if (k < 0 || k > n) throw Error(ErrorCode::ArityMismatch, "X-variable index out of range");
        Monomial m = Monomial::unit(n);
        m.x_exp[static_cast<std::size_t>(k)] = 1;
        MultiPoly r(n, ctx);
        r.add_term(m, K::one(ctx));
        return r;
    }

    int n() const { return n_; }
    Context context() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }

    void add_term(const Monomial& m, const K& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(m.t_exp.size()) != n_ || static_cast<int>(m.x_exp.size()) != n_ + 1)
            throw Error(ErrorCode::ArityMismatch, "monomial does not fit the variable blocks");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    K coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K::zero(ctx_) : it->second;
    }

    const std::pair<const Monomial, K>& leading_term() const {
        if (terms_.empty()) throw Error(ErrorCode::InternalError, "leading term of zero polynomial");
        return *terms_.begin();
    }

    int t_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.t_degree());
        return d;
    }

    int x_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.x_degree());
        return d;
    }

    bool is_t_only() const {
        for (const auto& [m, c] : terms_)
            if (m.x_degree() != 0) return false;
        return true;
    }

    bool is_x_only() const {
        for (const auto& [m, c] : terms_)
            if (m.t_degree() != 0) return false;
        return true;
    }

    bool is_bihomogeneous() const {
        if (terms_.empty()) return true;
        Bidegree b = terms_.begin()->first.bidegree();
        for (const auto& [m, c] : terms_)
            if (m.bidegree() != b) return false;
        return true;
    }

    /// Bidegree of a bihomogeneous polynomial; (0,0) for zero.
    Bidegree bidegree() const {
        if (terms_.empty()) return {0, 0};
        Bidegree b = terms_.begin()->first.bidegree();
        for (const auto& [m, c] : terms_)
            if (m.bidegree() != b)
                throw Error(ErrorCode::PreconditionViolation, "polynomial is not bihomogeneous");
        return b;
    }

    MultiPoly operator-() const {
        MultiPoly r(n_, ctx_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r(n_, ctx_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    MultiPoly operator*(const K& c) const {
        MultiPoly r(n_, ctx_);
        if (c.is_zero()) return r;
        for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Rescales to canonical form and returns the removed scalar s, so that
    /// old = s * new. Over Q: integer coefficients with content 1 and positive
    /// leading coefficient. Over F_p: monic. Zero polynomial returns 1.
    K normalize_content() {
        if (terms_.empty()) return K::one(ctx_);
        if constexpr (K::is_prime_field) {
            K lead = terms_.begin()->second;
            K inv = lead.inv();
            for (auto& [m, c] : terms_) c *= inv;
            return lead;
        } else {
            BigInt num_gcd = 0;
            BigInt den_lcm = 1;
            for (const auto& [m, c] : terms_) {
                num_gcd = boost::multiprecision::gcd(num_gcd, c.numerator());
                den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
            }
            BigRational s(num_gcd, den_lcm);
            if (terms_.begin()->second.numerator() < 0) s = -s;
            K scalar{s};
            K inv = scalar.inv();
            for (auto& [m, c] : terms_) c *= inv;
            return scalar;
        }
    }

  private:
    void check_compatible(const MultiPoly& o) const {
        if (n_ != o.n_) throw Error(ErrorCode::ArityMismatch, "operands have different numbers of t-variables");
        if (!(ctx_ == o.ctx_)) throw Error(ErrorCode::FieldMismatch, "operands live over different fields");
    }

    int n_;
    Context ctx_;
    Terms terms_;
};

namespace detail {

/// Lazily extended power table image^0, image^1, ...
template <class K>
const MultiPoly<K>& power_of(std::vector<MultiPoly<K>>& table, const MultiPoly<K>& base, int e) {
    if (table.empty()) table.push_back(MultiPoly<K>::constant(base.n(), K::one(base.context()), base.context()));
    while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * base);
    return table[static_cast<std::size_t>(e)];
}

}  // namespace detail

/// Simultaneous substitution t_k -> t_images[k], X_k -> x_images[k]. An empty
/// image list leaves that block unchanged. All images must share f's variable
/// layout, so the result lives in the same ring. Ring homomorphism.
template <class K>
MultiPoly<K> substitute(const MultiPoly<K>& f,
                        const std::vector<MultiPoly<K>>& t_images,
                        const std::vector<MultiPoly<K>>& x_images) {
    const int n = f.n();
    auto ctx = f.context();
    if (!t_images.empty() && static_cast<int>(t_images.size()) != n)
        throw Error(ErrorCode::ArityMismatch, "need exactly n t-images");
    if (!x_images.empty() && static_cast<int>(x_images.size()) != n + 1)
        throw Error(ErrorCode::ArityMismatch, "need exactly n+1 X-images");
    for (const auto& g : t_images)
        if (g.n() != n || !(g.context() == ctx))
            throw Error(ErrorCode::ArityMismatch, "t-image has a different variable layout or field");
    for (const auto& g : x_images)
        if (g.n() != n || !(g.context() == ctx))
            throw Error(ErrorCode::ArityMismatch, "X-image has a different variable layout or field");

    std::vector<std::vector<MultiPoly<K>>> tpow(static_cast<std::size_t>(n));
    std::vector<std::vector<MultiPoly<K>>> xpow(static_cast<std::size_t>(n) + 1);

    MultiPoly<K> out(n, ctx);
    for (const auto& [m, c] : f.terms()) {
        MultiPoly<K> prod = MultiPoly<K>::constant(n, c, ctx);
        for (int k = 0; k < n; ++k) {
            int e = m.t_exp[static_cast<std::size_t>(k)];
            if (e == 0) continue;
            if (t_images.empty()) {
                Monomial shift = Monomial::unit(n);
                shift.t_exp[static_cast<std::size_t>(k)] = e;
                MultiPoly<K> shifted(n, ctx);
                for (const auto& [pm, pc] : prod.terms()) shifted.add_term(pm * shift, pc);
                prod = shifted;
            } else {
                prod *= detail::power_of(tpow[static_cast<std::size_t>(k)], t_images[static_cast<std::size_t>(k)], e);
            }
        }
        for (int k = 0; k <= n; ++k) {
            int e = m.x_exp[static_cast<std::size_t>(k)];
            if (e == 0) continue;
            if (x_images.empty()) {
                Monomial shift = Monomial::unit(n);
                shift.x_exp[static_cast<std::size_t>(k)] = e;
                MultiPoly<K> shifted(n, ctx);
                for (const auto& [pm, pc] : prod.terms()) shifted.add_term(pm * shift, pc);
                prod = shifted;
            } else {
                prod *= detail::power_of(xpow[static_cast<std::size_t>(k)], x_images[static_cast<std::size_t>(k)], e);
            }
        }
        out += prod;
    }
    return out;
}

template <class K>
MultiPoly<K> substitute_X(const MultiPoly<K>& f, const std::vector<MultiPoly<K>>& x_images) {
    return substitute(f, {}, x_images);
}

template <class K>
MultiPoly<K> substitute_t(const MultiPoly<K>& f, const std::vector<MultiPoly<K>>& t_images) {
    return substitute(f, t_images, {});
}

/// Writes f = sum A_k * t_k with the canonical rule: every monomial is
/// assigned to the lowest-index t-variable dividing it. Requires f
/// bihomogeneous with every term of positive t-degree.
template <class K>
std::vector<MultiPoly<K>> split_on_t(const MultiPoly<K>& f) {
    const int n = f.n();
    if (!f.is_bihomogeneous())
        throw Error(ErrorCode::PreconditionViolation, "split requires a bihomogeneous polynomial");
    std::vector<MultiPoly<K>> parts(static_cast<std::size_t>(n), MultiPoly<K>::zero(n, f.context()));
    for (const auto& [m, c] : f.terms()) {
        int k = -1;
        for (int i = 0; i < n; ++i)
            if (m.t_exp[static_cast<std::size_t>(i)] >= 1) { k = i; break; }
        if (k < 0)
            throw Error(ErrorCode::PreconditionViolation, "split requires every term to have positive t-degree");
        Monomial q = m;
        q.t_exp[static_cast<std::size_t>(k)] -= 1;
        parts[static_cast<std::size_t>(k)].add_term(q, c);
    }
    return parts;
}

/// Exact single-divisor division by greedy leading-term elimination. Because
/// the term order is multiplicative this decides divisibility: returns the
/// quotient if g | f, nullopt otherwise.
template <class K>
std::optional<MultiPoly<K>> try_divide(const MultiPoly<K>& f, const MultiPoly<K>& g) {
    if (g.is_zero()) throw Error(ErrorCode::PreconditionViolation, "division by zero polynomial");
    const int n = f.n();
    MultiPoly<K> q(n, f.context());
    MultiPoly<K> r = f;
    const auto& [gm, gc] = g.leading_term();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading_term();
        Monomial mq = Monomial::unit(n);
        for (int i = 0; i < n; ++i) {
            int e = rm.t_exp[static_cast<std::size_t>(i)] - gm.t_exp[static_cast<std::size_t>(i)];
            if (e < 0) return std::nullopt;
            mq.t_exp[static_cast<std::size_t>(i)] = e;
        }
        for (int i = 0; i <= n; ++i) {
            int e = rm.x_exp[static_cast<std::size_t>(i)] - gm.x_exp[static_cast<std::size_t>(i)];
            if (e < 0) return std::nullopt;
            mq.x_exp[static_cast<std::size_t>(i)] = e;
        }
        K cq = rc / gc;
        MultiPoly<K> step(n, f.context());
        step.add_term(mq, cq);
        q += step;
        r -= step * g;
    }
    return q;
}

/// Equality up to a nonzero scalar, decided via canonical normalization.
template <class K>
bool projectively_equal(const MultiPoly<K>& f, const MultiPoly<K>& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    MultiPoly<K> a = f;
    MultiPoly<K> b = g;
    a.normalize_content();
    b.normalize_content();
    return a == b;
}

/// Coefficient vector of a bihomogeneous f against a slice monomial basis.
template <class K>
std::vector<K> coefficient_row(const MultiPoly<K>& f, const MonomialIndex& idx) {
    std::vector<K> row(static_cast<std::size_t>(idx.size()), K::zero(f.context()));
    for (const auto& [m, c] : f.terms()) {
        auto it = idx.position.find(m);
        if (it == idx.position.end())
            throw Error(ErrorCode::InternalError, "term lies outside the slice monomial basis");
        row[static_cast<std::size_t>(it->second)] = c;
    }
    return row;
}

/// f shifted by a monomial factor.
template <class K>
MultiPoly<K> monomial_multiple(const MultiPoly<K>& f, const Monomial& m) {
    MultiPoly<K> out(f.n(), f.context());
    for (const auto& [fm, fc] : f.terms()) out.add_term(fm * m, fc);
    return out;
}

/// Full evaluation at field points.
template <class K>
K evaluate(const MultiPoly<K>& f, const std::vector<K>& tvals, const std::vector<K>& xvals) {
    const int n = f.n();
    auto ctx = f.context();
    if (static_cast<int>(tvals.size()) != n || static_cast<int>(xvals.size()) != n + 1)
        throw Error(ErrorCode::ArityMismatch, "evaluation needs n t-values and n+1 X-values");
    auto pow = [&](const K& base, int e) {
        K r = K::one(ctx);
        for (int q = 0; q < e; ++q) r *= base;
        return r;
    };
    K out = K::zero(ctx);
    for (const auto& [m, c] : f.terms()) {
        K v = c;
        for (int k = 0; k < n; ++k) v *= pow(tvals[static_cast<std::size_t>(k)], m.t_exp[static_cast<std::size_t>(k)]);
        for (int k = 0; k <= n; ++k) v *= pow(xvals[static_cast<std::size_t>(k)], m.x_exp[static_cast<std::size_t>(k)]);
        out += v;
    }
    return out;
}

// ---------------------------------------------------------------------------
// gcds of binary forms and the probabilistic coprimality certificate

namespace detail {

/// Univariate remainder a mod b, coefficients low-to-high, b nonzero.
template <class K>
std::vector<K> uni_mod(std::vector<K> a, const std::vector<K>& b, typename K::Context ctx) {
    auto trim = [](std::vector<K>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(a);
    K lead = b.back();
    while (a.size() >= b.size()) {
        K f = a.back() / lead;
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
        if (a.empty()) break;
    }
    (void)ctx;
    return a;
}

template <class K>
std::vector<K> uni_gcd(std::vector<K> a, std::vector<K> b, typename K::Context ctx) {
    auto trim = [](std::vector<K>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        std::vector<K> r = uni_mod(a, b, ctx);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace detail

/// Exact gcd of two nonzero binary forms (n = 2, t-variables only), computed
/// by stripping common t1/t2 powers, dehomogenizing at t2 = 1, running the
/// univariate Euclidean algorithm, and rehomogenizing. Monic-normalized.
template <class K>
MultiPoly<K> gcd_binary_forms(const MultiPoly<K>& f, const MultiPoly<K>& g) {
    if (f.n() != 2 || g.n() != 2)
        throw Error(ErrorCode::PreconditionViolation, "binary-form gcd requires n = 2");
    if (f.is_zero() || g.is_zero())
        throw Error(ErrorCode::PreconditionViolation, "binary-form gcd requires nonzero inputs");
    if (!f.is_t_only() || !g.is_t_only() || !f.is_bihomogeneous() || !g.is_bihomogeneous())
        throw Error(ErrorCode::PreconditionViolation, "binary-form gcd requires t-homogeneous inputs");
    auto ctx = f.context();

    // strip the common monomial factor, then dehomogenize degree-faithfully
    auto analyze = [&](const MultiPoly<K>& p, int& min1, int& min2, std::vector<K>& coeffs) {
        min1 = min2 = 1 << 28;
        for (const auto& [m, c] : p.terms()) {
            min1 = std::min(min1, m.t_exp[0]);
            min2 = std::min(min2, m.t_exp[1]);
        }
        int deg = p.t_degree() - min1 - min2;
        coeffs.assign(static_cast<std::size_t>(deg) + 1, K::zero(ctx));
        for (const auto& [m, c] : p.terms()) coeffs[static_cast<std::size_t>(m.t_exp[0] - min1)] = c;
    };

    int f1, f2, g1, g2;
    std::vector<K> fc, gc;
    analyze(f, f1, f2, fc);
    analyze(g, g1, g2, gc);

    std::vector<K> h = detail::uni_gcd(fc, gc, ctx);
    int e = static_cast<int>(h.size()) - 1;

    MultiPoly<K> out(2, ctx);
    int m1 = std::min(f1, g1);
    int m2 = std::min(f2, g2);
    for (int i = 0; i <= e; ++i) {
        if (h[static_cast<std::size_t>(i)].is_zero()) continue;
        Monomial mono = Monomial::unit(2);
        mono.t_exp[0] = i + m1;
        mono.t_exp[1] = (e - i) + m2;
        out.add_term(mono, h[static_cast<std::size_t>(i)]);
    }
    K lead = out.leading_term().second;
    out = out * lead.inv();
    return out;
}

struct CoprimeVerdict {
    bool coprime = false;
    int trials_used = 0;
    std::string note;
};

/// Restriction of a t-form to the pencil t_k = a_k s1 + b_k s2, as a binary
/// form in a 2-variable ring.
template <class K>
MultiPoly<K> restrict_to_pencil(const MultiPoly<K>& f, const std::vector<K>& a, const std::vector<K>& b) {
    const int n = f.n();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw Error(ErrorCode::ArityMismatch, "pencil needs one (a,b) pair per t-variable");
    if (!f.is_t_only())
        throw Error(ErrorCode::PreconditionViolation, "pencil restriction requires a t-only polynomial");
    auto ctx = f.context();
    std::vector<MultiPoly<K>> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        MultiPoly<K> lin = MultiPoly<K>::variable_t(2, 0, ctx) * a[static_cast<std::size_t>(k)]
                         + MultiPoly<K>::variable_t(2, 1, ctx) * b[static_cast<std::size_t>(k)];
        images.push_back(lin);
    }
    std::vector<std::vector<MultiPoly<K>>> pow(static_cast<std::size_t>(n));
    MultiPoly<K> out(2, ctx);
    for (const auto& [m, c] : f.terms()) {
        MultiPoly<K> prod = MultiPoly<K>::constant(2, c, ctx);
        for (int k = 0; k < n; ++k) {
            int e = m.t_exp[static_cast<std::size_t>(k)];
            if (e == 0) continue;
            prod *= detail::power_of(pow[static_cast<std::size_t>(k)], images[static_cast<std::size_t>(k)], e);
        }
        out += prod;
    }
    return out;
}

/// Sound one-sided test: a common factor h of the forms restricts to a common
/// factor (or zero) on every pencil, so any restriction with trivial gcd
/// certifies coprimality. Failure of all trials only *suggests* a common
/// factor.
template <class K>
CoprimeVerdict is_coprime_probabilistic(const std::vector<MultiPoly<K>>& fs, int trials, std::mt19937_64& rng) {
    if (fs.empty()) throw Error(ErrorCode::PreconditionViolation, "no forms given");
    const int n = fs[0].n();
    if (n < 3) throw Error(ErrorCode::PreconditionViolation, "probabilistic coprimality requires n >= 3");
    auto ctx = fs[0].context();
    for (const auto& f : fs)
        if (f.is_zero() || !f.is_t_only() || !f.is_bihomogeneous() || f.n() != n)
            throw Error(ErrorCode::PreconditionViolation, "coprimality inputs must be nonzero t-forms");

    for (int trial = 1; trial <= trials; ++trial) {
        std::vector<K> a, b;
        for (int k = 0; k < n; ++k) {
            a.push_back(K::random(rng, ctx));
            b.push_back(K::random(rng, ctx));
        }
        MultiPoly<K> g(2, ctx);
        for (const auto& f : fs) {
            MultiPoly<K> r = restrict_to_pencil(f, a, b);
            if (r.is_zero()) continue;
            g = g.is_zero() ? r : gcd_binary_forms(g, r);
            if (!g.is_zero() && g.t_degree() == 0) break;
        }
        if (!g.is_zero() && g.t_degree() == 0)
            return {true, trial, "coprime (certified by a pencil restriction)"};
    }
    return {false, trials, "common factor suspected (no restriction certified coprimality)"};
}

/// Exact coprimality of a list of binary forms via iterated gcds.
template <class K>
bool is_coprime_binary(const std::vector<MultiPoly<K>>& fs) {
    if (fs.empty()) throw Error(ErrorCode::PreconditionViolation, "no forms given");
    MultiPoly<K> g = fs[0];
    for (std::size_t i = 1; i + 0 < fs.size(); ++i) {
        g = gcd_binary_forms(g, fs[i]);
        if (g.t_degree() == 0) return true;
    }
    return g.t_degree() == 0;
}

}  // namespace reeskit

#endif
