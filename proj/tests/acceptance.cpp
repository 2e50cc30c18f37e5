// End-to-end acceptance checks, one per line of output. Each criterion is
// self-contained; a failure in one does not stop the others.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "reeskit/driver.hpp"
#include "reeskit/oracle.hpp"
#include "reeskit/parametrization.hpp"
#include "reeskit/reesgen.hpp"
#include "reeskit/syzygy.hpp"
#include "reeskit/text.hpp"

using namespace reeskit;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, bool pass, const std::string& description) {
    std::cout << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << " - "
              << description << std::endl;
    if (!pass) ++failures;
}

void run(int number, const std::string& description, const std::function<bool()>& body) {
    bool pass = false;
    try {
        pass = body();
    } catch (const std::exception& e) {
        std::cout << "  (criterion " << number << " threw: " << e.what() << ")\n";
    }
    report(number, pass, description);
}

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(REESKIT_FIXTURE_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MultiPoly<QQ> qq(const std::string& s, int n) { return parse_poly<QQ>(s, n, QQ::Context{}); }

std::vector<MultiPoly<QQ>> parse_all(const std::vector<std::string>& texts, int n) {
    std::vector<MultiPoly<QQ>> out;
    for (const auto& s : texts) out.push_back(qq(s, n));
    return out;
}

const std::string kQuarticE =
    "X1^4*X4 - X1^3*X2^2 - 2*X1^3*X2*X3 + 2*X1^3*X3^2 - X1^2*X2^3 + X1^2*X2^2*X3"
    " - 2*X1^2*X2*X3^2 - 2*X1^2*X2*X3*X4 - 4*X1^2*X3^3 + X1*X2^3*X3 - 2*X1*X2^2*X3^2"
    " - 2*X1*X2*X3^3 - X2^3*X3^2 + 2*X2^2*X3^3 + X2^2*X3^2*X4";

template <class K>
MultiPoly<K> random_form(int nvars, int deg, typename K::Context ctx, std::mt19937_64& rng) {
    MultiPoly<K> f(nvars, ctx);
    for (const auto& e : exponents_of_degree(nvars, deg))
        f.add_term(Monomial{e, std::vector<int>(nvars + 1, 0)}, K::random(rng, ctx));
    return f;
}

template <class K>
std::vector<Bidegree> bidegree_profile(const GeneratorSet<K>& gs) {
    std::vector<Bidegree> out;
    for (const auto& g : gs.generators) out.push_back(g.bidegree);
    std::sort(out.begin(), out.end(), [](const Bidegree& a, const Bidegree& b) {
        return std::pair{a.t_deg, a.x_deg} < std::pair{b.t_deg, b.x_deg};
    });
    return out;
}

// invertible change of target coordinates: product of random unitriangular
// matrices, so the determinant is 1 by construction
template <class K>
std::vector<std::vector<K>> random_invertible(int m, typename K::Context ctx,
                                              std::mt19937_64& rng) {
    auto ident = [&] {
        std::vector<std::vector<K>> s(m, std::vector<K>(m, K::from_int(0, ctx)));
        for (int i = 0; i < m; ++i) s[i][i] = K::from_int(1, ctx);
        return s;
    };
    auto mul = [&](const std::vector<std::vector<K>>& a, const std::vector<std::vector<K>>& b) {
        auto c = ident();
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                K acc = K::from_int(0, ctx);
                for (int k = 0; k < m; ++k) acc = acc + a[i][k] * b[k][j];
                c[i][j] = acc;
            }
        return c;
    };
    auto lower = ident();
    auto upper = ident();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j) {
            lower[i][j] = K::random(rng, ctx);
            upper[j][i] = K::random(rng, ctx);
        }
    return mul(lower, upper);
}

template <class K>
std::vector<MultiPoly<K>> apply_matrix(const std::vector<std::vector<K>>& s,
                                       const std::vector<MultiPoly<K>>& u) {
    std::vector<MultiPoly<K>> out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        MultiPoly<K> acc = u[0] * s[i][0];
        for (std::size_t k = 1; k < u.size(); ++k) acc = acc + u[k] * s[i][k];
        out.push_back(acc);
    }
    return out;
}

bool check_telescoping(const GeneratorSet<QQ>& gs) {
    for (const auto& g : gs.generators) {
        if (g.provenance.rfind("descent-", 0) != 0) continue;
        const QQ* sigma = gs.scalar("sigma_" + g.name);
        if (!sigma) return false;
        if (!(substitute_t(g.poly, gs.inverse.M) == gs.E * *sigma)) return false;
    }
    return true;
}

}  // namespace

int main() {
    // 1: the degree-4 surface fixture, end to end over the rationals
    run(1, "quartic surface: five generators with the expected implicit equation, under 5s",
        [] {
            auto t0 = Clock::now();
            auto pf = ProblemFile::parse(fixture("quartic_surface.problem"));
            pf.validate();
            std::vector<std::string> plane_texts;
            for (const auto& e : pf.mu_basis) plane_texts.push_back(e.value);
            auto planes = parse_all(plane_texts, 3);
            auto u = u_from_moving_planes(planes);
            std::mt19937_64 rng(0);
            auto p = make_parametrization(u, CaseTag::Surface, true, rng);
            MuBasis<QQ> candidate{planes, {1, 1, p.d - 2}};
            auto mb = surface_mu_shape<QQ>(p, candidate);
            auto gs = surface_generators(p, mb);
            double secs = std::chrono::duration<double>(Clock::now() - t0).count();

            if (gs.generators.size() != 5) return false;
            const std::vector<Bidegree> want = {{1, 1}, {1, 1}, {2, 1}, {1, 3}, {0, 5}};
            for (int k = 0; k < 5; ++k)
                if (!(gs.generators[k].bidegree == want[k])) return false;
            if (!projectively_equal(gs.generators[4].poly, qq(kQuarticE, 3))) return false;
            if (secs >= 5.0) return false;

            RunOptions opts;
            auto res = run_command("generators", fixture("quartic_surface.problem"), opts);
            return res.exit_code == 0;
        });

    // 2: the degenerate moving-plane input is reported, not silently accepted
    run(2, "degenerate quartic input: two zero minors and the degree-2 image equation", [] {
        RunOptions opts;
        auto res = run_command("generators", fixture("degenerate_minors.problem"), opts);
        if (res.exit_code != 2) return false;

        std::vector<std::string> minors;
        std::istringstream in(res.output);
        std::string line;
        while (std::getline(in, line))
            if (line.rfind("minor: ", 0) == 0) minors.push_back(line.substr(7));
        if (minors.size() != 3) return false;
        if (minors[0] != "0" || minors[1] != "0") return false;

        // the nonzero minor is det of the linear-plane coefficient matrix
        auto det = qq("X1 + X2", 3) * qq("X2 + 3*X4", 3) -
                   qq("2*X3 + X4", 3) * qq("2*X1 + X3", 3);
        return projectively_equal(parse_poly<QQ>(minors[2], 3, QQ::Context{}), det);
    });

    // 3: the conic: known generators, certified generation, minimality
    run(3, "conic: expected generator set, certified to total degree 6, all necessary", [] {
        std::mt19937_64 rng(0);
        auto p = make_parametrization(parse_all({"t1^2", "t1*t2", "t2^2"}, 2), CaseTag::Curve,
                                      false, rng);
        auto gs = curve_generators(p);
        if (gs.generators.size() != 3) return false;
        std::vector<MultiPoly<QQ>> want = {qq("t1*X2 - t2*X1", 2), qq("t1*X3 - t2*X2", 2),
                                           qq("X1*X3 - X2^2", 2)};
        for (const auto& w : want) {
            bool hit = false;
            for (const auto& g : gs.generators)
                if (projectively_equal(g.poly, w)) hit = true;
            if (!hit) return false;
        }

        RunOptions opts;
        opts.bound = 6;
        auto res = run_command("verify", fixture("conic.problem"), opts);
        if (res.exit_code != 0) return false;
        if (res.output.find("verdict: Certified") == std::string::npos) return false;

        auto minimal = verify_minimality(gs);
        for (const auto& m : minimal.minimality)
            if (!m.necessary) return false;
        return minimal.certified();
    });

    // 4: random curves of degree 3..6 built from two random moving lines
    run(4, "20 random curves (degrees 3-6): d+1 generators, certified, under 60s", [] {
        auto t0 = Clock::now();
        Fp::Context ctx{32003};
        std::mt19937_64 rng(1);
        int built = 0;
        for (int d = 3; d <= 6; ++d) {
            for (int trial = 0; trial < 5; ++trial) {
                for (int attempt = 0;; ++attempt) {
                    if (attempt > 20) return false;
                    std::vector<MultiPoly<Fp>> a, b;
                    for (int i = 0; i < 3; ++i) {
                        a.push_back(random_form<Fp>(2, 1, ctx, rng));
                        b.push_back(random_form<Fp>(2, d - 1, ctx, rng));
                    }
                    std::vector<MultiPoly<Fp>> u = {a[1] * b[2] - a[2] * b[1],
                                                    a[2] * b[0] - a[0] * b[2],
                                                    a[0] * b[1] - a[1] * b[0]};
                    try {
                        auto p = make_parametrization(u, CaseTag::Curve, false, rng);
                        if (p.d != d) continue;
                        auto gs = curve_generators(p);
                        if (static_cast<int>(gs.generators.size()) != d + 1) return false;
                        for (const auto& g : gs.generators)
                            if (!substitute_X(g.poly, p.u).is_zero()) return false;
                        if (!verify_generation(p, gs, d + 2).certified()) return false;
                        if (!verify_minimality(gs).certified()) return false;
                        ++built;
                        break;
                    } catch (const Error& e) {
                        if (e.code() == ErrorCode::DegenerateInput ||
                            e.code() == ErrorCode::MuNotOne)
                            continue;  // unlucky draw
                        throw;
                    }
                }
            }
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        return built == 20 && secs < 60.0;
    });

    // 5: random monoid hypersurfaces in P^3 with the exact implicit equation
    run(5, "random monoids (degrees 2-5): 3+d generators, exact E, exact specialization", [] {
        Fp::Context ctx{32003};
        std::mt19937_64 rng(2);
        for (int d = 2; d <= 5; ++d) {
            for (int attempt = 0;; ++attempt) {
                if (attempt > 20) return false;
                auto f_top = random_form<Fp>(3, d - 1, ctx, rng);
                auto f_deg = random_form<Fp>(3, d, ctx, rng);
                try {
                    auto gs = hypersurface_generators(f_top, f_deg, rng);
                    if (static_cast<int>(gs.generators.size()) != 3 + d) return false;

                    std::vector<MultiPoly<Fp>> xs;
                    for (int i = 1; i <= 3; ++i)
                        xs.push_back(parse_poly<Fp>("X" + std::to_string(i), 3, ctx));
                    auto expected = substitute_t(f_top, xs) * parse_poly<Fp>("X4", 3, ctx) -
                                    substitute_t(f_deg, xs);
                    if (!(gs.E == expected)) return false;
                    for (const auto& g : gs.generators) {
                        if (g.provenance.rfind("descent-", 0) != 0) continue;
                        if (!(substitute_t(g.poly, gs.inverse.M) == gs.E)) return false;
                    }
                    break;
                } catch (const Error& e) {
                    if (e.code() == ErrorCode::CommonFactor) continue;
                    throw;
                }
            }
        }
        return true;
    });

    // 6: each recorded scalar certifies its descent step on every fixture
    run(6, "descent specializations reproduce sigma * E on all three fixtures", [] {
        std::mt19937_64 rng(0);
        auto pc = make_parametrization(parse_all({"t1^2", "t1*t2", "t2^2"}, 2), CaseTag::Curve,
                                       false, rng);
        if (!check_telescoping(curve_generators(pc))) return false;

        if (!check_telescoping(
                hypersurface_generators(qq("t1", 3), qq("t2^2 + t1*t3", 3), rng)))
            return false;

        auto pf = ProblemFile::parse(fixture("quartic_surface.problem"));
        pf.validate();
        std::vector<std::string> plane_texts;
        for (const auto& e : pf.mu_basis) plane_texts.push_back(e.value);
        auto planes = parse_all(plane_texts, 3);
        auto p = make_parametrization(u_from_moving_planes(planes), CaseTag::Surface, true, rng);
        MuBasis<QQ> candidate{planes, {1, 1, p.d - 2}};
        auto gs = surface_generators(p, surface_mu_shape<QQ>(p, candidate));
        return check_telescoping(gs);
    });

    // 7: the sampled inverse passes on every fixture over a prime field
    run(7, "inverse sampling: 10 of 10 points recovered on all three fixtures", [] {
        RunOptions opts;
        opts.field_override = "fp:32003";
        for (const auto* file : {"conic.problem", "monoid.problem", "quartic_surface.problem"}) {
            auto res = run_command("invert", fixture(file), opts);
            if (res.exit_code != 0) return false;
            if (res.output.find("certificate: passes = 10") == std::string::npos) return false;
            if (res.output.find("certificate: verdict = pass") == std::string::npos)
                return false;
        }
        return true;
    });

    // 8: high-degree slices come from the syzygy generators alone
    run(8, "slices at i in {d-1, d} are generated by the low-degree pairs", [] {
        std::mt19937_64 rng(0);
        auto pc = make_parametrization(parse_all({"t1^2", "t1*t2", "t2^2"}, 2), CaseTag::Curve,
                                       false, rng);
        if (!verify_high_degree_containment(pc, curve_mu_basis(pc), 3).certified()) return false;

        Fp::Context ctx{32003};
        auto pf = ProblemFile::parse(fixture("quartic_surface.problem"));
        pf.validate();
        std::vector<MultiPoly<Fp>> planes;
        for (const auto& e : pf.mu_basis) planes.push_back(parse_poly<Fp>(e.value, 3, ctx));
        auto p = make_parametrization(u_from_moving_planes(planes), CaseTag::Surface, true, rng);
        MuBasis<Fp> candidate{planes, {1, 1, p.d - 2}};
        auto mb = surface_mu_shape<Fp>(p, candidate);
        return verify_high_degree_containment(p, mb, 3).certified();
    });

    // 9: the construction is equivariant under target coordinate changes
    run(9, "5 random coordinate changes preserve bidegrees and transport E", [] {
        Fp::Context ctx{32003};
        std::mt19937_64 rng(3);

        std::vector<MultiPoly<Fp>> cu;
        for (const auto* s : {"t1^2", "t1*t2", "t2^2"}) cu.push_back(parse_poly<Fp>(s, 2, ctx));
        auto base_curve = curve_generators(make_parametrization(cu, CaseTag::Curve, false, rng));

        auto pf = ProblemFile::parse(fixture("quartic_surface.problem"));
        pf.validate();
        std::vector<MultiPoly<Fp>> planes;
        for (const auto& e : pf.mu_basis) planes.push_back(parse_poly<Fp>(e.value, 3, ctx));
        auto su = u_from_moving_planes(planes);
        auto base_p = make_parametrization(su, CaseTag::Surface, true, rng);
        auto base_surface =
            surface_generators(base_p, surface_mu_shape<Fp>(base_p, std::nullopt));

        for (int round = 0; round < 5; ++round) {
            {
                auto s = random_invertible<Fp>(3, ctx, rng);
                auto p2 = make_parametrization(apply_matrix(s, cu), CaseTag::Curve, false, rng);
                auto gs2 = curve_generators(p2);
                if (bidegree_profile(gs2) != bidegree_profile(base_curve)) return false;
                std::vector<MultiPoly<Fp>> images;
                for (int i = 0; i < 3; ++i) {
                    MultiPoly<Fp> acc(2, ctx);
                    for (int k = 0; k < 3; ++k) {
                        std::vector<int> xe(3, 0);
                        xe[k] = 1;
                        MultiPoly<Fp> xk(2, ctx);
                        xk.add_term(Monomial{{0, 0}, xe}, Fp::from_int(1, ctx));
                        acc = acc + xk * s[i][k];
                    }
                    images.push_back(acc);
                }
                if (!projectively_equal(substitute_X(gs2.E, images), base_curve.E)) return false;
            }
            {
                auto s = random_invertible<Fp>(4, ctx, rng);
                auto p2 = make_parametrization(apply_matrix(s, su), CaseTag::Surface, true, rng);
                auto gs2 = surface_generators(p2, surface_mu_shape<Fp>(p2, std::nullopt));
                if (bidegree_profile(gs2) != bidegree_profile(base_surface)) return false;
                std::vector<MultiPoly<Fp>> images;
                for (int i = 0; i < 4; ++i) {
                    MultiPoly<Fp> acc(3, ctx);
                    for (int k = 0; k < 4; ++k) {
                        std::vector<int> xe(4, 0);
                        xe[k] = 1;
                        MultiPoly<Fp> xk(3, ctx);
                        xk.add_term(Monomial{{0, 0, 0}, xe}, Fp::from_int(1, ctx));
                        acc = acc + xk * s[i][k];
                    }
                    images.push_back(acc);
                }
                if (!projectively_equal(substitute_X(gs2.E, images), base_surface.E))
                    return false;
            }
        }
        return true;
    });

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
