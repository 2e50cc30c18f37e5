#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "reeskit/field.hpp"
#include "reeskit/multipoly.hpp"
#include "reeskit/text.hpp"

using namespace reeskit;

namespace {

MultiPoly<QQ> qq(const std::string& s, int n) { return parse_poly<QQ>(s, n, QQ::Context{}); }

MultiPoly<Fp> fp(const std::string& s, int n, std::uint32_t p = 32003) {
    return parse_poly<Fp>(s, n, Fp::Context{p});
}

}  // namespace

TEST_CASE("rational scalars reduce and divide exactly") {
    QQ::Context ctx;
    QQ a = QQ::from_fraction(BigInt(2), BigInt(4), ctx);
    CHECK(a.to_string() == "1/2");
    CHECK((a + a).to_string() == "1");
    CHECK((a * QQ::from_int(6, ctx)).to_string() == "3");
    CHECK(a.inv().to_string() == "2");
    CHECK_THROWS_AS(QQ::from_fraction(BigInt(1), BigInt(0), ctx), Error);
    CHECK(QQ::from_int(-7, ctx).is_display_negative());
    CHECK(QQ::from_int(-7, ctx).display_abs().to_string() == "7");
}

TEST_CASE("prime field scalars invert and reject mismatched moduli") {
    Fp::Context f7{7};
    Fp three = Fp::from_int(3, f7);
    CHECK((three * three.inv()).to_string() == "1");
    CHECK((Fp::from_int(5, f7) + Fp::from_int(4, f7)).to_string() == "2");
    CHECK(Fp::from_fraction(BigInt(1), BigInt(3), f7).to_string() == "5");
    CHECK_THROWS_AS(Fp::from_fraction(BigInt(1), BigInt(14), f7), Error);
    Fp::Context f5{5};
    CHECK_THROWS_AS(Fp::from_int(1, f7) + Fp::from_int(1, f5), Error);
}

TEST_CASE("graded lexicographic order ranks by total degree then exponents") {
    Monomial a({2, 0}, {0, 0, 0});  // t1^2
    Monomial b({1, 1}, {0, 0, 0});  // t1 t2
    Monomial c({0, 0}, {1, 0, 0});  // X1
    CHECK(compare_monomials(a, b) > 0);
    CHECK(compare_monomials(b, c) > 0);  // higher total degree wins
    CHECK(compare_monomials(a, a) == 0);
    Monomial tx({1, 0}, {0, 1, 0});  // t1 X2
    Monomial xt({0, 1}, {1, 0, 0});  // t2 X1
    CHECK(compare_monomials(tx, xt) > 0);  // t1 outranks t2 at equal degree
}

TEST_CASE("degree enumeration is complete and descending") {
    auto exps = exponents_of_degree(3, 2);
    CHECK(static_cast<long long>(exps.size()) == count_monomials(3, 2));
    CHECK(exps.front() == std::vector<int>{2, 0, 0});
    CHECK(exps.back() == std::vector<int>{0, 0, 2});
    for (std::size_t k = 1; k < exps.size(); ++k) CHECK(exps[k - 1] > exps[k]);
    CHECK(count_monomials(2, 5) == 6);
    CHECK(count_monomials(4, 3) == 20);
}

TEST_CASE("polynomial arithmetic distributes and cancels") {
    auto f = qq("t1^2 + 2*t1*t2", 2);
    auto g = qq("t2 - t1", 2);
    auto h = qq("X1 + X3", 2);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f - f == MultiPoly<QQ>::zero(2, QQ::Context{}));
    CHECK((f * g).t_degree() == 3);
    CHECK(-(f - g) == g - f);
}

TEST_CASE("substitution is a ring homomorphism") {
    QQ::Context ctx;
    auto f = qq("t1*X2 - t2*X1", 2);
    auto g = qq("t1^2 + t2*t1", 2);
    std::vector<MultiPoly<QQ>> images = {qq("t1 + t2", 2), qq("t2^2", 2)};
    CHECK(substitute_t(f * g, images) == substitute_t(f, images) * substitute_t(g, images));
    CHECK(substitute_t(f + g, images) == substitute_t(f, images) + substitute_t(g, images));
    // empty image list is the identity
    CHECK(substitute_t(f, {}) == f);
}

TEST_CASE("splitting on t reassembles and routes to the lowest index") {
    auto f = qq("t1^2*X1 + t1*t2*X2 + t2^2*X3", 2);
    auto parts = split_on_t(f);
    REQUIRE(parts.size() == 2);
    auto t1 = MultiPoly<QQ>::variable_t(2, 0, QQ::Context{});
    auto t2 = MultiPoly<QQ>::variable_t(2, 1, QQ::Context{});
    CHECK(parts[0] * t1 + parts[1] * t2 == f);
    // t1*t2*X2 must land in the t1 part
    CHECK(parts[0] == qq("t1*X1 + t2*X2", 2));
    CHECK(parts[1] == qq("t2*X3", 2));
    CHECK_THROWS_AS(split_on_t(qq("X1", 2)), Error);        // no t to split on
    CHECK_THROWS_AS(split_on_t(qq("t1 + X1", 2)), Error);   // not bihomogeneous
}

TEST_CASE("bidegrees are tracked and mixed degrees rejected") {
    auto f = qq("t1*t2*X1*X2 - t2^2*X3^2", 2);
    CHECK(f.bidegree() == Bidegree{2, 2});
    CHECK(f.is_bihomogeneous());
    auto mixed = qq("t1 + t1^2", 2);
    CHECK(!mixed.is_bihomogeneous());
    CHECK_THROWS_AS(mixed.bidegree(), Error);
    CHECK(MultiPoly<QQ>::zero(2, QQ::Context{}).bidegree() == Bidegree{0, 0});
}

TEST_CASE("content normalization fixes sign and scale over the rationals") {
    auto f = qq("2/3*X1 + 4/3*X2", 2);
    QQ s = f.normalize_content();
    CHECK(f == qq("X1 + 2*X2", 2));
    CHECK(s.to_string() == "2/3");
    auto g = qq("-3*X1 + 6*X2", 2);
    QQ sg = g.normalize_content();
    CHECK(g == qq("X1 - 2*X2", 2));
    CHECK(sg.to_string() == "-3");
}

TEST_CASE("content normalization makes prime-field polynomials monic") {
    auto f = fp("3*t1 + 6*t2", 2, 7);
    Fp s = f.normalize_content();
    CHECK(s.to_string() == "3");
    CHECK(f == fp("t1 + 2*t2", 2, 7));
}

TEST_CASE("printing and parsing round-trip canonical text") {
    for (const std::string s : {"t1^2*X1 - t2^2*X3", "X1*X3 - X2^2", "t1*t2", "0",
                                "2*t1^3 - t1*t2^2 + 3*t2^3", "-t1 + t2", "1/2*X1 - X2"}) {
        CHECK(to_text(qq(s, 2)) == s);
    }
    CHECK(to_text(fp("32002*X1", 2)) == "32002*X1");
}

TEST_CASE("parse errors carry positions") {
    QQ::Context ctx;
    CHECK_THROWS_AS(parse_poly<QQ>("", 2, ctx), ParseError);
    CHECK_THROWS_AS(parse_poly<QQ>("t1 +", 2, ctx), ParseError);
    CHECK_THROWS_AS(parse_poly<QQ>("t1 t2", 2, ctx), ParseError);   // missing '*'
    CHECK_THROWS_AS(parse_poly<QQ>("t3", 2, ctx), ParseError);      // index out of range
    CHECK_THROWS_AS(parse_poly<QQ>("X4", 2, ctx), ParseError);      // X goes up to n+1
    CHECK_THROWS_AS(parse_poly<QQ>("t1^", 2, ctx), ParseError);
    try {
        parse_poly<QQ>("t1*X9", 2, ctx, 5, 12);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 5);
        CHECK(e.column() == 12 + 5);  // reported just past the offending variable
    }
}

TEST_CASE("binary form gcd strips monomials and stays degree-faithful") {
    auto g1 = gcd_binary_forms(qq("t1^2 - t2^2", 2), qq("t1^2 + 2*t1*t2 + t2^2", 2));
    CHECK(g1 == qq("t1 + t2", 2));
    auto g2 = gcd_binary_forms(qq("t1^3*t2", 2), qq("t1*t2^3", 2));
    CHECK(g2 == qq("t1*t2", 2));
    auto g3 = gcd_binary_forms(qq("t1^2", 2), qq("t2^2", 2));
    CHECK(g3 == qq("1", 2));
    CHECK_THROWS_AS(gcd_binary_forms(qq("X1", 2), qq("t1", 2)), Error);
}

TEST_CASE("coprimality checks certify and refute") {
    CHECK(is_coprime_binary<QQ>({qq("t1^2", 2), qq("t1*t2", 2), qq("t2^2", 2)}));
    CHECK(!is_coprime_binary<QQ>({qq("t1^2", 2), qq("t1*t2", 2)}));
    std::mt19937_64 rng(1);
    QQ::Context ctx;
    auto t1 = parse_poly<QQ>("t1", 3, ctx);
    auto t2 = parse_poly<QQ>("t2", 3, ctx);
    auto t3 = parse_poly<QQ>("t3", 3, ctx);
    auto v1 = is_coprime_probabilistic<QQ>({t1, t2, t3}, 8, rng);
    CHECK(v1.coprime);
    auto shared = parse_poly<QQ>("t1*t2", 3, ctx);
    auto shared2 = parse_poly<QQ>("t1*t3", 3, ctx);
    auto v2 = is_coprime_probabilistic<QQ>({shared, shared2}, 8, rng);
    CHECK(!v2.coprime);
}

TEST_CASE("evaluation agrees with substitution by constants") {
    QQ::Context ctx;
    auto f = qq("t1^2*X2 - 3*t2*X1", 2);
    std::vector<QQ> t0 = {QQ::from_int(2, ctx), QQ::from_int(1, ctx)};
    std::vector<QQ> x0 = {QQ::from_int(5, ctx), QQ::from_int(7, ctx), QQ::from_int(0, ctx)};
    // 4*7 - 3*1*5 = 13
    CHECK(evaluate(f, t0, x0).to_string() == "13");
}

TEST_CASE("projective equality ignores scalars only") {
    CHECK(projectively_equal(qq("2*X1 - 4*X2", 2), qq("-X1 + 2*X2", 2)));
    CHECK(!projectively_equal(qq("X1", 2), qq("X2", 2)));
    CHECK(!projectively_equal(qq("X1", 2), qq("X1 + X2", 2)));
}

TEST_CASE("rational and prime-field arithmetic agree on integer polynomials") {
    auto fq = qq("3*t1^2 - 2*t1*t2 + t2^2", 2) * qq("t1 + 5*t2", 2);
    auto fp_ = fp("3*t1^2 - 2*t1*t2 + t2^2", 2) * fp("t1 + 5*t2", 2);
    // compare term by term through text after reducing the rational one mod p
    auto reduced = parse_poly<Fp>(to_text(fq), 2, Fp::Context{32003});
    CHECK(reduced == fp_);
}

TEST_CASE("division decides exact divisibility") {
    auto f = qq("t1^2 - t2^2", 2);
    auto g = qq("t1 - t2", 2);
    auto q = try_divide(f, g);
    REQUIRE(q.has_value());
    CHECK(*q * g == f);
    CHECK(!try_divide(qq("t1^2 + t2^2", 2), g).has_value());
}
