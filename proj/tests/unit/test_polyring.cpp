#include <doctest.h>

#include <gaugecoho/errors.hpp>
#include <gaugecoho/polyring.hpp>
#include <gaugecoho/random.hpp>

#include "oracles.hpp"

using namespace gaugecoho;

namespace
{

const ContextPtr &ctx22()
{
    static const auto ctx = GeneratorContext::gauge(2, 2);
    return ctx;
}

GradedPoly P(const std::string &s, const ContextPtr &ctx = ctx22())
{
    return parse_poly(s, ctx);
}

std::vector<std::string> names(const std::vector<Monomial> &ms, const GeneratorContext &ctx)
{
    std::vector<std::string> out;
    for (const auto &m : ms) {
        out.push_back(m.to_string(ctx));
    }
    return out;
}

} // namespace

TEST_CASE("generator contexts")
{
    const auto ctx = GeneratorContext::gauge(3, 4);
    CHECK(ctx->size() == 7u);
    CHECK(ctx->family_cap(Family::c) == 3u);
    CHECK(ctx->family_cap(Family::x) == 4u);
    CHECK(ctx->family_cap(Family::y) == 0u);
    CHECK(ctx->position({Family::x, 1}) == 3u);
    CHECK_FALSE(ctx->position({Family::c, 4}));
    CHECK_THROWS_AS(GeneratorContext({{Family::c, 1}, {Family::c, 1}}), ArgumentError);
    CHECK_THROWS_AS(GeneratorContext({{Family::c, 0}}), ArgumentError);
    CHECK_THROWS_AS(GeneratorContext::gauge(1, 1, 4), ArgumentError);
}

TEST_CASE("monomial enumeration order")
{
    const auto c12 = GeneratorContext::make({{Family::c, 1}, {Family::c, 2}});
    CHECK(names(monomials_of_weight(*c12, 2), *c12) == std::vector<std::string>{"c1^2", "c2"});
    CHECK(names(monomials_of_weight(*ctx22(), 2), *ctx22())
          == std::vector<std::string>{"c1^2", "c1*x1", "c2", "x1^2", "x2"});
    CHECK(names(monomials_of_weight(*ctx22(), 0), *ctx22()) == std::vector<std::string>{"1"});
}

TEST_CASE("monomial counts match a brute-force enumerator")
{
    for (unsigned n = 1; n <= 3; ++n) {
        const auto ctx = GeneratorContext::gauge(n, 10);
        std::vector<unsigned> weights;
        for (const auto &g : ctx->generators()) {
            weights.push_back(g.weight());
        }
        for (unsigned w = 0; w <= 10; ++w) {
            const auto ms = monomials_of_weight(*ctx, w);
            CHECK(ms.size() == oracle::count_monomials(w, weights));
            for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
                CHECK(MonomialOrder{}(ms[i], ms[i + 1]));
            }
        }
    }
}

TEST_CASE("arithmetic")
{
    CHECK(P("c1 - x1") * P("c1 + x1") == P("c1^2 - x1^2"));
    CHECK(GradedPoly::zero(ctx22()) + P("c2") == P("c2"));
    CHECK(P("c1 + x1").pow(2) == P("c1^2 + 2*c1*x1 + x1^2"));
    CHECK((P("c1") * P("x2")).weight() == 3u);
    CHECK_FALSE((P("c1") + P("c2")).is_homogeneous());
    CHECK((P("c1") - P("c1")).is_zero());
}

TEST_CASE("operands from different contexts are rejected")
{
    const auto other = GeneratorContext::gauge(3, 2);
    CHECK_THROWS_AS(P("c1") + P("c1", other), ContextMismatch);
    const auto mod3 = ctx22()->with_modulus(3);
    CHECK_THROWS_AS(P("c1") * P("c1", mod3), DomainMismatch);
    CHECK_THROWS_AS(P("c3", other).recontext(ctx22()), ContextMismatch);
    CHECK(P("c1*x2", other).recontext(ctx22()) == P("c1*x2"));
}

TEST_CASE("parsing")
{
    const auto p = P("3*c2 - x1*c1 + x1^2 - 2*x2");
    CHECK(p.size() == 4u);
    CHECK(p.weight() == 2u);
    CHECK(p.coefficient(Monomial(*ctx22(), {{0, 1}, {2, 1}})) == -1);
    CHECK(P(" c1  -x1 ") == P("c1 - x1"));
    CHECK(P("-2*c1") == P("c1") * Integer(-2));
    CHECK(P("0") .is_zero());
    CHECK(P("c1*c1") == P("c1^2"));
}

TEST_CASE("parse errors carry kind and offset")
{
    auto kind_at = [](const std::string &text) {
        try {
            P(text);
        } catch (const ParseError &e) {
            return std::make_pair(e.kind(), e.offset());
        }
        FAIL("no parse error for " << text);
        return std::make_pair(ParseError::Kind::syntax, std::size_t{0});
    };
    CHECK(kind_at("c1 + qq") == std::make_pair(ParseError::Kind::syntax, std::size_t{5}));
    CHECK(kind_at("c3").first == ParseError::Kind::unknown_generator);
    CHECK(kind_at("y1").first == ParseError::Kind::unknown_generator);
    CHECK(kind_at("x3").first == ParseError::Kind::index_out_of_range);
    CHECK(kind_at("c0").first == ParseError::Kind::index_out_of_range);
    CHECK(kind_at("c1 +").first == ParseError::Kind::syntax);
    CHECK(kind_at("c1^").first == ParseError::Kind::syntax);
    CHECK(kind_at("").first == ParseError::Kind::syntax);
}

TEST_CASE("rendering")
{
    CHECK(render_poly(P("c1 - x1")) == "c1 - x1");
    CHECK(render_poly(GradedPoly::zero(ctx22())) == "0");
    CHECK(render_poly(P("-2*x2 + x1^2")) == "x1^2 - 2*x2");
    CHECK(render_poly(P("-c2 + 7")) == "7 - c2");
    CHECK(render_poly(P("3*c2 - x1*c1")) == "-c1*x1 + 3*c2");
}

TEST_CASE("parse and render round trip on seeded random polynomials")
{
    SeededRng rng(7);
    const auto ctx = GeneratorContext::gauge(3, 6);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_poly(rng, ctx, 6, 6, 50);
        CAPTURE(render_poly(p));
        CHECK(parse_poly(render_poly(p), ctx) == p);
    }
}

TEST_CASE("ring axioms on seeded random triples")
{
    SeededRng rng(11);
    const auto ctx = GeneratorContext::gauge(2, 4);
    for (int i = 0; i < 100; ++i) {
        const auto a = random_poly(rng, ctx, 3, 4, 9);
        const auto b = random_poly(rng, ctx, 3, 4, 9);
        const auto c = random_poly(rng, ctx, 3, 4, 9);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("reduction mod p commutes with arithmetic")
{
    SeededRng rng(13);
    const auto ctx = GeneratorContext::gauge(2, 4);
    for (const std::uint64_t p : {2u, 3u, 5u}) {
        for (int i = 0; i < 30; ++i) {
            const auto a = random_poly(rng, ctx, 3, 4, 20);
            const auto b = random_poly(rng, ctx, 3, 4, 20);
            CHECK(reduce_mod(a * b, p) == reduce_mod(a, p) * reduce_mod(b, p));
            CHECK(reduce_mod(a - b, p) == reduce_mod(a, p) - reduce_mod(b, p));
        }
    }
    const auto r = reduce_mod(P("3*c1 - x1"), 3);
    CHECK(r.context()->modulus() == 3u);
    CHECK(render_poly(r) == "2*x1");
}

TEST_CASE("substitution")
{
    const auto ctx = GeneratorContext::gauge(3, 2);
    const auto c = [&](unsigned i) { return GradedPoly::generator(ctx, {Family::c, i}); };
    CHECK(substitute(P("c3 + c1*x1", ctx), {{{Family::c, 3}, GradedPoly::zero(ctx)}}) == P("c1*x1", ctx));
    CHECK(substitute(P("x1^2", ctx), {{{Family::x, 1}, Integer(2) * c(1)}}) == P("4*c1^2", ctx));
    const auto h2 = P("c2 - c1*x1 + x1^2 - 2*x2");
    CHECK(substitute(h2, {{{Family::x, 1}, GradedPoly::zero(ctx22())}, {{Family::x, 2}, GradedPoly::zero(ctx22())}})
          == P("c2"));
}

TEST_CASE("elementary images")
{
    const auto ctx = GeneratorContext::bott(3);
    const auto s3 = from_elementary(symfunc::power_sum_in_e(3), ctx, Family::y);
    CHECK(s3 == parse_poly("y1^3 - 3*y1*y2 + 3*y3", ctx));
    CHECK_THROWS_AS(from_elementary(symfunc::chern_character_component(2), ctx, Family::y), ArgumentError);
}
