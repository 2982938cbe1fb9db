#include <doctest.h>

#include <thread>

#include <gaugecoho/errors.hpp>
#include <gaugecoho/random.hpp>
#include <gaugecoho/suspension.hpp>

using namespace gaugecoho;

namespace
{

GradedPoly P(const SuspensionOperator &op, const std::string &text)
{
    return parse_poly(text, op.context());
}

} // namespace

TEST_CASE("generator images")
{
    for (long k : {-2L, 0L, 1L, 5L}) {
        const SuspensionOperator op(k);
        CHECK(op.generator_image(1) == GradedPoly::constant(op.context(), k));
        CHECK(op.generator_image(2) == Integer(k) * P(op, "c1") - P(op, "x1"));
        CHECK(op.generator_image(3) == Integer(k) * P(op, "c2") + P(op, "-x1*c1 + x1^2 - 2*x2"));
        for (unsigned i = 1; i <= 12; ++i) {
            const auto img = op.generator_image(i);
            CHECK((img.is_zero() || img.weight() == i - 1u));
        }
    }
    const SuspensionOperator op(1, 4);
    CHECK_THROWS_AS(op.generator_image(0), ArgumentError);
    CHECK_THROWS_AS(op.generator_image(6), CapError);
}

TEST_CASE("derivation extension")
{
    const SuspensionOperator op(3);
    CHECK(op.apply(P(op, "c1^2")) == P(op, "6*c1"));
    CHECK(op.apply(P(op, "c1*c2")) == P(op, "3*c2 + 3*c1^2 - c1*x1"));
    CHECK(op.apply(P(op, "1")).is_zero());
    CHECK(op.apply(P(op, "7*c1")) == P(op, "21"));
    CHECK_THROWS_AS(op.apply(P(op, "c1*x1")), ArgumentError);

    const SuspensionOperator five(5);
    CHECK(render_poly(five.apply(P(five, "c1*c2"))) == "5*c1^2 - c1*x1 + 5*c2");
}

TEST_CASE("Leibniz rule on seeded random pairs")
{
    SeededRng rng(41);
    for (long k : {-1L, 2L}) {
        const SuspensionOperator op(k);
        for (int t = 0; t < 100; ++t) {
            const auto p = random_homogeneous(rng, op.context(), static_cast<unsigned>(rng.below(5)), 3, 6, {Family::c});
            const auto q = random_homogeneous(rng, op.context(), static_cast<unsigned>(rng.below(5)), 3, 6, {Family::c});
            CHECK(op.apply(p * q) == op.apply(p) * q + p * op.apply(q));
            CHECK(op.apply(p + q) == op.apply(p) + op.apply(q));
        }
    }
}

TEST_CASE("weight drops by one")
{
    SeededRng rng(43);
    const SuspensionOperator op(2);
    for (int t = 0; t < 50; ++t) {
        const auto w = 1u + static_cast<unsigned>(rng.below(8));
        const auto p = random_homogeneous(rng, op.context(), w, 4, 6, {Family::c});
        const auto img = op.apply(p);
        CHECK((img.is_zero() || img.weight() == w - 1u));
        if (w == 1u) {
            CHECK((img.is_zero() || img.weight() == 0u));
        }
    }
}

TEST_CASE("Whitney coproduct")
{
    const auto ctx = SuspensionOperator(0).context();
    const auto c = [&](unsigned i) { return i == 0u ? GradedPoly::constant(ctx, 1) : GradedPoly::generator(ctx, {Family::c, i}); };
    const auto one = whitney_coproduct(1, ctx);
    REQUIRE(one.size() == 2u);
    CHECK(one[0] == std::make_pair(c(0), c(1)));
    CHECK(one[1] == std::make_pair(c(1), c(0)));
    const auto two = whitney_coproduct(2, ctx);
    REQUIRE(two.size() == 3u);
    CHECK(two[1] == std::make_pair(c(1), c(1)));
    const auto zero = whitney_coproduct(0, ctx);
    REQUIRE(zero.size() == 1u);
    CHECK(zero[0] == std::make_pair(c(0), c(0)));
}

TEST_CASE("loop suspension of the c_m")
{
    const SuspensionOperator op(0);
    const auto &ctx = op.context();
    CHECK(sigma0_generator(1, ctx).is_zero());
    CHECK(sigma0_generator(2, ctx) == P(op, "-x1"));
    CHECK(sigma0_generator(3, ctx) == P(op, "x1^2 - 2*x2"));
    CHECK_THROWS_AS(sigma0_generator(0, ctx), ArgumentError);
}

TEST_CASE("two routes agree")
{
    for (long k : {-3L, 0L, 1L, 4L}) {
        const SuspensionOperator op(k);
        for (unsigned i = 1; i <= 12; ++i) {
            CAPTURE(i);
            CHECK(op.generator_image_via_coproduct(i) == op.generator_image(i));
        }
        CHECK(op.generator_image_via_coproduct(2) == Integer(k) * P(op, "c1") - P(op, "x1"));
    }
}

TEST_CASE("loop restriction")
{
    const SuspensionOperator op(3);
    CHECK(loop_restriction(op.generator_image(3)) == P(op, "x1^2 - 2*x2"));
    CHECK(loop_restriction(P(op, "c1*x1")).is_zero());
    CHECK(loop_restriction(P(op, "x2")) == P(op, "x2"));
    CHECK(loop_restriction(op.generator_image(1)) == P(op, "3"));
    for (unsigned i = 2; i <= 12; ++i) {
        CHECK(loop_restriction(op.generator_image(i)) == sigma0_generator(i, op.context()));
    }
}

TEST_CASE("projection to the gauge presentation")
{
    for (long k : {-2L, 0L, 1L, 3L}) {
        const SuspensionOperator op(k);
        for (unsigned n : {1u, 2u, 3u}) {
            const auto spec = PresentationSpec::gauge(n, k, 10);
            for (unsigned i = n; i <= 10; ++i) {
                CAPTURE(n);
                CAPTURE(i);
                CHECK(project_to_gauge(op.generator_image(i + 1), spec) == gauge_relation(i, spec));
            }
        }
        const auto h2 = project_to_gauge(op.generator_image(3), PresentationSpec::gauge(2, k, 4));
        CHECK(h2 == parse_poly(std::to_string(k) + "*c2 - x1*c1 + x1^2 - 2*x2", h2.context()));
    }
    const SuspensionOperator op(1);
    CHECK(project_to_gauge(P(op, "c3"), 2).is_zero());
    CHECK(project_to_gauge(P(op, "c2 + c3*x1"), 2) == P(op, "c2"));
    CHECK(SuspensionOperator(1, 16, 2).truncate(P(op, "c3 + c1")) == P(op, "c1"));
}

TEST_CASE("memoized images are safe to read concurrently")
{
    const SuspensionOperator op(2);
    std::vector<std::thread> pool;
    std::vector<std::string> seen(4);
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&, t] {
            for (unsigned i = 1; i <= 12; ++i) {
                seen[t] += render_poly(op.generator_image(i)) + ";";
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    for (int t = 1; t < 4; ++t) {
        CHECK(seen[t] == seen[0]);
    }
}
