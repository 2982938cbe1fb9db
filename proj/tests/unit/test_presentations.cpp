#include <doctest.h>

#include <gaugecoho/errors.hpp>
#include <gaugecoho/presentations.hpp>
#include <gaugecoho/random.hpp>

#include "oracles.hpp"

using namespace gaugecoho;

namespace
{

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();

GradedPoly P(const PresentationSpec &spec, const std::string &text)
{
    return parse_poly(text, spec.context());
}

std::vector<Integer> dims(const PresentationSpec &spec, Ring ring)
{
    return Presentation(spec).poincare_series(ring, spec.weight_cap()).coefficients();
}

std::vector<Integer> ints(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

oracle::Matrix to_oracle(const IntMatrix &m)
{
    oracle::Matrix out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i][j] = m(i, j);
        }
    }
    return out;
}

std::vector<mpz_class> nontrivial(const std::vector<mpz_class> &ds)
{
    std::vector<mpz_class> out;
    for (const auto &d : ds) {
        if (d != 1) {
            out.push_back(d);
        }
    }
    return out;
}

} // namespace

TEST_CASE("ring descriptors")
{
    CHECK(Z.name() == "Z");
    CHECK(Q.name() == "Q");
    CHECK(Ring::prime_field(3).name() == "F_3");
    CHECK(Ring::from_modulus(0) == Q);
    CHECK(Ring::from_modulus(5) == Ring::prime_field(5));
    CHECK_THROWS_AS(Ring::prime_field(6), ArgumentError);
}

TEST_CASE("presentation specs")
{
    CHECK(PresentationSpec::gauge(2, -1).key() == "gauge-n2-k-1");
    CHECK(PresentationSpec::bott(3).key() == "bott-n3");
    CHECK(PresentationSpec::gauge(2, 1).weight_cap() == 10u);
    CHECK(PresentationSpec::gauge(2, 1, 4).context()->family_cap(Family::x) == 4u);
    CHECK_THROWS_AS(PresentationSpec::gauge(0, 1), ArgumentError);
    CHECK_THROWS_AS(PresentationSpec::bott(2, 0), ArgumentError);
}

TEST_CASE("gauge relations")
{
    for (long k : {-2L, 0L, 1L, 3L}) {
        const auto s1 = PresentationSpec::gauge(1, k, 3);
        CHECK(gauge_relation(1, s1) == Integer(k) * P(s1, "c1") - P(s1, "x1"));
    }
    const auto s = PresentationSpec::gauge(2, 3, 4);
    CHECK(gauge_relation(2, s) == P(s, "3*c2 - x1*c1 + x1^2 - 2*x2"));
    CHECK(gauge_relation(3, s) == P(s, "-c2*x1 + c1*x1^2 - 2*c1*x2 - x1^3 + 3*x1*x2 - 3*x3"));
    CHECK(gauge_relation(3, PresentationSpec::gauge(2, -7, 4)).recontext(s.context()) == gauge_relation(3, s));
    CHECK(gauge_relation(4, s).weight() == 4u);
    CHECK_THROWS_AS(gauge_relation(1, s), ArgumentError);
    CHECK_THROWS_AS(gauge_relation(5, s), CapError);
    CHECK_THROWS_AS(gauge_relation(2, PresentationSpec::bott(2)), ArgumentError);
}

TEST_CASE("bott relations")
{
    const auto b1 = PresentationSpec::bott(1, 3);
    CHECK(bott_relation(1, b1) == P(b1, "y1"));
    const auto b2 = PresentationSpec::bott(2, 3);
    CHECK(bott_relation(2, b2) == P(b2, "y1^2 - 2*y2"));
    CHECK(bott_relation(3, b2) == P(b2, "y1^3 - 3*y1*y2 + 3*y3"));
    CHECK_THROWS_AS(bott_relation(1, b2), ArgumentError);
    CHECK_THROWS_AS(bott_relation(4, b2), CapError);
}

TEST_CASE("degree components of Gauge(2,1)")
{
    const auto spec = PresentationSpec::gauge(2, 1, 4);
    const auto w2 = build_degree_component(spec, 2, Z);
    CHECK(w2.monomials.size() == 5u);
    CHECK(w2.relation_matrix == IntMatrix{{0, -1, 1, 1, -2}});
    CHECK(w2.dim == 4u);
    CHECK(w2.divisors == ints({1}));
    CHECK(w2.torsion_free());

    const auto w3 = build_degree_component(spec, 3, Z);
    CHECK(w3.monomials.size() == 9u);
    CHECK(w3.relation_matrix.rows() == 3u);
    CHECK(w3.dim == 6u);
    CHECK(w3.divisors == ints({1, 1, 1}));
    CHECK(rank_over_field(w3.relation_matrix, 0) == 3u);
    CHECK(nontrivial(oracle::elementary_divisors_by_minors(to_oracle(w3.relation_matrix))).empty());

    CHECK_THROWS_AS(build_degree_component(spec, 5, Z), CapError);
}

TEST_CASE("degree components of Bott(2)")
{
    const auto spec = PresentationSpec::bott(2, 4);
    const auto w2 = build_degree_component(spec, 2, Z);
    CHECK(w2.monomials.size() == 2u);
    CHECK(w2.relation_matrix == IntMatrix{{1, -2}});
    CHECK(w2.dim == 1u);
    CHECK(w2.divisors == ints({1}));
    // y1^2 = 2 y2 in the quotient.
    const Presentation pres(spec);
    CHECK(pres.normal_form(P(spec, "y1^2 - 2*y2"), Z).is_zero());
    CHECK(pres.render(pres.normal_form(P(spec, "y2"), Q)) == "1/2*y1^2");
    // Over Z the pivot on y2 is 2, so classes are given in Smith coordinates.
    const auto z = pres.normal_form(P(spec, "y2"), Z);
    CHECK(z.smith);
    CHECK(z.torsion.empty());
    CHECK(z.free.size() == 1u);
    CHECK(pres.normal_form(P(spec, "y1^2"), Z).free[0] == 2 * z.free[0]);
}

TEST_CASE("basis selection keeps the smallest monomials")
{
    const auto spec = PresentationSpec::gauge(2, 1, 3);
    const auto comp = build_degree_component(spec, 2, Q);
    std::vector<std::string> names;
    for (const auto i : comp.basis) {
        names.push_back(comp.monomials[i].to_string(*spec.context()));
    }
    CHECK(names == std::vector<std::string>{"c1^2", "c1*x1", "c2", "x1^2"});
    CHECK(build_degree_component(spec, 2, Z).basis == comp.basis);
}

TEST_CASE("poincare series examples")
{
    CHECK(dims(PresentationSpec::gauge(2, 1, 4), Q) == ints({1, 2, 4, 6, 9}));
    CHECK(dims(PresentationSpec::bott(2, 4), Q) == ints({1, 1, 1, 1, 1}));
    CHECK(dims(PresentationSpec::bott(3, 4), Q) == ints({1, 1, 2, 2, 3}));
    CHECK(leray_hirsch_series(2, 4).coefficients() == ints({1, 2, 4, 6, 9}));
    CHECK(leray_hirsch_series(1, 3).coefficients() == ints({1, 1, 1, 1}));
    CHECK(leray_hirsch_series(3, 3).coefficients() == ints({1, 2, 5, 9}));
    CHECK_THROWS_AS(Presentation(PresentationSpec::gauge(2, 1, 4)).poincare_series(Q, 5), CapError);
}

TEST_CASE("rational dimensions match the partition oracle")
{
    for (unsigned n : {1u, 2u, 3u}) {
        const auto d = dims(PresentationSpec::gauge(n, 1, 8), Q);
        for (unsigned w = 0; w <= 8; ++w) {
            CAPTURE(n);
            CAPTURE(w);
            CHECK(d[w] == oracle::gauge_dimension(n, w));
        }
    }
    for (unsigned n : {2u, 3u, 4u}) {
        const auto d = dims(PresentationSpec::bott(n, 10), Q);
        for (unsigned w = 0; w <= 10; ++w) {
            CHECK(d[w] == oracle::count_partitions(w, n - 1u));
        }
    }
}

TEST_CASE("torsion at n = 1")
{
    for (long k : {-2L, 0L, 1L, 2L, 3L}) {
        CAPTURE(k);
        const auto spec = PresentationSpec::gauge(1, k, 4);
        const auto report = torsion_report(spec, 2);
        REQUIRE(report.size() == 1u);
        CHECK(report[0] == TorsionEntry{2, ints({2})});
        const auto full = torsion_report(spec, 4);
        REQUIRE(full.size() == 3u);
        CHECK(full[1] == TorsionEntry{3, ints({6})});
        CHECK(full[2] == TorsionEntry{4, ints({2, 2, 12})});
        // Independent check through gcds of minors.
        for (unsigned w : {2u, 3u}) {
            const auto comp = build_degree_component(spec, w, Z);
            const auto torsion = comp.torsion();
            std::vector<mpz_class> expect(torsion.begin(), torsion.end());
            CHECK(nontrivial(oracle::elementary_divisors_by_minors(to_oracle(comp.relation_matrix))) == expect);
        }
    }
    // 2 x2 lies in the ideal while x2 does not.
    const auto spec = PresentationSpec::gauge(1, 1, 2);
    const Presentation pres(spec);
    CHECK_FALSE(pres.normal_form(P(spec, "x2"), Z).is_zero());
    CHECK(pres.normal_form(P(spec, "2*x2"), Z).is_zero());
}

TEST_CASE("torsion in the literal Bott presentation matches the symmetric-function oracle")
{
    for (unsigned n : {2u, 3u}) {
        const auto spec = PresentationSpec::bott(n, 5);
        for (unsigned w = 0; w <= 5; ++w) {
            CAPTURE(n);
            CAPTURE(w);
            const auto t = build_degree_component(spec, w, Z).torsion();
            CHECK(std::vector<mpz_class>(t.begin(), t.end()) == oracle::bott_torsion(n, w));
        }
    }
    CHECK(torsion_report(PresentationSpec::bott(2, 6), 6)
          == std::vector<TorsionEntry>{{4, ints({2})}, {5, ints({2})}, {6, ints({2, 6})}});
    CHECK(torsion_report(PresentationSpec::bott(3, 6), 6) == std::vector<TorsionEntry>{{6, ints({2})}});
}

TEST_CASE("torsion in the literal gauge presentation for n = 2 and 3")
{
    // The Z/2 at weight 4 of Gauge(2,k) shows up as a rank drop over F_2.
    for (long k : {-2L, 0L, 1L, 3L}) {
        const auto spec = PresentationSpec::gauge(2, k, 4);
        const auto comp = build_degree_component(spec, 4, Z);
        CHECK(comp.torsion() == ints({2}));
        const auto rq = rank_over_field(comp.relation_matrix, 0);
        CHECK(rank_over_field(comp.relation_matrix, 2) + 1u == rq);
        CHECK(rank_over_field(comp.relation_matrix, 3) == rq);
        CHECK(comp.dim == 9u);
    }
    const auto g3 = PresentationSpec::gauge(3, 1, 6);
    CHECK(torsion_report(g3, 6) == std::vector<TorsionEntry>{{6, ints({2})}});
}

TEST_CASE("field dimensions")
{
    const auto spec = PresentationSpec::gauge(2, 1, 5);
    CHECK(dims(spec, Ring::prime_field(5)) == dims(spec, Q));
    CHECK(dims(spec, Ring::prime_field(3)) == dims(spec, Q));
    auto d2 = dims(spec, Q);
    d2[4] += 1;
    d2[5] += 2;
    CHECK(dims(spec, Ring::prime_field(2)) == d2);
}

TEST_CASE("normal forms")
{
    const auto g12 = PresentationSpec::gauge(1, 2, 4);
    const Presentation pres(g12);
    CHECK(pres.render(pres.normal_form(P(g12, "x1"), Q)) == "2*c1");
    CHECK(pres.render(pres.normal_form(P(g12, "x1"), Z)) == "2*c1");
    CHECK(pres.render(pres.normal_form(P(g12, "x2"), Q)) == "c1^2");
    CHECK(pres.normal_form(GradedPoly::zero(g12.context()), Q).is_zero());
    CHECK(pres.normal_form(GradedPoly::zero(g12.context()), Q, 3).weight == 3u);
    CHECK_THROWS_AS(pres.normal_form(P(g12, "x1 + x2"), Q), NotHomogeneous);
    CHECK_THROWS_AS(pres.normal_form(P(g12, "x1^5"), Q), CapError);

    // Torsion component: x2 has Smith coordinates with a Z/2 residue.
    const auto nf = pres.normal_form(P(g12, "x2"), Z);
    CHECK(nf.smith);
    CHECK(nf.torsion_orders == ints({2}));
    CHECK(pres.render(nf).starts_with("smith("));
    CHECK_THROWS_AS(pres.representative(nf), ArgumentError);

    const auto g21 = PresentationSpec::gauge(2, 1, 4);
    const Presentation p21(g21);
    CHECK(p21.render(p21.normal_form(P(g21, "x2"), Q)) == "-1/2*c1*x1 + 1/2*c2 + 1/2*x1^2");
    CHECK(p21.render(p21.normal_form(P(g21, "x2"), Ring::prime_field(3))) == "c1*x1 + 2*c2 + 2*x1^2");
    const auto c = p21.normal_form(P(g21, "3*c1^2 - c1*x1"), Q);
    CHECK(p21.representative(c) == P(g21, "3*c1^2 - c1*x1"));
}

TEST_CASE("products and x-generators")
{
    const auto g21 = PresentationSpec::gauge(2, 1, 4);
    const Presentation p21(g21);
    CHECK(p21.render(p21.product(P(g21, "c1"), P(g21, "c1"), Q)) == "c1^2");
    CHECK(p21.render(p21.product(P(g21, "c2"), P(g21, "1"), Q)) == "c2");
    CHECK_THROWS_AS(p21.product(P(g21, "c2^2"), P(g21, "x1"), Q), CapError);

    const auto g11 = PresentationSpec::gauge(1, 1, 4);
    const Presentation p11(g11);
    CHECK(p11.render(p11.product(P(g11, "x1"), P(g11, "x1"), Q)) == "c1^2");

    for (long k : {-2L, 1L, 3L}) {
        const auto s = PresentationSpec::gauge(1, k, 3);
        const Presentation pr(s);
        CHECK(pr.normal_form(Integer(k) * P(s, "c1"), Q) == pr.express_xi(1, Q));
        CHECK(pr.render(pr.express_xi(1, Z)) == render_poly(Integer(k) * P(s, "c1")));
        const auto s2 = PresentationSpec::gauge(2, k, 3);
        CHECK(Presentation(s2).render(Presentation(s2).express_xi(1, Z)) == "x1");
    }
    const Presentation p12(PresentationSpec::gauge(1, 2, 3));
    CHECK(p12.render(p12.express_xi(2, Q)) == "c1^2");
    CHECK_THROWS_AS(p12.express_xi(4, Q), CapError);
    CHECK_THROWS_AS(Presentation(PresentationSpec::bott(2)).express_xi(1, Q), ArgumentError);
}

TEST_CASE("normal form annihilates relation multiples and is linear")
{
    SeededRng rng(31);
    for (unsigned n : {2u, 3u}) {
        const auto spec = PresentationSpec::gauge(n, 2, 7);
        const Presentation pres(spec);
        const auto &ctx = spec.context();
        for (int t = 0; t < 50; ++t) {
            const auto u = static_cast<unsigned>(rng.between(n, 7));
            const auto w = static_cast<unsigned>(rng.below(8 - u));
            const auto pool = monomials_of_weight(*ctx, w);
            const auto elem = GradedPoly::monomial(ctx, pool[rng.below(pool.size())]) * gauge_relation(u, spec);
            for (const auto ring : {Z, Q, Ring::prime_field(2), Ring::prime_field(5)}) {
                CHECK(pres.normal_form(elem, ring).is_zero());
            }
        }
        for (int t = 0; t < 50; ++t) {
            const auto w = static_cast<unsigned>(rng.below(8));
            const auto p = random_homogeneous(rng, ctx, w, 5, 9);
            const auto q = random_homogeneous(rng, ctx, w, 5, 9);
            const auto a = pres.normal_form(Integer(3) * p - q, Q, w);
            const auto np = pres.normal_form(p, Q, w);
            const auto nq = pres.normal_form(q, Q, w);
            for (std::size_t i = 0; i < a.free.size(); ++i) {
                CHECK(a.free[i] == 3 * np.free[i] - nq.free[i]);
            }
        }
    }
}

TEST_CASE("products of basis classes commute and associate")
{
    SeededRng rng(37);
    const auto spec = PresentationSpec::gauge(2, -1, 6);
    const Presentation pres(spec);
    const auto &ctx = spec.context();
    auto pick = [&](unsigned w) {
        const auto comp = pres.component(w, Q);
        return GradedPoly::monomial(ctx, comp->monomials[comp->basis[rng.below(comp->basis.size())]]);
    };
    for (int t = 0; t < 40; ++t) {
        const auto w1 = static_cast<unsigned>(rng.below(3));
        const auto w2 = static_cast<unsigned>(rng.below(3));
        const auto w3 = static_cast<unsigned>(rng.below(7 - w1 - w2));
        const auto a = pick(w1);
        const auto b = pick(w2);
        const auto c = pick(w3);
        CHECK(pres.product(a, b, Q) == pres.product(b, a, Q));
        // (ab)c through the reduced class of ab.
        const auto ab = pres.product(a, b, Q);
        const auto comp = pres.component(w1 + w2, Q);
        std::vector<Rational> acc(pres.component(w1 + w2 + w3, Q)->dim);
        for (std::size_t i = 0; i < ab.free.size(); ++i) {
            const auto part = pres.product(GradedPoly::monomial(ctx, comp->monomials[comp->basis[i]]), c, Q);
            for (std::size_t j = 0; j < acc.size(); ++j) {
                acc[j] += ab.free[i] * part.free[j];
            }
        }
        CHECK(acc == pres.normal_form(a * b * c, Q).free);
    }
}

TEST_CASE("parallel components agree with sequential construction")
{
    const auto spec = PresentationSpec::gauge(3, 1, 7);
    const Presentation pres(spec);
    const auto comps = pres.components(Z, 7);
    for (unsigned w = 0; w <= 7; ++w) {
        const auto seq = build_degree_component(spec, w, Z);
        CHECK(comps[w]->divisors == seq.divisors);
        CHECK(comps[w]->basis == seq.basis);
        CHECK(comps[w] == pres.component(w, Z));
    }
}
