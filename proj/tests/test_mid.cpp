#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "midring/corpus.hpp"
#include "midring/mid.hpp"
#include "midring/ringspec.hpp"

using namespace midring;

TEST_CASE("zero-divisors with least annihilating witnesses") {
    const FiniteRing z6 = make_modular_ring(6);
    const ZeroDivisorReport report = zero_divisors(z6);
    CHECK(report.divisors == std::vector<ElementId>{2, 3, 4});
    CHECK(report.witnesses.at(2) == 3);
    CHECK(report.witnesses.at(3) == 2);
    CHECK(report.witnesses.at(4) == 3);

    CHECK(zero_divisors(make_modular_ring(5)).divisors.empty());

    const FiniteRing z2z2 = make_product_ring(make_modular_ring(2), make_modular_ring(2));
    // ids: (0,1) = 1, (1,0) = 2
    CHECK(zero_divisors(z2z2).divisors == std::vector<ElementId>{1, 2});
}

TEST_CASE("zero-divisor reports are sound and complete") {
    for (const char *spec : {"Zn(12)", "Zn(2) x Zn(3)", "poly(Zn(2), x^3+x^2)"}) {
        const FiniteRing r = eval_ring_expr(parse_ring_spec(spec));
        const ZeroDivisorReport report = zero_divisors(r);
        for (ElementId x : report.divisors) {
            const ElementId y = report.witnesses.at(x);
            CHECK(x != r.zero());
            CHECK(y != r.zero());
            CHECK(r.mul(x, y) == r.zero());
        }
        for (ElementId x = 0; x < r.order(); ++x) {
            if (x == r.zero())
                continue;
            bool annihilates = false;
            for (ElementId y = 0; y < r.order() && !annihilates; ++y)
                annihilates = y != r.zero() && r.mul(x, y) == r.zero();
            const bool listed =
                std::find(report.divisors.begin(), report.divisors.end(), x) != report.divisors.end();
            CHECK(listed == annihilates);
        }
    }
}

TEST_CASE("gate check on the named examples") {
    const GateReport z5 = gate_check(make_modular_ring(5));
    CHECK(z5.passes);
    CHECK(z5.ideal.elements() == std::vector<ElementId>{0});
    CHECK_FALSE(z5.unit_witness.has_value());

    const GateReport z6 = gate_check(make_modular_ring(6));
    CHECK_FALSE(z6.passes);
    REQUIRE(z6.unit_witness.has_value());
    CHECK(*z6.unit_witness == 1);

    const GateReport z4 = gate_check(make_modular_ring(4));
    CHECK(z4.passes);
    CHECK(z4.ideal.elements() == std::vector<ElementId>{0, 2});
}

TEST_CASE("z ideal on the named examples") {
    const FiniteRing z4 = make_modular_ring(4);
    CHECK(z_ideal(z4).elements() == std::vector<ElementId>{0, 2});

    const FiniteRing z5 = make_modular_ring(5);
    CHECK(z_ideal(z5).elements() == std::vector<ElementId>{0});

    const FiniteRing z6 = make_modular_ring(6);
    CHECK_THROWS_AS(z_ideal(z6), GateFailed);
    try {
        z_ideal(z6);
    } catch (const GateFailed &e) {
        CHECK(e.report().unit_witness == std::optional<ElementId>{1});
        CHECK(std::string(e.what()) == "zero-divisors generate the whole ring (unit 1)");
    }
}

TEST_CASE("mid on the named examples") {
    const FiniteRing z4 = make_modular_ring(4);
    const MidResult m4 = mid(z4);
    CHECK(m4.quotient.quotient.order() == 2);
    CHECK(m4.quotient.projection == std::vector<ElementId>{0, 1, 0, 1});
    REQUIRE(m4.certificate.has_value());
    CHECK(m4.certificate->is_domain);

    const FiniteRing z5 = make_modular_ring(5);
    const MidResult m5 = mid(z5);
    CHECK(m5.quotient.quotient.order() == 5);
    CHECK(m5.z_ideal.elements() == std::vector<ElementId>{0});

    // Z2[x]/(x^2): z = {0, x}, quotient of order 2
    const FiniteRing r = make_poly_quotient_ring(make_modular_ring(2), {0, 0, 1});
    const MidResult mr = mid(r);
    CHECK(mr.z_ideal.elements() == std::vector<ElementId>{0, 2});
    CHECK(mr.quotient.quotient.order() == 2);
    CHECK(mr.certificate->is_domain);
}

TEST_CASE("mid can skip certification") {
    const MidResult m = mid(make_modular_ring(9), /*certify=*/false);
    CHECK_FALSE(m.certificate.has_value());
    CHECK(m.quotient.quotient.order() == 3);
}

TEST_CASE("integral domain test") {
    CHECK(is_integral_domain(make_modular_ring(5)));
    CHECK_FALSE(is_integral_domain(make_modular_ring(6)));
    CHECK_FALSE(is_integral_domain(make_poly_quotient_ring(make_modular_ring(2), {0, 0, 1})));
}

TEST_CASE("integral domain test agrees with the zero-divisor report") {
    for (const std::string &spec : builtin_corpus()) {
        const FiniteRing r = eval_ring_expr(parse_ring_spec(spec));
        if (r.order() > 16)
            continue;
        INFO(spec);
        CHECK(is_integral_domain(r) == zero_divisors(r).divisors.empty());
    }
}

TEST_CASE("proposition certificates count every nonzero coset pair") {
    const DomainCertificate c4 = verify_proposition(make_modular_ring(4));
    CHECK(c4.is_domain);
    CHECK(c4.pairs_checked == 1);

    const DomainCertificate c9 = verify_proposition(make_modular_ring(9));
    CHECK(c9.is_domain);
    CHECK(c9.pairs_checked == 4);

    const DomainCertificate c7 = verify_proposition(make_modular_ring(7));
    CHECK(c7.is_domain);
    CHECK(c7.pairs_checked == 36);

    CHECK_THROWS_AS(verify_proposition(make_modular_ring(6)), GateFailed);
}

TEST_CASE("a failed certificate names a real counterexample") {
    const FiniteRing z6 = make_modular_ring(6);
    const DomainCertificate cert = certify_integral_domain(z6);
    CHECK_FALSE(cert.is_domain);
    CHECK(cert.pairs_checked == 25);
    REQUIRE(cert.counterexample.has_value());
    CHECK(cert.counterexample->first == 2);
    CHECK(cert.counterexample->second == 3);
}

TEST_CASE("unit/zero-divisor dichotomy across the corpus") {
    for (const std::string &spec : builtin_corpus()) {
        const FiniteRing r = eval_ring_expr(parse_ring_spec(spec));
        if (r.order() > 36)
            continue;
        const std::vector<ElementId> us = units(r);
        const std::vector<ElementId> zd = zero_divisors(r).divisors;
        INFO(spec);
        CHECK(us.size() + zd.size() + 1 == r.order());
        for (ElementId u : us)
            CHECK(std::find(zd.begin(), zd.end(), u) == zd.end());
    }
}

TEST_CASE("gate-passing corpus rings are local with a unique minimal prime") {
    std::size_t passing = 0;
    for (const std::string &spec : builtin_corpus()) {
        const FiniteRing r = eval_ring_expr(parse_ring_spec(spec));
        const GateReport gate = gate_check(r);
        if (!gate.passes)
            continue;
        ++passing;
        INFO(spec);
        const std::vector<Ideal> primes = minimal_primes_over(r, gate.ideal);
        REQUIRE(primes.size() == 1);

        // z(R) is exactly the non-units, and the divisors sit inside it.
        const Ideal &z = primes.front();
        const std::vector<ElementId> us = units(r);
        for (ElementId x = 0; x < r.order(); ++x) {
            const bool is_unit = std::find(us.begin(), us.end(), x) != us.end();
            REQUIRE(z.contains(x) == !is_unit);
        }
        for (ElementId d : zero_divisors(r).divisors)
            REQUIRE(z.contains(d));

        // mid(R) is a field at this scale.
        const MidResult m = mid(r);
        CHECK(units(m.quotient.quotient).size() == m.quotient.quotient.order() - 1);
    }
    CHECK(passing == 56);
}
