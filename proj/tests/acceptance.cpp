// Acceptance suite: one test case per release criterion, each printed as a
// [PASS]/[FAIL] line. Everything runs at desk scale against the builtin
// corpus and the installed CLI binary.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "midring/analysis.hpp"
#include "midring/mid.hpp"

#include "test_util.hpp"

using namespace midring;
using testutil::run_cli;

namespace {

class CriterionReporter : public Catch::EventListenerBase {
  public:
    using Catch::EventListenerBase::EventListenerBase;

    void testCaseEnded(const Catch::TestCaseStats &stats) override {
        std::printf("[%s] %s\n", stats.totals.assertions.allPassed() ? "PASS" : "FAIL",
                    stats.testInfo->name.c_str());
        std::fflush(stdout);
    }
};

CATCH_REGISTER_LISTENER(CriterionReporter)

std::vector<FiniteRing> corpus_rings() {
    std::vector<FiniteRing> rings;
    for (const std::string &spec : builtin_corpus())
        rings.push_back(eval_ring_expr(parse_ring_spec(spec)));
    return rings;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

TEST_CASE("criterion 1: prime moduli pass the gate wholesale, Zn(6) fails it") {
    const auto start = Clock::now();
    for (std::size_t p : {2, 3, 5, 7, 11, 13}) {
        const auto r = run_cli("analyze \"Zn(" + std::to_string(p) + ")\" --json");
        INFO("Zn(" << p << ")");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("gate").at("passes") == true);
        CHECK(j.at("z_ideal") == nlohmann::json::array({"0"}));
        CHECK(j.at("mid").at("order") == p);
        CHECK(j.at("mid").at("is_domain") == true);
    }
    const auto r6 = run_cli("analyze \"Zn(6)\" --json");
    CHECK(r6.exit_code == 1);
    const auto j6 = nlohmann::json::parse(r6.out);
    CHECK(j6.at("gate").at("passes") == false);
    CHECK(j6.at("gate").at("unit_witness") == "1");
    CHECK(j6.at("error") == "GateFailed");
    CHECK(seconds_since(start) < 1.0);
}

TEST_CASE("criterion 2: every gate-passing corpus ring certifies as a domain") {
    const auto start = Clock::now();
    std::size_t passing = 0, counterexamples = 0;
    for (const FiniteRing &r : corpus_rings()) {
        if (!gate_check(r).passes)
            continue;
        ++passing;
        const DomainCertificate cert = verify_proposition(r);
        INFO(r.label());
        CHECK(cert.is_domain);
        if (cert.counterexample)
            ++counterexamples;
        const std::size_t mid_order = mid(r, /*certify=*/false).quotient.quotient.order();
        CHECK(cert.pairs_checked == (mid_order - 1) * (mid_order - 1));
    }
    CHECK(passing == 56);
    CHECK(counterexamples == 0);
    CHECK(seconds_since(start) < 60.0);
}

TEST_CASE("criterion 3: the gate on Zn(n) detects prime powers exactly") {
    for (std::size_t n = 2; n <= 64; ++n) {
        const FiniteRing r = make_modular_ring(n);
        INFO("Zn(" << n << ")");
        REQUIRE(gate_check(r).passes == testutil::is_prime_power(n));
        if (!testutil::is_prime_power(n))
            continue;
        const MidResult m = mid(r);
        const FiniteRing &q = m.quotient.quotient;
        CHECK(q.order() == testutil::smallest_prime_factor(n));
        CHECK(units(q).size() == q.order() - 1);
    }
}

TEST_CASE("criterion 4: Zn(6) has two incomparable minimal primes over zero") {
    const FiniteRing z6 = make_modular_ring(6);
    const Ideal zero = generate_ideal(z6, {});
    const std::vector<Ideal> primes = minimal_primes_over(z6, zero);
    REQUIRE(primes.size() == 2);
    CHECK(primes[0].elements() == std::vector<ElementId>{0, 2, 4});
    CHECK(primes[1].elements() == std::vector<ElementId>{0, 3});
    CHECK_THROWS_AS(unique_minimal_prime_over(z6, zero), NonUniqueMinimalPrime);
}

TEST_CASE("criterion 5: prime and maximal match their quotient characterizations") {
    const auto start = Clock::now();
    std::size_t rings_checked = 0, ideals_checked = 0;
    for (const FiniteRing &r : corpus_rings()) {
        if (r.order() > 16)
            continue;
        ++rings_checked;
        for (const Ideal &i : ideals_containing(r, generate_ideal(r, {}))) {
            if (!is_proper(i))
                continue;
            ++ideals_checked;
            const QuotientRing q = quotient_ring(r, i);
            INFO(r.label() << ", ideal of size " << i.size());
            const bool prime = is_prime_ideal(i);
            const bool maximal = is_maximal_ideal(i);
            REQUIRE(prime == is_integral_domain(q.quotient));
            REQUIRE(maximal == (units(q.quotient).size() == q.quotient.order() - 1));
            if (maximal)
                REQUIRE(prime);
        }
    }
    CHECK(rings_checked > 0);
    CHECK(ideals_checked > rings_checked);
    CHECK(seconds_since(start) < 30.0);
}

TEST_CASE("criterion 6: axioms, homomorphic projections, Lagrange counts") {
    for (const FiniteRing &r : corpus_rings()) {
        INFO(r.label());
        REQUIRE(verify_ring_axioms(r).passed);
        if (!gate_check(r).passes)
            continue;
        const MidResult m = mid(r);
        const QuotientRing &q = m.quotient;
        REQUIRE(verify_ring_axioms(q.quotient).passed);
        REQUIRE(q.quotient.order() * q.kernel.size() == r.order());
        for (ElementId x = 0; x < r.order(); ++x)
            for (ElementId y = 0; y < r.order(); ++y) {
                REQUIRE(q.projection[r.add(x, y)] ==
                        q.quotient.add(q.projection[x], q.projection[y]));
                REQUIRE(q.projection[r.mul(x, y)] ==
                        q.quotient.mul(q.projection[x], q.projection[y]));
            }
    }
}

TEST_CASE("criterion 7: mid(R) is divisor-free and its own mid") {
    for (const FiniteRing &r : corpus_rings()) {
        if (!gate_check(r).passes)
            continue;
        const MidResult m = mid(r);
        const FiniteRing &q = m.quotient.quotient;
        INFO(r.label());
        REQUIRE(zero_divisors(q).divisors.empty());
        REQUIRE(z_ideal(q).elements() == std::vector<ElementId>{q.zero()});
    }
}

TEST_CASE("criterion 8: a 50-case corpus round-trips and errors stay in bounds") {
    const std::vector<std::string> corpus = {
        "Zn(2)",
        "Zn(3)",
        "Zn(5)",
        "Zn(6)",
        "Zn(7)",
        "Zn(12)",
        "Zn(17)",
        "Zn(64)",
        "Zn(100)",
        "Zn(512)",
        "Zn(2) x Zn(2)",
        "Zn(2) x Zn(3)",
        "Zn(3) x Zn(2)",
        "Zn(4) x Zn(9)",
        "Zn(5) x Zn(5)",
        "Zn(2) x Zn(3) x Zn(5)",
        "Zn(2) x Zn(2) x Zn(2) x Zn(2)",
        "Zn(8) x Zn(64)",
        "Zn(2) x (Zn(3) x Zn(5))",
        "Zn(2) x (Zn(2) x (Zn(2) x Zn(2)))",
        "poly(Zn(2), x)",
        "poly(Zn(2), x+1)",
        "poly(Zn(2), x^2)",
        "poly(Zn(2), x^2+1)",
        "poly(Zn(2), x^2+x)",
        "poly(Zn(2), x^2+x+1)",
        "poly(Zn(2), x^3+x+1)",
        "poly(Zn(2), x^3+x^2+1)",
        "poly(Zn(2), x^4+x+1)",
        "poly(Zn(2), x^8+x^4+x^3+x+1)",
        "poly(Zn(3), x)",
        "poly(Zn(3), x+2)",
        "poly(Zn(3), x^2+1)",
        "poly(Zn(3), x^2+x+2)",
        "poly(Zn(3), x^2+2*x+2)",
        "poly(Zn(3), x^3+2*x+1)",
        "poly(Zn(5), x^2+2)",
        "poly(Zn(5), x^2+4*x+2)",
        "poly(Zn(7), x^2+1)",
        "poly(Zn(11), x^2+7*x+2)",
        "poly(Zn(13), x^3+12)",
        "poly(Zn(97), x^2+96)",
        "poly(Zn(2), x^5+x^2+1)",
        "poly(Zn(3), x^3+2*x^2+x+1)",
        "poly(Zn(5), x^3+3*x^2+2*x+4)",
        "Zn(4) x poly(Zn(2), x^2+x+1)",
        "poly(Zn(2), x^2) x Zn(3)",
        "poly(Zn(2), x^2+x+1) x poly(Zn(3), x^2+1)",
        "Zn(6) x poly(Zn(5), x^2+2)",
        "poly(Zn(2), x^3+x) x Zn(9) x Zn(4)",
    };
    REQUIRE(corpus.size() == 50);

    for (const std::string &text : corpus) {
        INFO(text);
        const RingExpr e = parse_ring_spec(text);
        REQUIRE(format_ring_expr(e) == text);
        REQUIRE(parse_ring_spec(format_ring_expr(e)) == e);
    }

    // Every prefix of every corpus string either parses, fails semantically,
    // or reports an offset inside the (truncated) input.
    std::size_t parse_errors = 0;
    for (const std::string &text : corpus) {
        for (std::size_t cut = 0; cut <= text.size(); ++cut) {
            const std::string prefix = text.substr(0, cut);
            try {
                (void)parse_ring_spec(prefix);
            } catch (const ParseError &e) {
                ++parse_errors;
                INFO(prefix);
                REQUIRE(e.offset() <= prefix.size());
            } catch (const SemanticError &) {
            }
        }
    }
    CHECK(parse_errors > 100);
}

TEST_CASE("criterion 9: verify over the builtin corpus is byte-deterministic") {
    const auto first = run_cli("verify --corpus builtin --json");
    const auto second = run_cli("verify --corpus builtin --json");
    REQUIRE(first.exit_code == 0);
    REQUIRE(second.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());
    const auto j = nlohmann::json::parse(first.out);
    CHECK(j.at("total") == 165);
    CHECK(j.at("gate_passed") == j.at("certified"));
}
