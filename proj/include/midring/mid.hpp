#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "midring/ideal.hpp"
#include "midring/ring.hpp"

namespace midring {

/// The zero-divisors of a ring, each with one annihilating partner.
/// Both a divisor and its witness are nonzero with product zero.
struct ZeroDivisorReport {
    std::vector<ElementId> divisors;
    std::map<ElementId, ElementId> witnesses;
};

/// Brute force over all pairs: divisors = { x != 0 : some y != 0 has xy = 0 },
/// each recorded with its least nonzero witness.
inline ZeroDivisorReport zero_divisors(const FiniteRing &r) {
    ZeroDivisorReport report;
    for (ElementId x = 0; x < r.order(); ++x) {
        if (x == r.zero())
            continue;
        for (ElementId y = 0; y < r.order(); ++y) {
            if (y == r.zero())
                continue;
            if (r.mul(x, y) == r.zero()) {
                report.divisors.push_back(x);
                report.witnesses.emplace(x, y);
                break;
            }
        }
    }
    return report;
}

/// Whether the zero-divisors generate a proper ideal. On failure,
/// unit_witness is the least unit inside the generated ideal.
struct GateReport {
    bool passes;
    Ideal ideal;
    std::optional<ElementId> unit_witness;
};

/// The gate hypothesis is violated: the zero-divisors generate the whole
/// ring. Carries the failed report.
class GateFailed : public Error {
  public:
    explicit GateFailed(GateReport report)
        : Error("GateFailed",
                "zero-divisors generate the whole ring (unit " +
                    report.ideal.ring().name(*report.unit_witness) + ")"),
          report_(std::move(report)) {}

    const GateReport &report() const { return report_; }

  private:
    GateReport report_;
};

inline GateReport gate_check(const FiniteRing &r) {
    Ideal ideal = generate_ideal(r, zero_divisors(r).divisors);
    if (is_proper(ideal))
        return GateReport{true, std::move(ideal), std::nullopt};
    std::optional<ElementId> witness;
    for (ElementId u : units(r))
        if (ideal.contains(u)) {
            witness = u;
            break;
        }
    return GateReport{false, std::move(ideal), witness};
}

/// The smallest prime ideal containing the zero-divisors of r.
///
/// Throws GateFailed when the zero-divisors generate an improper ideal, and
/// NonUniqueMinimalPrime when several minimal primes lie over it (then no
/// smallest prime exists and the caller sees all of them).
inline Ideal z_ideal(const FiniteRing &r, std::size_t node_budget = kDefaultLatticeBudget) {
    GateReport gate = gate_check(r);
    if (!gate.passes)
        throw GateFailed(std::move(gate));
    return unique_minimal_prime_over(r, gate.ideal, node_budget);
}

/// Exhaustive integral-domain certificate: every ordered pair of nonzero
/// elements is checked for a zero product. pairs_checked is always
/// (order - 1)^2; the counterexample, when present, is the first zero
/// product in row-major scan order.
struct DomainCertificate {
    bool is_domain;
    std::size_t pairs_checked;
    std::optional<std::pair<ElementId, ElementId>> counterexample;
};

inline DomainCertificate certify_integral_domain(const FiniteRing &r) {
    DomainCertificate cert{true, (r.order() - 1) * (r.order() - 1), std::nullopt};
    for (ElementId a = 0; a < r.order(); ++a) {
        if (a == r.zero())
            continue;
        for (ElementId b = 0; b < r.order(); ++b) {
            if (b == r.zero())
                continue;
            if (r.mul(a, b) == r.zero() && !cert.counterexample) {
                cert.is_domain = false;
                cert.counterexample = std::make_pair(a, b);
            }
        }
    }
    return cert;
}

/// Nonzero ring with no zero-divisors.
inline bool is_integral_domain(const FiniteRing &r) {
    return r.order() >= 2 && certify_integral_domain(r).is_domain;
}

/// z(R), the quotient mid(R) = R/z(R), and (unless skipped) the certificate
/// that mid(R) is an integral domain.
struct MidResult {
    Ideal z_ideal;
    QuotientRing quotient;
    std::optional<DomainCertificate> certificate;
};

/// Builds mid(R) = R/z(R). By default the integral-domain certificate is
/// produced on the spot and a failed certificate throws InvariantViolation:
/// a zero product of nonzero cosets would contradict z(R) being prime, so it
/// cannot be a normal return. certify = false skips the scan for large
/// orders.
///
/// Throws GateFailed / NonUniqueMinimalPrime as z_ideal does.
inline MidResult mid(const FiniteRing &r, bool certify = true,
                     std::size_t node_budget = kDefaultLatticeBudget) {
    Ideal z = z_ideal(r, node_budget);
    QuotientRing q = quotient_ring(r, z);
    std::optional<DomainCertificate> certificate;
    if (certify) {
        certificate = certify_integral_domain(q.quotient);
        if (!certificate->is_domain) {
            const FiniteRing &m = q.quotient;
            const auto &[a, b] = *certificate->counterexample;
            throw InvariantViolation("mid(" + r.label() + ") is not an integral domain: " +
                                     m.name(a) + " * " + m.name(b) + " = " + m.name(m.zero()));
        }
    }
    return MidResult{std::move(z), std::move(q), certificate};
}

/// Certifies that mid(r) is an integral domain by checking every pair of
/// nonzero cosets for a zero product. Requires the gate to pass and z(R) to
/// be unique; propagates GateFailed / NonUniqueMinimalPrime otherwise.
inline DomainCertificate verify_proposition(const FiniteRing &r,
                                            std::size_t node_budget = kDefaultLatticeBudget) {
    MidResult m = mid(r, /*certify=*/false, node_budget);
    return certify_integral_domain(m.quotient.quotient);
}

} // namespace midring
