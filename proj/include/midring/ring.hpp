#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "midring/errors.hpp"

namespace midring {

/// Index of an element in a ring's canonical enumeration.
using ElementId = std::size_t;

/// Default ceiling on the order of constructed rings. Every algorithm in the
/// library is an exhaustive loop over element ids, so the cap keeps the worst
/// case (O(order^3) axiom checks, ideal-lattice searches) at desk scale.
inline constexpr std::size_t kDefaultOrderCap = 512;

/// Renders a constant-first coefficient vector as a polynomial in x, highest
/// power first: {1,1,1} -> "x^2+x+1", {0,0,1} -> "x^2", {} -> "0".
inline std::string format_polynomial(const std::vector<std::size_t> &coeffs) {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const std::size_t c = coeffs[k];
        if (c == 0)
            continue;
        if (!out.empty())
            out += '+';
        if (k == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) {
            out += std::to_string(c);
            out += '*';
        }
        out += 'x';
        if (k > 1) {
            out += '^';
            out += std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

/// A finite commutative unital ring, given extensionally by its addition and
/// multiplication tables over element ids 0..order-1.
///
/// Rings are immutable after construction; concurrent reads are safe. The
/// constructor validates shape only (dimensions, id ranges, zero != one);
/// the ring axioms themselves are checked exhaustively by
/// verify_ring_axioms(), which is what allows tests to build deliberately
/// broken tables.
class FiniteRing {
  public:
    FiniteRing(std::string label, std::vector<std::string> element_names,
               std::vector<ElementId> add_table, std::vector<ElementId> mul_table,
               ElementId zero, ElementId one)
        : label_(std::move(label)), names_(std::move(element_names)),
          add_(std::move(add_table)), mul_(std::move(mul_table)), zero_(zero), one_(one) {
        order_ = names_.size();
        if (order_ < 2)
            throw NonzeroRingRequired("ring must have order >= 2, got " + std::to_string(order_));
        if (add_.size() != order_ * order_ || mul_.size() != order_ * order_)
            throw Error("MalformedTable", "operation tables must be order x order");
        for (ElementId e : add_)
            if (e >= order_)
                throw Error("MalformedTable", "add table entry out of range");
        for (ElementId e : mul_)
            if (e >= order_)
                throw Error("MalformedTable", "mul table entry out of range");
        if (zero_ >= order_ || one_ >= order_ || zero_ == one_)
            throw NonzeroRingRequired("ring must have distinct zero and one");
        // Additive inverses read off the addition table; missing entries are
        // left as the sentinel `order` and only surface in verify_ring_axioms.
        neg_.assign(order_, order_);
        for (ElementId a = 0; a < order_; ++a)
            for (ElementId b = 0; b < order_; ++b)
                if (add(a, b) == zero_) {
                    neg_[a] = b;
                    break;
                }
    }

    std::size_t order() const { return order_; }
    ElementId zero() const { return zero_; }
    ElementId one() const { return one_; }
    const std::string &label() const { return label_; }
    const std::string &name(ElementId e) const { return names_[e]; }
    const std::vector<std::string> &element_names() const { return names_; }

    ElementId add(ElementId a, ElementId b) const { return add_[a * order_ + b]; }
    ElementId mul(ElementId a, ElementId b) const { return mul_[a * order_ + b]; }

    ElementId neg(ElementId a) const {
        if (neg_[a] >= order_)
            throw InvariantViolation("element " + names_[a] + " has no additive inverse");
        return neg_[a];
    }

    /// a - b, realized as a + (-b).
    ElementId sub(ElementId a, ElementId b) const { return add(a, neg(b)); }

    const std::vector<ElementId> &add_table() const { return add_; }
    const std::vector<ElementId> &mul_table() const { return mul_; }

  private:
    std::string label_;
    std::vector<std::string> names_;
    std::vector<ElementId> add_;
    std::vector<ElementId> mul_;
    std::vector<ElementId> neg_;
    ElementId zero_;
    ElementId one_;
    std::size_t order_;
};

/// One failed axiom with the elements that witnessed the failure.
struct AxiomViolation {
    std::string axiom;
    std::vector<ElementId> witness;
};

/// Outcome of the exhaustive ring-axiom check. passed == true iff violation
/// is absent.
struct AxiomReport {
    bool passed = true;
    std::optional<AxiomViolation> violation;
};

/// Exhaustively checks the commutative-unital-ring axioms, O(order^3).
///
/// Axioms are checked in a fixed order, each scanned in row-major element
/// order, and the first failure is reported:
///   1. additive commutativity        a+b == b+a
///   2. additive associativity        (a+b)+c == a+(b+c)
///   3. additive identity             0+a == a
///   4. additive inverses             for every a some b has a+b == 0
///   5. multiplicative commutativity  a*b == b*a
///   6. multiplicative associativity  (a*b)*c == a*(b*c)
///   7. multiplicative identity       1*a == a
///   8. distributivity                a*(b+c) == a*b + a*c
inline AxiomReport verify_ring_axioms(const FiniteRing &r) {
    const std::size_t n = r.order();
    auto fail = [](std::string axiom, std::vector<ElementId> witness) {
        return AxiomReport{false, AxiomViolation{std::move(axiom), std::move(witness)}};
    };
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            if (r.add(a, b) != r.add(b, a))
                return fail("additive commutativity", {a, b});
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            for (ElementId c = 0; c < n; ++c)
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
                    return fail("additive associativity", {a, b, c});
    for (ElementId a = 0; a < n; ++a)
        if (r.add(r.zero(), a) != a)
            return fail("additive identity", {a});
    for (ElementId a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (ElementId b = 0; b < n && !has_inverse; ++b)
            has_inverse = r.add(a, b) == r.zero();
        if (!has_inverse)
            return fail("additive inverses", {a});
    }
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            if (r.mul(a, b) != r.mul(b, a))
                return fail("multiplicative commutativity", {a, b});
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            for (ElementId c = 0; c < n; ++c)
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
                    return fail("multiplicative associativity", {a, b, c});
    for (ElementId a = 0; a < n; ++a)
        if (r.mul(r.one(), a) != a)
            return fail("multiplicative identity", {a});
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            for (ElementId c = 0; c < n; ++c)
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
                    return fail("distributivity", {a, b, c});
    return {};
}

/// The unit group as a sorted list: { x : exists y with x*y == 1 }.
inline std::vector<ElementId> units(const FiniteRing &r) {
    std::vector<ElementId> result;
    for (ElementId x = 0; x < r.order(); ++x)
        for (ElementId y = 0; y < r.order(); ++y)
            if (r.mul(x, y) == r.one()) {
                result.push_back(x);
                break;
            }
    return result;
}

/// Returns m when r's tables are exactly the canonical Zn(m) tables
/// (elements 0..m-1 with arithmetic mod m), nullopt otherwise.
inline std::optional<std::size_t> as_modular_order(const FiniteRing &r) {
    const std::size_t m = r.order();
    if (r.zero() != 0 || r.one() != 1)
        return std::nullopt;
    for (ElementId a = 0; a < m; ++a)
        for (ElementId b = 0; b < m; ++b)
            if (r.add(a, b) != (a + b) % m || r.mul(a, b) != (a * b) % m)
                return std::nullopt;
    return m;
}

/// The modular ring Zn(n): elements 0..n-1, tables by arithmetic mod n.
inline FiniteRing make_modular_ring(std::size_t n, std::size_t order_cap = kDefaultOrderCap) {
    if (n < 2)
        throw NonzeroRingRequired("Zn(" + std::to_string(n) + ") is not a nonzero ring; need n >= 2");
    if (n > order_cap)
        throw OrderCapExceeded("Zn(" + std::to_string(n) + ") exceeds the order cap " +
                               std::to_string(order_cap));
    std::vector<ElementId> add(n * n), mul(n * n);
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
        names[i] = std::to_string(i);
        for (std::size_t j = 0; j < n; ++j) {
            add[i * n + j] = (i + j) % n;
            mul[i * n + j] = (i * j) % n;
        }
    }
    return FiniteRing("Zn(" + std::to_string(n) + ")", std::move(names), std::move(add),
                      std::move(mul), 0, 1);
}

/// The direct product A x B with componentwise operations. Pairs (a,b) are
/// enumerated row-major: id = a * B.order() + b.
inline FiniteRing make_product_ring(const FiniteRing &a, const FiniteRing &b,
                                    std::size_t order_cap = kDefaultOrderCap) {
    const std::size_t na = a.order(), nb = b.order();
    const std::size_t n = na * nb;
    if (n > order_cap)
        throw OrderCapExceeded(a.label() + " x " + b.label() + " has order " + std::to_string(n) +
                               ", exceeding the order cap " + std::to_string(order_cap));
    std::vector<ElementId> add(n * n), mul(n * n);
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i)
        names[i] = "(" + a.name(i / nb) + "," + b.name(i % nb) + ")";
    for (std::size_t i = 0; i < n; ++i) {
        const ElementId ia = i / nb, ib = i % nb;
        for (std::size_t j = 0; j < n; ++j) {
            const ElementId ja = j / nb, jb = j % nb;
            add[i * n + j] = a.add(ia, ja) * nb + b.add(ib, jb);
            mul[i * n + j] = a.mul(ia, ja) * nb + b.mul(ib, jb);
        }
    }
    const ElementId zero = a.zero() * nb + b.zero();
    const ElementId one = a.one() * nb + b.one();
    return FiniteRing(a.label() + " x " + b.label(), std::move(names), std::move(add),
                      std::move(mul), zero, one);
}

namespace detail {

/// Multiplies two coefficient vectors over Zn(m) and reduces the result mod a
/// monic modulus, keeping degree < deg(modulus). Constant-first coefficients.
inline std::vector<std::size_t> polymul_mod(const std::vector<std::size_t> &p,
                                            const std::vector<std::size_t> &q,
                                            const std::vector<std::size_t> &modulus,
                                            std::size_t m) {
    const std::size_t d = modulus.size() - 1;
    std::vector<std::size_t> prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            prod[i + j] = (prod[i + j] + p[i] * q[j]) % m;
    // Long division by the monic modulus, top coefficient down.
    for (std::size_t k = prod.size(); k-- > d;) {
        const std::size_t c = prod[k];
        if (c == 0)
            continue;
        for (std::size_t i = 0; i <= d; ++i) {
            const std::size_t idx = k - d + i;
            prod[idx] = (prod[idx] + m * m - (c * modulus[i]) % m) % m;
        }
    }
    prod.resize(d);
    return prod;
}

} // namespace detail

/// The quotient Zn(m)[x]/(modulus) for a monic modulus of degree d >= 1.
/// Elements are the m^d coefficient tuples of degree-< d representatives,
/// enumerated by base-m digits with the constant coefficient least
/// significant, so id 0 is 0, id 1 is 1, and id m is x.
///
/// The modulus is given constant-first; coefficients are reduced mod m and
/// trailing zeros dropped before the monicity check.
inline FiniteRing make_poly_quotient_ring(const FiniteRing &base,
                                          std::vector<std::size_t> modulus,
                                          std::size_t order_cap = kDefaultOrderCap) {
    const std::optional<std::size_t> base_mod = as_modular_order(base);
    if (!base_mod)
        throw UnsupportedBaseRing("polynomial quotient base must be a modular ring Zn(m), got " +
                                  base.label());
    const std::size_t m = *base_mod;
    for (std::size_t &c : modulus)
        c %= m;
    while (!modulus.empty() && modulus.back() == 0)
        modulus.pop_back();
    if (modulus.size() < 2 || modulus.back() != 1)
        throw MonicModulusRequired("polynomial modulus must be monic of degree >= 1 after "
                                   "reduction mod " +
                                   std::to_string(m) + ", got " + format_polynomial(modulus));
    const std::size_t d = modulus.size() - 1;
    std::size_t n = 1;
    for (std::size_t k = 0; k < d; ++k) {
        n *= m;
        if (n > order_cap)
            throw OrderCapExceeded("poly(" + base.label() + ", " + format_polynomial(modulus) +
                                   ") exceeds the order cap " + std::to_string(order_cap));
    }

    auto digits = [&](std::size_t e) {
        std::vector<std::size_t> c(d);
        for (std::size_t k = 0; k < d; ++k) {
            c[k] = e % m;
            e /= m;
        }
        return c;
    };
    auto index_of = [&](const std::vector<std::size_t> &c) {
        std::size_t e = 0;
        for (std::size_t k = d; k-- > 0;)
            e = e * m + c[k];
        return e;
    };

    std::vector<ElementId> add(n * n), mul(n * n);
    std::vector<std::string> names(n);
    std::vector<std::vector<std::size_t>> tuples(n);
    for (std::size_t e = 0; e < n; ++e) {
        tuples[e] = digits(e);
        names[e] = format_polynomial(tuples[e]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> sum(d);
            for (std::size_t k = 0; k < d; ++k)
                sum[k] = (tuples[i][k] + tuples[j][k]) % m;
            add[i * n + j] = index_of(sum);
            mul[i * n + j] = index_of(detail::polymul_mod(tuples[i], tuples[j], modulus, m));
        }
    const std::string label = "poly(" + base.label() + ", " + format_polynomial(modulus) + ")";
    return FiniteRing(label, std::move(names), std::move(add), std::move(mul), 0, 1);
}

} // namespace midring
