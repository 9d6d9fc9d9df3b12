#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "midring/ring.hpp"

namespace midring {

/// Default node budget for the ideal-lattice search.
inline constexpr std::size_t kDefaultLatticeBudget = 100000;

/// An ideal of a finite ring, stored extensionally as its sorted element set,
/// with the generating set retained for reporting.
///
/// An Ideal borrows the ring it belongs to; the ring must outlive it.
/// Equality compares the owning ring and the element set (not generators).
class Ideal {
  public:
    Ideal(const FiniteRing &ring, std::vector<ElementId> elements,
          std::vector<ElementId> generators)
        : ring_(&ring), elements_(std::move(elements)), generators_(std::move(generators)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        std::sort(generators_.begin(), generators_.end());
        generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    }

    const FiniteRing &ring() const { return *ring_; }
    const std::vector<ElementId> &elements() const { return elements_; }
    const std::vector<ElementId> &generators() const { return generators_; }
    std::size_t size() const { return elements_.size(); }

    bool contains(ElementId e) const {
        return std::binary_search(elements_.begin(), elements_.end(), e);
    }

    /// True when every element of this ideal lies in `other`.
    bool subset_of(const Ideal &other) const {
        return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                             elements_.end());
    }

    bool operator==(const Ideal &other) const {
        return ring_ == other.ring_ && elements_ == other.elements_;
    }

  private:
    const FiniteRing *ring_;
    std::vector<ElementId> elements_;
    std::vector<ElementId> generators_;
};

/// No smallest prime exists: several inclusion-minimal primes lie over the
/// ideal. Carries all of them.
class NonUniqueMinimalPrime : public Error {
  public:
    explicit NonUniqueMinimalPrime(std::vector<Ideal> minimal_primes)
        : Error("NonUniqueMinimalPrime",
                std::to_string(minimal_primes.size()) +
                    " minimal primes lie over the ideal; no smallest prime exists"),
          minimal_primes_(std::move(minimal_primes)) {}

    const std::vector<Ideal> &minimal_primes() const { return minimal_primes_; }

  private:
    std::vector<Ideal> minimal_primes_;
};

/// The smallest ideal containing s: closure of {0} and s under addition and
/// under multiplication by arbitrary ring elements, iterated to fixpoint.
inline Ideal generate_ideal(const FiniteRing &r, const std::vector<ElementId> &s) {
    const std::size_t n = r.order();
    std::vector<char> in(n, 0);
    std::vector<ElementId> worklist;
    auto push = [&](ElementId e) {
        if (!in[e]) {
            in[e] = 1;
            worklist.push_back(e);
        }
    };
    push(r.zero());
    for (ElementId g : s)
        push(g);
    // Processing e pairs it with every member added no later than e, so every
    // sum of two members is eventually formed; products need only one ideal
    // operand, so scanning the full ring per member suffices.
    for (std::size_t k = 0; k < worklist.size(); ++k) {
        const ElementId e = worklist[k];
        for (ElementId t = 0; t < n; ++t)
            push(r.mul(t, e));
        for (std::size_t j = 0; j <= k; ++j)
            push(r.add(e, worklist[j]));
    }
    std::vector<ElementId> elements;
    for (ElementId e = 0; e < n; ++e)
        if (in[e])
            elements.push_back(e);
    return Ideal(r, std::move(elements), s);
}

/// Proper means not the whole ring; equivalently, containing no unit.
inline bool is_proper(const Ideal &i) { return i.size() != i.ring().order(); }

/// Prime: proper, and ab in the ideal forces a or b in the ideal.
inline bool is_prime_ideal(const Ideal &i) {
    if (!is_proper(i))
        return false;
    const FiniteRing &r = i.ring();
    const std::size_t n = r.order();
    std::vector<char> in(n, 0);
    for (ElementId e : i.elements())
        in[e] = 1;
    for (ElementId a = 0; a < n; ++a) {
        if (in[a])
            continue;
        for (ElementId b = 0; b <= a; ++b)
            if (!in[b] && in[r.mul(a, b)])
                return false;
    }
    return true;
}

/// Every ideal J with i as a subset, the whole ring included. Breadth-first:
/// each known ideal is extended by one absent element and re-closed, deduped
/// by element set, until no new ideals appear. Results come back ordered
/// lexicographically by element set.
inline std::vector<Ideal> ideals_containing(const FiniteRing &r, const Ideal &i,
                                            std::size_t node_budget = kDefaultLatticeBudget) {
    std::map<std::vector<ElementId>, Ideal> seen;
    std::vector<const Ideal *> queue;
    auto visit = [&](Ideal j) {
        auto [it, inserted] = seen.emplace(j.elements(), std::move(j));
        if (inserted) {
            if (seen.size() > node_budget)
                throw LatticeBudgetExceeded("ideal lattice search over " + r.label() +
                                            " exceeded the node budget of " +
                                            std::to_string(node_budget));
            queue.push_back(&it->second);
        }
    };
    visit(i);
    for (std::size_t k = 0; k < queue.size(); ++k) {
        // Copy: growing `seen` while iterating would not invalidate node
        // pointers (map nodes are stable), but generate_ideal needs a stable
        // element list anyway.
        const Ideal current = *queue[k];
        for (ElementId x = 0; x < r.order(); ++x) {
            if (current.contains(x))
                continue;
            std::vector<ElementId> gens = current.elements();
            gens.push_back(x);
            visit(generate_ideal(r, gens));
        }
    }
    std::vector<Ideal> result;
    result.reserve(seen.size());
    for (auto &[key, ideal] : seen)
        result.push_back(ideal);
    return result;
}

/// Maximal: proper, with no proper ideal strictly between it and the ring.
inline bool is_maximal_ideal(const Ideal &i, std::size_t node_budget = kDefaultLatticeBudget) {
    if (!is_proper(i))
        return false;
    // The lattice above i holds i itself and the whole ring; maximality means
    // nothing else.
    return ideals_containing(i.ring(), i, node_budget).size() == 2;
}

/// All inclusion-minimal primes over i, in lexicographic element-set order.
/// Empty only when i is improper.
inline std::vector<Ideal> minimal_primes_over(const FiniteRing &r, const Ideal &i,
                                              std::size_t node_budget = kDefaultLatticeBudget) {
    std::vector<Ideal> primes;
    for (const Ideal &j : ideals_containing(r, i, node_budget))
        if (is_prime_ideal(j))
            primes.push_back(j);
    std::vector<Ideal> minimal;
    for (const Ideal &p : primes) {
        bool has_smaller = false;
        for (const Ideal &q : primes)
            if (!(q == p) && q.subset_of(p)) {
                has_smaller = true;
                break;
            }
        if (!has_smaller)
            minimal.push_back(p);
    }
    return minimal;
}

/// The unique inclusion-minimal prime over i, when it exists; throws
/// NonUniqueMinimalPrime (carrying all of them) when several coexist.
inline Ideal unique_minimal_prime_over(const FiniteRing &r, const Ideal &i,
                                       std::size_t node_budget = kDefaultLatticeBudget) {
    std::vector<Ideal> minimal = minimal_primes_over(r, i, node_budget);
    if (minimal.empty())
        throw std::invalid_argument("no prime ideal lies over an improper ideal");
    if (minimal.size() > 1)
        throw NonUniqueMinimalPrime(std::move(minimal));
    return minimal.front();
}

/// A quotient ring R/I together with the projection table and its kernel.
/// projection maps each source element to the id of its coset in the
/// quotient; the kernel borrows the source ring.
struct QuotientRing {
    FiniteRing quotient;
    std::vector<ElementId> projection;
    Ideal kernel;
};

/// The quotient by a proper ideal. Cosets are computed from x ~ y iff
/// x - y in i; each coset is represented by its least element id and named
/// "<rep>+I", and the tables are induced through representatives.
inline QuotientRing quotient_ring(const FiniteRing &r, const Ideal &i) {
    if (!is_proper(i))
        throw ImproperIdealQuotient("cannot take the quotient of " + r.label() +
                                    " by an improper ideal");
    const std::size_t n = r.order();
    const ElementId unassigned = n;
    std::vector<ElementId> projection(n, unassigned);
    std::vector<ElementId> reps;
    for (ElementId x = 0; x < n; ++x) {
        if (projection[x] != unassigned)
            continue;
        const ElementId q = reps.size();
        reps.push_back(x);
        for (ElementId k : i.elements())
            projection[r.add(x, k)] = q;
    }
    const std::size_t qn = reps.size();
    std::vector<ElementId> add(qn * qn), mul(qn * qn);
    std::vector<std::string> names(qn);
    for (std::size_t a = 0; a < qn; ++a) {
        names[a] = r.name(reps[a]) + "+I";
        for (std::size_t b = 0; b < qn; ++b) {
            add[a * qn + b] = projection[r.add(reps[a], reps[b])];
            mul[a * qn + b] = projection[r.mul(reps[a], reps[b])];
        }
    }
    std::string kernel_names;
    for (ElementId e : i.elements()) {
        if (!kernel_names.empty())
            kernel_names += ",";
        kernel_names += r.name(e);
    }
    FiniteRing quotient(r.label() + "/{" + kernel_names + "}", std::move(names), std::move(add),
                        std::move(mul), projection[r.zero()], projection[r.one()]);
    return QuotientRing{std::move(quotient), std::move(projection), i};
}

} // namespace midring
