#pragma once

#include <string>
#include <vector>

#include "midring/ringspec.hpp"

namespace midring {

/// The builtin ring corpus, as canonical spec strings in a fixed order:
///   - Zn(n) for n = 2..64
///   - Zn(a) x Zn(b) for a = 2..8, b = 2..8
///   - poly(Zn(m), f) for m in {2, 3} and every monic f of degree 1..3,
///     lower coefficients counting up with the constant fastest
inline std::vector<std::string> builtin_corpus() {
    std::vector<std::string> specs;
    for (std::size_t n = 2; n <= 64; ++n)
        specs.push_back(format_ring_expr(RingExpr::modular(n)));
    for (std::size_t a = 2; a <= 8; ++a)
        for (std::size_t b = 2; b <= 8; ++b)
            specs.push_back(
                format_ring_expr(RingExpr::product(RingExpr::modular(a), RingExpr::modular(b))));
    for (std::size_t m : {2, 3}) {
        for (std::size_t degree = 1; degree <= 3; ++degree) {
            std::size_t combos = 1;
            for (std::size_t k = 0; k < degree; ++k)
                combos *= m;
            for (std::size_t lower = 0; lower < combos; ++lower) {
                std::vector<std::size_t> coeffs(degree + 1, 0);
                coeffs[degree] = 1;
                std::size_t rest = lower;
                for (std::size_t k = 0; k < degree; ++k) {
                    coeffs[k] = rest % m;
                    rest /= m;
                }
                specs.push_back(
                    format_ring_expr(RingExpr::poly_quotient(RingExpr::modular(m), coeffs)));
            }
        }
    }
    return specs;
}

} // namespace midring
