#ifndef LOCPERF_STRUCTURE_HPP
#define LOCPERF_STRUCTURE_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "locperf/abelian.hpp"

namespace locperf {

/// Invariant-factor decomposition of a finite abelian group given by a full
/// element list and its multiplication table, via element orders: repeatedly
/// split off a cyclic factor of maximal order, adjusting the new generator so
/// it meets the span of the previous ones trivially. `table` pairs each
/// element with its canonical coordinates (torsion coordinates aligned with
/// group.torsion, ascending factors).
template <typename Elem>
struct FiniteStructure {
    FgAbelianGroup group;
    std::vector<Elem> basis;  // basis[i] generates the factor of order group.torsion[i]
    std::vector<std::pair<Elem, GroupElement>> table;
};

namespace detail {

template <typename Elem, typename Op>
Elem power(const Op& op, const Elem& identity, const Elem& e, Integer k) {
    Elem acc = identity, sq = e;
    while (k > 0) {
        if (k % 2 == 1) acc = op(acc, sq);
        sq = op(sq, sq);
        k /= 2;
    }
    return acc;
}

inline std::vector<Integer> sorted_divisors(const Integer& n) {
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

}  // namespace detail

template <typename Elem, typename Op, typename Less>
FiniteStructure<Elem> finite_structure(const std::vector<Elem>& elements, const Op& op,
                                       const Elem& identity, Less less) {
    const Integer n = static_cast<unsigned long>(elements.size());
    if (n == 0) throw std::invalid_argument("finite_structure: empty element list");

    auto order_of = [&](const Elem& e) {
        // Lagrange: order divides n, so test divisors ascending.
        for (const Integer& d : detail::sorted_divisors(n))
            if (!less(detail::power(op, identity, e, d), identity) &&
                !less(identity, detail::power(op, identity, e, d)))
                return d;
        throw std::logic_error("finite_structure: element order does not divide the group order");
    };

    using Span = std::map<Elem, std::vector<Integer>, Less>;
    Span span(less);  // element of <basis> -> exponents on basis (descending orders)
    span[identity] = {};
    std::vector<Elem> basis_desc;
    std::vector<Integer> orders_desc;

    while (Integer(static_cast<unsigned long>(span.size())) < n) {
        // Element with maximal order in G / <basis>; first in input order wins ties.
        std::size_t best = elements.size();
        Integer best_order = 0;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            Integer r;
            if (basis_desc.empty()) {
                r = order_of(elements[i]);
            } else {
                r = 1;
                Elem acc = elements[i];
                while (span.find(acc) == span.end()) {
                    acc = op(acc, elements[i]);
                    ++r;
                }
            }
            if (r > best_order) { best_order = r; best = i; }
        }
        const Integer r = best_order;
        Elem g = elements[best];

        // g^r lies in the span; divide its exponents out of g so the new
        // generator has order exactly r and independent span.
        Elem gr = detail::power(op, identity, g, r);
        const std::vector<Integer>& s = span.at(gr);
        Elem adjusted = g;
        for (std::size_t i = 0; i < basis_desc.size(); ++i) {
            const Integer& m = orders_desc[i];
            Integer t = -1;
            for (Integer cand = 0; cand < m; ++cand)
                if (mod_floor(r * cand, m) == s[i]) { t = cand; break; }
            if (t < 0) throw std::logic_error("finite_structure: maximal coset order adjustment failed");
            adjusted = op(adjusted, detail::power(op, identity, basis_desc[i], m - t));
        }
        basis_desc.push_back(adjusted);
        orders_desc.push_back(r);

        // Rebuild the span with exponent vectors.
        Span next(less);
        std::vector<Integer> exps(basis_desc.size());
        for (;;) {
            Elem prod = identity;
            for (std::size_t i = 0; i < basis_desc.size(); ++i)
                prod = op(prod, detail::power(op, identity, basis_desc[i], exps[i]));
            if (!next.emplace(prod, exps).second)
                throw std::logic_error("finite_structure: dependent basis");
            std::size_t i = basis_desc.size();
            bool done = true;
            while (i > 0) {
                --i;
                exps[i] += 1;
                if (exps[i] < orders_desc[i]) { done = false; break; }
                exps[i] = 0;
            }
            if (done) break;
        }
        span = std::move(next);
    }

    // Ascending invariant factors; drop order-1 factors (trivial group case).
    std::vector<Integer> factors;
    std::vector<Elem> basis_asc;
    for (std::size_t i = basis_desc.size(); i > 0; --i) {
        if (orders_desc[i - 1] >= 2) {
            factors.push_back(orders_desc[i - 1]);
            basis_asc.push_back(basis_desc[i - 1]);
        }
    }
    FiniteStructure<Elem> out;
    out.group = make_group(0, factors);
    for (const auto& [elem, exps] : span) {
        std::vector<Integer> coords(factors.size());
        // exps are over basis_desc; reverse into ascending order, skipping trivial factors.
        std::size_t k = 0;
        for (std::size_t i = basis_desc.size(); i > 0; --i)
            if (orders_desc[i - 1] >= 2) coords[k++] = exps[i - 1];
        out.table.emplace_back(elem, make_element(out.group, {}, coords));
    }
    out.basis = basis_asc;
    return out;
}

}  // namespace locperf

#endif
