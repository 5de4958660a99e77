#include "locperf/quadforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "locperf/structure.hpp"

namespace locperf {

QuadOrder make_quad_order(const Integer& d) {
    if (d >= 0) throw std::invalid_argument("QuadOrder: d must be negative");
    Integer r = mod_floor(d, 4);
    if (r != 2 && r != 3)
        throw std::invalid_argument("QuadOrder: d must be 2 or 3 mod 4");
    if (!is_squarefree(d)) throw std::invalid_argument("QuadOrder: d must be squarefree");
    return {d};
}

void validate_form(const QuadForm& f) {
    if (f.a <= 0) throw std::domain_error("QuadForm: a must be positive");
    if (f.disc() >= 0) throw std::domain_error("QuadForm: discriminant must be negative");
    if (gcd(gcd(f.a, f.b), f.c) != 1) throw std::domain_error("QuadForm: not primitive");
}

bool is_reduced(const QuadForm& f) {
    if (!(abs(f.b) <= f.a && f.a <= f.c)) return false;
    if ((abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

namespace {

// b normalized into (-a, a], c recomputed from the discriminant.
QuadForm normalized(const QuadForm& f) {
    Integer b = f.a - mod_floor(f.a - f.b, 2 * f.a);
    Integer c = (b * b - f.disc()) / (4 * f.a);
    return {f.a, b, c};
}

}  // namespace

QuadForm reduce(QuadForm f) {
    validate_form(f);
    f = normalized(f);
    while (f.a > f.c) {
        f = normalized({f.c, -f.b, f.a});
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
}

QuadForm principal_form(const Integer& disc) {
    if (disc >= 0 || mod_floor(disc, 4) != 0)
        throw std::domain_error("principal_form: want a negative discriminant divisible by 4");
    return {1, 0, -disc / 4};
}

QuadForm inverse_form(const QuadForm& f) { return reduce({f.a, -f.b, f.c}); }

std::vector<QuadForm> reduced_forms_of_disc(const Integer& disc) {
    if (disc >= 0) throw std::invalid_argument("reduced forms: discriminant must be negative");
    Integer r = mod_floor(disc, 4);
    if (r != 0 && r != 1) throw std::invalid_argument("reduced forms: discriminant must be 0 or 1 mod 4");
    std::vector<QuadForm> out;
    for (Integer a = 1; 3 * a * a <= -disc; ++a) {
        for (Integer b = -a; b <= a; ++b) {
            if (mod_floor(b, 2) != mod_floor(disc, 2)) continue;
            Integer num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            Integer c = num / (4 * a);
            if (c < a) continue;
            QuadForm f{a, b, c};
            if (gcd(gcd(a, b), c) != 1) continue;
            if (!is_reduced(f)) continue;  // rejects b < 0 on the boundary
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<QuadForm> enumerate_reduced(const QuadOrder& order) {
    return reduced_forms_of_disc(order.disc());
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
    validate_form(f);
    validate_form(g);
    if (f.disc() != g.disc()) throw std::domain_error("compose: discriminant mismatch");

    // Dirichlet composition on united forms; see the classical treatment of
    // composition via (a1, a2, (b1+b2)/2) gcd data.
    Integer s = (f.b + g.b) / 2;
    Integer u0, v0, g1;
    g1 = ext_gcd(f.a, g.a, u0, v0);
    Integer v1, w, d;
    d = ext_gcd(g1, s, v1, w);
    Integer v = u0 * v1;

    Integer a2d = g.a / d;
    Integer a3 = (f.a / d) * a2d;
    Integer t = 2 * a2d * ((s - g.b) * v - w * g.c);
    Integer b3 = g.b + t;
    Integer c3 = (b3 * b3 - f.disc()) / (4 * a3);
    return reduce({a3, b3, c3});
}

std::string to_string(SplitKind k) {
    switch (k) {
        case SplitKind::split: return "split";
        case SplitKind::inert: return "inert";
        case SplitKind::ramified: return "ramified";
    }
    throw std::logic_error("unreachable");
}

PrimeIdealFactor factor_prime(const QuadOrder& order, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("factor_prime: p is not prime");
    if (p == 2) {
        // 2 always divides disc = 4d here.
        return {p, SplitKind::ramified, mod_floor(order.d, 2), false};
    }
    Integer dp = mod_floor(order.d, p);
    if (dp == 0) return {p, SplitKind::ramified, 0, false};
    for (Integer b = 1; b < p; ++b)
        if (mod_floor(b * b, p) == dp) return {p, SplitKind::split, b, false};
    return {p, SplitKind::inert, 0, false};
}

GroupElement ClassGroup::element_of(const QuadForm& reduced_form) const {
    for (const auto& [form, elem] : form_table)
        if (form == reduced_form) return elem;
    throw std::invalid_argument("ClassGroup: form is not in the table");
}

QuadForm ClassGroup::form_of(const GroupElement& e) const {
    for (const auto& [form, elem] : form_table)
        if (elem == e) return form;
    throw std::invalid_argument("ClassGroup: element is not in the table");
}

ClassGroup class_group(const QuadOrder& order) {
    std::vector<QuadForm> forms = enumerate_reduced(order);
    auto op = [](const QuadForm& x, const QuadForm& y) { return compose(x, y); };
    FiniteStructure<QuadForm> st =
        finite_structure(forms, op, principal_form(order.disc()), std::less<QuadForm>());
    return {order, st.group, st.basis, st.table};
}

QuadForm form_of_prime(const QuadOrder& order, const PrimeIdealFactor& f) {
    if (f.kind == SplitKind::inert)
        throw std::invalid_argument("class_of_prime: inert primes carry no ideal class");
    Integer b = f.conjugate ? -f.b : f.b;
    Integer c = (b * b - order.d) / f.p;
    return reduce({f.p, 2 * b, c});
}

GroupElement class_of_prime(const ClassGroup& cg, const PrimeIdealFactor& f) {
    return cg.element_of(form_of_prime(cg.order, f));
}

}  // namespace locperf
