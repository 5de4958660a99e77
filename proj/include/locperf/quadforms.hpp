#ifndef LOCPERF_QUADFORMS_HPP
#define LOCPERF_QUADFORMS_HPP

#include <string>
#include <vector>

#include "locperf/abelian.hpp"

namespace locperf {

/// The imaginary quadratic order Z[sqrt(d)]: d squarefree, negative,
/// d = 2 or 3 mod 4, so the discriminant is exactly 4d.
struct QuadOrder {
    Integer d;
    Integer disc() const { return 4 * d; }
};

QuadOrder make_quad_order(const Integer& d);

/// Primitive positive-definite binary quadratic form a*x^2 + b*xy + c*y^2.
struct QuadForm {
    Integer a, b, c;

    Integer disc() const { return b * b - 4 * a * c; }
    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const QuadForm& o) const { return !(*this == o); }
    bool operator<(const QuadForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

/// a > 0, negative discriminant, gcd(a,b,c) = 1; throws otherwise.
void validate_form(const QuadForm& f);
bool is_reduced(const QuadForm& f);

/// Gauss reduction: |b| <= a <= c with b >= 0 on the boundary.
QuadForm reduce(QuadForm f);

/// Principal form (1, 0, -disc/4) of an even discriminant.
QuadForm principal_form(const Integer& disc);
QuadForm inverse_form(const QuadForm& f);

/// All primitive reduced forms of a negative discriminant (0 or 1 mod 4),
/// in lexicographic (a, b, c) order. Also serves odd discriminants, which
/// only the test oracles use.
std::vector<QuadForm> reduced_forms_of_disc(const Integer& disc);
std::vector<QuadForm> enumerate_reduced(const QuadOrder& order);

/// Dirichlet composition on united forms; result reduced.
QuadForm compose(const QuadForm& f, const QuadForm& g);

enum class SplitKind { split, inert, ramified };
std::string to_string(SplitKind k);

/// Splitting data of a rational prime in Z[sqrt(d)]: the prime ideal is
/// (p, b + sqrt(d)) when not inert, (p, -b + sqrt(d)) with the conjugate flag.
struct PrimeIdealFactor {
    Integer p;
    SplitKind kind = SplitKind::inert;
    Integer b = 0;
    bool conjugate = false;
};

PrimeIdealFactor factor_prime(const QuadOrder& order, const Integer& p);

struct ClassGroup {
    QuadOrder order;
    FgAbelianGroup group;
    std::vector<QuadForm> basis_forms;  // basis_forms[i] generates the factor group.torsion[i]
    std::vector<std::pair<QuadForm, GroupElement>> form_table;

    GroupElement element_of(const QuadForm& reduced_form) const;
    QuadForm form_of(const GroupElement& e) const;
};

/// Class group from the composition table of the reduced forms.
ClassGroup class_group(const QuadOrder& order);

/// Ideal class of (p, ±b + sqrt(d)) via the form (p, ±2b, (b²−d)/p); throws on inert input.
GroupElement class_of_prime(const ClassGroup& cg, const PrimeIdealFactor& f);
QuadForm form_of_prime(const QuadOrder& order, const PrimeIdealFactor& f);

}  // namespace locperf

#endif
