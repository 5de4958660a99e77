#ifndef LOCPERF_ABELIAN_HPP
#define LOCPERF_ABELIAN_HPP

#include <string>
#include <vector>

#include "locperf/intmatrix.hpp"

namespace locperf {

/// Finitely generated abelian group in canonical form:
/// Z^free_rank  +  Z/d_1 + ... + Z/d_k  with  d_1 | d_2 | ... and every d_i >= 2.
/// Canonical coordinates list the free coordinates first, then the torsion ones.
struct FgAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    std::size_t torsion_count() const { return torsion.size(); }
    std::size_t coord_count() const { return free_rank + torsion.size(); }
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    /// Order of the torsion part (the group order when finite).
    Integer torsion_order() const;

    bool operator==(const FgAbelianGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const FgAbelianGroup& o) const { return !(*this == o); }
};

/// Validates the divisibility chain and d_i >= 2.
FgAbelianGroup make_group(std::size_t free_rank, std::vector<Integer> torsion);
FgAbelianGroup free_group(std::size_t rank);
FgAbelianGroup trivial_group();

struct GroupElement {
    FgAbelianGroup group;
    std::vector<Integer> free_coords;     // length free_rank
    std::vector<Integer> torsion_coords;  // length torsion_count, each in [0, d_i)

    bool is_zero() const;
    bool operator==(const GroupElement& o) const {
        return group == o.group && free_coords == o.free_coords &&
               torsion_coords == o.torsion_coords;
    }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
};

/// Builds an element, reducing torsion coordinates into [0, d_i).
GroupElement make_element(const FgAbelianGroup& g, std::vector<Integer> free_coords,
                          std::vector<Integer> torsion_coords);
GroupElement zero_element(const FgAbelianGroup& g);
/// i-th canonical generator, 0 <= i < coord_count (free generators first).
GroupElement canonical_generator(const FgAbelianGroup& g, std::size_t i);
/// Element from a single coordinate vector (free coords then torsion coords).
GroupElement element_from_coords(const FgAbelianGroup& g, const std::vector<Integer>& coords);
std::vector<Integer> element_coords(const GroupElement& e);

GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement sub(const GroupElement& a, const GroupElement& b);
GroupElement negated(const GroupElement& a);
GroupElement scaled(const Integer& n, const GroupElement& a);

/// "f1 f2 | t1 t2"; either side may be empty.
std::string render_element(const GroupElement& e);
GroupElement parse_element(const FgAbelianGroup& g, const std::string& text);

/// Homomorphism between canonical presentations. Column j of `matrix` is the
/// image of the j-th canonical source generator in target coordinates.
struct GroupHom {
    FgAbelianGroup source, target;
    IntMatrix matrix;

    GroupElement apply(const GroupElement& x) const;
    bool operator==(const GroupHom& o) const {
        return source == o.source && target == o.target && matrix == o.matrix;
    }
};

/// Checks d_j * (column j) = 0 in the target for every source torsion factor d_j.
bool is_well_defined(const FgAbelianGroup& source, const FgAbelianGroup& target,
                     const IntMatrix& matrix);
/// Validates well-definedness and reduces torsion rows mod their factor.
GroupHom make_hom(const FgAbelianGroup& source, const FgAbelianGroup& target, IntMatrix matrix);
GroupHom identity_hom(const FgAbelianGroup& g);
GroupHom zero_hom(const FgAbelianGroup& source, const FgAbelianGroup& target);
GroupHom compose(const GroupHom& g, const GroupHom& f);  // g after f
GroupHom hom_sum(const GroupHom& f, const GroupHom& g);  // x -> f(x) + g(x)

struct Subgroup {
    FgAbelianGroup ambient;
    std::vector<GroupElement> generators;
};

Subgroup make_subgroup(const FgAbelianGroup& ambient, std::vector<GroupElement> generators);
Subgroup whole_group(const FgAbelianGroup& g);

struct MembershipResult {
    bool member = false;
    // member: coefficients over the subgroup generators recombining to the element.
    std::vector<Integer> witness;
    // non-member: projection to the quotient by the subgroup plus the nonzero residue.
    FgAbelianGroup quotient_group;
    GroupHom projection;
    GroupElement residue;
};

struct CanonicalizeResult {
    FgAbelianGroup group;
    GroupHom coord_map;  // original generator coordinates -> canonical coordinates
};

/// Cokernel of the relation lattice: rows of `relations` are relations among
/// `generators` formal generators. Unit invariant factors are dropped.
CanonicalizeResult canonicalize(std::size_t generators, const IntMatrix& relations);

/// Subgroup of h.target spanned by the images of the source canonical generators.
Subgroup image(const GroupHom& h);

/// Exact membership of g in <s.generators> inside s.ambient, with a
/// recombination witness or a quotient residue.
MembershipResult membership(const Subgroup& s, const GroupElement& g);

struct QuotientResult {
    FgAbelianGroup group;
    GroupHom projection;
};

/// g / <s.generators> in canonical form; projection(x) = 0 iff x in s.
QuotientResult quotient(const FgAbelianGroup& g, const Subgroup& s);

/// Canonical form of a + b (invariant factors re-sorted into one chain).
FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

struct DirectSumParts {
    FgAbelianGroup sum;
    GroupHom into_first, into_second;  // injections
    GroupHom onto_first, onto_second;  // projections (onto_first ∘ into_first = id)
};

DirectSumParts direct_sum_parts(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Subgroup n*g generated by n times each canonical generator; n >= 0.
Subgroup scale_subgroup(const FgAbelianGroup& g, const Integer& n);

/// All elements of a finite group in lexicographic coordinate order.
/// Throws when the group is infinite or larger than `max_order`.
std::vector<GroupElement> enumerate_elements(const FgAbelianGroup& g, const Integer& max_order);

}  // namespace locperf

#endif
