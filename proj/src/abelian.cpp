#include "locperf/abelian.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace locperf {

Integer FgAbelianGroup::torsion_order() const {
    Integer n = 1;
    for (const Integer& d : torsion) n *= d;
    return n;
}

FgAbelianGroup make_group(std::size_t free_rank, std::vector<Integer> torsion) {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) throw std::invalid_argument("make_group: invariant factor < 2");
        if (i > 0 && torsion[i] % torsion[i - 1] != 0)
            throw std::invalid_argument("make_group: invariant factors are not a divisibility chain");
    }
    return {free_rank, std::move(torsion)};
}

FgAbelianGroup free_group(std::size_t rank) { return {rank, {}}; }
FgAbelianGroup trivial_group() { return {0, {}}; }

bool GroupElement::is_zero() const {
    for (const Integer& x : free_coords)
        if (x != 0) return false;
    for (const Integer& x : torsion_coords)
        if (x != 0) return false;
    return true;
}

GroupElement make_element(const FgAbelianGroup& g, std::vector<Integer> free_coords,
                          std::vector<Integer> torsion_coords) {
    if (free_coords.size() != g.free_rank || torsion_coords.size() != g.torsion_count())
        throw std::invalid_argument("make_element: coordinate lengths do not match the group");
    for (std::size_t i = 0; i < torsion_coords.size(); ++i)
        torsion_coords[i] = mod_floor(torsion_coords[i], g.torsion[i]);
    return {g, std::move(free_coords), std::move(torsion_coords)};
}

GroupElement zero_element(const FgAbelianGroup& g) {
    return {g, std::vector<Integer>(g.free_rank), std::vector<Integer>(g.torsion_count())};
}

GroupElement canonical_generator(const FgAbelianGroup& g, std::size_t i) {
    if (i >= g.coord_count()) throw std::invalid_argument("canonical_generator: index out of range");
    GroupElement e = zero_element(g);
    if (i < g.free_rank)
        e.free_coords[i] = 1;
    else
        e.torsion_coords[i - g.free_rank] = 1;
    return e;
}

GroupElement element_from_coords(const FgAbelianGroup& g, const std::vector<Integer>& coords) {
    if (coords.size() != g.coord_count())
        throw std::invalid_argument("element_from_coords: wrong length");
    std::vector<Integer> f(coords.begin(), coords.begin() + static_cast<long>(g.free_rank));
    std::vector<Integer> t(coords.begin() + static_cast<long>(g.free_rank), coords.end());
    return make_element(g, std::move(f), std::move(t));
}

std::vector<Integer> element_coords(const GroupElement& e) {
    std::vector<Integer> out = e.free_coords;
    out.insert(out.end(), e.torsion_coords.begin(), e.torsion_coords.end());
    return out;
}

static void require_same_group(const GroupElement& a, const GroupElement& b) {
    if (a.group != b.group) throw std::invalid_argument("group elements live in different groups");
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
    require_same_group(a, b);
    GroupElement out = a;
    for (std::size_t i = 0; i < out.free_coords.size(); ++i) out.free_coords[i] += b.free_coords[i];
    for (std::size_t i = 0; i < out.torsion_coords.size(); ++i)
        out.torsion_coords[i] = mod_floor(out.torsion_coords[i] + b.torsion_coords[i], a.group.torsion[i]);
    return out;
}

GroupElement negated(const GroupElement& a) {
    GroupElement out = a;
    for (auto& x : out.free_coords) x = -x;
    for (std::size_t i = 0; i < out.torsion_coords.size(); ++i)
        out.torsion_coords[i] = mod_floor(-out.torsion_coords[i], a.group.torsion[i]);
    return out;
}

GroupElement sub(const GroupElement& a, const GroupElement& b) { return add(a, negated(b)); }

GroupElement scaled(const Integer& n, const GroupElement& a) {
    GroupElement out = a;
    for (auto& x : out.free_coords) x *= n;
    for (std::size_t i = 0; i < out.torsion_coords.size(); ++i)
        out.torsion_coords[i] = mod_floor(n * out.torsion_coords[i], a.group.torsion[i]);
    return out;
}

std::string render_element(const GroupElement& e) {
    std::string out = render_integer_list(e.free_coords);
    out += out.empty() ? "|" : " |";
    std::string t = render_integer_list(e.torsion_coords);
    if (!t.empty()) out += " " + t;
    return out;
}

GroupElement parse_element(const FgAbelianGroup& g, const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("element: missing '|'");
    std::vector<Integer> f = parse_integer_list(text.substr(0, bar));
    std::vector<Integer> t = parse_integer_list(text.substr(bar + 1));
    return make_element(g, std::move(f), std::move(t));
}

GroupElement GroupHom::apply(const GroupElement& x) const {
    if (x.group != source) throw std::invalid_argument("hom applied to element of wrong group");
    return element_from_coords(target, matrix.apply(element_coords(x)));
}

bool is_well_defined(const FgAbelianGroup& source, const FgAbelianGroup& target,
                     const IntMatrix& matrix) {
    if (matrix.rows() != target.coord_count() || matrix.cols() != source.coord_count()) return false;
    for (std::size_t j = 0; j < source.torsion_count(); ++j) {
        const Integer& d = source.torsion[j];
        const std::size_t col = source.free_rank + j;
        for (std::size_t i = 0; i < target.free_rank; ++i)
            if (d * matrix.at(i, col) != 0) return false;
        for (std::size_t i = 0; i < target.torsion_count(); ++i)
            if (mod_floor(d * matrix.at(target.free_rank + i, col), target.torsion[i]) != 0)
                return false;
    }
    return true;
}

GroupHom make_hom(const FgAbelianGroup& source, const FgAbelianGroup& target, IntMatrix matrix) {
    if (matrix.rows() != target.coord_count() || matrix.cols() != source.coord_count())
        throw std::invalid_argument("make_hom: matrix shape does not match the groups");
    if (!is_well_defined(source, target, matrix))
        throw std::invalid_argument("make_hom: matrix is not a well-defined homomorphism");
    // Canonical matrix: torsion rows reduced mod their factor.
    for (std::size_t i = 0; i < target.torsion_count(); ++i)
        for (std::size_t j = 0; j < matrix.cols(); ++j)
            matrix.at(target.free_rank + i, j) =
                mod_floor(matrix.at(target.free_rank + i, j), target.torsion[i]);
    return {source, target, std::move(matrix)};
}

GroupHom identity_hom(const FgAbelianGroup& g) {
    return make_hom(g, g, IntMatrix::identity(g.coord_count()));
}

GroupHom zero_hom(const FgAbelianGroup& source, const FgAbelianGroup& target) {
    return make_hom(source, target, IntMatrix(target.coord_count(), source.coord_count()));
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (f.target != g.source) throw std::invalid_argument("compose: middle groups differ");
    return make_hom(f.source, g.target, g.matrix.multiplied(f.matrix));
}

GroupHom hom_sum(const GroupHom& f, const GroupHom& g) {
    if (f.source != g.source || f.target != g.target)
        throw std::invalid_argument("hom_sum: shape mismatch");
    IntMatrix m(f.matrix.rows(), f.matrix.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = f.matrix.at(i, j) + g.matrix.at(i, j);
    return make_hom(f.source, f.target, std::move(m));
}

Subgroup make_subgroup(const FgAbelianGroup& ambient, std::vector<GroupElement> generators) {
    for (const GroupElement& g : generators)
        if (g.group != ambient) throw std::invalid_argument("subgroup generator outside the ambient group");
    return {ambient, std::move(generators)};
}

Subgroup whole_group(const FgAbelianGroup& g) {
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < g.coord_count(); ++i) gens.push_back(canonical_generator(g, i));
    return {g, std::move(gens)};
}

namespace {

// Shared cokernel machinery: canonical form of Z^n / (column lattice of m),
// with the selected rows of u giving the projection matrix.
struct Cokernel {
    FgAbelianGroup group;
    IntMatrix proj;  // coord_count(group) x n
};

Cokernel cokernel_of_columns(std::size_t n, const IntMatrix& m) {
    if (m.rows() != n) throw std::invalid_argument("cokernel: column length mismatch");
    SnfResult snf = smith_normal_form(m);
    const std::size_t limit = m.rows() < m.cols() ? m.rows() : m.cols();

    std::vector<std::size_t> free_rows, torsion_rows;
    std::vector<Integer> factors;
    for (std::size_t i = 0; i < n; ++i) {
        const Integer d = i < limit ? snf.d.at(i, i) : Integer(0);
        if (d == 0) {
            free_rows.push_back(i);
        } else if (d >= 2) {
            torsion_rows.push_back(i);
            factors.push_back(d);
        }
        // d == 1: generator dies, row dropped
    }

    FgAbelianGroup g = make_group(free_rows.size(), factors);
    IntMatrix proj(g.coord_count(), n);
    for (std::size_t r = 0; r < free_rows.size(); ++r) {
        // Sign convention: first nonzero entry of a free row is positive.
        std::size_t src = free_rows[r];
        Integer sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const Integer& x = snf.u.at(src, j);
            if (x != 0) { sign = x < 0 ? -1 : 1; break; }
        }
        for (std::size_t j = 0; j < n; ++j) proj.at(r, j) = sign * snf.u.at(src, j);
    }
    for (std::size_t r = 0; r < torsion_rows.size(); ++r)
        for (std::size_t j = 0; j < n; ++j)
            proj.at(free_rows.size() + r, j) = mod_floor(snf.u.at(torsion_rows[r], j), factors[r]);
    return {std::move(g), std::move(proj)};
}

// Columns of the relation lattice of g embedded in its coordinate space:
// d_i * e_{free_rank + i} for each torsion factor.
IntMatrix torsion_relation_columns(const FgAbelianGroup& g) {
    IntMatrix m(g.coord_count(), g.torsion_count());
    for (std::size_t i = 0; i < g.torsion_count(); ++i) m.at(g.free_rank + i, i) = g.torsion[i];
    return m;
}

IntMatrix concat_columns(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("concat_columns: row mismatch");
    IntMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

IntMatrix generator_columns(const Subgroup& s) {
    IntMatrix m(s.ambient.coord_count(), s.generators.size());
    for (std::size_t j = 0; j < s.generators.size(); ++j) {
        std::vector<Integer> c = element_coords(s.generators[j]);
        for (std::size_t i = 0; i < c.size(); ++i) m.at(i, j) = c[i];
    }
    return m;
}

}  // namespace

CanonicalizeResult canonicalize(std::size_t generators, const IntMatrix& relations) {
    if (relations.cols() != generators)
        throw std::invalid_argument("canonicalize: relations must have one column per generator");
    Cokernel ck = cokernel_of_columns(generators, relations.transposed());
    GroupHom coord_map = make_hom(free_group(generators), ck.group, std::move(ck.proj));
    return {std::move(ck.group), std::move(coord_map)};
}

Subgroup image(const GroupHom& h) {
    if (!is_well_defined(h.source, h.target, h.matrix))
        throw std::invalid_argument("image: ill-defined homomorphism");
    std::vector<GroupElement> gens;
    for (std::size_t j = 0; j < h.matrix.cols(); ++j) {
        std::vector<Integer> col(h.matrix.rows());
        for (std::size_t i = 0; i < h.matrix.rows(); ++i) col[i] = h.matrix.at(i, j);
        gens.push_back(element_from_coords(h.target, col));
    }
    return {h.target, std::move(gens)};
}

QuotientResult quotient(const FgAbelianGroup& g, const Subgroup& s) {
    if (s.ambient != g) throw std::invalid_argument("quotient: subgroup of a different group");
    IntMatrix cols = concat_columns(generator_columns(s), torsion_relation_columns(g));
    Cokernel ck = cokernel_of_columns(g.coord_count(), cols);
    GroupHom proj = make_hom(g, ck.group, std::move(ck.proj));
    return {std::move(ck.group), std::move(proj)};
}

MembershipResult membership(const Subgroup& s, const GroupElement& g) {
    if (g.group != s.ambient) throw std::invalid_argument("membership: element of a different group");
    IntMatrix a = concat_columns(generator_columns(s), torsion_relation_columns(s.ambient));
    auto sol = solve_linear(a, element_coords(g));
    if (sol) {
        MembershipResult r;
        r.member = true;
        r.witness.assign(sol->begin(), sol->begin() + static_cast<long>(s.generators.size()));
        return r;
    }
    QuotientResult q = quotient(s.ambient, s);
    MembershipResult r;
    r.member = false;
    r.residue = q.projection.apply(g);
    if (r.residue.is_zero())
        throw std::logic_error("membership: unsolvable system but zero residue");
    r.quotient_group = q.group;
    r.projection = q.projection;
    return r;
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return direct_sum_parts(a, b).sum;
}

DirectSumParts direct_sum_parts(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    const std::size_t na = a.coord_count(), nb = b.coord_count();
    IntMatrix relations(a.torsion_count() + b.torsion_count(), na + nb);
    for (std::size_t i = 0; i < a.torsion_count(); ++i)
        relations.at(i, a.free_rank + i) = a.torsion[i];
    for (std::size_t i = 0; i < b.torsion_count(); ++i)
        relations.at(a.torsion_count() + i, na + b.free_rank + i) = b.torsion[i];

    CanonicalizeResult canon = canonicalize(na + nb, relations);
    const FgAbelianGroup& sum = canon.group;
    const IntMatrix& cm = canon.coord_map.matrix;

    auto slice_cols = [&](std::size_t begin, std::size_t count) {
        IntMatrix m(cm.rows(), count);
        for (std::size_t i = 0; i < cm.rows(); ++i)
            for (std::size_t j = 0; j < count; ++j) m.at(i, j) = cm.at(i, begin + j);
        return m;
    };
    GroupHom into_first = make_hom(a, sum, slice_cols(0, na));
    GroupHom into_second = make_hom(b, sum, slice_cols(na, nb));

    // Projections: preimage of each canonical sum generator under the coord
    // map, split back into the a/b coordinate blocks. Any preimage works
    // because preimages differ by relations, which die in a resp. b.
    IntMatrix solve_mat = concat_columns(cm, torsion_relation_columns(sum));
    IntMatrix pa(na, sum.coord_count()), pb(nb, sum.coord_count());
    for (std::size_t i = 0; i < sum.coord_count(); ++i) {
        std::vector<Integer> target(sum.coord_count());
        target[i] = 1;
        auto x = solve_linear(solve_mat, target);
        if (!x) throw std::logic_error("direct_sum_parts: coord map is not surjective");
        for (std::size_t r = 0; r < na; ++r) pa.at(r, i) = (*x)[r];
        for (std::size_t r = 0; r < nb; ++r) pb.at(r, i) = (*x)[na + r];
    }
    GroupHom onto_first = make_hom(sum, a, std::move(pa));
    GroupHom onto_second = make_hom(sum, b, std::move(pb));
    return {sum, std::move(into_first), std::move(into_second), std::move(onto_first),
            std::move(onto_second)};
}

Subgroup scale_subgroup(const FgAbelianGroup& g, const Integer& n) {
    if (n < 0) throw std::invalid_argument("scale_subgroup: negative multiplier");
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < g.coord_count(); ++i)
        gens.push_back(scaled(n, canonical_generator(g, i)));
    return {g, std::move(gens)};
}

std::vector<GroupElement> enumerate_elements(const FgAbelianGroup& g, const Integer& max_order) {
    if (!g.is_finite()) throw std::invalid_argument("enumerate_elements: infinite group");
    if (g.torsion_order() > max_order)
        throw std::invalid_argument("enumerate_elements: group larger than the stated bound");
    std::vector<GroupElement> out;
    std::vector<Integer> coords(g.torsion_count());
    for (;;) {
        out.push_back(make_element(g, {}, coords));
        std::size_t i = g.torsion_count();
        while (i > 0) {
            --i;
            coords[i] += 1;
            if (coords[i] < g.torsion[i]) break;
            coords[i] = 0;
            if (i == 0) return out;
        }
        if (g.torsion_count() == 0) return out;
    }
}

}  // namespace locperf
