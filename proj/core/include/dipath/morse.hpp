#ifndef DIPATH_MORSE_HPP
#define DIPATH_MORSE_HPP

#include "dipath/cubical.hpp"
#include "dipath/error.hpp"
#include "dipath/partitions.hpp"
#include "dipath/poset.hpp"

#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dipath {

/// A vector (facet, cofacet) of a discrete vector field.
struct Pairing {
    CellId facet = 0;
    CellId cofacet = 0;

    friend bool operator==(const Pairing&, const Pairing&) = default;
    friend auto operator<=>(const Pairing&, const Pairing&) = default;
};

/// A set of pairwise disjoint vectors (a, b) with a a facet of b.
class DiscreteVectorField {
public:
    DiscreteVectorField();
    /// Throws ValidationError if some pair is not a facet pair of the host or
    /// two pairs share a cell.
    DiscreteVectorField(std::shared_ptr<const FinitePoset> host, std::vector<Pairing> pairs);

    const FinitePoset& host() const { return *host_; }
    std::shared_ptr<const FinitePoset> shared_host() const { return host_; }

    /// Sorted by facet.
    const std::vector<Pairing>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }

    std::optional<CellId> partner(CellId c) const;
    bool is_critical(CellId c) const { return !partner(c); }
    /// True iff c is the facet of one of the vectors.
    bool is_source(CellId c) const;
    bool contains(CellId facet, CellId cofacet) const;

private:
    std::shared_ptr<const FinitePoset> host_;
    std::vector<Pairing> pairs_;
    std::vector<CellId> partner_;
    std::vector<signed char> role_;
};

struct GradientCheck {
    bool gradient = true;
    /// The vectors of a closed flow, in flow order, when one exists.
    std::vector<Pairing> cycle;
};

/// Searches for a cycle a1 -> b1 > a2 -> b2 > ... > a1 of vectors (a_i, b_i)
/// joined by facet steps a_{i+1} < b_i with a_{i+1} != a_i.
GradientCheck check_gradient(const DiscreteVectorField& v);
bool is_gradient(const DiscreteVectorField& v);

/// Critical cells bucketed by dimension, ascending ids in each bucket.
std::vector<std::vector<CellId>> critical(const DiscreteVectorField& v);
std::vector<CellId> critical_cells(const DiscreteVectorField& v);

/// A value of the weight h_A, compared with the dot order.
struct MorseValue {
    long long s = 0;
    long long t = 1;

    friend bool operator==(const MorseValue&, const MorseValue&) = default;
};

/// (s,t) <=. (s',t') iff s > s', or s = s' and 1 != t <= t', or s = s'
/// and t' = 1.
bool dot_le(const MorseValue& x, const MorseValue& y);

struct DotLess {
    bool operator()(const MorseValue& x, const MorseValue& y) const { return dot_le(x, y) && !(x == y); }
};

/// (#C, #B) where B is the block of lambda containing its largest label and
/// C is the union of the blocks before it. Throws ArgumentError on the empty
/// partition.
MorseValue permutahedron_weight(const OrderedPartition& lambda);

/// True iff h strictly decreases along the vectors of v and weakly increases
/// along every other facet pair.
template <class T, class Less = std::less<T>>
bool is_morse_function(const DiscreteVectorField& v, std::span<const T> h, Less less = Less{})
{
    const FinitePoset& p = v.host();
    if (h.size() != p.size())
        throw ArgumentError("is_morse_function: one value per cell required");
    for (CellId b = 0; b < p.size(); ++b) {
        for (CellId const a : p.facets(b)) {
            if (v.contains(a, b)) {
                if (!less(h[b], h[a]))
                    return false;
            } else if (less(h[b], h[a])) {
                return false;
            }
        }
    }
    return true;
}

/// Builds a field over a partition poset from partition pairs. Throws
/// LookupError if a partition is not a cell.
DiscreteVectorField field_from_pairs(const PartitionPoset& poset,
                                     const std::vector<std::pair<OrderedPartition, OrderedPartition>>& pairs);

/// V x W on P x Q; cell (p, q) has id product_id(Q, p, q).
DiscreteVectorField product_field(const DiscreteVectorField& v, const DiscreteVectorField& w);

/// The nonempty subsets of {0..n-1} ordered by inclusion, with the field
/// pairing B and B u {m} for B inside A'.
struct SimplexField {
    std::vector<LabelMask> cells;
    DiscreteVectorField field;
};
SimplexField simplex_field(std::size_t n);

/// The face poset of the standard n-cube with its inductive field; the only
/// critical cell is the vertex 0.
struct CubeField {
    std::vector<Cube> cells;
    DiscreteVectorField field;
};
CubeField cube_field(std::size_t n);

/// The field V_A on the permutahedron poset P_A.
struct PermutahedronField {
    PartitionPoset poset;
    DiscreteVectorField field;
};
PermutahedronField permutahedron_field(LabelMask support);

/// The vectors of V_A as partition pairs.
std::vector<std::pair<OrderedPartition, OrderedPartition>> permutahedron_pairs(LabelMask support);

/// Graphviz digraph of the Hasse diagram with edges pointing down and the
/// vectors pointing up in bold.
std::string to_dot(const DiscreteVectorField& v, const std::function<std::string(CellId)>& label = {});

} // namespace dipath

#endif
