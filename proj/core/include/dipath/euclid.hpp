#ifndef DIPATH_EUCLID_HPP
#define DIPATH_EUCLID_HPP

#include "dipath/cubical.hpp"
#include "dipath/partitions.hpp"
#include "dipath/wk.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace dipath {

using Point = std::vector<int>;

std::string to_string(const Point& p);

/// [a, b] with 0 <= b_i - a_i <= 1.
struct ElementaryCube {
    Point a;
    Point b;

    /// Throws ArgumentError unless a and b have equal length and 0 <= b - a <= 1.
    static ElementaryCube make(Point a, Point b);
    static ElementaryCube vertex(Point a);

    std::size_t n() const { return a.size(); }
    int dim() const;
    /// Bit i set iff b_i - a_i = 1 (coordinates counted from 0).
    std::uint32_t dir() const;

    friend bool operator==(const ElementaryCube&, const ElementaryCube&) = default;
    friend auto operator<=>(const ElementaryCube&, const ElementaryCube&) = default;
};

/// [a, b] is a face of [c, d].
bool is_face(const ElementaryCube& small, const ElementaryCube& big);

/// A set of elementary cubes inside the box [0, k].
class EuclideanComplex {
public:
    EuclideanComplex() = default;
    /// The cubes as given. Throws ArgumentError if a cube leaves the box.
    EuclideanComplex(Point k, std::vector<ElementaryCube> cubes);

    /// Every elementary cube of [0, k].
    static EuclideanComplex box(Point k);
    /// The face-closure of the given cubes.
    static EuclideanComplex from_cubes(Point k, std::vector<ElementaryCube> cubes);

    const Point& k() const { return k_; }
    std::size_t n() const { return k_.size(); }
    std::size_t size() const { return sorted_.size(); }
    /// Sorted by dimension, then by (a, b).
    const std::vector<ElementaryCube>& cubes() const { return sorted_; }
    int max_dim() const;

    bool contains(const ElementaryCube& c) const;
    /// The cube with lower corner a and direction mask dir.
    bool contains(const Point& a, std::uint32_t dir) const;

    bool is_face_closed() const;
    EuclideanComplex closure() const;
    /// Removes the listed cells and every cube containing one of them.
    EuclideanComplex without(const std::vector<ElementaryCube>& open_cells) const;

private:
    std::uint64_t key(const Point& a, std::uint32_t dir) const;
    bool inside(const ElementaryCube& c) const;

    Point k_;
    std::unordered_set<std::uint64_t> keys_;
    std::vector<ElementaryCube> sorted_;
};

EuclideanComplex skeleton(const EuclideanComplex& k, int q);

/// The labels (1,1) < (1,2) < ... < (1,k_1) < (2,1) < ... < (n,k_n), named "i.j".
LabelSet box_labels(const Point& k);
/// Index of the label (i, j) in box_labels(k); i and j counted from 1.
int box_label_index(const Point& k, int i, int j);

/// The image of a cube: (i,j) maps to 1 if j <= a_i, to * if a_i < j = b_i,
/// and to 0 if b_i < j.
Cube embed_cube(const Point& k, const ElementaryCube& c);
CubicalComplex embed(const EuclideanComplex& k);

/// An ordered partition of the multiset [k], blocks as count vectors.
struct MultisetPartition {
    std::vector<std::vector<int>> blocks;

    /// Every block is a set.
    bool proper() const;

    friend bool operator==(const MultisetPartition&, const MultisetPartition&) = default;
};

/// Blockwise projection (i, j) -> i with multiplicities.
MultisetPartition project(const OrderedPartition& lambda, const Point& k);
/// The unique box-ordered lambda projecting to mu. Throws ArgumentError if
/// mu is not a proper partition of [k].
OrderedPartition lift(const MultisetPartition& mu, const Point& k);
/// For each i, the labels (i, 1), (i, 2), ... occur in strictly increasing blocks.
bool respects_box_order(const OrderedPartition& lambda, const Point& k);

/// The cubes of the staircase from a to b moving coordinate 1 first, then
/// coordinate 2, and so on. Throws ArgumentError unless a <= b.
std::vector<ElementaryCube> minimal_line_cubes(const Point& a, const Point& b);
/// The minimal line as a complex inside [0, b]. Requires 0 <= a <= b.
EuclideanComplex minimal_line(const Point& a, const Point& b);

/// ((a^1..a^{q+1}), (b^0..b^q)).
struct CriticalRoute {
    std::vector<Point> a;
    std::vector<Point> b;

    std::size_t q() const { return b.empty() ? 0 : b.size() - 1; }
    /// Sum of (dim [a^j, b^j] - 2).
    int dim() const;

    friend bool operator==(const CriticalRoute&, const CriticalRoute&) = default;
    friend auto operator<=>(const CriticalRoute&, const CriticalRoute&) = default;
};

std::string to_string(const CriticalRoute& r);

/// All critical routes in K, sorted.
std::vector<CriticalRoute> enumerate_critical_routes(const EuclideanComplex& k);
bool is_critical_route(const EuclideanComplex& k, const CriticalRoute& r);

/// F_j = {(i,r): b^j_i < r <= a^{j+1}_i}, E_j = {(i,r): a^j_i < r <= b^j_i}.
/// Throws ValidationError if r is not a critical route in K.
CriticalSequence route_to_sequence(const CriticalRoute& r, const EuclideanComplex& k);
/// a^j and b^j as label counts of F_0 u E_1 u ... u F_{j-1} and of that set
/// with E_j added. Throws ValidationError if cs is not a critical sequence in
/// the embedding of K.
CriticalRoute sequence_to_route(const CriticalSequence& cs, const EuclideanComplex& k);

/// [0,k] restricted to dimension n-1 is contained in K, and n >= 2.
bool in_sandwich(const EuclideanComplex& k);
/// [b^1, ..., b^q]. Throws PreconditionError outside the sandwich case.
std::vector<Point> cube_sequence_of_route(const CriticalRoute& r, const EuclideanComplex& k);
/// The route with a^j = b^j - 1. Throws PreconditionError outside the sandwich
/// case and ValidationError if the result is not a critical route.
CriticalRoute route_of_cube_sequence(const std::vector<Point>& corners, const EuclideanComplex& k);

} // namespace dipath

#endif
