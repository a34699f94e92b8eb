#ifndef DIPATH_CUBICAL_HPP
#define DIPATH_CUBICAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace dipath {

/// Subset of a label set, bit i standing for the i-th label in order.
using LabelMask = std::uint64_t;

inline constexpr std::size_t max_labels = 64;

/// Index of the largest label in the mask, or -1 for the empty mask.
int max_index(LabelMask mask);
int popcount(LabelMask mask);
inline LabelMask bit(int i) { return LabelMask{1} << i; }
inline LabelMask low_mask(std::size_t n) { return n >= 64 ? ~LabelMask{0} : (LabelMask{1} << n) - 1; }

/// Ascending label indices of a mask.
std::vector<int> indices(LabelMask mask);

/// A finite totally ordered set of at most 64 named labels.
class LabelSet {
public:
    LabelSet() = default;
    /// Labels in increasing order. Names must be distinct and nonempty and
    /// must not contain ',', '|' or whitespace.
    explicit LabelSet(std::vector<std::string> names);

    /// Labels "1", "2", ..., "n".
    static LabelSet numbered(std::size_t n);

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }
    LabelMask all() const { return low_mask(names_.size()); }

    const std::string& name(std::size_t i) const;
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// Comma-separated names of the labels in the mask.
    std::string format(LabelMask mask) const;
    /// Parses a comma-separated list of names. Throws ValidationError.
    LabelMask parse(std::string_view text) const;

    /// The labels in `mask`, in the induced order.
    LabelSet subset(LabelMask mask) const;

    bool operator==(const LabelSet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// A cube of the standard A-cube: entry 1 on `ones`, * on `stars`, 0 elsewhere.
struct Cube {
    LabelMask ones = 0;
    LabelMask stars = 0;

    int dim() const { return popcount(stars); }
    LabelMask zeros(LabelMask all) const { return all & ~ones & ~stars; }

    friend bool operator==(const Cube&, const Cube&) = default;
    friend auto operator<=>(const Cube&, const Cube&) = default;
};

struct CubeHash {
    std::size_t operator()(const Cube& c) const noexcept
    {
        std::uint64_t h = c.ones * 0x9E3779B97F4A7C15ull;
        h ^= c.stars + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/// d_i^eps: replaces the i-th star (1-based, in label order) by eps.
/// Throws std::out_of_range if i is not in 1..dim(c).
Cube face(const Cube& c, int i, int eps);

/// (d^0(c), d^1(c)).
std::pair<Cube, Cube> end_vertices(const Cube& c);

/// c(B1, B*, B0). Throws ArgumentError unless the three sets partition `all`.
Cube make_cube(LabelMask all, LabelMask b1, LabelMask bstar, LabelMask b0);

/// True iff `small` is a face of `big` (or equal to it).
bool is_face(const Cube& small, const Cube& big);

/// Orders cubes by dimension, then by word.
bool word_less(const Cube& x, const Cube& y);

/// Word over {0,1,*} of length n.
std::string format_word(const Cube& c, std::size_t n);
/// Inverse of format_word. Throws ValidationError on bad characters or length.
Cube parse_word(std::string_view word, std::size_t n);

/// A set of cubes of the standard cube over a label set. Usually face-closed;
/// the raw constructor keeps the set as given so that validate() can report
/// on it.
class CubicalComplex {
public:
    CubicalComplex() = default;
    /// The set of cubes as given, duplicates removed.
    CubicalComplex(LabelSet labels, std::vector<Cube> cubes);

    static CubicalComplex full(LabelSet labels);
    /// The face-closure of the generators.
    static CubicalComplex from_generators(LabelSet labels, std::vector<Cube> generators);

    const LabelSet& labels() const { return labels_; }
    LabelMask all() const { return labels_.all(); }
    std::size_t size() const { return sorted_.size(); }
    bool empty() const { return sorted_.empty(); }

    bool contains(const Cube& c) const { return set_.contains(c); }
    bool contains(LabelMask ones, LabelMask stars) const { return set_.contains(Cube{ones, stars}); }

    /// Cubes sorted by dimension, then by word.
    const std::vector<Cube>& cubes() const { return sorted_; }
    int max_dim() const;
    /// Number of cubes per dimension.
    std::vector<std::size_t> profile() const;

    bool is_face_closed() const;
    CubicalComplex closure() const;
    /// Removes the listed cells together with every cube containing one of them.
    CubicalComplex without(std::span<const Cube> open_cells) const;

private:
    LabelSet labels_;
    std::unordered_set<Cube, CubeHash> set_;
    std::vector<Cube> sorted_;
};

/// True iff K is face-closed.
bool validate(const CubicalComplex& k);

/// K|_B^eps, relabelled over the labels in B.
CubicalComplex restrict(const CubicalComplex& k, LabelMask b, int eps);

/// Cubes of dimension <= q.
CubicalComplex skeleton(const CubicalComplex& k, int q);

/// An iterated restriction of a complex, without copying it. The view is
/// the complex over the `active` labels whose cube c corresponds to the cube
/// of the base with entries c on `active`, 1 on `fixed_ones` and 0 elsewhere.
class ComplexView {
public:
    ComplexView() = default;
    explicit ComplexView(const CubicalComplex& base)
        : base_(&base), active_(base.all()), fixed_ones_(0) {}
    ComplexView(const CubicalComplex& base, LabelMask active, LabelMask fixed_ones)
        : base_(&base), active_(active), fixed_ones_(fixed_ones) {}

    const CubicalComplex& base() const { return *base_; }
    LabelMask active() const { return active_; }
    LabelMask fixed_ones() const { return fixed_ones_; }

    /// Membership of the cube with given ones and stars inside `active`.
    bool contains(LabelMask ones, LabelMask stars) const
    {
        return base_->contains(ones | fixed_ones_, stars);
    }

    /// The view of K|_T^eps for T inside active().
    ComplexView restrict(LabelMask t, int eps) const;

private:
    const CubicalComplex* base_ = nullptr;
    LabelMask active_ = 0;
    LabelMask fixed_ones_ = 0;
};

} // namespace dipath

#endif
