#ifndef DIPATH_POSET_HPP
#define DIPATH_POSET_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dipath {

using CellId = std::uint32_t;

/// A finite graded poset stored as a covering relation plus its
/// reachability closure. Cells are dense ids 0..size()-1; each cell carries a
/// dimension and a display name. Immutable after construction.
class FinitePoset {
public:
    FinitePoset() = default;

    /// Builds the poset generated by the covering pairs (a, b), meaning a ⋖ b.
    /// Throws ValidationError if a pair does not increase dimension or the
    /// relation has a cycle.
    FinitePoset(std::vector<int> dims,
                std::vector<std::pair<CellId, CellId>> covers,
                std::vector<std::string> names = {});

    /// Builds a poset from a strict order predicate. The covering relation is
    /// the transitive reduction of `less`. Quadratic in size; meant for small
    /// hand-built posets.
    static FinitePoset from_order(std::vector<int> dims,
                                  const std::function<bool(CellId, CellId)>& less,
                                  std::vector<std::string> names = {});

    std::size_t size() const { return dims_.size(); }
    bool empty() const { return dims_.empty(); }

    int dim(CellId c) const;
    const std::string& name(CellId c) const;
    std::optional<CellId> find(std::string_view name) const;

    /// Strict order a < b.
    bool less(CellId a, CellId b) const;
    bool less_equal(CellId a, CellId b) const { return a == b || less(a, b); }

    /// All a < b with dim(a) = dim(b) - 1.
    std::span<const CellId> facets(CellId b) const;
    /// All c > a with dim(c) = dim(a) + 1.
    std::span<const CellId> cofacets(CellId a) const;

    std::span<const CellId> covers_below(CellId b) const;
    std::span<const CellId> covers_above(CellId a) const;

    /// Cells strictly above `a`, ascending by id.
    std::vector<CellId> strictly_above(CellId a) const;

    /// Ids sorted so that every cell appears after all cells below it.
    const std::vector<CellId>& linear_extension() const { return order_; }

    int max_dim() const;

private:
    void check_id(CellId c) const;
    void build(std::vector<std::pair<CellId, CellId>> covers);

    std::vector<int> dims_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, CellId> by_name_;

    std::vector<std::vector<CellId>> covers_below_;
    std::vector<std::vector<CellId>> covers_above_;
    std::vector<std::vector<CellId>> facets_;
    std::vector<std::vector<CellId>> cofacets_;
    std::vector<CellId> order_;

    // below_[b] is a bitset over cells: bit a set iff a < b.
    std::size_t words_ = 0;
    std::vector<std::uint64_t> below_;
};

/// True iff q is downward closed in p.
bool is_closed_subposet(const FinitePoset& p, std::span<const CellId> q);

/// The down-closure of a subset, sorted by id.
std::vector<CellId> down_closure(const FinitePoset& p, std::span<const CellId> subset);

/// Product poset P × Q with the componentwise order. Cell (x, y) gets id
/// x * |Q| + y and dimension dim(x) + dim(y).
FinitePoset product(const FinitePoset& p, const FinitePoset& q);

inline CellId product_id(const FinitePoset& q, CellId x, CellId y)
{
    return static_cast<CellId>(x * q.size() + y);
}

/// An abstract simplicial complex on vertices 0..vertex_count-1.
///
/// simplices[d] holds the d-simplices flattened, d+1 ascending vertex ids per
/// simplex, with simplices in lexicographic order. When `truncated` is set,
/// simplices of dimension > top_dim() exist but were not enumerated.
struct SimplicialComplexRecord {
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::uint32_t>> simplices;
    bool truncated = false;

    int top_dim() const { return static_cast<int>(simplices.size()) - 1; }
    std::size_t count(int d) const;
    std::size_t total() const;
    std::span<const std::uint32_t> simplex(int d, std::size_t index) const;
    /// Index of a d-simplex given by ascending vertex ids, if present.
    std::optional<std::size_t> find(std::span<const std::uint32_t> vertices) const;

    bool is_face_closed() const;
    /// Alternating count of stored simplices.
    long long euler_characteristic() const;

    /// The complex generated by the given simplices and all their faces.
    static SimplicialComplexRecord from_facets(std::size_t vertex_count,
                                               std::vector<std::vector<std::uint32_t>> facets);
};

struct OrderComplexOptions {
    /// Keep simplices of dimension <= max_dim only.
    std::optional<int> max_dim;
    /// Throw ResourceError when more simplices would be produced.
    std::optional<std::size_t> max_simplices;
};

/// The nerve of the poset: simplices are the nonempty chains.
SimplicialComplexRecord order_complex(const FinitePoset& p, const OrderComplexOptions& options = {});

/// Number of chains with k+1 elements, indexed by k, without materializing them.
std::vector<std::uint64_t> chain_counts(const FinitePoset& p);

/// Euler characteristic of the order complex, from chain_counts().
long long order_complex_euler_characteristic(const FinitePoset& p);

} // namespace dipath

#endif
