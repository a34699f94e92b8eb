#ifndef DIPATH_PARTITIONS_HPP
#define DIPATH_PARTITIONS_HPP

#include "dipath/cubical.hpp"
#include "dipath/poset.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dipath {

/// An ordered partition B1|B2|...|Bl of its support into nonempty blocks.
struct OrderedPartition {
    std::vector<LabelMask> blocks;

    std::size_t length() const { return blocks.size(); }
    /// Sum of (#B - 1) over the blocks.
    int dim() const;
    LabelMask support() const;
    /// True iff the blocks are nonempty and pairwise disjoint.
    bool well_formed() const;

    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
    friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;
};

struct OrderedPartitionHash {
    std::size_t operator()(const OrderedPartition& p) const noexcept;
};

/// lambda|mu.
OrderedPartition concat(const OrderedPartition& lambda, const OrderedPartition& mu);
OrderedPartition concat(const OrderedPartition& lambda, LabelMask block);

/// Canonical text "a,b|c": blocks separated by '|', labels ascending inside a
/// block. The empty partition prints as the empty string.
std::string to_string(const OrderedPartition& p, const LabelSet& labels);
/// Inverse of to_string. Throws ValidationError on unknown or repeated labels
/// and on empty blocks.
OrderedPartition parse_partition(std::string_view text, const LabelSet& labels);

/// True iff mu refines lambda: consecutive blocks of mu group, in order, into
/// the blocks of lambda. Throws ArgumentError if the supports differ.
bool refines(const OrderedPartition& mu, const OrderedPartition& lambda);

/// A sequence of positive-dimensional cubes, each ending where the next starts.
using CubeChain = std::vector<Cube>;

/// The chain c_i = c(B1 u ... u B_{i-1}, B_i, B_{i+1} u ... u B_l) from 0 to 1.
CubeChain chain_of_partition(const OrderedPartition& lambda);

/// Inverse of chain_of_partition for chains from the vertex 0 to the vertex
/// with ones on `all`. Throws ValidationError on an invalid chain.
OrderedPartition partition_of_chain(const CubeChain& chain, LabelMask all);

/// True iff every cube of the chain of `lambda` lies in the view. The chain is
/// taken over the active labels of the view, so lambda must partition them.
bool chain_in(const ComplexView& view, const OrderedPartition& lambda);

/// All ordered partitions of `support`.
std::vector<OrderedPartition> ordered_partitions(LabelMask support);

/// All lambda whose chain lies in the view, found by extending a prefix one
/// block at a time. Sorted by dimension, then lexicographically by blocks.
std::vector<OrderedPartition> partitions_of(const ComplexView& view);

/// A set of ordered partitions of a common support, ordered by refinement.
class PartitionPoset {
public:
    PartitionPoset();
    /// Cells are sorted by dimension, then by blocks; duplicates are removed.
    PartitionPoset(LabelMask support, std::vector<OrderedPartition> cells);

    LabelMask support() const { return support_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    const OrderedPartition& cell(CellId id) const;
    const std::vector<OrderedPartition>& cells() const { return cells_; }
    std::optional<CellId> find(const OrderedPartition& lambda) const;
    /// Like find, but throws LookupError when absent.
    CellId id_of(const OrderedPartition& lambda) const;

    const FinitePoset& poset() const { return *poset_; }
    std::shared_ptr<const FinitePoset> shared_poset() const { return poset_; }

private:
    LabelMask support_ = 0;
    std::vector<OrderedPartition> cells_;
    std::unordered_map<OrderedPartition, CellId, OrderedPartitionHash> index_;
    std::shared_ptr<const FinitePoset> poset_;
};

/// P_K: all lambda with the chain of lambda inside K.
PartitionPoset build_pk(const CubicalComplex& k);
PartitionPoset build_pk(const ComplexView& view);

/// The permutahedron poset P_A on the labels in `support`.
PartitionPoset permutahedron(LabelMask support);

/// Both sides of the composition criterion for lambda|B1|...|Bk|mu, with
/// lambda over C and mu over D.
struct CompositionCheck {
    /// lambda|B1|...|Bk|mu lies in P_K.
    bool in_pk = false;
    /// lambda in P(K|0_C), mu in P(K|1_D), and every middle cube lies in K.
    bool factored = false;
    bool agree() const { return in_pk == factored; }
};

CompositionCheck check_composition(const CubicalComplex& k,
                                   const OrderedPartition& lambda,
                                   const std::vector<LabelMask>& middle,
                                   const OrderedPartition& mu);

} // namespace dipath

#endif
