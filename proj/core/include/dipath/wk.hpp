#ifndef DIPATH_WK_HPP
#define DIPATH_WK_HPP

#include "dipath/cubical.hpp"
#include "dipath/morse.hpp"
#include "dipath/partitions.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace dipath {

/// b1|b2|...|bl with b1 < ... < bl. Empty for the empty set.
OrderedPartition tau(LabelMask b);

/// bl|{b1,...,b(l-1)}. Throws ArgumentError if #B < 2.
OrderedPartition kappa(LabelMask b);

/// A triple (C, B, D) partitioning A' with B nonempty such that the cube
/// c(C, m u B, D) is missing while c(C, m, B u D) and c(C u m, B, D) are present.
struct BranchingSequence {
    LabelMask c = 0;
    LabelMask b = 0;
    LabelMask d = 0;

    friend bool operator==(const BranchingSequence&, const BranchingSequence&) = default;
    friend auto operator<=>(const BranchingSequence&, const BranchingSequence&) = default;
};

/// All branching sequences of the view, sorted.
std::vector<BranchingSequence> branching_sequences(const ComplexView& view);
std::vector<BranchingSequence> branching_sequences(const CubicalComplex& k);

using PartitionPair = std::pair<OrderedPartition, OrderedPartition>;

/// The gradient field W_K on P_K together with its three components.
struct WkField {
    PartitionPoset poset;
    DiscreteVectorField field;
    /// W_{K|0_{A'}} suffixed by m, present when the edge c(A', m, {}) is in K.
    std::vector<PartitionPair> m_part;
    /// Pairs (pi|m|B|rho, pi|m u B|rho) with cofacet in P_K.
    std::vector<PartitionPair> r_part;
    /// The fields on the branch regions of the branching sequences.
    std::vector<PartitionPair> y_part;
    std::vector<BranchingSequence> branching;
};

WkField build_wk(const CubicalComplex& k);
WkField build_wk(const ComplexView& view);

/// Partitions bucketed by dimension; each bucket sorted.
using CriticalCells = std::vector<std::vector<OrderedPartition>>;

CriticalCells bucket_by_dim(std::vector<OrderedPartition> cells);

/// Crit(W_K) read off the materialized field.
CriticalCells critical_partitions(const WkField& w);

/// Crit(W_K) from the inductive formula, without building the field.
CriticalCells critical_inductive(const CubicalComplex& k);
CriticalCells critical_inductive(const ComplexView& view);

/// ((E_1..E_q), (F_0..F_q)).
struct CriticalSequence {
    std::vector<LabelMask> e;
    std::vector<LabelMask> f;

    std::size_t q() const { return e.size(); }
    /// Sum of (#E_j - 2).
    int dim() const;

    friend bool operator==(const CriticalSequence&, const CriticalSequence&) = default;
    friend auto operator<=>(const CriticalSequence&, const CriticalSequence&) = default;
};

/// tau(F_0)|kappa(E_1)|tau(F_1)|...|kappa(E_q)|tau(F_q).
OrderedPartition sigma(const CriticalSequence& cs);

/// All critical sequences of the view, sorted.
std::vector<CriticalSequence> enumerate_critical_sequences(const ComplexView& view);
std::vector<CriticalSequence> enumerate_critical_sequences(const CubicalComplex& k);

/// Checks the defining conditions of a critical sequence against the view.
bool is_critical_sequence(const ComplexView& view, const CriticalSequence& cs);

/// sigma of every critical sequence, bucketed.
CriticalCells critical_from_sequences(const std::vector<CriticalSequence>& seqs);

/// Number of cells per dimension.
std::vector<std::size_t> counts(const CriticalCells& cells);

/// "E=[..];F=[..]" with label names.
std::string to_string(const CriticalSequence& cs, const LabelSet& labels);

} // namespace dipath

#endif
