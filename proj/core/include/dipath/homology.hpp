#ifndef DIPATH_HOMOLOGY_HPP
#define DIPATH_HOMOLOGY_HPP

#include "dipath/cubical.hpp"
#include "dipath/euclid.hpp"
#include "dipath/poset.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dipath {

using BigInt = boost::multiprecision::cpp_int;

/// A sparse integer matrix stored by columns; each column lists
/// (row, value) pairs with nonzero values and distinct rows.
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;

    std::size_t cols() const { return columns.size(); }
};

/// The nonzero invariant factors d_1 | d_2 | ... of the matrix, positive.
/// Their number is the rank.
std::vector<BigInt> invariant_factors(const SparseIntMatrix& m);

/// Boundary matrix from d-simplices to (d-1)-simplices of the complex.
SparseIntMatrix boundary_matrix(const SimplicialComplexRecord& sc, int d);

/// Integral homology. betti[d] is the rank of H_d; torsion lists (d, order)
/// for each cyclic torsion summand.
struct BettiReport {
    std::vector<long long> betti;
    std::vector<std::pair<int, BigInt>> torsion;
    /// "gap-exact", "oracle" or "bounds-only".
    std::string method = "oracle";
};

struct BettiOptions {
    /// Compute H_d for d <= max_dim only.
    std::optional<int> max_dim;
    /// Throw ResourceError when the complex has more simplices.
    std::size_t max_simplices = 10000;
};

BettiReport betti(const SimplicialComplexRecord& sc, const BettiOptions& options = {});

/// Homology of the order complex of a poset, building only the simplices
/// needed for the requested dimensions.
BettiReport order_complex_betti(const FinitePoset& p, const BettiOptions& options = {});

/// q -> b(n,s,q): critical sequences of the s-skeleton of the n-cube, all
/// E-blocks of size s+1. Requires 0 < s <= n.
std::map<int, std::uint64_t> conf_counts(int n, int s);

/// q -> number of critical routes in the s-skeleton of [0,k] whose blocks all
/// have dimension s+1. Requires s > 0.
std::map<int, std::uint64_t> generalized_conf_counts(const Point& k, int s);

struct HomologyReport {
    BettiReport homology;
    /// Number of critical cells of W_K per dimension.
    std::vector<std::size_t> critical_counts;
    /// The oracle, when it was run.
    std::optional<BettiReport> oracle;
    std::vector<std::string> notes;
};

/// If no two critical dimensions are consecutive, homology is free on the
/// critical cells ("gap-exact"). Otherwise the critical counts only bound the
/// ranks; the oracle is added when the order complex fits in the cap
/// ("oracle"), else the report is "bounds-only".
HomologyReport homology_report(const CubicalComplex& k, std::size_t max_simplices = 10000);
HomologyReport homology_report(const EuclideanComplex& k, std::size_t max_simplices = 10000);

} // namespace dipath

#endif
