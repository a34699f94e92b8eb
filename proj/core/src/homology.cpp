#include "dipath/homology.hpp"

#include "dipath/error.hpp"
#include "dipath/partitions.hpp"
#include "dipath/wk.hpp"

#include <algorithm>
#include <functional>

namespace dipath {

SparseIntMatrix boundary_matrix(const SimplicialComplexRecord& sc, int d)
{
    SparseIntMatrix m;
    if (d <= 0 || d > sc.top_dim()) {
        m.rows = d <= 0 ? 0 : sc.count(d - 1);
        m.columns.resize(d <= 0 ? sc.count(0) : 0);
        return m;
    }
    m.rows = sc.count(d - 1);
    m.columns.resize(sc.count(d));
    std::vector<std::uint32_t> face;
    for (std::size_t j = 0; j < sc.count(d); ++j) {
        auto const s = sc.simplex(d, j);
        auto& col = m.columns[j];
        for (int skip = 0; skip <= d; ++skip) {
            face.clear();
            for (int i = 0; i <= d; ++i)
                if (i != skip)
                    face.push_back(s[static_cast<std::size_t>(i)]);
            auto const row = sc.find(face);
            if (!row)
                throw ValidationError("boundary_matrix: simplicial complex is not face-closed");
            col.emplace_back(static_cast<std::uint32_t>(*row), skip % 2 == 0 ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
    }
    return m;
}

BettiReport betti(const SimplicialComplexRecord& sc, const BettiOptions& options)
{
    if (sc.total() > options.max_simplices)
        throw ResourceError("complex has " + std::to_string(sc.total()) + " simplices, cap is " +
                            std::to_string(options.max_simplices));
    BettiReport out;
    out.method = "oracle";
    int top = sc.truncated ? sc.top_dim() - 1 : sc.top_dim();
    if (options.max_dim)
        top = std::min(top, *options.max_dim);
    if (top < 0)
        return out;

    // rank[d] = rank of the boundary map from d-simplices.
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(top) + 2);
    for (int d = 1; d <= std::min(top + 1, sc.top_dim()); ++d) {
        factors[static_cast<std::size_t>(d)] = invariant_factors(boundary_matrix(sc, d));
        rank[static_cast<std::size_t>(d)] = factors[static_cast<std::size_t>(d)].size();
    }
    for (int d = 0; d <= top; ++d) {
        auto const n = static_cast<long long>(sc.count(d));
        out.betti.push_back(n - static_cast<long long>(rank[static_cast<std::size_t>(d)]) -
                            static_cast<long long>(rank[static_cast<std::size_t>(d) + 1]));
        for (const BigInt& f : factors[static_cast<std::size_t>(d) + 1])
            if (f > 1)
                out.torsion.emplace_back(d, f);
    }
    return out;
}

BettiReport order_complex_betti(const FinitePoset& p, const BettiOptions& options)
{
    OrderComplexOptions oc;
    if (options.max_dim)
        oc.max_dim = *options.max_dim + 1;
    oc.max_simplices = options.max_simplices;
    return betti(order_complex(p, oc), options);
}

std::map<int, std::uint64_t> conf_counts(int n, int s)
{
    if (n < 0 || n > 20 || s <= 0 || s > n)
        throw ArgumentError("conf_counts: need 0 < s <= n <= 20");
    std::map<int, std::uint64_t> out;
    LabelMask const all = low_mask(static_cast<std::size_t>(n));
    int q = 0;
    // Alternate an arbitrary F block with an E block of size s + 1 whose
    // maximum exceeds the maximum of the F block before it.
    std::function<void(LabelMask)> rec = [&](LabelMask rest) {
        for (LabelMask f = rest;; f = (f - 1) & rest) {
            LabelMask const rest2 = rest & ~f;
            if (rest2 == 0) {
                ++out[q];
            } else {
                int const fmax = max_index(f);
                for (LabelMask e = rest2; e; e = (e - 1) & rest2) {
                    if (popcount(e) != s + 1 || max_index(e) < fmax)
                        continue;
                    ++q;
                    rec(rest2 & ~e);
                    --q;
                }
            }
            if (f == 0)
                break;
        }
    };
    rec(all);
    return out;
}

std::map<int, std::uint64_t> generalized_conf_counts(const Point& k, int s)
{
    if (s <= 0)
        throw ArgumentError("generalized_conf_counts: need s > 0");
    EuclideanComplex const sk = skeleton(EuclideanComplex::box(k), s);
    std::map<int, std::uint64_t> out;
    for (const CriticalRoute& r : enumerate_critical_routes(sk)) {
        bool all_full = true;
        for (std::size_t j = 1; j < r.b.size(); ++j) {
            int d = 0;
            for (std::size_t i = 0; i < k.size(); ++i)
                d += r.b[j][i] - r.a[j - 1][i];
            if (d != s + 1)
                all_full = false;
        }
        if (all_full)
            ++out[static_cast<int>(r.q())];
    }
    return out;
}

HomologyReport homology_report(const CubicalComplex& k, std::size_t max_simplices)
{
    HomologyReport out;
    CriticalCells const crit = critical_from_sequences(enumerate_critical_sequences(k));
    out.critical_counts = counts(crit);
    if (crit.empty()) {
        out.homology.method = "gap-exact";
        out.notes.emplace_back("path space is empty");
        return out;
    }

    bool gap = true;
    int top = -1;
    for (std::size_t d = 0; d < out.critical_counts.size(); ++d) {
        if (out.critical_counts[d] == 0)
            continue;
        if (d > 0 && out.critical_counts[d - 1] > 0)
            gap = false;
        top = static_cast<int>(d);
    }

    if (gap) {
        out.homology.method = "gap-exact";
        for (std::size_t const c : out.critical_counts)
            out.homology.betti.push_back(static_cast<long long>(c));
        out.notes.emplace_back("exact via dimension gap: no critical cells in consecutive dimensions");
        return out;
    }

    out.notes.emplace_back("critical cells in consecutive dimensions: counts bound the ranks from above");
    try {
        PartitionPoset const pk = build_pk(k);
        BettiOptions opts;
        opts.max_dim = top;
        opts.max_simplices = max_simplices;
        out.oracle = order_complex_betti(pk.poset(), opts);
        out.homology = *out.oracle;
        out.homology.method = "oracle";
        out.notes.emplace_back("homology computed from the order complex of P_K");
    } catch (const ResourceError& e) {
        out.homology.method = "bounds-only";
        for (std::size_t const c : out.critical_counts)
            out.homology.betti.push_back(static_cast<long long>(c));
        out.notes.emplace_back(std::string("oracle skipped: ") + e.what());
    }
    return out;
}

HomologyReport homology_report(const EuclideanComplex& k, std::size_t max_simplices)
{
    return homology_report(embed(k), max_simplices);
}

} // namespace dipath
