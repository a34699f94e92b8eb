#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

using namespace dipath;

CubicalComplex random_subcomplex(std::size_t n, Rng& rng)
{
    LabelSet const labels = LabelSet::numbered(n);
    CubicalComplex const full = CubicalComplex::full(labels);
    std::vector<Cube> cells;
    for (const Cube& c : full.cubes())
        if (c.dim() > 0)
            cells.push_back(c);
    if (rng.below(4) == 0) {
        std::vector<Cube> gens;
        std::size_t const m = 1 + rng.below(4);
        for (std::size_t i = 0; i < m; ++i)
            gens.push_back(cells[rng.below(cells.size())]);
        return CubicalComplex::from_generators(labels, gens);
    }
    std::vector<Cube> holes;
    std::size_t const m = rng.below(n + 1);
    for (std::size_t i = 0; i < m; ++i)
        holes.push_back(cells[rng.below(cells.size())]);
    return full.without(holes);
}

EuclideanComplex random_euclidean(const Point& k, Rng& rng, std::size_t max_holes)
{
    EuclideanComplex const box = EuclideanComplex::box(k);
    std::vector<ElementaryCube> cells;
    for (const ElementaryCube& c : box.cubes())
        if (c.dim() > 0)
            cells.push_back(c);
    std::vector<ElementaryCube> holes;
    std::size_t const m = rng.below(max_holes + 1);
    for (std::size_t i = 0; i < m; ++i)
        holes.push_back(cells[rng.below(cells.size())]);
    return box.without(holes);
}

EuclideanComplex random_sandwich(const Point& k, Rng& rng)
{
    EuclideanComplex const box = EuclideanComplex::box(k);
    auto const n = static_cast<int>(k.size());
    std::vector<ElementaryCube> holes;
    for (const ElementaryCube& c : box.cubes())
        if (c.dim() == n && rng.below(2) == 0)
            holes.push_back(c);
    return box.without(holes);
}

std::vector<OrderedPartition> all_partitions(LabelMask support)
{
    std::vector<int> const elems = indices(support);
    std::size_t const n = elems.size();
    std::vector<OrderedPartition> out;
    std::vector<std::size_t> block(n, 0);
    // Enumerate every map elems -> {0..n-1} and keep the surjections onto an
    // initial segment.
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            std::size_t const top = n == 0 ? 0 : *std::max_element(block.begin(), block.end()) + 1;
            std::vector<LabelMask> blocks(top, 0);
            for (std::size_t j = 0; j < n; ++j)
                blocks[block[j]] |= bit(elems[j]);
            for (LabelMask const b : blocks)
                if (b == 0)
                    return;
            out.push_back(OrderedPartition{blocks});
            return;
        }
        for (std::size_t b = 0; b < n; ++b) {
            block[i] = b;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

bool chain_in(const CubicalComplex& k, const OrderedPartition& lambda)
{
    if (lambda.blocks.empty())
        return k.contains(Cube{0, 0});
    LabelMask ones = 0;
    for (LabelMask const b : lambda.blocks) {
        if (!k.contains(Cube{ones, b}))
            return false;
        ones |= b;
    }
    return true;
}

std::vector<OrderedPartition> brute_pk(const CubicalComplex& k)
{
    std::vector<OrderedPartition> out;
    for (const OrderedPartition& p : all_partitions(k.labels().all()))
        if (chain_in(k, p))
            out.push_back(p);
    return out;
}

std::uint64_t fubini(int n)
{
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::uint64_t binom = 1;
        for (int j = 1; j <= m; ++j) {
            binom = binom * static_cast<std::uint64_t>(m - j + 1) / static_cast<std::uint64_t>(j);
            a[static_cast<std::size_t>(m)] += binom * a[static_cast<std::size_t>(m - j)];
        }
    }
    return a[static_cast<std::size_t>(n)];
}

bool hasse_acyclic(const DiscreteVectorField& v)
{
    const FinitePoset& p = v.host();
    std::size_t const n = p.size();
    std::vector<std::vector<CellId>> out(n);
    std::vector<std::size_t> indeg(n, 0);
    for (CellId b = 0; b < n; ++b)
        for (CellId const a : p.facets(b)) {
            if (v.contains(a, b)) {
                out[a].push_back(b);
                ++indeg[b];
            } else {
                out[b].push_back(a);
                ++indeg[a];
            }
        }
    std::vector<CellId> queue;
    for (CellId c = 0; c < n; ++c)
        if (indeg[c] == 0)
            queue.push_back(c);
    std::size_t seen = 0;
    while (!queue.empty()) {
        CellId const c = queue.back();
        queue.pop_back();
        ++seen;
        for (CellId const d : out[c])
            if (--indeg[d] == 0)
                queue.push_back(d);
    }
    return seen == n;
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p)
{
    auto const pw = [p](std::int64_t b, std::int64_t e) {
        std::int64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1)
                r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t const rows = a.size();
    std::size_t const cols = rows ? a[0].size() : 0;
    for (auto& row : a)
        for (auto& x : row)
            x = ((x % p) + p) % p;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[rank], a[piv]);
        std::int64_t const inv = pw(a[rank][c], p - 2);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0)
                continue;
            std::int64_t const f = a[r][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j)
                a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<std::vector<std::int64_t>> dense_boundary(const SimplicialComplexRecord& sc, int d)
{
    std::vector<std::vector<std::int64_t>> m(sc.count(d - 1), std::vector<std::int64_t>(sc.count(d), 0));
    for (std::size_t j = 0; j < sc.count(d); ++j) {
        auto const s = sc.simplex(d, j);
        for (int skip = 0; skip <= d; ++skip) {
            std::vector<std::uint32_t> face;
            for (int i = 0; i <= d; ++i)
                if (i != skip)
                    face.push_back(s[static_cast<std::size_t>(i)]);
            m[*sc.find(face)][j] = skip % 2 == 0 ? 1 : -1;
        }
    }
    return m;
}

} // namespace

std::vector<long long> betti_mod_p(const SimplicialComplexRecord& sc, std::int64_t p, int max_dim)
{
    int const top = std::min(max_dim, sc.top_dim());
    std::vector<std::size_t> rank(static_cast<std::size_t>(std::max(top, 0)) + 2, 0);
    for (int d = 1; d <= std::min(top + 1, sc.top_dim()); ++d)
        rank[static_cast<std::size_t>(d)] = rank_mod_p(dense_boundary(sc, d), p);
    std::vector<long long> out;
    for (int d = 0; d <= top; ++d)
        out.push_back(static_cast<long long>(sc.count(d)) - static_cast<long long>(rank[static_cast<std::size_t>(d)]) -
                      static_cast<long long>(rank[static_cast<std::size_t>(d) + 1]));
    return out;
}

long long chain_euler(const FinitePoset& p)
{
    // f[c] = sum over chains starting at c of (-1)^(length - 1).
    std::vector<long long> f(p.size(), 0);
    std::vector<CellId> order = p.linear_extension();
    std::reverse(order.begin(), order.end());
    long long total = 0;
    for (CellId const c : order) {
        long long v = 1;
        for (CellId const d : p.strictly_above(c))
            v -= f[d];
        f[c] = v;
        total += v;
    }
    return total;
}

} // namespace oracle
