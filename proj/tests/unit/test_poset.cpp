#include "dipath/error.hpp"
#include "dipath/poset.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <bit>

using namespace dipath;

namespace {

// Random subsets of {0..5} ordered by strict inclusion, graded by size.
FinitePoset random_subset_poset(oracle::Rng& rng, std::vector<std::uint32_t>& masks)
{
    masks.clear();
    std::size_t const n = 3 + rng.below(10);
    while (masks.size() < n) {
        auto const m = static_cast<std::uint32_t>(rng.below(64));
        if (std::find(masks.begin(), masks.end(), m) == masks.end())
            masks.push_back(m);
    }
    std::vector<int> dims;
    for (std::uint32_t const m : masks)
        dims.push_back(std::popcount(m));
    return FinitePoset::from_order(dims, [&masks](CellId a, CellId b) {
        return masks[a] != masks[b] && (masks[a] & masks[b]) == masks[a];
    });
}

} // namespace

TEST_CASE("chain poset")
{
    FinitePoset const p({0, 1, 2}, {{0, 1}, {1, 2}}, {"a", "b", "c"});
    CHECK(p.less(0, 2));
    CHECK_FALSE(p.less(2, 0));
    CHECK(p.less_equal(1, 1));
    CHECK(p.facets(2).size() == 1);
    CHECK(*p.find("c") == 2);
    CHECK(p.max_dim() == 2);
    CHECK(p.strictly_above(0) == std::vector<CellId>{1, 2});
}

TEST_CASE("from_order takes the transitive reduction")
{
    FinitePoset const p = FinitePoset::from_order({0, 1, 2}, [](CellId a, CellId b) { return a < b; });
    CHECK(p.covers_below(2).size() == 1);
    CHECK(p.less(0, 2));
}

TEST_CASE("invalid covers are rejected")
{
    CHECK_THROWS_AS(FinitePoset({0, 1}, {{0, 1}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(FinitePoset({1, 1}, {{0, 1}}), ValidationError);
}

TEST_CASE("order complex of an interval")
{
    // Face poset of [0,1]: two vertices below an edge.
    FinitePoset const p({0, 0, 1}, {{0, 2}, {1, 2}});
    SimplicialComplexRecord const sc = order_complex(p);
    CHECK(sc.count(0) == 3);
    CHECK(sc.count(1) == 2);
    CHECK(sc.euler_characteristic() == 1);
    CHECK(order_complex_euler_characteristic(p) == 1);
    CHECK(chain_counts(p) == std::vector<std::uint64_t>{3, 2});
}

TEST_CASE("order complex caps")
{
    FinitePoset const p = FinitePoset::from_order({0, 1, 2, 3}, [](CellId a, CellId b) { return a < b; });
    OrderComplexOptions cap;
    cap.max_simplices = 5;
    CHECK_THROWS_AS(order_complex(p, cap), ResourceError);
    OrderComplexOptions low;
    low.max_dim = 1;
    SimplicialComplexRecord const sc = order_complex(p, low);
    CHECK(sc.top_dim() == 1);
    CHECK(sc.truncated);
}

TEST_CASE("hollow triangle from facets")
{
    auto const sc = SimplicialComplexRecord::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(sc.is_face_closed());
    CHECK(sc.euler_characteristic() == 0);
    std::vector<std::uint32_t> const e{0, 2};
    CHECK(sc.find(e).has_value());
}

TEST_CASE("product poset")
{
    FinitePoset const p({0, 0, 1}, {{0, 2}, {1, 2}});
    FinitePoset const sq = product(p, p);
    CHECK(sq.size() == 9);
    CHECK(sq.dim(product_id(p, 2, 2)) == 2);
    CHECK(sq.facets(product_id(p, 2, 2)).size() == 4);
    CHECK(order_complex_euler_characteristic(sq) == 1);
}

TEST_CASE("property: order complexes of random posets")
{
    oracle::Rng rng(11);
    std::vector<std::uint32_t> masks;
    for (int trial = 0; trial < 150; ++trial) {
        FinitePoset const p = random_subset_poset(rng, masks);
        SimplicialComplexRecord const sc = order_complex(p);
        CHECK(sc.is_face_closed());
        long long const chi = oracle::chain_euler(p);
        CHECK(sc.euler_characteristic() == chi);
        CHECK(order_complex_euler_characteristic(p) == chi);
        std::uint64_t chains = 0;
        for (std::uint64_t const c : chain_counts(p))
            chains += c;
        CHECK(chains == sc.total());

        std::vector<CellId> subset;
        for (CellId c = 0; c < p.size(); ++c)
            if (rng.below(3) == 0)
                subset.push_back(c);
        std::vector<CellId> const closed = down_closure(p, subset);
        CHECK(is_closed_subposet(p, closed));
        for (CellId const c : subset)
            CHECK(std::binary_search(closed.begin(), closed.end(), c));
    }
}

TEST_CASE("property: linear extension respects the order")
{
    oracle::Rng rng(5);
    std::vector<std::uint32_t> masks;
    for (int trial = 0; trial < 50; ++trial) {
        FinitePoset const p = random_subset_poset(rng, masks);
        std::vector<std::size_t> pos(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            pos[p.linear_extension()[i]] = i;
        for (CellId a = 0; a < p.size(); ++a)
            for (CellId b = 0; b < p.size(); ++b) {
                bool const expect = masks[a] != masks[b] && (masks[a] & masks[b]) == masks[a];
                CHECK(p.less(a, b) == expect);
                if (expect)
                    CHECK(pos[a] < pos[b]);
            }
    }
}
