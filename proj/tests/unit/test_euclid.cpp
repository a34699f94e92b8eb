#include "dipath/error.hpp"
#include "dipath/euclid.hpp"
#include "dipath/wk.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace dipath;

namespace {

ElementaryCube ec(Point a, Point b)
{
    return ElementaryCube::make(std::move(a), std::move(b));
}

EuclideanComplex figure()
{
    return EuclideanComplex::box({5, 4}).without({ec({2, 0}, {3, 1}), ec({3, 1}, {4, 2}), ec({1, 2}, {2, 3}),
                                                  ec({1, 3}, {2, 4}), ec({1, 3}, {2, 3}), ec({2, 0}, {3, 0})});
}

std::vector<std::size_t> route_counts(const std::vector<CriticalRoute>& routes)
{
    std::vector<std::size_t> out;
    for (const CriticalRoute& r : routes) {
        auto const d = static_cast<std::size_t>(r.dim());
        if (out.size() <= d)
            out.resize(d + 1, 0);
        ++out[d];
    }
    return out;
}

} // namespace

TEST_CASE("elementary cubes")
{
    ElementaryCube const c = ec({1, 0}, {2, 1});
    CHECK(c.dim() == 2);
    CHECK(c.dir() == 0b11);
    CHECK(is_face(ec({2, 0}, {2, 1}), c));
    CHECK_FALSE(is_face(ec({0, 0}, {1, 0}), c));
    CHECK_THROWS_AS(ec({0, 0}, {2, 0}), ArgumentError);
    CHECK_THROWS_AS(ec({0}, {0, 0}), ArgumentError);
}

TEST_CASE("box labels and embedding")
{
    Point const k{2, 1};
    CHECK(box_labels(k).names() == std::vector<std::string>{"1.1", "1.2", "2.1"});
    CHECK(box_label_index(k, 2, 1) == 2);
    CHECK(format_word(embed_cube(k, ec({1, 0}, {2, 1})), 3) == "1**");
    CHECK(format_word(embed_cube(k, ec({0, 1}, {0, 1})), 3) == "001");
    CHECK(format_word(embed_cube(k, ec({2, 1}, {2, 1})), 3) == "111");
}

TEST_CASE("box size")
{
    EuclideanComplex const b = EuclideanComplex::box({2, 1});
    CHECK(b.size() == 15);
    CHECK(b.max_dim() == 2);
    CHECK(b.is_face_closed());
    CHECK_THROWS_AS(EuclideanComplex({1, 1}, {ec({1, 1}, {2, 1})}), ArgumentError);
}

TEST_CASE("multiset partitions")
{
    Point const k{2, 1};
    LabelSet const l = box_labels(k);
    OrderedPartition const lambda = parse_partition("1.1|1.2,2.1", l);
    MultisetPartition const mu = project(lambda, k);
    REQUIRE(mu.blocks.size() == 2);
    CHECK(mu.blocks[0] == Point{1, 0});
    CHECK(mu.blocks[1] == Point{1, 1});
    CHECK(mu.proper());
    CHECK(lift(mu, k) == lambda);
    CHECK(respects_box_order(lambda, k));
    CHECK_FALSE(respects_box_order(parse_partition("1.2|1.1,2.1", l), k));
}

TEST_CASE("minimal line moves the first coordinate first")
{
    std::vector<ElementaryCube> const cubes = minimal_line_cubes({0, 0}, {2, 1});
    std::set<ElementaryCube> const got(cubes.begin(), cubes.end());
    std::set<ElementaryCube> const edges{ec({0, 0}, {1, 0}), ec({1, 0}, {2, 0}), ec({2, 0}, {2, 1})};
    for (const ElementaryCube& e : edges)
        CHECK(got.count(e) == 1);
    std::size_t ones = 0;
    for (const ElementaryCube& c : cubes)
        ones += c.dim() == 1 ? 1 : 0;
    CHECK(ones == 3);
    CHECK(minimal_line({0, 0}, {2, 1}).size() == 7);
}

TEST_CASE("full box has one route")
{
    std::vector<CriticalRoute> const r = enumerate_critical_routes(EuclideanComplex::box({2, 3}));
    REQUIRE(r.size() == 1);
    CHECK(r[0].q() == 0);
    CHECK(r[0].dim() == 0);
}

TEST_CASE("figure complex routes")
{
    EuclideanComplex const k = figure();
    std::vector<CriticalRoute> const routes = enumerate_critical_routes(k);
    std::set<std::string> got;
    for (const CriticalRoute& r : routes) {
        CHECK(r.dim() == 0);
        CHECK(is_critical_route(k, r));
        got.insert(to_string(r));
    }
    std::set<std::string> const expect{
        to_string(CriticalRoute{{{1, 3}, {5, 4}}, {{0, 0}, {2, 4}}}),
        to_string(CriticalRoute{{{2, 0}, {3, 1}, {5, 4}}, {{0, 0}, {3, 1}, {4, 2}}}),
        to_string(CriticalRoute{{{2, 0}, {5, 4}}, {{0, 0}, {3, 1}}}),
    };
    CHECK(got == expect);
}

TEST_CASE("Swiss flag")
{
    EuclideanComplex const k = EuclideanComplex::box({3, 3}).without({ec({1, 1}, {2, 2})});
    std::vector<CriticalRoute> const routes = enumerate_critical_routes(k);
    CHECK(route_counts(routes) == std::vector<std::size_t>{2});
}

TEST_CASE("route and sequence conversions")
{
    EuclideanComplex const k = figure();
    for (const CriticalRoute& r : enumerate_critical_routes(k)) {
        CriticalSequence const cs = route_to_sequence(r, k);
        CHECK(cs.dim() == r.dim());
        CHECK(sequence_to_route(cs, k) == r);
    }
    CHECK_THROWS_AS(route_to_sequence(CriticalRoute{{{5, 4}}, {{0, 0}}}, figure()), ValidationError);
}

TEST_CASE("property: embedding commutes with faces")
{
    oracle::Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        Point const k = rng.below(2) ? Point{2, 2, 1} : Point{3, 2};
        EuclideanComplex const e = oracle::random_euclidean(k, rng);
        CubicalComplex const c = embed(e);
        CHECK(c.size() == e.size());
        CHECK(validate(c));
        for (const ElementaryCube& x : e.cubes()) {
            Cube const w = embed_cube(k, x);
            CHECK(w.dim() == x.dim());
            for (const ElementaryCube& y : e.cubes())
                CHECK(is_face(y, x) == is_face(embed_cube(k, y), w));
        }
    }
}

TEST_CASE("property: routes match critical sequences")
{
    oracle::Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        Point const k = rng.below(2) ? Point{2, 2, 2} : Point{3, 2};
        EuclideanComplex const e = oracle::random_euclidean(k, rng, 4);
        std::vector<CriticalRoute> const routes = enumerate_critical_routes(e);
        std::vector<CriticalSequence> const seqs = enumerate_critical_sequences(embed(e));
        CHECK(routes.size() == seqs.size());
        std::set<CriticalSequence> images;
        for (const CriticalRoute& r : routes) {
            CriticalSequence const cs = route_to_sequence(r, e);
            CHECK(cs.dim() == r.dim());
            CHECK(sequence_to_route(cs, e) == r);
            images.insert(cs);
        }
        CHECK(images == std::set<CriticalSequence>(seqs.begin(), seqs.end()));
    }
}

TEST_CASE("property: sandwich routes")
{
    oracle::Rng rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        Point const k = rng.below(2) ? Point{3, 2} : Point{1, 2, 1, 1};
        EuclideanComplex const e = oracle::random_sandwich(k, rng);
        CHECK(in_sandwich(e));
        auto const n = static_cast<int>(k.size());
        for (const CriticalRoute& r : enumerate_critical_routes(e)) {
            CHECK(r.dim() == static_cast<int>(r.q()) * (n - 2));
            for (std::size_t j = 1; j <= r.q(); ++j)
                for (std::size_t i = 0; i < k.size(); ++i)
                    CHECK(r.a[j - 1][i] == r.b[j][i] - 1);
            std::vector<Point> const corners = cube_sequence_of_route(r, e);
            CHECK(route_of_cube_sequence(corners, e) == r);
        }
    }
    CHECK_THROWS_AS(cube_sequence_of_route(CriticalRoute{{{2, 2}}, {{0, 0}}}, figure()), PreconditionError);
}
