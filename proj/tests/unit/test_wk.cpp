#include "dipath/wk.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace dipath;

namespace {

CubicalComplex square_minus_cell()
{
    return CubicalComplex::full(LabelSet::numbered(2)).without(std::vector<Cube>{Cube{0, 0b11}});
}

std::vector<std::string> names(const CriticalCells& cells, const LabelSet& labels)
{
    std::vector<std::string> out;
    for (const auto& bucket : cells)
        for (const OrderedPartition& p : bucket)
            out.push_back(to_string(p, labels));
    return out;
}

} // namespace

TEST_CASE("tau and kappa")
{
    CHECK(tau(0b101) == OrderedPartition{{0b001, 0b100}});
    CHECK(kappa(0b111) == OrderedPartition{{0b100, 0b011}});
    CHECK(tau(0) == OrderedPartition{});
}

TEST_CASE("full cube has a single critical cell")
{
    for (std::size_t n = 0; n <= 4; ++n) {
        CubicalComplex const k = CubicalComplex::full(LabelSet::numbered(n));
        WkField const w = build_wk(k);
        CHECK(is_gradient(w.field));
        CriticalCells const c = critical_partitions(w);
        REQUIRE(counts(c) == std::vector<std::size_t>{1});
        CHECK(c[0][0] == tau(low_mask(n)));
    }
}

TEST_CASE("2-skeleton of the 3-cube")
{
    CubicalComplex const k = skeleton(CubicalComplex::full(LabelSet::numbered(3)), 2);
    WkField const w = build_wk(k);
    CHECK(is_gradient(w.field));
    CriticalCells const c = critical_partitions(w);
    CHECK(names(c, k.labels()) == std::vector<std::string>{"1|2|3", "3|1,2"});
    CHECK(critical_inductive(k) == c);
    CHECK(critical_from_sequences(enumerate_critical_sequences(k)) == c);
}

TEST_CASE("square minus its 2-cell")
{
    CubicalComplex const k = square_minus_cell();
    WkField const w = build_wk(k);
    CHECK(names(critical_partitions(w), k.labels()) == std::vector<std::string>{"1|2", "2|1"});
    REQUIRE(w.branching.size() == 1);
    CHECK(w.branching[0] == BranchingSequence{0, 0b01, 0});
    CHECK(w.field.size() == 0);
}

TEST_CASE("empty path space")
{
    CubicalComplex const cut =
        CubicalComplex::full(LabelSet::numbered(2)).without(std::vector<Cube>{Cube{0b01, 0}, Cube{0b10, 0}});
    CHECK(build_wk(cut).poset.empty());
    CHECK(enumerate_critical_sequences(cut).empty());
    CHECK(critical_inductive(cut).empty());
}

TEST_CASE("critical sequences of the 2-skeleton")
{
    CubicalComplex const k = skeleton(CubicalComplex::full(LabelSet::numbered(3)), 2);
    std::vector<CriticalSequence> const seqs = enumerate_critical_sequences(k);
    REQUIRE(seqs.size() == 2);
    std::set<std::string> text;
    for (const CriticalSequence& cs : seqs) {
        CHECK(is_critical_sequence(ComplexView(k), cs));
        text.insert(to_string(cs, k.labels()));
    }
    CHECK(text == std::set<std::string>{"E=[];F=[{1,2,3}]", "E=[{1,2,3}];F=[{} {}]"});
    // Condition on the maxima fails.
    CHECK_FALSE(is_critical_sequence(ComplexView(k), CriticalSequence{{0b011}, {0b100, 0}}));
}

TEST_CASE("property: W_K is a gradient covering P_K")
{
    oracle::Rng rng(101);
    for (int trial = 0; trial < 150; ++trial) {
        CubicalComplex const k = oracle::random_subcomplex(1 + rng.below(4), rng);
        WkField const w = build_wk(k);
        CHECK(w.poset.size() == oracle::brute_pk(k).size());
        CHECK(is_gradient(w.field));
        CHECK(oracle::hasse_acyclic(w.field));
        CHECK(w.field.size() == w.m_part.size() + w.r_part.size() + w.y_part.size());
        for (const auto& part : {w.m_part, w.r_part, w.y_part})
            for (const auto& [a, b] : part) {
                CHECK(a.dim() + 1 == b.dim());
                CHECK(refines(a, b));
            }
        // Euler characteristic is carried by the critical cells.
        long long chi = 0;
        std::vector<std::size_t> const c = counts(critical_partitions(w));
        for (std::size_t d = 0; d < c.size(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c[d]);
        long long cells = 0;
        for (const OrderedPartition& p : w.poset.cells())
            cells += p.dim() % 2 == 0 ? 1 : -1;
        CHECK(chi == cells);
    }
}

TEST_CASE("property: three descriptions of the critical cells agree")
{
    oracle::Rng rng(202);
    for (int trial = 0; trial < 150; ++trial) {
        CubicalComplex const k = oracle::random_subcomplex(1 + rng.below(4), rng);
        CriticalCells const a = critical_partitions(build_wk(k));
        CriticalCells const b = critical_inductive(k);
        std::vector<CriticalSequence> const seqs = enumerate_critical_sequences(k);
        CriticalCells const c = critical_from_sequences(seqs);
        CHECK(a == b);
        CHECK(b == c);
        for (const CriticalSequence& cs : seqs) {
            CHECK(is_critical_sequence(ComplexView(k), cs));
            CHECK(sigma(cs).dim() == cs.dim());
        }
    }
}
