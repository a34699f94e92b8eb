// Acceptance checks 1-9. Usage: acceptance [criterion...]; prints one
// "criterion N: PASS|FAIL" line per criterion.

#include "dipath/euclid.hpp"
#include "dipath/homology.hpp"
#include "dipath/morse.hpp"
#include "dipath/partitions.hpp"
#include "dipath/wk.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace dipath;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail << "failed: " << what << "; ";
        }
    }
};

std::vector<long long> as_betti(const std::vector<std::size_t>& c)
{
    return {c.begin(), c.end()};
}

std::vector<std::size_t> trimmed(std::vector<std::size_t> c)
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
    return c;
}

std::vector<long long> trimmed(std::vector<long long> c)
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
    return c;
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

std::vector<CubicalComplex> corpus()
{
    oracle::Rng rng(2024);
    std::vector<CubicalComplex> out;
    for (int i = 0; i < 300; ++i)
        out.push_back(oracle::random_subcomplex(4, rng));
    return out;
}

ElementaryCube ec(Point a, Point b)
{
    return ElementaryCube::make(std::move(a), std::move(b));
}

void permutahedron_baseline(Outcome& o)
{
    std::vector<std::size_t> const sizes{1, 1, 3, 13, 75, 541};
    for (std::size_t n = 0; n < sizes.size(); ++n) {
        PermutahedronField const f = permutahedron_field(low_mask(n));
        o.require(f.poset.size() == sizes[n], "size of P_A");
        o.require(is_gradient(f.field), "gradient");
        o.require(f.field.size() == (sizes[n] - 1) / 2, "vector count");
        std::vector<CellId> const crit = critical_cells(f.field);
        o.require(crit.size() == 1, "one critical cell");
        if (crit.size() == 1)
            o.require(f.poset.cell(crit[0]) == tau(low_mask(n)) && f.poset.cell(crit[0]).dim() == 0,
                      "critical cell is 1|2|...|n");
    }
    o.detail << "|A| = 0..5";
}

void gradientness(Outcome& o)
{
    std::size_t nonempty = 0;
    std::vector<CubicalComplex> const ks = corpus();
    for (const CubicalComplex& k : ks) {
        o.require(validate(k), "corpus complex is face-closed");
        WkField const w = build_wk(k);
        nonempty += w.poset.empty() ? 0 : 1;
        o.require(is_gradient(w.field), "is_gradient(W_K)");
        o.require(oracle::hasse_acyclic(w.field), "modified Hasse diagram is acyclic");
    }
    o.detail << ks.size() << " complexes, " << nonempty << " with nonempty P_K";
}

void triple_agreement(Outcome& o)
{
    std::size_t cells = 0;
    for (const CubicalComplex& k : corpus()) {
        CriticalCells const a = critical_partitions(build_wk(k));
        CriticalCells const b = critical_inductive(k);
        CriticalCells const c = critical_from_sequences(enumerate_critical_sequences(k));
        o.require(a == b && b == c, "field, inductive and sequence critical cells coincide");
        for (const auto& bucket : c)
            cells += bucket.size();
    }
    o.detail << "300 complexes, " << cells << " critical cells";
}

void euler_and_morse(Outcome& o)
{
    std::size_t tested = 0;
    for (const CubicalComplex& k : corpus()) {
        PartitionPoset const pk = build_pk(k);
        if (pk.empty())
            continue;
        ++tested;
        std::vector<std::size_t> const c = counts(critical_from_sequences(enumerate_critical_sequences(k)));
        long long alt = 0;
        for (std::size_t d = 0; d < c.size(); ++d)
            alt += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c[d]);
        SimplicialComplexRecord const sc = order_complex(pk.poset());
        o.require(sc.euler_characteristic() == alt, "Euler characteristic");
        BettiOptions opts;
        opts.max_simplices = sc.total();
        BettiReport const r = betti(sc, opts);
        for (std::size_t d = 0; d < r.betti.size(); ++d)
            o.require(r.betti[d] <= static_cast<long long>(d < c.size() ? c[d] : 0), "Morse inequality");
    }
    o.detail << tested << " complexes with nonempty P_K";
}

void not_equal_spaces(Outcome& o)
{
    std::vector<std::pair<int, int>> const cases{{3, 2}, {4, 2}, {4, 3}, {5, 3}, {5, 4}, {6, 3}};
    for (auto const& [n, s] : cases) {
        CubicalComplex const k = skeleton(CubicalComplex::full(LabelSet::numbered(static_cast<std::size_t>(n))), s);
        std::vector<std::size_t> const c = trimmed(counts(critical_from_sequences(enumerate_critical_sequences(k))));
        std::map<int, std::uint64_t> const b = conf_counts(n, s);
        for (std::size_t d = 0; d < c.size(); ++d)
            if (c[d] > 0)
                o.require(static_cast<int>(d) % (s - 1) == 0, "critical dimensions are multiples of s-1");
        for (auto const& [q, cnt] : b)
            o.require(static_cast<std::size_t>(q * (s - 1)) < c.size() && c[static_cast<std::size_t>(q * (s - 1))] == cnt,
                      "critical counts equal b(n,s,q)");
        o.require(b.at(0) == 1, "b(n,s,0) = 1");
        o.detail << "(" << n << "," << s << "):";
        for (auto const& [q, cnt] : b)
            o.detail << " b" << q << "=" << cnt;
        if (s >= 3) {
            BettiOptions opts;
            opts.max_dim = static_cast<int>(c.size()) - 1;
            opts.max_simplices = 5'000'000;
            BettiReport const r = order_complex_betti(build_pk(k).poset(), opts);
            o.require(trimmed(r.betti) == as_betti(c), "oracle Betti numbers equal b(n,s,q)");
            o.require(r.torsion.empty(), "no torsion");
            o.detail << " [oracle ok]";
        }
        o.detail << "; ";
    }
    o.require(conf_counts(3, 2).at(1) == 1, "b(3,2,1) = 1");
}

void figure_complex(Outcome& o)
{
    EuclideanComplex const k =
        EuclideanComplex::box({5, 4}).without({ec({2, 0}, {3, 1}), ec({3, 1}, {4, 2}), ec({1, 2}, {2, 3}),
                                               ec({1, 3}, {2, 4}), ec({1, 3}, {2, 3}), ec({2, 0}, {3, 0})});
    std::vector<CriticalRoute> const routes = enumerate_critical_routes(k);
    o.require(routes.size() == 3, "exactly 3 routes");
    bool found = false;
    for (const CriticalRoute& r : routes) {
        o.require(r.dim() == 0, "all routes have dimension 0");
        if (r == CriticalRoute{{{1, 3}, {5, 4}}, {{0, 0}, {2, 4}}})
            found = true;
    }
    o.require(found, "route b0=(0,0), a1=(1,3), b1=(2,4), a2=(5,4) present");
    BettiOptions opts;
    opts.max_dim = 0;
    opts.max_simplices = 1'000'000;
    BettiReport const r = order_complex_betti(build_pk(embed(k)).poset(), opts);
    o.require(!r.betti.empty() && r.betti[0] == 3, "oracle b0 = 3");
    o.detail << routes.size() << " routes, oracle b0 = " << (r.betti.empty() ? -1 : r.betti[0]);
}

void route_bijection(Outcome& o)
{
    oracle::Rng rng(7);
    std::size_t routes_seen = 0;
    int const per_box = 30;
    for (const Point& box : {Point{2, 2, 2}, Point{3, 2}}) {
        for (int i = 0; i < per_box; ++i) {
            EuclideanComplex const e = oracle::random_euclidean(box, rng, 4);
            CubicalComplex const emb = embed(e);
            std::vector<CriticalRoute> const routes = enumerate_critical_routes(e);
            routes_seen += routes.size();
            for (const CriticalRoute& r : routes) {
                CriticalSequence const cs = route_to_sequence(r, e);
                o.require(is_critical_sequence(ComplexView(emb), cs), "image is a critical sequence");
                o.require(sequence_to_route(cs, e) == r, "sequence_to_route inverts route_to_sequence");
                o.require(cs.dim() == r.dim(), "dimension preserved");
            }
            for (const CriticalSequence& cs : enumerate_critical_sequences(emb))
                o.require(route_to_sequence(sequence_to_route(cs, e), e) == cs,
                          "route_to_sequence inverts sequence_to_route");
            std::vector<std::size_t> const crit = counts(critical_partitions(build_wk(emb)));
            o.require(trimmed(route_counts(routes)) == trimmed(crit), "per-dimension counts match Crit(W)");
        }
    }
    o.detail << 2 * per_box << " complexes, " << routes_seen << " routes";
}

void sandwich(Outcome& o)
{
    oracle::Rng rng(8);
    std::size_t routes_seen = 0;
    for (const Point& box : {Point{3, 2}, Point{2, 3}, Point{1, 1, 1, 1}, Point{2, 1, 1, 1}}) {
        auto const n = static_cast<int>(box.size());
        for (int i = 0; i < 10; ++i) {
            EuclideanComplex const e = oracle::random_sandwich(box, rng);
            o.require(in_sandwich(e), "sandwich complex");
            std::vector<CriticalRoute> const routes = enumerate_critical_routes(e);
            routes_seen += routes.size();
            for (const CriticalRoute& r : routes) {
                for (std::size_t j = 1; j <= r.q(); ++j)
                    for (std::size_t c = 0; c < box.size(); ++c)
                        o.require(r.a[j - 1][c] == r.b[j][c] - 1, "a^j = b^j - 1");
                o.require(r.dim() == static_cast<int>(r.q()) * (n - 2), "dimension q(n-2)");
                o.require(route_of_cube_sequence(cube_sequence_of_route(r, e), e) == r, "cube sequence round trip");
            }
            if (n == 4) {
                std::vector<std::size_t> const rc = trimmed(route_counts(routes));
                BettiOptions opts;
                opts.max_dim = static_cast<int>(rc.size()) - 1;
                opts.max_simplices = 5'000'000;
                BettiReport const b = order_complex_betti(build_pk(embed(e)).poset(), opts);
                o.require(trimmed(b.betti) == as_betti(rc), "oracle Betti numbers equal route counts");
                o.require(b.torsion.empty(), "no torsion");
            }
        }
    }
    o.detail << "40 complexes, " << routes_seen << " routes";
}

void swiss_square(Outcome& o)
{
    std::vector<EuclideanComplex> const cases{
        EuclideanComplex::box({3, 3}).without({ec({1, 1}, {2, 2})}),
        EuclideanComplex::box({2, 2}).without({ec({1, 1}, {2, 2})}),
        EuclideanComplex::box({2, 2}).without({ec({0, 0}, {1, 1})}),
    };
    for (const EuclideanComplex& k : cases) {
        std::vector<CriticalRoute> const routes = enumerate_critical_routes(k);
        o.require(route_counts(routes) == std::vector<std::size_t>{2}, "2 routes of dimension 0");
        BettiOptions opts;
        opts.max_dim = 0;
        BettiReport const r = order_complex_betti(build_pk(embed(k)).poset(), opts);
        o.require(!r.betti.empty() && r.betti[0] == 2, "oracle b0 = 2");
    }
    o.detail << "flag in [0,(3,3)] and both diagonal holes in [0,(2,2)]";
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<std::pair<std::string, std::function<void(Outcome&)>>> const checks{
        {"permutahedron baseline", permutahedron_baseline},
        {"gradientness of W_K", gradientness},
        {"triple agreement", triple_agreement},
        {"Euler characteristic and Morse inequalities", euler_and_morse},
        {"not-(s+1)-equal spaces", not_equal_spaces},
        {"figure complex", figure_complex},
        {"route/sequence bijection", route_bijection},
        {"sandwich case", sandwich},
        {"Swiss square", swiss_square},
    };
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.push_back(std::atoi(argv[i]));
    if (selected.empty())
        for (int i = 1; i <= static_cast<int>(checks.size()); ++i)
            selected.push_back(i);

    bool all = true;
    for (int const id : selected) {
        if (id < 1 || id > static_cast<int>(checks.size())) {
            std::cout << "criterion " << id << ": FAIL (unknown criterion)\n";
            all = false;
            continue;
        }
        Outcome o;
        auto const start = std::chrono::steady_clock::now();
        try {
            checks[static_cast<std::size_t>(id - 1)].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " ("
                  << checks[static_cast<std::size_t>(id - 1)].first << "; " << o.detail.str() << "; " << secs
                  << " s)\n";
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
