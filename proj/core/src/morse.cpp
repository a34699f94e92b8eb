#include "dipath/morse.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace dipath {

namespace {

constexpr CellId none = std::numeric_limits<CellId>::max();

} // namespace

DiscreteVectorField::DiscreteVectorField()
    : host_(std::make_shared<FinitePoset>())
{
}

DiscreteVectorField::DiscreteVectorField(std::shared_ptr<const FinitePoset> host, std::vector<Pairing> pairs)
    : host_(std::move(host)),
      pairs_(std::move(pairs))
{
    if (!host_)
        throw ArgumentError("vector field: null host poset");
    std::sort(pairs_.begin(), pairs_.end());
    partner_.assign(host_->size(), none);
    role_.assign(host_->size(), 0);
    for (const Pairing& p : pairs_) {
        if (p.facet >= host_->size() || p.cofacet >= host_->size())
            throw ValidationError("vector field: cell id out of range");
        auto const f = host_->facets(p.cofacet);
        if (std::find(f.begin(), f.end(), p.facet) == f.end())
            throw ValidationError("vector field: (" + host_->name(p.facet) + ", " + host_->name(p.cofacet) +
                                  ") is not a facet pair");
        if (partner_[p.facet] != none || partner_[p.cofacet] != none)
            throw ValidationError("vector field: vectors are not disjoint");
        partner_[p.facet] = p.cofacet;
        partner_[p.cofacet] = p.facet;
        role_[p.facet] = 1;
        role_[p.cofacet] = -1;
    }
}

std::optional<CellId> DiscreteVectorField::partner(CellId c) const
{
    if (c >= partner_.size())
        throw std::out_of_range("vector field: cell id out of range");
    if (partner_[c] == none)
        return std::nullopt;
    return partner_[c];
}

bool DiscreteVectorField::is_source(CellId c) const
{
    if (c >= role_.size())
        throw std::out_of_range("vector field: cell id out of range");
    return role_[c] == 1;
}

bool DiscreteVectorField::contains(CellId facet, CellId cofacet) const
{
    return facet < partner_.size() && role_[facet] == 1 && partner_[facet] == cofacet;
}

GradientCheck check_gradient(const DiscreteVectorField& v)
{
    const FinitePoset& p = v.host();
    std::size_t const n = p.size();
    // 0 unvisited, 1 on the stack, 2 finished.
    std::vector<signed char> state(n, 0);
    std::vector<CellId> parent(n, none);
    struct Frame {
        CellId cell;
        std::size_t next;
    };
    std::vector<Frame> stack;

    for (const Pairing& start : v.pairs()) {
        if (state[start.facet] != 0)
            continue;
        stack.push_back({start.facet, 0});
        state[start.facet] = 1;
        while (!stack.empty()) {
            Frame& top = stack.back();
            CellId const a = top.cell;
            auto const facets = p.facets(*v.partner(a));
            if (top.next == facets.size()) {
                state[a] = 2;
                stack.pop_back();
                continue;
            }
            CellId const a2 = facets[top.next++];
            if (a2 == a || !v.is_source(a2))
                continue;
            if (state[a2] == 1) {
                GradientCheck out;
                out.gradient = false;
                std::vector<CellId> cells;
                for (CellId c = a; c != a2; c = parent[c])
                    cells.push_back(c);
                cells.push_back(a2);
                std::reverse(cells.begin(), cells.end());
                for (CellId const c : cells)
                    out.cycle.push_back({c, *v.partner(c)});
                return out;
            }
            if (state[a2] == 0) {
                state[a2] = 1;
                parent[a2] = a;
                stack.push_back({a2, 0});
            }
        }
    }
    return {};
}

bool is_gradient(const DiscreteVectorField& v)
{
    return check_gradient(v).gradient;
}

std::vector<std::vector<CellId>> critical(const DiscreteVectorField& v)
{
    const FinitePoset& p = v.host();
    std::vector<std::vector<CellId>> out(static_cast<std::size_t>(std::max(p.max_dim() + 1, 0)));
    for (CellId c = 0; c < p.size(); ++c)
        if (v.is_critical(c))
            out[static_cast<std::size_t>(p.dim(c))].push_back(c);
    return out;
}

std::vector<CellId> critical_cells(const DiscreteVectorField& v)
{
    std::vector<CellId> out;
    for (CellId c = 0; c < v.host().size(); ++c)
        if (v.is_critical(c))
            out.push_back(c);
    return out;
}

bool dot_le(const MorseValue& x, const MorseValue& y)
{
    if (x.s != y.s)
        return x.s > y.s;
    if (y.t == 1)
        return true;
    return x.t != 1 && x.t <= y.t;
}

MorseValue permutahedron_weight(const OrderedPartition& lambda)
{
    LabelMask const support = lambda.support();
    if (support == 0)
        throw ArgumentError("permutahedron_weight: empty partition");
    LabelMask const m = bit(max_index(support));
    LabelMask before = 0;
    for (LabelMask const b : lambda.blocks) {
        if (b & m)
            return MorseValue{popcount(before), popcount(b)};
        before |= b;
    }
    return {};
}

DiscreteVectorField field_from_pairs(const PartitionPoset& poset,
                                     const std::vector<std::pair<OrderedPartition, OrderedPartition>>& pairs)
{
    std::vector<Pairing> ids;
    ids.reserve(pairs.size());
    for (auto const& [lambda, mu] : pairs)
        ids.push_back({poset.id_of(lambda), poset.id_of(mu)});
    return DiscreteVectorField(poset.shared_poset(), std::move(ids));
}

DiscreteVectorField product_field(const DiscreteVectorField& v, const DiscreteVectorField& w)
{
    const FinitePoset& p = v.host();
    const FinitePoset& q = w.host();
    auto host = std::make_shared<FinitePoset>(product(p, q));
    std::vector<Pairing> pairs;
    for (CellId x = 0; x < p.size(); ++x)
        for (const Pairing& e : w.pairs())
            pairs.push_back({product_id(q, x, e.facet), product_id(q, x, e.cofacet)});
    for (const Pairing& e : v.pairs())
        for (CellId y = 0; y < q.size(); ++y)
            if (w.is_critical(y))
                pairs.push_back({product_id(q, e.facet, y), product_id(q, e.cofacet, y)});
    return DiscreteVectorField(std::move(host), std::move(pairs));
}

SimplexField simplex_field(std::size_t n)
{
    if (n == 0 || n > 20)
        throw ArgumentError("simplex_field: need 1 <= n <= 20");
    LabelMask const all = low_mask(n);
    std::vector<LabelMask> cells;
    for (LabelMask b = 1; b <= all; ++b)
        cells.push_back(b);
    std::stable_sort(cells.begin(), cells.end(),
                     [](LabelMask x, LabelMask y) { return popcount(x) < popcount(y); });
    std::map<LabelMask, CellId> id;
    for (std::size_t i = 0; i < cells.size(); ++i)
        id[cells[i]] = static_cast<CellId>(i);

    std::vector<int> dims;
    std::vector<std::pair<CellId, CellId>> covers;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        dims.push_back(popcount(cells[i]) - 1);
        for (int const j : indices(cells[i]))
            if (cells[i] != bit(j))
                covers.emplace_back(id[cells[i] & ~bit(j)], static_cast<CellId>(i));
    }
    auto host = std::make_shared<FinitePoset>(std::move(dims), std::move(covers));

    LabelMask const m = bit(static_cast<int>(n) - 1);
    std::vector<Pairing> pairs;
    for (LabelMask const b : cells)
        if (!(b & m))
            pairs.push_back({id[b], id[b | m]});
    return SimplexField{std::move(cells), DiscreteVectorField(std::move(host), std::move(pairs))};
}

CubeField cube_field(std::size_t n)
{
    CubicalComplex const k = CubicalComplex::full(LabelSet::numbered(n));
    std::vector<Cube> cells = k.cubes();
    std::unordered_map<Cube, CellId, CubeHash> id;
    for (std::size_t i = 0; i < cells.size(); ++i)
        id[cells[i]] = static_cast<CellId>(i);

    std::vector<int> dims;
    std::vector<std::pair<CellId, CellId>> covers;
    std::vector<Pairing> pairs;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cube& c = cells[i];
        dims.push_back(c.dim());
        for (LabelMask s = c.stars; s; s &= s - 1) {
            LabelMask const b = s & (~s + 1);
            covers.emplace_back(id[Cube{c.ones, c.stars & ~b}], static_cast<CellId>(i));
            covers.emplace_back(id[Cube{c.ones | b, c.stars & ~b}], static_cast<CellId>(i));
        }
        // Unwinding the induction on the largest label: the last nonzero
        // entry decides the role of a cube, * making it a cofacet.
        int const top = max_index(c.ones | c.stars);
        if (top >= 0 && (c.stars & bit(top)))
            pairs.push_back({id[Cube{c.ones | bit(top), c.stars & ~bit(top)}], static_cast<CellId>(i)});
    }
    auto host = std::make_shared<FinitePoset>(std::move(dims), std::move(covers));
    return CubeField{std::move(cells), DiscreteVectorField(std::move(host), std::move(pairs))};
}

std::vector<std::pair<OrderedPartition, OrderedPartition>> permutahedron_pairs(LabelMask support)
{
    std::vector<std::pair<OrderedPartition, OrderedPartition>> out;
    if (support == 0)
        return out;
    LabelMask const m = bit(max_index(support));
    for (auto const& [lambda, mu] : permutahedron_pairs(support & ~m))
        out.emplace_back(concat(lambda, m), concat(mu, m));
    for (const OrderedPartition& mu : ordered_partitions(support)) {
        for (std::size_t i = 0; i < mu.blocks.size(); ++i) {
            LabelMask const b = mu.blocks[i];
            if (!(b & m) || b == m)
                continue;
            OrderedPartition lambda;
            lambda.blocks.assign(mu.blocks.begin(), mu.blocks.begin() + static_cast<std::ptrdiff_t>(i));
            lambda.blocks.push_back(m);
            lambda.blocks.push_back(b & ~m);
            lambda.blocks.insert(lambda.blocks.end(), mu.blocks.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                 mu.blocks.end());
            out.emplace_back(std::move(lambda), mu);
        }
    }
    return out;
}

PermutahedronField permutahedron_field(LabelMask support)
{
    PartitionPoset poset = permutahedron(support);
    DiscreteVectorField field = field_from_pairs(poset, permutahedron_pairs(support));
    return PermutahedronField{std::move(poset), std::move(field)};
}

std::string to_dot(const DiscreteVectorField& v, const std::function<std::string(CellId)>& label)
{
    const FinitePoset& p = v.host();
    std::ostringstream out;
    out << "digraph field {\n  rankdir=BT;\n";
    for (CellId c = 0; c < p.size(); ++c) {
        std::string const text = label ? label(c) : p.name(c);
        out << "  n" << c << " [label=\"" << text << "\"";
        if (v.is_critical(c))
            out << ", color=red";
        out << "];\n";
    }
    for (CellId b = 0; b < p.size(); ++b)
        for (CellId const a : p.facets(b)) {
            if (v.contains(a, b))
                out << "  n" << a << " -> n" << b << " [style=bold];\n";
            else
                out << "  n" << b << " -> n" << a << ";\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace dipath
