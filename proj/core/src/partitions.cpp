#include "dipath/partitions.hpp"

#include "dipath/error.hpp"

#include <algorithm>
#include <functional>

namespace dipath {

int OrderedPartition::dim() const
{
    int d = 0;
    for (LabelMask const b : blocks)
        d += popcount(b) - 1;
    return d;
}

LabelMask OrderedPartition::support() const
{
    LabelMask s = 0;
    for (LabelMask const b : blocks)
        s |= b;
    return s;
}

bool OrderedPartition::well_formed() const
{
    LabelMask seen = 0;
    for (LabelMask const b : blocks) {
        if (b == 0 || (seen & b))
            return false;
        seen |= b;
    }
    return true;
}

std::size_t OrderedPartitionHash::operator()(const OrderedPartition& p) const noexcept
{
    std::uint64_t h = 0xCBF29CE484222325ull ^ p.blocks.size();
    for (LabelMask const b : p.blocks) {
        h ^= b + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h *= 0x100000001B3ull;
    }
    return static_cast<std::size_t>(h);
}

OrderedPartition concat(const OrderedPartition& lambda, const OrderedPartition& mu)
{
    OrderedPartition out = lambda;
    out.blocks.insert(out.blocks.end(), mu.blocks.begin(), mu.blocks.end());
    return out;
}

OrderedPartition concat(const OrderedPartition& lambda, LabelMask block)
{
    OrderedPartition out = lambda;
    out.blocks.push_back(block);
    return out;
}

std::string to_string(const OrderedPartition& p, const LabelSet& labels)
{
    std::string out;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        if (i > 0)
            out += '|';
        out += labels.format(p.blocks[i]);
    }
    return out;
}

OrderedPartition parse_partition(std::string_view text, const LabelSet& labels)
{
    OrderedPartition p;
    if (text.empty())
        return p;
    LabelMask seen = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t const next = std::min(text.find('|', pos), text.size());
        std::string_view const token = text.substr(pos, next - pos);
        if (token.empty())
            throw ValidationError("partition '" + std::string(text) + "' has an empty block");
        LabelMask const b = labels.parse(token);
        if (seen & b)
            throw ValidationError("partition '" + std::string(text) + "' repeats a label");
        seen |= b;
        p.blocks.push_back(b);
        pos = next + 1;
    }
    return p;
}

bool refines(const OrderedPartition& mu, const OrderedPartition& lambda)
{
    if (mu.support() != lambda.support())
        throw ArgumentError("refines: partitions of different sets");
    std::size_t i = 0;
    for (LabelMask const b : lambda.blocks) {
        LabelMask acc = 0;
        while (i < mu.blocks.size() && acc != b) {
            if (mu.blocks[i] & ~b)
                return false;
            acc |= mu.blocks[i];
            ++i;
        }
        if (acc != b)
            return false;
    }
    return i == mu.blocks.size();
}

CubeChain chain_of_partition(const OrderedPartition& lambda)
{
    CubeChain chain;
    LabelMask done = 0;
    for (LabelMask const b : lambda.blocks) {
        chain.push_back(Cube{done, b});
        done |= b;
    }
    return chain;
}

OrderedPartition partition_of_chain(const CubeChain& chain, LabelMask all)
{
    OrderedPartition p;
    LabelMask at = 0;
    for (const Cube& c : chain) {
        if (c.stars == 0)
            throw ValidationError("cube chain contains a vertex");
        if ((c.ones | c.stars) & ~all)
            throw ValidationError("cube chain leaves the label set");
        if (c.ones != at)
            throw ValidationError("cube chain is not connected");
        p.blocks.push_back(c.stars);
        at = c.ones | c.stars;
    }
    if (at != all)
        throw ValidationError("cube chain does not end at the top vertex");
    return p;
}

bool chain_in(const ComplexView& view, const OrderedPartition& lambda)
{
    if (lambda.support() != view.active() || !lambda.well_formed())
        throw ArgumentError("chain_in: not a partition of the active labels");
    if (lambda.blocks.empty())
        return view.contains(0, 0);
    LabelMask done = 0;
    for (LabelMask const b : lambda.blocks) {
        if (!view.contains(done, b))
            return false;
        done |= b;
    }
    return true;
}

namespace {

void sort_partitions(std::vector<OrderedPartition>& v)
{
    std::sort(v.begin(), v.end(), [](const OrderedPartition& x, const OrderedPartition& y) {
        int const dx = x.dim();
        int const dy = y.dim();
        if (dx != dy)
            return dx < dy;
        return x.blocks < y.blocks;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

std::vector<OrderedPartition> ordered_partitions(LabelMask support)
{
    std::vector<OrderedPartition> out;
    OrderedPartition cur;
    std::function<void(LabelMask)> rec = [&](LabelMask rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (LabelMask b = rest; b; b = (b - 1) & rest) {
            cur.blocks.push_back(b);
            rec(rest & ~b);
            cur.blocks.pop_back();
        }
    };
    rec(support);
    sort_partitions(out);
    return out;
}

std::vector<OrderedPartition> partitions_of(const ComplexView& view)
{
    std::vector<OrderedPartition> out;
    LabelMask const all = view.active();
    if (all == 0) {
        if (view.contains(0, 0))
            out.emplace_back();
        return out;
    }
    OrderedPartition cur;
    std::function<void(LabelMask)> rec = [&](LabelMask done) {
        LabelMask const rest = all & ~done;
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (LabelMask b = rest; b; b = (b - 1) & rest) {
            if (!view.contains(done, b))
                continue;
            cur.blocks.push_back(b);
            rec(done | b);
            cur.blocks.pop_back();
        }
    };
    rec(0);
    sort_partitions(out);
    return out;
}

PartitionPoset::PartitionPoset()
    : poset_(std::make_shared<FinitePoset>())
{
}

PartitionPoset::PartitionPoset(LabelMask support, std::vector<OrderedPartition> cells)
    : support_(support),
      cells_(std::move(cells))
{
    for (const OrderedPartition& p : cells_)
        if (p.support() != support_ || !p.well_formed())
            throw ValidationError("partition poset: cell is not a partition of the support");
    sort_partitions(cells_);
    index_.reserve(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i)
        index_.emplace(cells_[i], static_cast<CellId>(i));

    std::vector<int> dims;
    dims.reserve(cells_.size());
    std::vector<std::pair<CellId, CellId>> covers;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const OrderedPartition& lambda = cells_[i];
        dims.push_back(lambda.dim());
        // Facets split one block into two nonempty ordered parts.
        for (std::size_t j = 0; j < lambda.blocks.size(); ++j) {
            LabelMask const b = lambda.blocks[j];
            for (LabelMask x = (b - 1) & b; x; x = (x - 1) & b) {
                OrderedPartition mu;
                mu.blocks.reserve(lambda.blocks.size() + 1);
                mu.blocks.insert(mu.blocks.end(), lambda.blocks.begin(), lambda.blocks.begin() + static_cast<std::ptrdiff_t>(j));
                mu.blocks.push_back(x);
                mu.blocks.push_back(b & ~x);
                mu.blocks.insert(mu.blocks.end(), lambda.blocks.begin() + static_cast<std::ptrdiff_t>(j) + 1, lambda.blocks.end());
                auto const it = index_.find(mu);
                if (it != index_.end())
                    covers.emplace_back(it->second, static_cast<CellId>(i));
            }
        }
    }
    poset_ = std::make_shared<FinitePoset>(std::move(dims), std::move(covers));
}

const OrderedPartition& PartitionPoset::cell(CellId id) const
{
    if (id >= cells_.size())
        throw std::out_of_range("partition poset: cell id out of range");
    return cells_[id];
}

std::optional<CellId> PartitionPoset::find(const OrderedPartition& lambda) const
{
    auto const it = index_.find(lambda);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

CellId PartitionPoset::id_of(const OrderedPartition& lambda) const
{
    auto const id = find(lambda);
    if (!id)
        throw LookupError("partition is not a cell of the poset");
    return *id;
}

PartitionPoset build_pk(const CubicalComplex& k)
{
    return build_pk(ComplexView(k));
}

PartitionPoset build_pk(const ComplexView& view)
{
    return PartitionPoset(view.active(), partitions_of(view));
}

PartitionPoset permutahedron(LabelMask support)
{
    return PartitionPoset(support, ordered_partitions(support));
}

CompositionCheck check_composition(const CubicalComplex& k,
                                   const OrderedPartition& lambda,
                                   const std::vector<LabelMask>& middle,
                                   const OrderedPartition& mu)
{
    LabelMask const c = lambda.support();
    LabelMask const d = mu.support();
    LabelMask seen = c;
    if (seen & d)
        throw ArgumentError("check_composition: C and D overlap");
    seen |= d;
    for (LabelMask const b : middle) {
        if (b == 0 || (seen & b))
            throw ArgumentError("check_composition: middle blocks must be nonempty and disjoint");
        seen |= b;
    }
    if (seen != k.all())
        throw ArgumentError("check_composition: decomposition does not cover the label set");

    OrderedPartition whole = lambda;
    whole.blocks.insert(whole.blocks.end(), middle.begin(), middle.end());
    whole = concat(whole, mu);

    ComplexView const view(k);
    CompositionCheck out;
    out.in_pk = chain_in(view, whole);

    bool factored = chain_in(view.restrict(c, 0), lambda) && chain_in(view.restrict(d, 1), mu);
    LabelMask done = c;
    for (LabelMask const b : middle) {
        factored = factored && k.contains(done, b);
        done |= b;
    }
    out.factored = factored;
    return out;
}

} // namespace dipath
