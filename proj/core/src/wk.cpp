#include "dipath/wk.hpp"

#include "dipath/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

namespace dipath {

OrderedPartition tau(LabelMask b)
{
    OrderedPartition p;
    for (int const i : indices(b))
        p.blocks.push_back(bit(i));
    return p;
}

OrderedPartition kappa(LabelMask b)
{
    if (popcount(b) < 2)
        throw ArgumentError("kappa: the set must have at least two elements");
    LabelMask const top = bit(max_index(b));
    return OrderedPartition{{top, b & ~top}};
}

std::vector<BranchingSequence> branching_sequences(const ComplexView& view)
{
    std::vector<BranchingSequence> out;
    LabelMask const all = view.active();
    if (all == 0)
        return out;
    LabelMask const m = bit(max_index(all));
    LabelMask const rest = all & ~m;
    for (LabelMask b = rest; b; b = (b - 1) & rest) {
        LabelMask const cd = rest & ~b;
        for (LabelMask c = cd;; c = (c - 1) & cd) {
            LabelMask const d = cd & ~c;
            if (!view.contains(c, m | b) && view.contains(c, m) && view.contains(c | m, b))
                out.push_back({c, b, d});
            if (c == 0)
                break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BranchingSequence> branching_sequences(const CubicalComplex& k)
{
    return branching_sequences(ComplexView(k));
}

namespace {

OrderedPartition splice(const OrderedPartition& pi, LabelMask m, LabelMask b, const OrderedPartition& rho)
{
    OrderedPartition out;
    out.blocks.reserve(pi.length() + rho.length() + 2);
    out.blocks = pi.blocks;
    out.blocks.push_back(m);
    out.blocks.push_back(b);
    out.blocks.insert(out.blocks.end(), rho.blocks.begin(), rho.blocks.end());
    return out;
}

using ViewKey = std::pair<LabelMask, LabelMask>;

ViewKey key_of(const ComplexView& v)
{
    return {v.active(), v.fixed_ones()};
}

struct Parts {
    std::vector<OrderedPartition> cells;
    std::vector<PartitionPair> m_part;
    std::vector<PartitionPair> r_part;
    std::vector<PartitionPair> y_part;
    std::vector<BranchingSequence> branching;
};

struct Node {
    std::vector<OrderedPartition> cells;
    std::vector<PartitionPair> pairs;
    std::vector<OrderedPartition> crit;
};

class WkBuilder {
public:
    Parts parts(const ComplexView& view)
    {
        Parts out;
        out.cells = partitions_of(view);
        LabelMask const all = view.active();
        if (all == 0)
            return out;
        LabelMask const m = bit(max_index(all));
        LabelMask const rest = all & ~m;

        if (view.contains(rest, m)) {
            const Node& sub = node(view.restrict(rest, 0));
            for (auto const& [lambda, mu] : sub.pairs)
                out.m_part.emplace_back(concat(lambda, m), concat(mu, m));
        }

        for (const OrderedPartition& mu : out.cells) {
            for (std::size_t i = 0; i < mu.blocks.size(); ++i) {
                LabelMask const b = mu.blocks[i];
                if (!(b & m))
                    continue;
                if (b != m) {
                    OrderedPartition lambda;
                    lambda.blocks.assign(mu.blocks.begin(), mu.blocks.begin() + static_cast<std::ptrdiff_t>(i));
                    lambda.blocks.push_back(m);
                    lambda.blocks.push_back(b & ~m);
                    lambda.blocks.insert(lambda.blocks.end(), mu.blocks.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                         mu.blocks.end());
                    out.r_part.emplace_back(std::move(lambda), mu);
                }
                break;
            }
        }

        out.branching = branching_sequences(view);
        for (const BranchingSequence& br : out.branching) {
            const Node& nc = node(view.restrict(br.c, 0));
            const Node& nd = node(view.restrict(br.d, 1));
            for (const OrderedPartition& pi : nc.cells)
                for (auto const& [rho, rho2] : nd.pairs)
                    out.y_part.emplace_back(splice(pi, m, br.b, rho), splice(pi, m, br.b, rho2));
            for (auto const& [pi, pi2] : nc.pairs)
                for (const OrderedPartition& rho : nd.crit)
                    out.y_part.emplace_back(splice(pi, m, br.b, rho), splice(pi2, m, br.b, rho));
        }
        return out;
    }

    const Node& node(const ComplexView& view)
    {
        ViewKey const key = key_of(view);
        auto const it = memo_.find(key);
        if (it != memo_.end())
            return it->second;

        Parts p = parts(view);
        Node n;
        n.cells = std::move(p.cells);
        n.pairs = std::move(p.m_part);
        n.pairs.insert(n.pairs.end(), p.r_part.begin(), p.r_part.end());
        n.pairs.insert(n.pairs.end(), p.y_part.begin(), p.y_part.end());
        std::unordered_set<OrderedPartition, OrderedPartitionHash> matched;
        for (auto const& [lambda, mu] : n.pairs) {
            matched.insert(lambda);
            matched.insert(mu);
        }
        for (const OrderedPartition& c : n.cells)
            if (!matched.contains(c))
                n.crit.push_back(c);
        return memo_.emplace(key, std::move(n)).first->second;
    }

private:
    std::map<ViewKey, Node> memo_;
};

} // namespace

WkField build_wk(const CubicalComplex& k)
{
    return build_wk(ComplexView(k));
}

WkField build_wk(const ComplexView& view)
{
    WkBuilder builder;
    Parts p = builder.parts(view);
    WkField out;
    out.poset = PartitionPoset(view.active(), std::move(p.cells));
    std::vector<PartitionPair> all = p.m_part;
    all.insert(all.end(), p.r_part.begin(), p.r_part.end());
    all.insert(all.end(), p.y_part.begin(), p.y_part.end());
    out.field = field_from_pairs(out.poset, all);
    out.m_part = std::move(p.m_part);
    out.r_part = std::move(p.r_part);
    out.y_part = std::move(p.y_part);
    out.branching = std::move(p.branching);
    return out;
}

CriticalCells bucket_by_dim(std::vector<OrderedPartition> cells)
{
    std::sort(cells.begin(), cells.end(), [](const OrderedPartition& x, const OrderedPartition& y) {
        return x.blocks < y.blocks;
    });
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    CriticalCells out;
    for (OrderedPartition& c : cells) {
        auto const d = static_cast<std::size_t>(c.dim());
        if (out.size() <= d)
            out.resize(d + 1);
        out[d].push_back(std::move(c));
    }
    return out;
}

CriticalCells critical_partitions(const WkField& w)
{
    std::vector<OrderedPartition> cells;
    for (CellId const c : critical_cells(w.field))
        cells.push_back(w.poset.cell(c));
    return bucket_by_dim(std::move(cells));
}

namespace {

class InductiveCritical {
public:
    const std::vector<OrderedPartition>& crit(const ComplexView& view)
    {
        ViewKey const key = key_of(view);
        auto const it = memo_.find(key);
        if (it != memo_.end())
            return it->second;

        std::vector<OrderedPartition> out;
        LabelMask const all = view.active();
        if (all == 0) {
            if (view.contains(0, 0))
                out.emplace_back();
        } else {
            LabelMask const m = bit(max_index(all));
            LabelMask const rest = all & ~m;
            if (view.contains(rest, m))
                for (const OrderedPartition& lambda : crit(view.restrict(rest, 0)))
                    out.push_back(concat(lambda, m));
            for (const BranchingSequence& br : branching_sequences(view)) {
                const std::vector<OrderedPartition>& cc = crit(view.restrict(br.c, 0));
                const std::vector<OrderedPartition>& cd = crit(view.restrict(br.d, 1));
                for (const OrderedPartition& pi : cc)
                    for (const OrderedPartition& rho : cd)
                        out.push_back(splice(pi, m, br.b, rho));
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    std::map<ViewKey, std::vector<OrderedPartition>> memo_;
};

} // namespace

CriticalCells critical_inductive(const CubicalComplex& k)
{
    return critical_inductive(ComplexView(k));
}

CriticalCells critical_inductive(const ComplexView& view)
{
    InductiveCritical ic;
    return bucket_by_dim(ic.crit(view));
}

int CriticalSequence::dim() const
{
    int d = 0;
    for (LabelMask const x : e)
        d += popcount(x) - 2;
    return d;
}

OrderedPartition sigma(const CriticalSequence& cs)
{
    if (cs.f.size() != cs.e.size() + 1)
        throw ArgumentError("sigma: need exactly one more F block than E blocks");
    OrderedPartition out = tau(cs.f[0]);
    for (std::size_t j = 0; j < cs.e.size(); ++j) {
        out = concat(out, kappa(cs.e[j]));
        out = concat(out, tau(cs.f[j + 1]));
    }
    return out;
}

std::vector<CriticalSequence> enumerate_critical_sequences(const ComplexView& view)
{
    std::vector<CriticalSequence> out;
    LabelMask const all = view.active();
    if (all == 0) {
        if (view.contains(0, 0))
            out.push_back(CriticalSequence{{}, {0}});
        return out;
    }

    CriticalSequence cur;
    std::function<void(LabelMask)> rec = [&](LabelMask done) {
        LabelMask const rest = all & ~done;
        // F_j: any subset whose singleton steps, in increasing order, stay in K.
        for (LabelMask f = rest;; f = (f - 1) & rest) {
            LabelMask d = done;
            bool ok = true;
            for (int const x : indices(f)) {
                if (!view.contains(d, bit(x))) {
                    ok = false;
                    break;
                }
                d |= bit(x);
            }
            if (ok) {
                cur.f.push_back(f);
                if (d == all) {
                    out.push_back(cur);
                } else {
                    LabelMask const rest2 = all & ~d;
                    int const fmax = max_index(f);
                    for (LabelMask e = rest2; e; e = (e - 1) & rest2) {
                        if (popcount(e) < 2)
                            continue;
                        int const emax = max_index(e);
                        LabelMask const top = bit(emax);
                        if (fmax > emax)
                            continue;
                        if (view.contains(d, e) || !view.contains(d, top) || !view.contains(d | top, e & ~top))
                            continue;
                        cur.e.push_back(e);
                        rec(d | e);
                        cur.e.pop_back();
                    }
                }
                cur.f.pop_back();
            }
            if (f == 0)
                break;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CriticalSequence> enumerate_critical_sequences(const CubicalComplex& k)
{
    return enumerate_critical_sequences(ComplexView(k));
}

bool is_critical_sequence(const ComplexView& view, const CriticalSequence& cs)
{
    if (cs.f.size() != cs.e.size() + 1)
        return false;
    LabelMask seen = 0;
    auto take = [&seen](LabelMask x) {
        if (seen & x)
            return false;
        seen |= x;
        return true;
    };
    for (LabelMask const x : cs.f)
        if (!take(x))
            return false;
    for (LabelMask const x : cs.e)
        if (popcount(x) < 2 || !take(x))
            return false;
    if (seen != view.active())
        return false;
    if (!chain_in(view, sigma(cs)))
        return false;
    LabelMask done = cs.f[0];
    for (std::size_t j = 0; j < cs.e.size(); ++j) {
        LabelMask const prev = cs.f[j];
        if (prev != 0 && max_index(prev) > max_index(cs.e[j]))
            return false;
        if (view.contains(done, cs.e[j]))
            return false;
        done |= cs.e[j] | cs.f[j + 1];
    }
    return true;
}

CriticalCells critical_from_sequences(const std::vector<CriticalSequence>& seqs)
{
    std::vector<OrderedPartition> cells;
    cells.reserve(seqs.size());
    for (const CriticalSequence& cs : seqs)
        cells.push_back(sigma(cs));
    return bucket_by_dim(std::move(cells));
}

std::vector<std::size_t> counts(const CriticalCells& cells)
{
    std::vector<std::size_t> out;
    for (auto const& bucket : cells)
        out.push_back(bucket.size());
    return out;
}

std::string to_string(const CriticalSequence& cs, const LabelSet& labels)
{
    auto list = [&labels](const std::vector<LabelMask>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0)
                s += ' ';
            s += '{' + labels.format(v[i]) + '}';
        }
        return s + ']';
    };
    return "E=" + list(cs.e) + ";F=" + list(cs.f);
}

} // namespace dipath
