#include "dipath/poset.hpp"

#include "dipath/error.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>

namespace dipath {

namespace {

bool test_bit(const std::uint64_t* row, std::size_t i)
{
    return (row[i / 64] >> (i % 64)) & 1u;
}

void set_bit(std::uint64_t* row, std::size_t i)
{
    row[i / 64] |= std::uint64_t{1} << (i % 64);
}

template <class F>
void for_each_bit(const std::uint64_t* row, std::size_t words, F&& f)
{
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
            int const t = std::countr_zero(bits);
            f(static_cast<CellId>(w * 64 + t));
            bits &= bits - 1;
        }
    }
}

} // namespace

FinitePoset::FinitePoset(std::vector<int> dims,
                         std::vector<std::pair<CellId, CellId>> covers,
                         std::vector<std::string> names)
    : dims_(std::move(dims)),
      names_(std::move(names))
{
    if (names_.empty()) {
        names_.reserve(dims_.size());
        for (std::size_t i = 0; i < dims_.size(); ++i)
            names_.push_back(std::to_string(i));
    }
    if (names_.size() != dims_.size())
        throw ArgumentError("poset: one name per cell required");
    for (int const d : dims_)
        if (d < 0)
            throw ValidationError("poset: negative dimension");
    for (std::size_t i = 0; i < names_.size(); ++i)
        by_name_.emplace(names_[i], static_cast<CellId>(i));

    build(std::move(covers));
}

void FinitePoset::build(std::vector<std::pair<CellId, CellId>> covers)
{
    std::size_t const n = dims_.size();
    covers_below_.assign(n, {});
    covers_above_.assign(n, {});
    facets_.assign(n, {});
    cofacets_.assign(n, {});

    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

    for (auto const& [a, b] : covers) {
        if (a >= n || b >= n)
            throw ValidationError("poset: cover refers to an unknown cell");
        if (dims_[a] >= dims_[b])
            throw ValidationError("poset: cover " + names_[a] + " < " + names_[b] +
                                  " does not increase dimension");
        covers_below_[b].push_back(a);
        covers_above_[a].push_back(b);
    }

    // Kahn's algorithm; smallest id first keeps the extension deterministic.
    std::vector<std::size_t> pending(n);
    for (std::size_t b = 0; b < n; ++b)
        pending[b] = covers_below_[b].size();
    std::set<CellId> ready;
    for (std::size_t b = 0; b < n; ++b)
        if (pending[b] == 0)
            ready.insert(static_cast<CellId>(b));
    order_.clear();
    order_.reserve(n);
    while (!ready.empty()) {
        CellId const a = *ready.begin();
        ready.erase(ready.begin());
        order_.push_back(a);
        for (CellId const b : covers_above_[a])
            if (--pending[b] == 0)
                ready.insert(b);
    }
    if (order_.size() != n)
        throw ValidationError("poset: covering relation has a cycle");

    words_ = (n + 63) / 64;
    below_.assign(n * words_, 0);
    for (CellId const b : order_) {
        std::uint64_t* row = &below_[b * words_];
        for (CellId const a : covers_below_[b]) {
            std::uint64_t const* sub = &below_[a * words_];
            for (std::size_t w = 0; w < words_; ++w)
                row[w] |= sub[w];
            set_bit(row, a);
        }
    }

    for (std::size_t b = 0; b < n; ++b) {
        for_each_bit(&below_[b * words_], words_, [&](CellId a) {
            if (dims_[a] + 1 == dims_[b]) {
                facets_[b].push_back(a);
                cofacets_[a].push_back(static_cast<CellId>(b));
            }
        });
    }
}

FinitePoset FinitePoset::from_order(std::vector<int> dims,
                                    const std::function<bool(CellId, CellId)>& less,
                                    std::vector<std::string> names)
{
    auto const n = static_cast<CellId>(dims.size());
    std::vector<char> rel(static_cast<std::size_t>(n) * n, 0);
    for (CellId a = 0; a < n; ++a)
        for (CellId b = 0; b < n; ++b)
            rel[a * n + b] = less(a, b) ? 1 : 0;

    for (CellId a = 0; a < n; ++a) {
        if (rel[a * n + a])
            throw ValidationError("poset: order relation is not irreflexive");
        for (CellId b = 0; b < n; ++b) {
            if (!rel[a * n + b])
                continue;
            for (CellId c = 0; c < n; ++c)
                if (rel[b * n + c] && !rel[a * n + c])
                    throw ValidationError("poset: order relation is not transitive");
        }
    }

    std::vector<std::pair<CellId, CellId>> covers;
    for (CellId a = 0; a < n; ++a)
        for (CellId b = 0; b < n; ++b) {
            if (!rel[a * n + b])
                continue;
            bool covering = true;
            for (CellId c = 0; c < n && covering; ++c)
                if (rel[a * n + c] && rel[c * n + b])
                    covering = false;
            if (covering)
                covers.emplace_back(a, b);
        }
    return FinitePoset(std::move(dims), std::move(covers), std::move(names));
}

void FinitePoset::check_id(CellId c) const
{
    if (c >= dims_.size())
        throw std::out_of_range("poset: cell id " + std::to_string(c) + " out of range");
}

int FinitePoset::dim(CellId c) const
{
    check_id(c);
    return dims_[c];
}

const std::string& FinitePoset::name(CellId c) const
{
    check_id(c);
    return names_[c];
}

std::optional<CellId> FinitePoset::find(std::string_view name) const
{
    auto const it = by_name_.find(std::string(name));
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

bool FinitePoset::less(CellId a, CellId b) const
{
    check_id(a);
    check_id(b);
    return test_bit(&below_[b * words_], a);
}

std::span<const CellId> FinitePoset::facets(CellId b) const
{
    check_id(b);
    return facets_[b];
}

std::span<const CellId> FinitePoset::cofacets(CellId a) const
{
    check_id(a);
    return cofacets_[a];
}

std::span<const CellId> FinitePoset::covers_below(CellId b) const
{
    check_id(b);
    return covers_below_[b];
}

std::span<const CellId> FinitePoset::covers_above(CellId a) const
{
    check_id(a);
    return covers_above_[a];
}

std::vector<CellId> FinitePoset::strictly_above(CellId a) const
{
    check_id(a);
    std::vector<CellId> out;
    for (std::size_t b = 0; b < size(); ++b)
        if (test_bit(&below_[b * words_], a))
            out.push_back(static_cast<CellId>(b));
    return out;
}

int FinitePoset::max_dim() const
{
    if (dims_.empty())
        return -1;
    return *std::max_element(dims_.begin(), dims_.end());
}

bool is_closed_subposet(const FinitePoset& p, std::span<const CellId> q)
{
    std::vector<char> member(p.size(), 0);
    for (CellId const c : q) {
        if (c >= p.size())
            throw std::out_of_range("is_closed_subposet: cell id out of range");
        member[c] = 1;
    }
    for (CellId const c : q)
        for (CellId const a : p.covers_below(c))
            if (!member[a])
                return false;
    return true;
}

std::vector<CellId> down_closure(const FinitePoset& p, std::span<const CellId> subset)
{
    std::vector<char> member(p.size(), 0);
    std::vector<CellId> stack(subset.begin(), subset.end());
    while (!stack.empty()) {
        CellId const c = stack.back();
        stack.pop_back();
        if (c >= p.size())
            throw std::out_of_range("down_closure: cell id out of range");
        if (member[c])
            continue;
        member[c] = 1;
        for (CellId const a : p.covers_below(c))
            stack.push_back(a);
    }
    std::vector<CellId> out;
    for (std::size_t c = 0; c < p.size(); ++c)
        if (member[c])
            out.push_back(static_cast<CellId>(c));
    return out;
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q)
{
    std::vector<int> dims;
    std::vector<std::string> names;
    dims.reserve(p.size() * q.size());
    names.reserve(p.size() * q.size());
    for (CellId x = 0; x < p.size(); ++x)
        for (CellId y = 0; y < q.size(); ++y) {
            dims.push_back(p.dim(x) + q.dim(y));
            names.push_back("(" + p.name(x) + "," + q.name(y) + ")");
        }

    // Covers of a product of graded posets: cover in one factor, equality in
    // the other.
    std::vector<std::pair<CellId, CellId>> covers;
    for (CellId x = 0; x < p.size(); ++x)
        for (CellId y = 0; y < q.size(); ++y) {
            for (CellId const x2 : p.covers_above(x))
                covers.emplace_back(product_id(q, x, y), product_id(q, x2, y));
            for (CellId const y2 : q.covers_above(y))
                covers.emplace_back(product_id(q, x, y), product_id(q, x, y2));
        }
    return FinitePoset(std::move(dims), std::move(covers), std::move(names));
}

// ---------------------------------------------------------------------------

std::size_t SimplicialComplexRecord::count(int d) const
{
    if (d < 0 || d > top_dim())
        return 0;
    return simplices[d].size() / static_cast<std::size_t>(d + 1);
}

std::size_t SimplicialComplexRecord::total() const
{
    std::size_t n = 0;
    for (int d = 0; d <= top_dim(); ++d)
        n += count(d);
    return n;
}

std::span<const std::uint32_t> SimplicialComplexRecord::simplex(int d, std::size_t index) const
{
    if (index >= count(d))
        throw std::out_of_range("simplex index out of range");
    auto const width = static_cast<std::size_t>(d + 1);
    return {simplices[d].data() + index * width, width};
}

std::optional<std::size_t> SimplicialComplexRecord::find(std::span<const std::uint32_t> vertices) const
{
    if (vertices.empty())
        return std::nullopt;
    int const d = static_cast<int>(vertices.size()) - 1;
    std::size_t lo = 0;
    std::size_t hi = count(d);
    while (lo < hi) {
        std::size_t const mid = lo + (hi - lo) / 2;
        auto const s = simplex(d, mid);
        if (std::lexicographical_compare(s.begin(), s.end(), vertices.begin(), vertices.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < count(d)) {
        auto const s = simplex(d, lo);
        if (std::equal(s.begin(), s.end(), vertices.begin(), vertices.end()))
            return lo;
    }
    return std::nullopt;
}

bool SimplicialComplexRecord::is_face_closed() const
{
    std::vector<std::uint32_t> face;
    for (int d = 1; d <= top_dim(); ++d)
        for (std::size_t i = 0; i < count(d); ++i) {
            auto const s = simplex(d, i);
            for (int skip = 0; skip <= d; ++skip) {
                face.clear();
                for (int j = 0; j <= d; ++j)
                    if (j != skip)
                        face.push_back(s[j]);
                if (!find(face))
                    return false;
            }
        }
    return true;
}

long long SimplicialComplexRecord::euler_characteristic() const
{
    long long chi = 0;
    for (int d = 0; d <= top_dim(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(count(d));
    return chi;
}

namespace {

// Sorts the flattened simplices of one dimension lexicographically and drops
// duplicates.
void sort_flat(std::vector<std::uint32_t>& flat, std::size_t width)
{
    std::size_t const n = flat.size() / width;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto const at = [&](std::size_t i) { return flat.begin() + static_cast<std::ptrdiff_t>(i * width); };
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        return std::lexicographical_compare(at(x), at(x) + width, at(y), at(y) + width);
    });
    std::vector<std::uint32_t> out;
    out.reserve(flat.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0 && std::equal(at(idx[k]), at(idx[k]) + width, at(idx[k - 1])))
            continue;
        out.insert(out.end(), at(idx[k]), at(idx[k]) + width);
    }
    flat = std::move(out);
}

} // namespace

SimplicialComplexRecord SimplicialComplexRecord::from_facets(std::size_t vertex_count,
                                                             std::vector<std::vector<std::uint32_t>> facets)
{
    SimplicialComplexRecord rec;
    rec.vertex_count = vertex_count;
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty())
            continue;
        if (f.size() > 30)
            throw ResourceError("from_facets: simplex too large to expand");
        for (std::uint32_t const v : f)
            if (v >= vertex_count)
                throw ArgumentError("from_facets: vertex out of range");
        std::uint32_t const full = (std::uint32_t{1} << f.size()) - 1;
        for (std::uint32_t sub = 1; sub <= full; ++sub) {
            int const d = std::popcount(sub) - 1;
            if (static_cast<int>(rec.simplices.size()) <= d)
                rec.simplices.resize(d + 1);
            for (std::size_t j = 0; j < f.size(); ++j)
                if ((sub >> j) & 1u)
                    rec.simplices[d].push_back(f[j]);
        }
    }
    for (int d = 0; d <= rec.top_dim(); ++d)
        sort_flat(rec.simplices[d], static_cast<std::size_t>(d + 1));
    return rec;
}

SimplicialComplexRecord order_complex(const FinitePoset& p, const OrderComplexOptions& options)
{
    SimplicialComplexRecord rec;
    rec.vertex_count = p.size();
    if (p.empty())
        return rec;

    std::vector<std::vector<CellId>> up(p.size());
    for (CellId b = 0; b < p.size(); ++b)
        for (CellId a = 0; a < p.size(); ++a)
            if (p.less(a, b))
                up[a].push_back(b);

    int const cap_dim = options.max_dim.value_or(std::numeric_limits<int>::max());
    std::size_t produced = 0;
    std::vector<CellId> chain;
    std::vector<std::uint32_t> sorted;

    auto emit = [&] {
        if (options.max_simplices && produced >= *options.max_simplices)
            throw ResourceError("order complex exceeds " + std::to_string(*options.max_simplices) +
                                " simplices");
        ++produced;
        int const d = static_cast<int>(chain.size()) - 1;
        if (static_cast<int>(rec.simplices.size()) <= d)
            rec.simplices.resize(d + 1);
        sorted.assign(chain.begin(), chain.end());
        std::sort(sorted.begin(), sorted.end());
        rec.simplices[d].insert(rec.simplices[d].end(), sorted.begin(), sorted.end());
    };

    std::function<void()> extend = [&] {
        emit();
        if (static_cast<int>(chain.size()) - 1 >= cap_dim) {
            if (!up[chain.back()].empty())
                rec.truncated = true;
            return;
        }
        for (CellId const next : up[chain.back()]) {
            chain.push_back(next);
            extend();
            chain.pop_back();
        }
    };

    for (CellId x = 0; x < p.size(); ++x) {
        chain.assign(1, x);
        extend();
    }
    for (int d = 0; d <= rec.top_dim(); ++d)
        sort_flat(rec.simplices[d], static_cast<std::size_t>(d + 1));
    return rec;
}

std::vector<std::uint64_t> chain_counts(const FinitePoset& p)
{
    std::size_t const n = p.size();
    std::vector<std::vector<std::uint64_t>> ending(n);
    std::vector<std::uint64_t> total;
    for (CellId const b : p.linear_extension()) {
        auto& row = ending[b];
        row.assign(1, 1);
        for (CellId a = 0; a < n; ++a) {
            if (!p.less(a, b))
                continue;
            auto const& sub = ending[a];
            if (row.size() < sub.size() + 1)
                row.resize(sub.size() + 1, 0);
            for (std::size_t k = 0; k < sub.size(); ++k)
                row[k + 1] += sub[k];
        }
        if (total.size() < row.size())
            total.resize(row.size(), 0);
        for (std::size_t k = 0; k < row.size(); ++k)
            total[k] += row[k];
    }
    return total;
}

long long order_complex_euler_characteristic(const FinitePoset& p)
{
    auto const counts = chain_counts(p);
    long long chi = 0;
    for (std::size_t k = 0; k < counts.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[k]);
    return chi;
}

} // namespace dipath
