#include "dipath/error.hpp"
#include "dipath/homology.hpp"

#include <algorithm>
#include <numeric>

namespace dipath {

namespace {

using Entry = std::pair<std::uint32_t, std::int64_t>;
using Column = std::vector<Entry>;

constexpr std::size_t dense_cell_cap = 4'000'000;

// a - f * b; false on overflow.
bool sub_mul(std::int64_t a, std::int64_t f, std::int64_t b, std::int64_t& out)
{
    std::int64_t p = 0;
    return !__builtin_mul_overflow(f, b, &p) && !__builtin_sub_overflow(a, p, &out);
}

const Entry* find_row(const Column& col, std::uint32_t row)
{
    auto const it = std::lower_bound(col.begin(), col.end(), row,
                                     [](const Entry& e, std::uint32_t r) { return e.first < r; });
    if (it == col.end() || it->first != row)
        return nullptr;
    return &*it;
}

// target - factor * pivot; false on overflow.
bool axpy(const Column& target, const Column& pivot, std::int64_t factor, Column& out)
{
    out.clear();
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            out.push_back(target[i++]);
        } else if (i == target.size() || pivot[j].first < target[i].first) {
            std::int64_t v = 0;
            if (!sub_mul(0, factor, pivot[j].second, v))
                return false;
            out.emplace_back(pivot[j].first, v);
            ++j;
        } else {
            std::int64_t v = 0;
            if (!sub_mul(target[i].second, factor, pivot[j].second, v))
                return false;
            if (v != 0)
                out.emplace_back(target[i].first, v);
            ++i;
            ++j;
        }
    }
    return true;
}

// Diagonalizes a dense matrix and returns the absolute values of the nonzero
// diagonal entries.
std::vector<BigInt> dense_diagonal(std::vector<std::vector<BigInt>> a)
{
    std::size_t const rows = a.size();
    std::size_t const cols = rows ? a[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::size_t pr = rows;
        std::size_t pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows)
            break;
        while (true) {
            std::swap(a[t], a[pr]);
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(a[i][t], a[i][pc]);
            const BigInt p = a[t][t];
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                BigInt const q = a[i][t] / p;
                if (q != 0)
                    for (std::size_t j = t; j < cols; ++j)
                        a[i][j] -= q * a[t][j];
                if (a[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                BigInt const q = a[t][j] / p;
                if (q != 0)
                    for (std::size_t i = t; i < rows; ++i)
                        a[i][j] -= q * a[i][t];
                if (a[t][j] != 0)
                    clean = false;
            }
            if (clean)
                break;
            // A remainder smaller than the pivot is left in row t or column t.
            pr = t;
            pc = t;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (a[i][t] != 0 && abs(a[i][t]) < abs(a[pr][pc])) {
                    pr = i;
                    pc = t;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a[t][j] != 0 && abs(a[t][j]) < abs(a[pr][pc])) {
                    pr = t;
                    pc = j;
                }
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

} // namespace

std::vector<BigInt> invariant_factors(const SparseIntMatrix& m)
{
    std::vector<Column> cols = m.columns;
    for (Column& c : cols) {
        std::sort(c.begin(), c.end());
        c.erase(std::remove_if(c.begin(), c.end(), [](const Entry& e) { return e.second == 0; }), c.end());
        for (std::size_t i = 1; i < c.size(); ++i)
            if (c[i].first == c[i - 1].first)
                throw ArgumentError("invariant_factors: repeated row in a column");
        for (const Entry& e : c)
            if (e.first >= m.rows)
                throw ArgumentError("invariant_factors: row index out of range");
    }

    // Lazy row -> columns index; entries may be stale and are rechecked.
    std::vector<std::vector<std::uint32_t>> row_cols(m.rows);
    for (std::uint32_t j = 0; j < cols.size(); ++j)
        for (const Entry& e : cols[j])
            row_cols[e.first].push_back(j);

    std::vector<char> alive(cols.size(), 1);
    std::size_t units = 0;

    std::vector<std::uint32_t> order(cols.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t x, std::uint32_t y) { return cols[x].size() < cols[y].size(); });

    std::vector<std::uint32_t> targets;
    std::vector<Column> updated;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::uint32_t const c : order) {
            if (!alive[c] || cols[c].empty())
                continue;
            const Entry* best = nullptr;
            for (const Entry& e : cols[c])
                if ((e.second == 1 || e.second == -1) &&
                    (!best || row_cols[e.first].size() < row_cols[best->first].size()))
                    best = &e;
            if (!best)
                continue;
            std::uint32_t const r = best->first;
            std::int64_t const u = best->second;

            targets.clear();
            for (std::uint32_t const j : row_cols[r])
                if (j != c && alive[j] && find_row(cols[j], r))
                    targets.push_back(j);
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

            updated.resize(targets.size());
            bool ok = true;
            for (std::size_t t = 0; t < targets.size() && ok; ++t) {
                std::int64_t const factor = find_row(cols[targets[t]], r)->second * u;
                ok = axpy(cols[targets[t]], cols[c], factor, updated[t]);
            }
            if (!ok)
                continue;

            for (std::size_t t = 0; t < targets.size(); ++t) {
                std::uint32_t const j = targets[t];
                for (const Entry& e : updated[t])
                    if (!find_row(cols[j], e.first))
                        row_cols[e.first].push_back(j);
                cols[j].swap(updated[t]);
            }
            alive[c] = 0;
            Column().swap(cols[c]);
            std::vector<std::uint32_t>().swap(row_cols[r]);
            ++units;
            progress = true;
        }
    }

    std::vector<std::uint32_t> rest_cols;
    std::vector<std::uint32_t> row_pos(m.rows, UINT32_MAX);
    std::uint32_t rest_rows = 0;
    for (std::uint32_t j = 0; j < cols.size(); ++j) {
        if (!alive[j] || cols[j].empty())
            continue;
        rest_cols.push_back(j);
        for (const Entry& e : cols[j])
            if (row_pos[e.first] == UINT32_MAX)
                row_pos[e.first] = rest_rows++;
    }

    std::vector<BigInt> factors(units, BigInt(1));
    if (!rest_cols.empty()) {
        if (static_cast<double>(rest_rows) * static_cast<double>(rest_cols.size()) > dense_cell_cap)
            throw ResourceError("invariant_factors: residual matrix " + std::to_string(rest_rows) + "x" +
                                std::to_string(rest_cols.size()) + " is too large");
        std::vector<std::vector<BigInt>> dense(rest_rows, std::vector<BigInt>(rest_cols.size()));
        for (std::size_t j = 0; j < rest_cols.size(); ++j)
            for (const Entry& e : cols[rest_cols[j]])
                dense[row_pos[e.first]][j] = e.second;
        std::vector<BigInt> diag = dense_diagonal(std::move(dense));
        // Normalize to a divisibility chain.
        for (std::size_t i = 0; i < diag.size(); ++i)
            for (std::size_t j = i + 1; j < diag.size(); ++j) {
                BigInt const g = gcd(diag[i], diag[j]);
                BigInt const l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        factors.insert(factors.end(), diag.begin(), diag.end());
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

} // namespace dipath
