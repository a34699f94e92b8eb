#include "dipath/euclid.hpp"

#include "dipath/error.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace dipath {

std::string to_string(const Point& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0)
            s += ',';
        s += std::to_string(p[i]);
    }
    return s + ')';
}

ElementaryCube ElementaryCube::make(Point a, Point b)
{
    if (a.size() != b.size())
        throw ArgumentError("elementary cube: corners of different dimension");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] - a[i] < 0 || b[i] - a[i] > 1)
            throw ArgumentError("elementary cube: need 0 <= b - a <= 1, got " + to_string(a) + ", " + to_string(b));
    return ElementaryCube{std::move(a), std::move(b)};
}

ElementaryCube ElementaryCube::vertex(Point a)
{
    Point b = a;
    return ElementaryCube{std::move(a), std::move(b)};
}

int ElementaryCube::dim() const
{
    return std::popcount(dir());
}

std::uint32_t ElementaryCube::dir() const
{
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != a[i])
            d |= std::uint32_t{1} << i;
    return d;
}

bool is_face(const ElementaryCube& small, const ElementaryCube& big)
{
    if (small.n() != big.n())
        return false;
    for (std::size_t i = 0; i < small.n(); ++i)
        if (small.a[i] < big.a[i] || small.b[i] > big.b[i])
            return false;
    return true;
}

namespace {

bool cube_less(const ElementaryCube& x, const ElementaryCube& y)
{
    int const dx = x.dim();
    int const dy = y.dim();
    if (dx != dy)
        return dx < dy;
    return x < y;
}

// Calls f(a, dir) for every elementary cube of [0, k].
void for_each_box_cube(const Point& k, const std::function<void(const Point&, std::uint32_t)>& f)
{
    std::size_t const n = k.size();
    Point a(n, 0);
    while (true) {
        std::uint32_t free = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] < k[i])
                free |= std::uint32_t{1} << i;
        for (std::uint32_t d = free;; d = (d - 1) & free) {
            f(a, d);
            if (d == 0)
                break;
        }
        std::size_t i = 0;
        while (i < n && a[i] == k[i]) {
            a[i] = 0;
            ++i;
        }
        if (i == n)
            break;
        ++a[i];
    }
}

ElementaryCube cube_at(const Point& a, std::uint32_t dir)
{
    Point b = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (dir >> i & 1u)
            ++b[i];
    return ElementaryCube{a, std::move(b)};
}

} // namespace

EuclideanComplex::EuclideanComplex(Point k, std::vector<ElementaryCube> cubes)
    : k_(std::move(k))
{
    if (k_.size() > 20)
        throw ArgumentError("euclidean complex: at most 20 coordinates supported");
    double volume = 1;
    for (int const x : k_) {
        if (x < 0)
            throw ArgumentError("euclidean complex: corner must be nonnegative");
        volume *= x + 1;
    }
    if (volume * static_cast<double>(std::uint64_t{1} << k_.size()) > 1e15)
        throw ResourceError("euclidean complex: box too large");
    for (const ElementaryCube& c : cubes) {
        if (c.n() != k_.size() || !inside(c))
            throw ArgumentError("euclidean complex: cube [" + to_string(c.a) + "," + to_string(c.b) +
                                "] is not in the box");
        if (keys_.insert(key(c.a, c.dir())).second)
            sorted_.push_back(c);
    }
    std::sort(sorted_.begin(), sorted_.end(), cube_less);
}

bool EuclideanComplex::inside(const ElementaryCube& c) const
{
    for (std::size_t i = 0; i < k_.size(); ++i) {
        if (c.a[i] < 0 || c.b[i] > k_[i] || c.b[i] - c.a[i] < 0 || c.b[i] - c.a[i] > 1)
            return false;
    }
    return true;
}

std::uint64_t EuclideanComplex::key(const Point& a, std::uint32_t dir) const
{
    std::uint64_t h = 0;
    for (std::size_t i = k_.size(); i-- > 0;)
        h = h * static_cast<std::uint64_t>(k_[i] + 1) + static_cast<std::uint64_t>(a[i]);
    return (h << k_.size()) | dir;
}

EuclideanComplex EuclideanComplex::box(Point k)
{
    double count = 1;
    for (int const x : k)
        count *= 2.0 * x + 1;
    if (count > 5e6)
        throw ResourceError("box " + to_string(k) + " has too many cubes");
    std::vector<ElementaryCube> cubes;
    for_each_box_cube(k, [&](const Point& a, std::uint32_t d) { cubes.push_back(cube_at(a, d)); });
    return EuclideanComplex(std::move(k), std::move(cubes));
}

EuclideanComplex EuclideanComplex::from_cubes(Point k, std::vector<ElementaryCube> cubes)
{
    return EuclideanComplex(std::move(k), std::move(cubes)).closure();
}

int EuclideanComplex::max_dim() const
{
    return sorted_.empty() ? -1 : sorted_.back().dim();
}

bool EuclideanComplex::contains(const ElementaryCube& c) const
{
    if (c.n() != k_.size() || !inside(c))
        return false;
    return keys_.contains(key(c.a, c.dir()));
}

bool EuclideanComplex::contains(const Point& a, std::uint32_t dir) const
{
    if (a.size() != k_.size())
        return false;
    for (std::size_t i = 0; i < k_.size(); ++i) {
        int const top = a[i] + static_cast<int>(dir >> i & 1u);
        if (a[i] < 0 || top > k_[i])
            return false;
    }
    return keys_.contains(key(a, dir));
}

bool EuclideanComplex::is_face_closed() const
{
    for (const ElementaryCube& c : sorted_) {
        std::uint32_t const d = c.dir();
        for (std::size_t i = 0; i < k_.size(); ++i) {
            if (!(d >> i & 1u))
                continue;
            std::uint32_t const d2 = d & ~(std::uint32_t{1} << i);
            Point up = c.a;
            ++up[i];
            if (!contains(c.a, d2) || !contains(up, d2))
                return false;
        }
    }
    return true;
}

EuclideanComplex EuclideanComplex::closure() const
{
    std::vector<ElementaryCube> out;
    std::unordered_set<std::uint64_t> seen;
    std::vector<ElementaryCube> stack(sorted_.begin(), sorted_.end());
    while (!stack.empty()) {
        ElementaryCube c = std::move(stack.back());
        stack.pop_back();
        std::uint32_t const d = c.dir();
        if (!seen.insert(key(c.a, d)).second)
            continue;
        for (std::size_t i = 0; i < k_.size(); ++i) {
            if (!(d >> i & 1u))
                continue;
            ElementaryCube lo = c;
            lo.b[i] = lo.a[i];
            ElementaryCube hi = c;
            hi.a[i] = hi.b[i];
            stack.push_back(std::move(lo));
            stack.push_back(std::move(hi));
        }
        out.push_back(std::move(c));
    }
    return EuclideanComplex(k_, std::move(out));
}

EuclideanComplex EuclideanComplex::without(const std::vector<ElementaryCube>& open_cells) const
{
    for (const ElementaryCube& e : open_cells)
        if (e.n() != k_.size() || !inside(e))
            throw ArgumentError("excluded cube [" + to_string(e.a) + "," + to_string(e.b) + "] is not in the box");
    std::vector<ElementaryCube> kept;
    for (const ElementaryCube& c : sorted_) {
        bool const hit = std::any_of(open_cells.begin(), open_cells.end(),
                                     [&](const ElementaryCube& e) { return is_face(e, c); });
        if (!hit)
            kept.push_back(c);
    }
    return EuclideanComplex(k_, std::move(kept));
}

EuclideanComplex skeleton(const EuclideanComplex& k, int q)
{
    if (q < 0)
        throw ArgumentError("skeleton: q must be nonnegative");
    std::vector<ElementaryCube> cubes;
    for (const ElementaryCube& c : k.cubes())
        if (c.dim() <= q)
            cubes.push_back(c);
    return EuclideanComplex(k.k(), std::move(cubes));
}

LabelSet box_labels(const Point& k)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k.size(); ++i)
        for (int j = 1; j <= k[i]; ++j)
            names.push_back(std::to_string(i + 1) + "." + std::to_string(j));
    return LabelSet(std::move(names));
}

int box_label_index(const Point& k, int i, int j)
{
    if (i < 1 || static_cast<std::size_t>(i) > k.size() || j < 1 || j > k[static_cast<std::size_t>(i) - 1])
        throw std::out_of_range("box label (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    int offset = 0;
    for (int t = 0; t < i - 1; ++t)
        offset += k[static_cast<std::size_t>(t)];
    return offset + j - 1;
}

Cube embed_cube(const Point& k, const ElementaryCube& c)
{
    if (c.n() != k.size())
        throw ArgumentError("embed: cube and box have different dimension");
    Cube out;
    int idx = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (c.a[i] < 0 || c.b[i] > k[i])
            throw ArgumentError("embed: cube [" + to_string(c.a) + "," + to_string(c.b) + "] is not in the box");
        for (int j = 1; j <= k[i]; ++j, ++idx) {
            if (j <= c.a[i])
                out.ones |= bit(idx);
            else if (j == c.b[i] && c.a[i] < j)
                out.stars |= bit(idx);
        }
    }
    return out;
}

CubicalComplex embed(const EuclideanComplex& k)
{
    LabelSet labels = box_labels(k.k());
    std::vector<Cube> cubes;
    cubes.reserve(k.size());
    for (const ElementaryCube& c : k.cubes())
        cubes.push_back(embed_cube(k.k(), c));
    return CubicalComplex(std::move(labels), std::move(cubes));
}

bool MultisetPartition::proper() const
{
    for (auto const& b : blocks)
        for (int const x : b)
            if (x > 1)
                return false;
    return true;
}

namespace {

// (coordinate, level) of each label index of the box, both from 1.
std::vector<std::pair<int, int>> label_coordinates(const Point& k)
{
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < k.size(); ++i)
        for (int j = 1; j <= k[i]; ++j)
            out.emplace_back(static_cast<int>(i) + 1, j);
    return out;
}

std::vector<int> counts_of(LabelMask mask, const std::vector<std::pair<int, int>>& coords, std::size_t n)
{
    std::vector<int> c(n, 0);
    for (int const x : indices(mask))
        ++c[static_cast<std::size_t>(coords[static_cast<std::size_t>(x)].first) - 1];
    return c;
}

LabelMask box_mask(const Point& k)
{
    int total = 0;
    for (int const x : k)
        total += x;
    if (total > 64)
        throw ArgumentError("box has more than 64 labels");
    return low_mask(static_cast<std::size_t>(total));
}

} // namespace

MultisetPartition project(const OrderedPartition& lambda, const Point& k)
{
    if (lambda.support() & ~box_mask(k))
        throw ArgumentError("project: partition uses labels outside the box");
    auto const coords = label_coordinates(k);
    MultisetPartition out;
    for (LabelMask const b : lambda.blocks)
        out.blocks.push_back(counts_of(b, coords, k.size()));
    return out;
}

OrderedPartition lift(const MultisetPartition& mu, const Point& k)
{
    if (!mu.proper())
        throw ArgumentError("lift: partition is not proper");
    std::vector<int> used(k.size(), 0);
    OrderedPartition out;
    for (auto const& block : mu.blocks) {
        if (block.size() != k.size())
            throw ArgumentError("lift: block has the wrong length");
        LabelMask b = 0;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (block[i] < 0)
                throw ArgumentError("lift: negative multiplicity");
            if (block[i] == 0)
                continue;
            ++used[i];
            if (used[i] > k[i])
                throw ArgumentError("lift: blocks exceed the box");
            b |= bit(box_label_index(k, static_cast<int>(i) + 1, used[i]));
        }
        if (b == 0)
            throw ArgumentError("lift: empty block");
        out.blocks.push_back(b);
    }
    for (std::size_t i = 0; i < k.size(); ++i)
        if (used[i] != k[i])
            throw ArgumentError("lift: blocks do not sum to the corner");
    return out;
}

bool respects_box_order(const OrderedPartition& lambda, const Point& k)
{
    auto const coords = label_coordinates(k);
    std::vector<int> last_level(k.size(), 0);
    for (LabelMask const b : lambda.blocks) {
        std::vector<int> seen(k.size(), 0);
        for (int const x : indices(b)) {
            if (static_cast<std::size_t>(x) >= coords.size())
                return false;
            auto const [i, j] = coords[static_cast<std::size_t>(x)];
            auto const c = static_cast<std::size_t>(i) - 1;
            if (seen[c] || j != last_level[c] + 1)
                return false;
            seen[c] = 1;
            last_level[c] = j;
        }
    }
    return true;
}

std::vector<ElementaryCube> minimal_line_cubes(const Point& a, const Point& b)
{
    if (a.size() != b.size())
        throw ArgumentError("minimal line: points of different dimension");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            throw ArgumentError("minimal line: need a <= b, got " + to_string(a) + ", " + to_string(b));
    std::vector<ElementaryCube> out;
    Point cur = a;
    out.push_back(ElementaryCube::vertex(cur));
    for (std::size_t i = 0; i < a.size(); ++i) {
        while (cur[i] < b[i]) {
            Point next = cur;
            ++next[i];
            out.push_back(ElementaryCube{cur, next});
            out.push_back(ElementaryCube::vertex(next));
            cur = std::move(next);
        }
    }
    return out;
}

EuclideanComplex minimal_line(const Point& a, const Point& b)
{
    for (int const x : a)
        if (x < 0)
            throw ArgumentError("minimal line: points must be nonnegative");
    return EuclideanComplex(b, minimal_line_cubes(a, b));
}

int CriticalRoute::dim() const
{
    int d = 0;
    for (std::size_t j = 1; j < b.size(); ++j) {
        int s = 0;
        for (std::size_t i = 0; i < b[j].size(); ++i)
            s += b[j][i] - a[j - 1][i];
        d += s - 2;
    }
    return d;
}

std::string to_string(const CriticalRoute& r)
{
    auto list = [](const std::vector<Point>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0)
                s += ',';
            s += to_string(v[i]);
        }
        return s + ']';
    };
    return "a=" + list(r.a) + ";b=" + list(r.b);
}

namespace {

bool line_in(const EuclideanComplex& k, const Point& from, const Point& to)
{
    Point cur = from;
    if (!k.contains(cur, 0))
        return false;
    for (std::size_t i = 0; i < from.size(); ++i) {
        while (cur[i] < to[i]) {
            if (!k.contains(cur, std::uint32_t{1} << i))
                return false;
            ++cur[i];
            if (!k.contains(cur, 0))
                return false;
        }
    }
    return true;
}

int top_moved(const Point& from, const Point& to)
{
    int top = -1;
    for (std::size_t i = 0; i < from.size(); ++i)
        if (to[i] > from[i])
            top = static_cast<int>(i);
    return top;
}

// Conditions on one missing cube [a, a + dir] entered after the line from b.
bool block_ok(const EuclideanComplex& k, const Point& b, const Point& a, std::uint32_t dir)
{
    if (dir == 0 || k.contains(a, dir))
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((dir >> i & 1u) && a[i] + 1 > k.k()[i])
            return false;
    int const m = 31 - std::countl_zero(dir);
    if (top_moved(b, a) > m)
        return false;
    std::uint32_t const em = std::uint32_t{1} << m;
    Point up = a;
    ++up[static_cast<std::size_t>(m)];
    return k.contains(a, em) && k.contains(up, dir & ~em);
}

struct Suffix {
    std::vector<Point> a;
    std::vector<Point> b;
};

class RouteSearch {
public:
    explicit RouteSearch(const EuclideanComplex& k) : k_(k) {}

    const std::vector<Suffix>& from(const Point& b)
    {
        auto const it = memo_.find(b);
        if (it != memo_.end())
            return it->second;

        std::vector<Suffix> out;
        const Point& top = k_.k();
        std::size_t const n = top.size();
        Point a = b;
        while (true) {
            if (line_in(k_, b, a)) {
                if (a == top)
                    out.push_back(Suffix{{a}, {}});
                std::uint32_t free = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (a[i] < top[i])
                        free |= std::uint32_t{1} << i;
                for (std::uint32_t d = free; d; d = (d - 1) & free) {
                    if (!block_ok(k_, b, a, d))
                        continue;
                    Point next = a;
                    for (std::size_t i = 0; i < n; ++i)
                        if (d >> i & 1u)
                            ++next[i];
                    for (const Suffix& s : from(next)) {
                        Suffix t;
                        t.a.reserve(s.a.size() + 1);
                        t.a.push_back(a);
                        t.a.insert(t.a.end(), s.a.begin(), s.a.end());
                        t.b.reserve(s.b.size() + 1);
                        t.b.push_back(next);
                        t.b.insert(t.b.end(), s.b.begin(), s.b.end());
                        out.push_back(std::move(t));
                    }
                }
            }
            std::size_t i = 0;
            while (i < n && a[i] == top[i]) {
                a[i] = b[i];
                ++i;
            }
            if (i == n)
                break;
            ++a[i];
        }
        return memo_.emplace(b, std::move(out)).first->second;
    }

private:
    const EuclideanComplex& k_;
    std::map<Point, std::vector<Suffix>> memo_;
};

} // namespace

std::vector<CriticalRoute> enumerate_critical_routes(const EuclideanComplex& k)
{
    std::vector<CriticalRoute> out;
    Point const origin(k.n(), 0);
    RouteSearch search(k);
    for (const Suffix& s : search.from(origin)) {
        CriticalRoute r;
        r.a = s.a;
        r.b.push_back(origin);
        r.b.insert(r.b.end(), s.b.begin(), s.b.end());
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_critical_route(const EuclideanComplex& k, const CriticalRoute& r)
{
    std::size_t const n = k.n();
    if (r.a.empty() || r.a.size() != r.b.size())
        return false;
    for (const Point& p : r.a)
        if (p.size() != n)
            return false;
    for (const Point& p : r.b)
        if (p.size() != n)
            return false;
    if (r.b[0] != Point(n, 0) || r.a.back() != k.k())
        return false;
    std::size_t const q = r.q();
    for (std::size_t j = 0; j <= q; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            if (r.b[j][i] > r.a[j][i])
                return false;
        if (!line_in(k, r.b[j], r.a[j]))
            return false;
    }
    for (std::size_t j = 1; j <= q; ++j) {
        const Point& a = r.a[j - 1];
        const Point& b = r.b[j];
        std::uint32_t dir = 0;
        for (std::size_t i = 0; i < n; ++i) {
            int const step = b[i] - a[i];
            if (step < 0 || step > 1)
                return false;
            if (step == 1)
                dir |= std::uint32_t{1} << i;
        }
        if (!block_ok(k, r.b[j - 1], a, dir))
            return false;
    }
    return true;
}

CriticalSequence route_to_sequence(const CriticalRoute& r, const EuclideanComplex& k)
{
    if (!is_critical_route(k, r))
        throw ValidationError("route_to_sequence: not a critical route: " + to_string(r));
    const Point& box = k.k();
    auto const interval = [&box](const Point& lo, const Point& hi) {
        LabelMask m = 0;
        for (std::size_t i = 0; i < box.size(); ++i)
            for (int t = lo[i] + 1; t <= hi[i]; ++t)
                m |= bit(box_label_index(box, static_cast<int>(i) + 1, t));
        return m;
    };
    CriticalSequence cs;
    std::size_t const q = r.q();
    for (std::size_t j = 0; j <= q; ++j)
        cs.f.push_back(interval(r.b[j], r.a[j]));
    for (std::size_t j = 1; j <= q; ++j)
        cs.e.push_back(interval(r.a[j - 1], r.b[j]));
    return cs;
}

CriticalRoute sequence_to_route(const CriticalSequence& cs, const EuclideanComplex& k)
{
    CubicalComplex const embedded = embed(k);
    if (!is_critical_sequence(ComplexView(embedded), cs))
        throw ValidationError("sequence_to_route: not a critical sequence of the embedded complex");
    const Point& box = k.k();
    auto const coords = label_coordinates(box);
    auto const corner = [&](LabelMask done) {
        Point p = counts_of(done, coords, box.size());
        for (std::size_t i = 0; i < box.size(); ++i)
            for (int t = 1; t <= box[i]; ++t) {
                bool const in = (done & bit(box_label_index(box, static_cast<int>(i) + 1, t))) != 0;
                if (in != (t <= p[i]))
                    throw ValidationError("sequence_to_route: prefix is not a lower set of the box");
            }
        return p;
    };
    CriticalRoute r;
    r.b.push_back(Point(box.size(), 0));
    LabelMask done = cs.f[0];
    for (std::size_t j = 0; j < cs.e.size(); ++j) {
        r.a.push_back(corner(done));
        done |= cs.e[j];
        r.b.push_back(corner(done));
        done |= cs.f[j + 1];
    }
    r.a.push_back(corner(done));
    return r;
}

bool in_sandwich(const EuclideanComplex& k)
{
    std::size_t const n = k.n();
    if (n < 2)
        return false;
    bool ok = true;
    for_each_box_cube(k.k(), [&](const Point& a, std::uint32_t d) {
        if (ok && static_cast<std::size_t>(std::popcount(d)) < n && !k.contains(a, d))
            ok = false;
    });
    return ok;
}

std::vector<Point> cube_sequence_of_route(const CriticalRoute& r, const EuclideanComplex& k)
{
    if (!in_sandwich(k))
        throw PreconditionError("cube sequences need the (n-1)-skeleton of the box inside K and n >= 2");
    return std::vector<Point>(r.b.begin() + 1, r.b.end());
}

CriticalRoute route_of_cube_sequence(const std::vector<Point>& corners, const EuclideanComplex& k)
{
    if (!in_sandwich(k))
        throw PreconditionError("cube sequences need the (n-1)-skeleton of the box inside K and n >= 2");
    CriticalRoute r;
    r.b.push_back(Point(k.n(), 0));
    for (const Point& p : corners) {
        if (p.size() != k.n())
            throw ValidationError("cube sequence: point of wrong dimension");
        Point a = p;
        for (int& x : a)
            --x;
        r.a.push_back(std::move(a));
        r.b.push_back(p);
    }
    r.a.push_back(k.k());
    if (!is_critical_route(k, r))
        throw ValidationError("cube sequence does not give a critical route");
    return r;
}

} // namespace dipath
