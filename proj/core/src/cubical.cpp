#include "dipath/cubical.hpp"

#include "dipath/error.hpp"

#include <algorithm>
#include <bit>

namespace dipath {

int max_index(LabelMask mask)
{
    return mask == 0 ? -1 : 63 - std::countl_zero(mask);
}

int popcount(LabelMask mask)
{
    return std::popcount(mask);
}

std::vector<int> indices(LabelMask mask)
{
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

LabelSet::LabelSet(std::vector<std::string> names)
    : names_(std::move(names))
{
    if (names_.size() > max_labels)
        throw ArgumentError("label set: at most 64 labels supported, got " + std::to_string(names_.size()));
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const std::string& n = names_[i];
        if (n.empty())
            throw ValidationError("label set: empty label name");
        if (n.find_first_of(",| \t\r\n") != std::string::npos)
            throw ValidationError("label set: label '" + n + "' contains a reserved character");
        if (!index_.emplace(n, i).second)
            throw ValidationError("label set: duplicate label '" + n + "'");
    }
}

LabelSet LabelSet::numbered(std::size_t n)
{
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back(std::to_string(i));
    return LabelSet(std::move(names));
}

const std::string& LabelSet::name(std::size_t i) const
{
    if (i >= names_.size())
        throw std::out_of_range("label index " + std::to_string(i) + " out of range");
    return names_[i];
}

std::optional<std::size_t> LabelSet::index_of(std::string_view name) const
{
    auto const it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::string LabelSet::format(LabelMask mask) const
{
    std::string out;
    for (int const i : indices(mask)) {
        if (!out.empty())
            out += ',';
        out += name(static_cast<std::size_t>(i));
    }
    return out;
}

LabelMask LabelSet::parse(std::string_view text) const
{
    LabelMask mask = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t const next = std::min(text.find(',', pos), text.size());
        std::string_view const token = text.substr(pos, next - pos);
        auto const i = index_of(token);
        if (!i)
            throw ValidationError("unknown label '" + std::string(token) + "'");
        if (mask & bit(static_cast<int>(*i)))
            throw ValidationError("label '" + std::string(token) + "' repeated");
        mask |= bit(static_cast<int>(*i));
        pos = next + 1;
    }
    return mask;
}

LabelSet LabelSet::subset(LabelMask mask) const
{
    std::vector<std::string> names;
    for (int const i : indices(mask & all()))
        names.push_back(names_[static_cast<std::size_t>(i)]);
    return LabelSet(std::move(names));
}

Cube face(const Cube& c, int i, int eps)
{
    if (i < 1 || i > c.dim())
        throw std::out_of_range("face index " + std::to_string(i) + " outside 1.." + std::to_string(c.dim()));
    if (eps != 0 && eps != 1)
        throw ArgumentError("face: eps must be 0 or 1");
    LabelMask stars = c.stars;
    for (int k = 1; k < i; ++k)
        stars &= stars - 1;
    LabelMask const b = stars & (~stars + 1);
    return Cube{eps ? (c.ones | b) : c.ones, c.stars & ~b};
}

std::pair<Cube, Cube> end_vertices(const Cube& c)
{
    return {Cube{c.ones, 0}, Cube{c.ones | c.stars, 0}};
}

Cube make_cube(LabelMask all, LabelMask b1, LabelMask bstar, LabelMask b0)
{
    if ((b1 & bstar) || (b1 & b0) || (bstar & b0) || (b1 | bstar | b0) != all)
        throw ArgumentError("make_cube: (B1, B*, B0) is not a partition of the label set");
    return Cube{b1, bstar};
}

bool is_face(const Cube& small, const Cube& big)
{
    if (small.stars & ~big.stars)
        return false;
    return ((small.ones ^ big.ones) & ~big.stars) == 0;
}

std::string format_word(const Cube& c, std::size_t n)
{
    std::string w(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
        LabelMask const b = bit(static_cast<int>(i));
        if (c.stars & b)
            w[i] = '*';
        else if (c.ones & b)
            w[i] = '1';
    }
    return w;
}

Cube parse_word(std::string_view word, std::size_t n)
{
    if (word.size() != n)
        throw ValidationError("cube word '" + std::string(word) + "' has length " + std::to_string(word.size()) +
                              ", expected " + std::to_string(n));
    Cube c;
    for (std::size_t i = 0; i < n; ++i) {
        switch (word[i]) {
        case '0':
            break;
        case '1':
            c.ones |= bit(static_cast<int>(i));
            break;
        case '*':
            c.stars |= bit(static_cast<int>(i));
            break;
        default:
            throw ValidationError("cube word '" + std::string(word) + "' contains '" + std::string(1, word[i]) + "'");
        }
    }
    return c;
}

bool word_less(const Cube& x, const Cube& y)
{
    if (x.dim() != y.dim())
        return x.dim() < y.dim();
    LabelMask const diff = (x.ones ^ y.ones) | (x.stars ^ y.stars);
    if (diff == 0)
        return false;
    LabelMask const b = diff & (~diff + 1);
    // Character order of the word alphabet: '*' < '0' < '1'.
    auto const rank = [b](const Cube& c) { return (c.stars & b) ? 0 : (c.ones & b) ? 2 : 1; };
    return rank(x) < rank(y);
}

// ---------------------------------------------------------------------------

CubicalComplex::CubicalComplex(LabelSet labels, std::vector<Cube> cubes)
    : labels_(std::move(labels))
{
    LabelMask const all = labels_.all();
    for (const Cube& c : cubes) {
        if ((c.ones | c.stars) & ~all || (c.ones & c.stars))
            throw ValidationError("cube outside the label set");
        set_.insert(c);
    }
    sorted_.assign(set_.begin(), set_.end());
    std::sort(sorted_.begin(), sorted_.end(), word_less);
}

CubicalComplex CubicalComplex::full(LabelSet labels)
{
    std::size_t const n = labels.size();
    if (n > 16)
        throw ResourceError("full cube over " + std::to_string(n) + " labels is too large");
    std::vector<Cube> cubes;
    LabelMask const all = labels.all();
    // Enumerate (stars, ones) with ones inside the complement of stars.
    for (LabelMask stars = 0;; stars = (stars - all) & all) {
        LabelMask const rest = all & ~stars;
        for (LabelMask ones = 0;; ones = (ones - rest) & rest) {
            cubes.push_back(Cube{ones, stars});
            if (ones == rest)
                break;
        }
        if (stars == all)
            break;
    }
    return CubicalComplex(std::move(labels), std::move(cubes));
}

CubicalComplex CubicalComplex::from_generators(LabelSet labels, std::vector<Cube> generators)
{
    return CubicalComplex(std::move(labels), std::move(generators)).closure();
}

int CubicalComplex::max_dim() const
{
    return sorted_.empty() ? -1 : sorted_.back().dim();
}

std::vector<std::size_t> CubicalComplex::profile() const
{
    std::vector<std::size_t> out(static_cast<std::size_t>(max_dim() + 1), 0);
    for (const Cube& c : sorted_)
        ++out[static_cast<std::size_t>(c.dim())];
    return out;
}

bool CubicalComplex::is_face_closed() const
{
    for (const Cube& c : sorted_) {
        for (LabelMask s = c.stars; s; s &= s - 1) {
            LabelMask const b = s & (~s + 1);
            if (!contains(c.ones, c.stars & ~b) || !contains(c.ones | b, c.stars & ~b))
                return false;
        }
    }
    return true;
}

CubicalComplex CubicalComplex::closure() const
{
    std::unordered_set<Cube, CubeHash> seen;
    std::vector<Cube> stack(sorted_.begin(), sorted_.end());
    while (!stack.empty()) {
        Cube const c = stack.back();
        stack.pop_back();
        if (!seen.insert(c).second)
            continue;
        for (LabelMask s = c.stars; s; s &= s - 1) {
            LabelMask const b = s & (~s + 1);
            stack.push_back(Cube{c.ones, c.stars & ~b});
            stack.push_back(Cube{c.ones | b, c.stars & ~b});
        }
    }
    return CubicalComplex(labels_, std::vector<Cube>(seen.begin(), seen.end()));
}

CubicalComplex CubicalComplex::without(std::span<const Cube> open_cells) const
{
    std::vector<Cube> kept;
    for (const Cube& c : sorted_) {
        bool const hit = std::any_of(open_cells.begin(), open_cells.end(),
                                     [&](const Cube& e) { return is_face(e, c); });
        if (!hit)
            kept.push_back(c);
    }
    return CubicalComplex(labels_, std::move(kept));
}

bool validate(const CubicalComplex& k)
{
    return k.is_face_closed();
}

namespace {

// Packs the bits of x selected by mask into the low bits.
LabelMask compress(LabelMask x, LabelMask mask)
{
    LabelMask out = 0;
    int k = 0;
    for (int const i : indices(mask)) {
        if (x & bit(i))
            out |= bit(k);
        ++k;
    }
    return out;
}

} // namespace

CubicalComplex restrict(const CubicalComplex& k, LabelMask b, int eps)
{
    if (b & ~k.all())
        throw ArgumentError("restrict: B is not a subset of the label set");
    if (eps != 0 && eps != 1)
        throw ArgumentError("restrict: eps must be 0 or 1");
    LabelMask const outside = k.all() & ~b;
    std::vector<Cube> cubes;
    for (const Cube& c : k.cubes()) {
        if (c.stars & outside)
            continue;
        if ((c.ones & outside) != (eps ? outside : 0))
            continue;
        cubes.push_back(Cube{compress(c.ones, b), compress(c.stars, b)});
    }
    return CubicalComplex(k.labels().subset(b), std::move(cubes));
}

CubicalComplex skeleton(const CubicalComplex& k, int q)
{
    if (q < 0)
        throw ArgumentError("skeleton: q must be nonnegative");
    std::vector<Cube> cubes;
    for (const Cube& c : k.cubes())
        if (c.dim() <= q)
            cubes.push_back(c);
    return CubicalComplex(k.labels(), std::move(cubes));
}

ComplexView ComplexView::restrict(LabelMask t, int eps) const
{
    if (t & ~active_)
        throw ArgumentError("view restrict: T is not a subset of the active labels");
    return ComplexView(*base_, t, eps ? (fixed_ones_ | (active_ & ~t)) : fixed_ones_);
}

} // namespace dipath
