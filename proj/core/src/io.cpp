#include "dipath/io.hpp"

#include "dipath/error.hpp"

#include <fstream>
#include <sstream>

namespace dipath {

using nlohmann::json;

bool ComplexInput::face_closed() const
{
    if (euclidean)
        return euclidean->is_face_closed();
    return cubical.is_face_closed();
}

ComplexInput ComplexInput::closed() const
{
    ComplexInput out = *this;
    if (euclidean) {
        out.euclidean = euclidean->closure();
        out.cubical = embed(*out.euclidean);
    } else {
        out.cubical = cubical.closure();
    }
    return out;
}

namespace {

Point read_point(const json& j, const char* what)
{
    if (!j.is_array())
        throw ValidationError(std::string(what) + " must be an array of integers");
    Point p;
    for (const json& x : j) {
        if (!x.is_number_integer())
            throw ValidationError(std::string(what) + " must be an array of integers");
        p.push_back(x.get<int>());
    }
    return p;
}

std::vector<ElementaryCube> read_cubes(const json& arr, std::size_t n)
{
    if (!arr.is_array())
        throw ValidationError("cube list must be an array");
    std::vector<ElementaryCube> out;
    for (const json& c : arr) {
        if (!c.is_object() || !c.contains("a") || !c.contains("b"))
            throw ValidationError("each cube needs \"a\" and \"b\"");
        Point a = read_point(c["a"], "a");
        Point b = read_point(c["b"], "b");
        if (a.size() != n || b.size() != n)
            throw ValidationError("cube corner has the wrong dimension");
        try {
            out.push_back(ElementaryCube::make(std::move(a), std::move(b)));
        } catch (const ArgumentError& e) {
            throw ValidationError(e.what());
        }
    }
    return out;
}

} // namespace

ComplexInput parse_complex(const json& doc)
{
    if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string())
        throw ValidationError("input must be an object with a \"type\" field");
    std::string const type = doc["type"].get<std::string>();
    ComplexInput in;
    if (type == "cubical") {
        if (!doc.contains("order") || !doc["order"].is_array())
            throw ValidationError("cubical input needs an \"order\" array");
        std::vector<std::string> names;
        for (const json& x : doc["order"]) {
            if (!x.is_string())
                throw ValidationError("labels must be strings");
            names.push_back(x.get<std::string>());
        }
        LabelSet labels(std::move(names));
        if (!doc.contains("cubes") || !doc["cubes"].is_array())
            throw ValidationError("cubical input needs a \"cubes\" array");
        std::vector<Cube> cubes;
        for (const json& w : doc["cubes"]) {
            if (!w.is_string())
                throw ValidationError("cubes must be words over {0,1,*}");
            cubes.push_back(parse_word(w.get<std::string>(), labels.size()));
        }
        in.kind = ComplexInput::Kind::cubical;
        in.cubical = CubicalComplex(std::move(labels), std::move(cubes));
        return in;
    }
    if (type == "euclidean") {
        if (!doc.contains("k"))
            throw ValidationError("euclidean input needs \"k\"");
        Point const k = read_point(doc["k"], "k");
        for (int const x : k)
            if (x < 0)
                throw ValidationError("k must be nonnegative");
        bool const has_ex = doc.contains("exclude");
        bool const has_cubes = doc.contains("cubes");
        if (has_ex == has_cubes)
            throw ValidationError("euclidean input needs exactly one of \"exclude\" and \"cubes\"");
        try {
            EuclideanComplex e = has_ex ? EuclideanComplex::box(k).without(read_cubes(doc["exclude"], k.size()))
                                        : EuclideanComplex(k, read_cubes(doc["cubes"], k.size()));
            in.kind = ComplexInput::Kind::euclidean;
            in.cubical = embed(e);
            in.euclidean = std::move(e);
        } catch (const ArgumentError& e) {
            throw ValidationError(e.what());
        }
        return in;
    }
    throw ValidationError("unknown input type \"" + type + "\"");
}

ComplexInput read_complex_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ValidationError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("JSON parse error: ") + e.what());
    }
    return parse_complex(doc);
}

json to_json(const CubicalComplex& k)
{
    json cubes = json::array();
    for (const Cube& c : k.cubes())
        cubes.push_back(format_word(c, k.labels().size()));
    return json{{"type", "cubical"}, {"order", k.labels().names()}, {"cubes", cubes}};
}

json to_json(const EuclideanComplex& k)
{
    json cubes = json::array();
    for (const ElementaryCube& c : k.cubes())
        cubes.push_back(json{{"a", c.a}, {"b", c.b}});
    return json{{"type", "euclidean"}, {"k", k.k()}, {"cubes", cubes}};
}

json to_json(const BettiReport& r)
{
    json torsion = json::array();
    for (auto const& [d, order] : r.torsion) {
        if (order <= BigInt(INT64_MAX))
            torsion.push_back(json::array({d, static_cast<std::int64_t>(order)}));
        else
            torsion.push_back(json::array({d, order.str()}));
    }
    return json{{"betti", r.betti}, {"torsion", torsion}, {"method", r.method}};
}

json to_json(const CriticalRoute& r)
{
    return json{{"q", r.q()}, {"dim", r.dim()}, {"a", r.a}, {"b", r.b}};
}

json dim_counts(const std::vector<std::size_t>& counts)
{
    json out = json::array();
    for (std::size_t d = 0; d < counts.size(); ++d)
        if (counts[d] > 0)
            out.push_back(json{{"dim", d}, {"count", counts[d]}});
    return out;
}

CubicalComplex relabel(const CubicalComplex& k, const std::vector<std::string>& order)
{
    const LabelSet& old = k.labels();
    if (order.size() != old.size())
        throw ValidationError("order must list every label exactly once");
    std::vector<int> target(old.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto const j = old.index_of(order[i]);
        if (!j || target[*j] != -1)
            throw ValidationError("order must list every label exactly once");
        target[*j] = static_cast<int>(i);
    }
    auto const move = [&target](LabelMask m) {
        LabelMask out = 0;
        for (int const i : indices(m))
            out |= bit(target[static_cast<std::size_t>(i)]);
        return out;
    };
    std::vector<Cube> cubes;
    for (const Cube& c : k.cubes())
        cubes.push_back(Cube{move(c.ones), move(c.stars)});
    return CubicalComplex(LabelSet(order), std::move(cubes));
}

} // namespace dipath
