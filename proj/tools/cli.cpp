#include "cli.hpp"

#include "dipath/error.hpp"
#include "dipath/homology.hpp"
#include "dipath/io.hpp"
#include "dipath/morse.hpp"
#include "dipath/partitions.hpp"
#include "dipath/wk.hpp"

#include <nlohmann/json.hpp>

#include <random>
#include <sstream>

namespace dipath::cli {

using nlohmann::json;

namespace {

struct Loaded {
    ComplexInput input;
    json order;
};

std::vector<std::string> split_order(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

Loaded load(const JobSpec& job, bool close)
{
    if (job.input.empty())
        throw ValidationError("--input is required for command " + job.command);
    Loaded l{read_complex_file(job.input), json()};
    if (job.order) {
        if (l.input.euclidean)
            throw ValidationError("--order applies to cubical input only; Euclidean labels follow the box order");
        l.input.cubical = relabel(l.input.cubical, split_order(*job.order));
    }
    if (close)
        l.input = l.input.closed();
    l.order = l.input.cubical.labels().names();
    return l;
}

json cells_json(const CriticalCells& cells, const LabelSet& labels)
{
    json out = json::array();
    for (std::size_t d = 0; d < cells.size(); ++d)
        for (const OrderedPartition& p : cells[d])
            out.push_back(json{{"dim", d}, {"partition", to_string(p, labels)}});
    return out;
}

int cmd_validate(const JobSpec& job, std::ostream& out)
{
    Loaded const l = load(job, false);
    json doc{{"command", "validate"}, {"order", l.order}};
    bool const closed = l.input.face_closed();
    doc["face_closed"] = closed;
    if (l.input.euclidean) {
        const EuclideanComplex& e = *l.input.euclidean;
        doc["type"] = "euclidean";
        doc["k"] = e.k();
        doc["cubes"] = e.size();
        std::vector<std::size_t> prof(static_cast<std::size_t>(std::max(e.max_dim(), -1) + 1), 0);
        for (const ElementaryCube& c : e.cubes())
            ++prof[static_cast<std::size_t>(c.dim())];
        doc["profile"] = prof;
    } else {
        doc["type"] = "cubical";
        doc["cubes"] = l.input.cubical.size();
        doc["profile"] = l.input.cubical.profile();
    }
    if (!closed)
        doc["error"] = "cube list is not face-closed";
    out << doc.dump(2) << '\n';
    return closed ? ok : invalid;
}

int cmd_pk(const JobSpec& job, std::ostream& out)
{
    Loaded const l = load(job, true);
    PartitionPoset const pk = build_pk(l.input.cubical);
    std::vector<std::size_t> prof;
    for (const OrderedPartition& p : pk.cells()) {
        auto const d = static_cast<std::size_t>(p.dim());
        if (prof.size() <= d)
            prof.resize(d + 1, 0);
        ++prof[d];
    }
    out << json{{"command", "pk"}, {"order", l.order}, {"size", pk.size()}, {"profile", prof}}.dump(2) << '\n';
    return ok;
}

int cmd_field(const JobSpec& job, std::ostream& out)
{
    Loaded const l = load(job, true);
    const LabelSet& labels = l.input.cubical.labels();
    WkField const w = build_wk(l.input.cubical);
    GradientCheck const check = check_gradient(w.field);
    json doc{{"command", "field"},
             {"order", l.order},
             {"cells", w.poset.size()},
             {"vectors", w.field.size()},
             {"components", {{"m", w.m_part.size()}, {"r", w.r_part.size()}, {"y", w.y_part.size()}}},
             {"branching", w.branching.size()},
             {"gradient", check.gradient},
             {"critical", dim_counts(counts(critical_partitions(w)))}};
    if (!check.gradient) {
        json cycle = json::array();
        for (const Pairing& p : check.cycle)
            cycle.push_back(json::array({to_string(w.poset.cell(p.facet), labels),
                                         to_string(w.poset.cell(p.cofacet), labels)}));
        doc["cycle"] = cycle;
    }
    out << doc.dump(2) << '\n';
    return check.gradient ? ok : disagreement;
}

int cmd_critical(const JobSpec& job, std::ostream& out)
{
    Loaded const l = load(job, true);
    const CubicalComplex& k = l.input.cubical;
    const LabelSet& labels = k.labels();
    CriticalCells const from_field = critical_partitions(build_wk(k));
    CriticalCells const inductive = critical_inductive(k);
    std::vector<CriticalSequence> const seqs = enumerate_critical_sequences(k);
    CriticalCells const from_seqs = critical_from_sequences(seqs);
    bool const agree = from_field == inductive && inductive == from_seqs;

    json sequences = json::array();
    for (const CriticalSequence& cs : seqs)
        sequences.push_back(json{{"dim", cs.dim()},
                                 {"partition", to_string(sigma(cs), labels)},
                                 {"sequence", to_string(cs, labels)}});
    json doc{{"command", "critical"},
             {"order", l.order},
             {"critical", dim_counts(counts(from_seqs))},
             {"agreement", agree},
             {"methods",
              {{"field", dim_counts(counts(from_field))},
               {"inductive", dim_counts(counts(inductive))},
               {"sequences", dim_counts(counts(from_seqs))}}},
             {"cells", sequences}};
    if (!agree) {
        doc["field_cells"] = cells_json(from_field, labels);
        doc["inductive_cells"] = cells_json(inductive, labels);
    }
    out << doc.dump(2) << '\n';
    return agree ? ok : disagreement;
}

int cmd_routes(const JobSpec& job, std::ostream& out)
{
    Loaded const l = load(job, true);
    if (!l.input.euclidean)
        throw ValidationError("routes needs Euclidean input");
    const EuclideanComplex& e = *l.input.euclidean;
    const LabelSet& labels = l.input.cubical.labels();
    std::vector<CriticalRoute> const routes = enumerate_critical_routes(e);

    json list = json::array();
    std::vector<std::size_t> by_dim;
    bool certified = true;
    for (const CriticalRoute& r : routes) {
        CriticalSequence const cs = route_to_sequence(r, e);
        bool const valid = is_critical_route(e, r) && is_critical_sequence(ComplexView(l.input.cubical), cs) &&
                           sequence_to_route(cs, e) == r;
        certified = certified && valid;
        json item = to_json(r);
        item["sequence"] = to_string(cs, labels);
        item["partition"] = to_string(sigma(cs), labels);
        item["certified"] = valid;
        list.push_back(item);
        auto const d = static_cast<std::size_t>(r.dim());
        if (by_dim.size() <= d)
            by_dim.resize(d + 1, 0);
        ++by_dim[d];
    }
    std::vector<std::size_t> const seq_counts = counts(critical_from_sequences(enumerate_critical_sequences(l.input.cubical)));
    std::vector<std::size_t> a = by_dim;
    std::vector<std::size_t> b = seq_counts;
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    while (!b.empty() && b.back() == 0)
        b.pop_back();
    bool const agree = certified && a == b;
    json doc{{"command", "routes"},
             {"order", l.order},
             {"k", e.k()},
             {"count", routes.size()},
             {"by_dim", dim_counts(by_dim)},
             {"agreement", agree},
             {"routes", list}};
    out << doc.dump(2) << '\n';
    return agree ? ok : disagreement;
}

int cmd_betti(const JobSpec& job, std::ostream& out)
{
    Loaded const l = load(job, true);
    PartitionPoset const pk = build_pk(l.input.cubical);
    BettiOptions opts;
    opts.max_dim = job.dim_cap;
    opts.max_simplices = job.max_simplices;
    json doc = to_json(order_complex_betti(pk.poset(), opts));
    doc["command"] = "betti";
    doc["order"] = l.order;
    doc["pk_size"] = pk.size();
    out << doc.dump(2) << '\n';
    return ok;
}

int cmd_report(const JobSpec& job, std::ostream& out)
{
    Loaded const l = load(job, true);
    HomologyReport const r = homology_report(l.input.cubical, job.max_simplices);
    json doc = to_json(r.homology);
    doc["command"] = "report";
    doc["order"] = l.order;
    doc["critical"] = dim_counts(r.critical_counts);
    if (r.oracle)
        doc["oracle"] = to_json(*r.oracle);
    doc["notes"] = r.notes;
    out << doc.dump(2) << '\n';
    return ok;
}

int cmd_random(const JobSpec& job, std::ostream& out)
{
    if (job.labels < 0 || job.labels > 8)
        throw ArgumentError("random: --labels must be in 0..8");
    CubicalComplex const full = CubicalComplex::full(LabelSet::numbered(static_cast<std::size_t>(job.labels)));
    std::vector<Cube> const all = full.cubes();
    std::mt19937_64 rng(job.seed);
    std::size_t const removals = all.empty() ? 0 : rng() % (static_cast<std::size_t>(job.labels) + 1);
    std::vector<Cube> holes;
    for (std::size_t i = 0; i < removals; ++i)
        holes.push_back(all[rng() % all.size()]);
    out << to_json(full.without(holes)).dump(2) << '\n';
    return ok;
}

} // namespace

int run(const JobSpec& job, std::ostream& out)
{
    try {
        if (job.command == "validate")
            return cmd_validate(job, out);
        if (job.command == "pk")
            return cmd_pk(job, out);
        if (job.command == "field")
            return cmd_field(job, out);
        if (job.command == "critical")
            return cmd_critical(job, out);
        if (job.command == "routes")
            return cmd_routes(job, out);
        if (job.command == "betti")
            return cmd_betti(job, out);
        if (job.command == "report")
            return cmd_report(job, out);
        if (job.command == "random")
            return cmd_random(job, out);
        throw ArgumentError("unknown command \"" + job.command + "\"");
    } catch (const ResourceError& e) {
        out << json{{"error", e.what()}, {"kind", "resource"}}.dump(2) << '\n';
        return resource;
    } catch (const Error& e) {
        out << json{{"error", e.what()}, {"kind", "validation"}}.dump(2) << '\n';
        return invalid;
    } catch (const std::exception& e) {
        out << json{{"error", e.what()}, {"kind", "validation"}}.dump(2) << '\n';
        return invalid;
    }
}

} // namespace dipath::cli
