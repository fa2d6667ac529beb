#include "tropsa/io.hpp"

#include "tropsa/error.hpp"

#include <set>

namespace tropsa::io {

namespace {

[[noreturn]] void bad(const Json::json_pointer& at, const std::string& what) {
    fail(ErrorKind::InvalidInput, (at.empty() ? std::string("/") : at.to_string()) + ": " + what);
}

const Json& field(const Json& obj, const Json::json_pointer& at, const char* key) {
    if (!obj.is_object()) bad(at, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) bad(at, std::string("missing field \"") + key + "\"");
    return *it;
}

const Json* optional_field(const Json& obj, const char* key) {
    const auto it = obj.find(key);
    return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::string read_string(const Json& j, const Json::json_pointer& at) {
    if (!j.is_string()) bad(at, "expected a string");
    return j.get<std::string>();
}

Rational read_rational(const Json& j, const Json::json_pointer& at) {
    if (j.is_number_float()) bad(at, "float literal " + j.dump() + " where an exact rational is required");
    if (j.is_number_integer()) return j.is_number_unsigned() ? Rational(Integer(j.dump())) : Rational(j.get<long>());
    if (!j.is_string()) bad(at, "expected a rational string such as \"3/2\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        bad(at, e.what());
    }
}

Integer read_integer(const Json& j, const Json::json_pointer& at) {
    if (j.is_number_float()) bad(at, "float literal " + j.dump() + " where an integer is required");
    if (j.is_number_integer()) return Integer(j.dump());
    if (j.is_string()) {
        const Rational q = read_rational(j, at);
        if (q.get_den() == 1) return q.get_num();
    }
    bad(at, "expected an integer");
}

template <class T, class F>
std::vector<T> read_vector(const Json& j, const Json::json_pointer& at, int dim, F read_one) {
    if (!j.is_array()) bad(at, "expected an array");
    if (static_cast<int>(j.size()) != dim)
        bad(at, "has " + std::to_string(j.size()) + " entries, ambient dimension is " + std::to_string(dim));
    std::vector<T> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_one(j[i], at / i));
    return out;
}

const Json& array_field(const Json& doc, const char* key) {
    const Json::json_pointer at = Json::json_pointer("/") / key;
    const Json* j = optional_field(doc, key);
    static const Json empty = Json::array();
    if (!j) return empty;
    if (!j->is_array()) bad(at, "expected an array");
    return *j;
}

Json rational_array(const RationalVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

// Integers that fit are plain JSON numbers; larger ones are strings.
Json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Json integer_array(const IntegerVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(integer_json(x));
    return a;
}

Json tristate_json(Tristate t) { return to_string(t); }

} // namespace

TropicalCurve from_json(const Json& doc) {
    const Json::json_pointer root;
    if (!doc.is_object()) bad(root, "a curve document must be a JSON object");
    const Json& sv = field(doc, root, "schema_version");
    if (!sv.is_number_integer() || sv.get<long>() != kSchemaVersion)
        bad(root / "schema_version", "unknown schema version " + sv.dump() + ", expected " +
                                         std::to_string(kSchemaVersion));
    const Json& rd = field(doc, root, "ambient_dim");
    if (!rd.is_number_integer() || rd.get<long>() < 1 || rd.get<long>() > 64)
        bad(root / "ambient_dim", "expected an integer between 1 and 64");
    const int r = rd.get<int>();

    TropicalCurve c;
    c.ambient_dim = r;
    std::vector<std::optional<RationalVector>> given;

    const auto rat = [](const Json& j, const Json::json_pointer& at) { return read_rational(j, at); };
    const auto intg = [](const Json& j, const Json::json_pointer& at) { return read_integer(j, at); };

    const Json& vertices = array_field(doc, "vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto at = Json::json_pointer("/vertices") / i;
        const std::string id = read_string(field(vertices[i], at, "id"), at / "id");
        if (c.graph.find_vertex(id)) bad(at / "id", "duplicate vertex id \"" + id + "\"");
        c.add_vertex(id);
        const Json* p = optional_field(vertices[i], "position");
        given.push_back(p ? std::optional(read_vector<Rational>(*p, at / "position", r, rat)) : std::nullopt);
    }

    const auto vertex_ref = [&](const Json& j, const Json::json_pointer& at) {
        const std::string id = read_string(j, at);
        const auto v = c.graph.find_vertex(id);
        if (!v) bad(at, "unknown vertex \"" + id + "\"");
        return *v;
    };

    std::set<std::string> edge_ids, leg_ids;
    const Json& edges = array_field(doc, "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto at = Json::json_pointer("/edges") / i;
        const auto& e = edges[i];
        const auto tail = vertex_ref(field(e, at, "tail"), at / "tail");
        const auto head = vertex_ref(field(e, at, "head"), at / "head");
        auto dir = read_vector<Integer>(field(e, at, "direction"), at / "direction", r, intg);
        std::optional<Rational> len;
        if (const Json* l = optional_field(e, "length")) len = read_rational(*l, at / "length");
        const auto k = c.add_edge(tail, head, std::move(dir), len);
        if (const Json* id = optional_field(e, "id")) {
            const auto s = read_string(*id, at / "id");
            if (!edge_ids.insert(s).second) bad(at / "id", "duplicate edge id \"" + s + "\"");
            c.graph.edges[k].id = s;
        }
    }
    const Json& legs = array_field(doc, "legs");
    for (std::size_t i = 0; i < legs.size(); ++i) {
        const auto at = Json::json_pointer("/legs") / i;
        const auto& l = legs[i];
        const auto v = vertex_ref(field(l, at, "vertex"), at / "vertex");
        auto dir = read_vector<Integer>(field(l, at, "direction"), at / "direction", r, intg);
        const auto k = c.add_leg(v, std::move(dir));
        if (const Json* id = optional_field(l, "id")) {
            const auto s = read_string(*id, at / "id");
            if (!leg_ids.insert(s).second) bad(at / "id", "duplicate leg id \"" + s + "\"");
            c.graph.legs[k].id = s;
        }
    }
    // Auto ids may collide with explicit ones given later in the file.
    {
        std::set<std::string> seen;
        for (std::size_t i = 0; i < c.graph.edges.size(); ++i)
            if (!seen.insert(c.graph.edges[i].id).second)
                bad(Json::json_pointer("/edges") / i, "edge id \"" + c.graph.edges[i].id + "\" is not unique");
        seen.clear();
        for (std::size_t i = 0; i < c.graph.legs.size(); ++i)
            if (!seen.insert(c.graph.legs[i].id).second)
                bad(Json::json_pointer("/legs") / i, "leg id \"" + c.graph.legs[i].id + "\" is not unique");
    }

    if (const Json* b = optional_field(doc, "base_vertex")) {
        if (c.graph.vertex_count() == 0) bad(root / "base_vertex", "curve has no vertices");
        c.base_vertex = vertex_ref(*b, root / "base_vertex");
    } else {
        for (std::size_t v = 0; v < given.size(); ++v)
            if (given[v]) {
                c.base_vertex = v;
                break;
            }
    }
    if (c.base_vertex < given.size() && given[c.base_vertex]) c.base_position = *given[c.base_vertex];

    if (const Json* s = optional_field(doc, "subcurve")) {
        if (!s->is_boolean()) bad(root / "subcurve", "expected true or false");
        c.subcurve = s->get<bool>();
    }
    if (const Json* m = optional_field(doc, "metadata")) {
        if (!m->is_object()) bad(root / "metadata", "expected an object");
        for (const auto& [k, v] : m->items()) c.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }

    bool positive = true;
    for (const auto& l : c.edge_lengths) positive = positive && l && *l > 0;
    if (positive && c.graph.vertex_count() > 0) {
        const auto pos = vertex_positions(c);
        for (std::size_t v = 0; v < given.size(); ++v)
            if (given[v] && pos[v] && *pos[v] != *given[v])
                bad(Json::json_pointer("/vertices") / v / "position",
                    "does not match the edge displacements from the base vertex");
    }
    return c;
}

TropicalCurve parse(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    return from_json(doc);
}

Json to_json(const TropicalCurve& c) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["ambient_dim"] = c.ambient_dim;

    std::vector<std::optional<RationalVector>> pos(c.graph.vertex_count());
    bool positive = true;
    for (const auto& l : c.edge_lengths) positive = positive && l && *l > 0;
    if (positive && c.graph.vertex_count() > 0)
        pos = vertex_positions(c);
    else if (!c.base_position.empty() && c.base_vertex < pos.size())
        pos[c.base_vertex] = c.base_position;

    Json vs = Json::array();
    for (std::size_t v = 0; v < c.graph.vertex_count(); ++v) {
        Json j;
        j["id"] = c.graph.vertices[v];
        if (pos[v]) j["position"] = rational_array(*pos[v]);
        vs.push_back(std::move(j));
    }
    doc["vertices"] = std::move(vs);

    Json es = Json::array();
    for (std::size_t e = 0; e < c.graph.edges.size(); ++e) {
        const auto& ed = c.graph.edges[e];
        Json j;
        j["id"] = ed.id;
        j["tail"] = c.graph.vertices[ed.tail];
        j["head"] = c.graph.vertices[ed.head];
        j["direction"] = integer_array(c.edge_directions[e]);
        if (c.edge_lengths[e]) j["length"] = to_string(*c.edge_lengths[e]);
        es.push_back(std::move(j));
    }
    doc["edges"] = std::move(es);

    Json ls = Json::array();
    for (std::size_t l = 0; l < c.graph.legs.size(); ++l) {
        Json j;
        j["id"] = c.graph.legs[l].id;
        j["vertex"] = c.graph.vertices[c.graph.legs[l].vertex];
        j["direction"] = integer_array(c.leg_directions[l]);
        ls.push_back(std::move(j));
    }
    doc["legs"] = std::move(ls);

    if (c.graph.vertex_count() > 0) doc["base_vertex"] = c.graph.vertices[c.base_vertex];
    doc["subcurve"] = c.subcurve;
    Json meta = Json::object();
    for (const auto& [k, v] : c.metadata) meta[k] = v;
    doc["metadata"] = std::move(meta);
    return doc;
}

std::string serialize(const TropicalCurve& c) { return to_json(c).dump(2) + "\n"; }

AffineMap parse_affine(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    const Json::json_pointer root;
    const Json& m = field(doc, root, "matrix");
    if (!m.is_array() || m.empty()) bad(root / "matrix", "expected a non-empty array of rows");
    if (!m[0].is_array() || m[0].empty()) bad(root / "matrix" / 0, "expected a non-empty row");
    const int cols = static_cast<int>(m[0].size());
    const auto rat = [](const Json& j, const Json::json_pointer& at) { return read_rational(j, at); };
    AffineMap map;
    map.linear = RationalMatrix(m.size(), cols);
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto row = read_vector<Rational>(m[i], root / "matrix" / i, cols, rat);
        for (int k = 0; k < cols; ++k) map.linear(i, k) = row[k];
    }
    if (const Json* o = optional_field(doc, "offset"))
        map.offset = read_vector<Rational>(*o, root / "offset", static_cast<int>(m.size()), rat);
    return map;
}

Json to_json(const AffineMap& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.linear.rows(); ++i) rows.push_back(rational_array(m.linear.row(i)));
    Json j;
    j["matrix"] = std::move(rows);
    RationalVector off = m.offset;
    if (off.empty()) off.assign(m.linear.rows(), Rational(0));
    j["offset"] = rational_array(off);
    return j;
}

Json to_json(const ValidationReport& v, const TropicalCurve& c) {
    Json j;
    j["ok"] = v.ok();
    j["errors"] = v.errors;
    Json ub = Json::array();
    for (auto x : v.unbalanced_vertices) ub.push_back(c.graph.vertices[x]);
    j["unbalanced_vertices"] = std::move(ub);
    j["closure_checked"] = v.closure_checked;
    return j;
}

Json to_json(const AbundancyReport& r) {
    Json j;
    j["edges"] = r.edges;
    j["legs"] = r.legs;
    j["genus"] = r.genus;
    j["ambient_dim"] = r.ambient_dim;
    j["rank"] = r.rank;
    j["actual_dim"] = r.actual_dim;
    j["expected_dim"] = r.expected_dim;
    j["excess"] = r.excess;
    j["superabundant"] = r.superabundant;
    j["lengths_in_kernel"] = r.lengths_in_kernel;
    j["cone_empty"] = r.cone_empty;
    j["positive_witness"] = r.positive_witness ? rational_array(*r.positive_witness) : Json();
    j["trivalent_expected_dim"] = r.trivalent_expected_dim ? Json(*r.trivalent_expected_dim) : Json();
    return j;
}

Json to_json(const PlanarWitness& w) {
    Json j;
    j["coefficients"] = w.coefficients;
    j["edge_vector"] = w.edge_vector;
    j["normal"] = integer_array(w.normal);
    return j;
}

Json to_json(const IrreducibilityResult& r) {
    Json j;
    j["value"] = tristate_json(r.value);
    j["witness_segments"] = r.witness_segments;
    j["subsets_checked"] = r.subsets_checked;
    return j;
}

Json to_json(const IndecomposabilityResult& r) {
    Json j;
    j["value"] = tristate_json(r.value);
    j["witness"] = r.witness ? to_json(AffineMap{*r.witness, {}})["matrix"] : Json();
    j["witness_verified"] = r.witness_verified;
    j["method"] = r.method;
    return j;
}

Json to_json(const SuperabundanceClass& s) {
    Json j;
    j["planar"] = s.planar ? to_json(*s.planar) : Json();
    j["irreducible"] = s.irreducible ? to_json(*s.irreducible) : Json();
    j["indecomposable"] = s.indecomposable ? to_json(*s.indecomposable) : Json();
    return j;
}

Json to_json(const SegmentDecomposition& s, const TropicalCurve& core) {
    Json segs = Json::array();
    for (const auto& sg : s.segments) {
        Json j;
        Json es = Json::array();
        for (const auto& oe : sg.edges)
            es.push_back((oe.sign < 0 ? "-" : "+") + core.graph.edges[oe.edge].id);
        j["edges"] = std::move(es);
        j["start"] = core.graph.vertices[sg.start];
        j["end"] = core.graph.vertices[sg.end];
        j["closed"] = sg.closed;
        Json span = Json::array();
        for (const auto& v : segment_span(core, sg)) span.push_back(integer_array(v));
        j["span"] = std::move(span);
        segs.push_back(std::move(j));
    }
    Json bv = Json::array();
    for (auto v : s.branch_vertices) bv.push_back(core.graph.vertices[v]);
    Json j;
    j["segments"] = std::move(segs);
    j["branch_vertices"] = std::move(bv);
    j["eta"] = s.eta;
    return j;
}

Json to_json(const Genus2Classification& g) {
    Json j;
    j["type"] = to_string(g.type);
    j["planar"] = g.planar ? to_json(*g.planar) : Json();
    if (g.normal_form) {
        Json nf;
        nf["map"] = to_json(g.normal_form->map);
        nf["lambdas"] = {integer_array(g.normal_form->lambdas[0]), integer_array(g.normal_form->lambdas[1])};
        nf["curve"] = to_json(g.normal_form->curve);
        j["normal_form"] = std::move(nf);
    } else {
        j["normal_form"] = Json();
    }
    return j;
}

Json to_json(const VerdictReport& v) {
    Json j;
    j["verdict"] = to_string(v.verdict);
    j["reason"] = v.reason;
    j["deformation_dim"] = v.deformation_dim;
    j["moduli_dim"] = v.moduli_dim ? Json(*v.moduli_dim) : Json();
    j["degree"] = v.degree ? Json(*v.degree) : Json();
    j["core_template"] = v.core_template ? Json(*v.core_template) : Json();
    return j;
}

Json to_json(const DilationRecord& d, const TropicalCurve& source) {
    Json j;
    j["scale"] = to_string(d.scale);
    Json dropped = Json::array();
    for (auto l : d.dropped_legs) dropped.push_back(source.graph.legs[l].id);
    j["dropped_legs"] = std::move(dropped);
    return j;
}

} // namespace tropsa::io
