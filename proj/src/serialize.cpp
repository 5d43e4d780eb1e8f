#include "spectre/serialize.hpp"

#include <map>
#include <regex>

namespace spectre {

namespace {

void add_decimal(json& e, const Rat& x, int decimal)
{
    if (decimal >= 0)
        e["decimal"] = x.decimal(decimal);
}

Int get_int(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw ValidationError(where + ": expected an integer, got " + j.dump());
    return j.get<Int>();
}

const json& field(const json& j, const std::string& key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(where + ": missing field \"" + key + "\"");
    return j.at(key);
}

std::string get_id(const json& j, const std::string& where)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<Int>());
    throw ValidationError(where + ": vertex ids must be strings");
}

} // namespace

json to_json(const Rat& x) { return x.str(); }

json to_json(const PairBag& b, int decimal)
{
    json out = json::array();
    for (const auto& [k, c] : b) {
        json e{{"alpha", k.alpha.str()}, {"weight", k.weight}, {"mult", c}};
        add_decimal(e, k.alpha, decimal);
        out.push_back(e);
    }
    return out;
}

json to_json(const SpecBag& b, int decimal)
{
    json out = json::array();
    for (const auto& [k, c] : b) {
        json e{{"alpha", k.str()}, {"mult", c}};
        add_decimal(e, k, decimal);
        out.push_back(e);
    }
    return out;
}

json to_json(const Diagram& d)
{
    json out;
    out["vertices"] = json::array();
    for (int v = 0; v < d.vertex_count(); ++v)
        out["vertices"].push_back(d.name(v));
    out["edges"] = json::array();
    for (const Edge& e : d.edges())
        out["edges"].push_back({{"a", d.name(e.a)}, {"b", d.name(e.b)}, {"wa", e.wa}, {"wb", e.wb}});
    out["arrows"] = json::array();
    for (const Arrow& a : d.arrows())
        out["arrows"].push_back({{"at", d.name(a.at)}, {"w", a.w}, {"mult", a.mult}});
    out["root"] = d.root() >= 0 ? json(d.name(d.root())) : json(nullptr);
    return out;
}

json to_json(const Polygon& P)
{
    json faces = json::array();
    for (const Face& f : P.faces())
        faces.push_back({f.p, f.q, f.k});
    return json{{"faces", faces}};
}

json to_json(const PolygonCombination& c)
{
    json out = json::array();
    for (const auto& [P, coef] : c.terms())
        out.push_back({{"coef", coef}, {"faces", to_json(P)["faces"]}});
    return out;
}

json to_json(const DefectReport& r, int decimal)
{
    json terms = json::array();
    for (const EdgeTerm& t : r.edge_terms) {
        json e{{"label", t.label}, {"edge", t.edge}, {"E", t.E.str()}, {"delta", t.delta}};
        if (t.F)
            e["F"] = *t.F;
        if (t.C)
            e["C"] = t.C->str();
        add_decimal(e, t.E, decimal);
        terms.push_back(e);
    }
    json out{{"defect", r.defect.str()},
             {"direct_defect", r.direct_defect.str()},
             {"S", r.S.str()},
             {"mu", r.mu},
             {"alpha_max", r.alpha_max.str()},
             {"alpha_min", r.alpha_min.str()},
             {"variance", r.variance.str()},
             {"bound", r.bound.str()},
             {"verdict", r.verdict},
             {"consistent", r.consistent},
             {"edge_terms", terms}};
    if (decimal >= 0) {
        out["variance_decimal"] = r.variance.decimal(decimal);
        out["bound_decimal"] = r.bound.decimal(decimal);
    }
    return out;
}

Diagram diagram_from_json(const json& j)
{
    Diagram d;
    const json& verts = field(j, "vertices", "diagram");
    if (!verts.is_array())
        throw ValidationError("diagram.vertices: expected an array");
    for (size_t i = 0; i < verts.size(); ++i) {
        std::string id = get_id(verts[i], "diagram.vertices[" + std::to_string(i) + "]");
        if (d.find(id) >= 0)
            throw ValidationError("diagram.vertices[" + std::to_string(i) + "]: duplicate id \"" + id + "\"");
        d.add_vertex(id);
    }
    auto vertex = [&](const json& x, const std::string& where) {
        std::string id = get_id(x, where);
        int v = d.find(id);
        if (v < 0)
            throw ValidationError(where + ": unknown vertex \"" + id + "\"");
        return v;
    };
    const json& edges = j.contains("edges") ? j.at("edges") : json::array();
    for (size_t i = 0; i < edges.size(); ++i) {
        std::string w = "diagram.edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        d.add_edge(vertex(field(e, "a", w), w + ".a"), vertex(field(e, "b", w), w + ".b"),
                   get_int(field(e, "wa", w), w + ".wa"), get_int(field(e, "wb", w), w + ".wb"));
    }
    const json& arrows = j.contains("arrows") ? j.at("arrows") : json::array();
    for (size_t i = 0; i < arrows.size(); ++i) {
        std::string w = "diagram.arrows[" + std::to_string(i) + "]";
        const json& a = arrows[i];
        Int weight = a.contains("w") ? get_int(a.at("w"), w + ".w") : 1;
        Int mult = a.contains("mult") ? get_int(a.at("mult"), w + ".mult") : 1;
        d.add_arrow(vertex(field(a, "at", w), w + ".at"), weight, mult);
    }
    if (j.contains("root") && !j.at("root").is_null()) {
        d.set_root(vertex(j.at("root"), "diagram.root"));
    } else {
        // first vertex with three incidences
        for (int v = 0; v < d.vertex_count(); ++v)
            if (d.valence(v) >= 3) {
                d.set_root(v);
                break;
            }
    }
    return d;
}

Polygon polygon_from_json(const json& j)
{
    auto pairs = [](const json& arr, size_t width, const std::string& where) {
        if (!arr.is_array() || arr.empty())
            throw ValidationError(where + ": expected a non-empty array");
        std::vector<std::vector<Int>> out;
        for (size_t i = 0; i < arr.size(); ++i) {
            std::string w = where + "[" + std::to_string(i) + "]";
            if (!arr[i].is_array() || arr[i].size() != width)
                throw ValidationError(w + ": expected " + std::to_string(width) + " integers");
            std::vector<Int> row;
            for (size_t c = 0; c < width; ++c)
                row.push_back(get_int(arr[i][c], w + "[" + std::to_string(c) + "]"));
            out.push_back(row);
        }
        return out;
    };
    auto faces = [&](const json& arr, const std::string& where) {
        std::vector<Face> f;
        for (const auto& row : pairs(arr, 3, where))
            f.push_back({row[0], row[1], row[2]});
        return Polygon(std::move(f));
    };
    if (j.is_array())
        return faces(j, "polygon");
    if (j.is_object() && j.contains("faces"))
        return faces(j.at("faces"), "polygon.faces");
    if (j.is_object() && j.contains("vertices")) {
        std::vector<Point> pts;
        for (const auto& row : pairs(j.at("vertices"), 2, "polygon.vertices"))
            pts.push_back({row[0], row[1]});
        return from_vertices(pts);
    }
    throw ValidationError("polygon: expected \"faces\" or \"vertices\"");
}

BrickSpec brick_from_json(const json& j)
{
    BrickSpec b;
    b.m = get_int(field(j, "m", "brick"), "brick.m");
    b.n = get_int(field(j, "n", "brick"), "brick.n");
    b.p = get_int(field(j, "p", "brick"), "brick.p");
    b.q = get_int(field(j, "q", "brick"), "brick.q");
    const json& l = field(j, "l", "brick");
    if (l.is_array()) {
        for (size_t i = 0; i < l.size(); ++i)
            b.l.push_back(get_int(l[i], "brick.l[" + std::to_string(i) + "]"));
    } else {
        b.l.push_back(get_int(l, "brick.l"));
    }
    return b;
}

Diagram diagram_from_any(const json& j)
{
    if (j.is_object() && (j.contains("edges") || j.contains("arrows")))
        return diagram_from_json(j);
    if (j.is_object() && j.contains("m") && j.contains("p"))
        return brick_diagram(brick_from_json(j));
    if (j.is_string())
        return parse_chain(j.get<std::string>());
    return to_diagram(polygon_from_json(j));
}

Diagram parse_chain(const std::string& text)
{
    // en dash separators become plain ones
    std::string s = std::regex_replace(text, std::regex("\xE2\x80\x93"), "-");
    static const std::regex node(R"(\s*([A-Za-z_][A-Za-z0-9_']*)?\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*(\[([^\]]*)\])?\s*)");
    std::vector<std::string> parts;
    size_t start = 0;
    for (;;) {
        size_t pos = s.find('-', start);
        parts.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    Diagram d;
    std::vector<int> nodes;
    std::vector<Int> ps, qs;
    std::vector<std::vector<Int>> arrows;
    for (size_t i = 0; i < parts.size(); ++i) {
        std::smatch m;
        if (!std::regex_match(parts[i], m, node))
            throw ValidationError("chain node " + std::to_string(i + 1) + ": cannot parse \"" + parts[i] + "\"");
        std::string name = m[1].matched ? m[1].str() : "n" + std::to_string(i + 1);
        if (d.find(name) >= 0)
            throw ValidationError("chain node " + std::to_string(i + 1) + ": duplicate name \"" + name + "\"");
        nodes.push_back(d.add_vertex(name));
        ps.push_back(std::stoll(m[2].str()));
        qs.push_back(std::stoll(m[3].str()));
        std::vector<Int> a;
        if (m[5].matched) {
            std::string list = m[5].str();
            static const std::regex num(R"(\s*(\d+)\s*)");
            static const std::regex comma(",");
            for (std::sregex_token_iterator it(list.begin(), list.end(), comma, -1), end; it != end; ++it) {
                std::string item = *it;
                if (item.find_first_not_of(" \t") == std::string::npos)
                    continue;
                std::smatch mm;
                std::string tmp = item;
                if (!std::regex_match(tmp, mm, num))
                    throw ValidationError("chain node " + std::to_string(i + 1) + ": bad arrow multiplicity \"" +
                                          item + "\"");
                a.push_back(std::stoll(mm[1].str()));
            }
        }
        arrows.push_back(a);
    }
    d.add_edge(nodes.front(), d.add_vertex("lp"), ps.front(), 1);
    for (size_t i = 0; i + 1 < nodes.size(); ++i)
        d.add_edge(nodes[i], nodes[i + 1], qs[i], ps[i + 1]);
    d.add_edge(nodes.back(), d.add_vertex("lq"), qs.back(), 1);
    for (size_t i = 0; i < nodes.size(); ++i)
        for (Int m : arrows[i])
            d.add_arrow(nodes[i], 1, m);
    d.set_root(nodes.front());
    return d;
}

} // namespace spectre
