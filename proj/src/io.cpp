#include "kgon/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "kgon/errors.hpp"
#include "kgon/formula.hpp"

namespace kgon::io {

using nlohmann::json;

namespace {

json graph_to_json_obj(const PlaneGraph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["rotation"] = g.rotation();
    if (!g.labels().empty()) {
        json labels = json::object();
        for (const auto& [v, text] : g.labels()) labels[std::to_string(v)] = text;
        j["labels"] = labels;
    }
    return j;
}

PlaneGraph graph_from_json_obj(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rotation"))
        throw IoError("malformed graph JSON: expected an object with \"n\" and \"rotation\"");
    if (!j["n"].is_number_integer())
        throw IoError("malformed graph JSON: \"n\" must be an integer");
    int n = j["n"].get<int>();
    if (!j["rotation"].is_array())
        throw IoError("malformed graph JSON: \"rotation\" must be an array");
    std::vector<std::vector<VertexId>> rotation;
    for (const auto& row : j["rotation"]) {
        if (!row.is_array())
            throw IoError("malformed graph JSON: rotation entries must be arrays");
        std::vector<VertexId> r;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw IoError("malformed graph JSON: neighbor ids must be integers");
            r.push_back(x.get<int>());
        }
        rotation.push_back(std::move(r));
    }
    std::map<VertexId, std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_object())
            throw IoError("malformed graph JSON: \"labels\" must be an object");
        for (const auto& [key, value] : j["labels"].items()) {
            if (!value.is_string())
                throw IoError("malformed graph JSON: label values must be strings");
            try {
                labels[std::stoi(key)] = value.get<std::string>();
            } catch (const std::exception&) {
                throw IoError("malformed graph JSON: label key \"" + key +
                              "\" is not a vertex id");
            }
        }
    }
    return PlaneGraph::make(n, std::move(rotation), std::move(labels));
}

std::string f17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string f6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

std::string graph_to_json(const PlaneGraph& g) {
    return graph_to_json_obj(g).dump() + "\n";
}

PlaneGraph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed graph JSON: ") + e.what());
    }
    return graph_from_json_obj(j);
}

std::string packing_to_json(const Packing& p) {
    // Hand-rolled so every float carries 17 significant digits.
    std::ostringstream out;
    out << "{\"circles\":[";
    for (std::size_t v = 0; v < p.circles.size(); ++v) {
        const Circle& c = p.circles[v];
        if (v) out << ',';
        out << "{\"v\":" << v << ",\"x\":" << f17(c.x) << ",\"y\":" << f17(c.y)
            << ",\"r\":" << f17(c.r) << '}';
    }
    out << "],\"residuals\":{\"tangency\":" << f17(p.tangency_residual)
        << ",\"overlap\":" << f17(p.overlap_residual) << '}'
        << ",\"iterations\":" << p.iterations
        << ",\"converged\":" << (p.converged ? "true" : "false") << "}\n";
    return out.str();
}

Packing packing_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed packing JSON: ") + e.what());
    }
    try {
        Packing p;
        const auto& circles = j.at("circles");
        p.circles.resize(circles.size());
        std::vector<char> seen(circles.size(), 0);
        for (const auto& c : circles) {
            std::size_t v = c.at("v").get<std::size_t>();
            if (v >= p.circles.size() || seen[v])
                throw IoError("malformed packing JSON: bad or repeated vertex id");
            seen[v] = 1;
            p.circles[v] = Circle{c.at("x").get<double>(), c.at("y").get<double>(),
                                  c.at("r").get<double>()};
        }
        p.tangency_residual = j.at("residuals").at("tangency").get<double>();
        p.overlap_residual = j.at("residuals").at("overlap").get<double>();
        p.iterations = j.at("iterations").get<long long>();
        p.converged = j.at("converged").get<bool>();
        return p;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed packing JSON: ") + e.what());
    }
}

std::string report_to_json(const VerifyReport& r) {
    json census;
    json f = json::object();
    for (int size = 3; size < r.census.threshold; ++size)
        f[std::to_string(size)] = r.census.small(size);
    census["f"] = f;
    census["d_k"] = r.census.big_face_degree_sum;
    census["f_k"] = r.census.big_face_count;

    json j;
    j["property_holds"] = r.property_holds;
    j["m"] = r.edge_count;
    j["target"] = r.formula_target;
    j["extremal"] = r.extremal;
    j["flower_centers"] = r.flower_centers;
    j["census"] = census;
    j["euler_ok"] = r.euler_ok;
    return j.dump() + "\n";
}

std::string search_result_to_json(const SearchResult& r) {
    json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["best_m"] = r.best_m;
    j["graphs_examined"] = r.graphs_examined;
    j["witness"] = graph_to_json_obj(r.witness);
    return j.dump() + "\n";
}

std::string format_table(long long k, long long n_min, long long n_max,
                         const std::string& format) {
    if (n_min < k) throw InvalidParams("table requires n-min >= k");
    if (n_max < n_min) throw InvalidParams("table requires n-max >= n-min");
    std::ostringstream out;
    if (format == "csv") {
        out << "n,max_edges\n";
        for (long long n = n_min; n <= n_max; ++n)
            out << n << ',' << max_edges(k, n) << '\n';
    } else if (format == "md") {
        out << "| n | max edges (k = " << k << ") |\n|---:|---:|\n";
        for (long long n = n_min; n <= n_max; ++n)
            out << "| " << n << " | " << max_edges(k, n) << " |\n";
    } else {
        throw InvalidParams("unknown table format \"" + format + "\" (use csv or md)");
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open \"" + path + "\": file missing or unreadable");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write \"" + path + "\"");
    out << content;
}

std::vector<std::array<double, 2>> tutte_layout(const PlaneGraph& g, const Face& outer) {
    const int n = g.vertex_count();
    std::vector<std::array<double, 2>> pos(n, {0.0, 0.0});
    std::vector<char> fixed(n, 0);
    const std::size_t s = outer.boundary.size();
    for (std::size_t i = 0; i < s; ++i) {
        VertexId v = outer.boundary[i];
        if (fixed[v]) continue;  // repeated boundary vertex keeps its first slot
        double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(s);
        pos[v] = {std::cos(a), std::sin(a)};
        fixed[v] = 1;
    }
    for (int sweep = 0; sweep < 200'000; ++sweep) {
        double moved = 0;
        for (VertexId v = 0; v < n; ++v) {
            if (fixed[v] || g.degree(v) == 0) continue;
            double x = 0, y = 0;
            for (VertexId u : g.neighbors(v)) {
                x += pos[u][0];
                y += pos[u][1];
            }
            x /= g.degree(v);
            y /= g.degree(v);
            moved = std::max(moved, std::abs(x - pos[v][0]) + std::abs(y - pos[v][1]));
            pos[v] = {x, y};
        }
        if (moved < 1e-12) break;
    }
    return pos;
}

namespace {

struct Canvas {
    double min_x, min_y, max_x, max_y;

    double span() const { return std::max(max_x - min_x, max_y - min_y); }
};

std::string svg_render(const std::vector<Circle>& circles, const PlaneGraph& g) {
    Canvas box{circles[0].x, circles[0].y, circles[0].x, circles[0].y};
    for (const Circle& c : circles) {
        box.min_x = std::min(box.min_x, c.x - c.r);
        box.min_y = std::min(box.min_y, c.y - c.r);
        box.max_x = std::max(box.max_x, c.x + c.r);
        box.max_y = std::max(box.max_y, c.y + c.r);
    }
    const double pad = 0.05 * box.span() + 1e-9;
    const double w = box.max_x - box.min_x + 2 * pad;
    const double h = box.max_y - box.min_y + 2 * pad;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << f6(box.min_x - pad)
        << ' ' << f6(box.min_y - pad) << ' ' << f6(w) << ' ' << f6(h) << "\">\n";
    const std::string line_w = f6(box.span() / 600.0);
    const std::string circ_w = f6(box.span() / 400.0);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges)
        out << "<line x1=\"" << f6(circles[u].x) << "\" y1=\"" << f6(circles[u].y)
            << "\" x2=\"" << f6(circles[v].x) << "\" y2=\"" << f6(circles[v].y)
            << "\" stroke=\"#888888\" stroke-width=\"" << line_w << "\"/>\n";
    for (std::size_t v = 0; v < circles.size(); ++v)
        out << "<circle cx=\"" << f6(circles[v].x) << "\" cy=\"" << f6(circles[v].y)
            << "\" r=\"" << f6(circles[v].r)
            << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << circ_w
            << "\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string packing_to_svg(const Packing& p, const PlaneGraph& g) {
    if (static_cast<int>(p.circles.size()) != g.vertex_count())
        throw InvalidParams("packing and graph disagree on the vertex count");
    return svg_render(p.circles, g);
}

std::string graph_to_svg(const PlaneGraph& g) {
    try {
        Packing p = pack(augment(g, 4));
        return svg_render(p.circles, g);
    } catch (const Error&) {
        // No coin realization available; draw dots on a Tutte layout
        // pinned to a face at the fan apex when the graph has one.
        auto faces = trace_faces(g);
        std::size_t pinned = 0;
        for (const auto& [v, text] : g.labels())
            if (text.rfind("apex", 0) == 0) {
                for (std::size_t f = 0; f < faces.size(); ++f) {
                    const auto& b = faces[f].boundary;
                    if (std::find(b.begin(), b.end(), v) != b.end()) {
                        pinned = f;
                        break;
                    }
                }
                break;
            }
        auto pos = tutte_layout(g, faces[pinned]);
        std::vector<Circle> dots(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            dots[v] = Circle{pos[v][0], pos[v][1], 0.03};
        return svg_render(dots, g);
    }
}

}  // namespace kgon::io
