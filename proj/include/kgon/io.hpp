#pragma once

#include <array>
#include <string>
#include <vector>

#include "kgon/circle_pack.hpp"
#include "kgon/plane_graph.hpp"
#include "kgon/search.hpp"
#include "kgon/verify.hpp"

namespace kgon::io {

// Graph JSON: {"n": <int>, "rotation": [[<int>...], ...],
//              "labels": {"<vertex id>": "<text>"}}  (labels optional).
// Rotation lists are stored in trace orientation order, exactly as held
// by PlaneGraph. Round trips are exact.
std::string graph_to_json(const PlaneGraph& g);
PlaneGraph graph_from_json(const std::string& text);

// Packing JSON: {"circles": [{"v": ..., "x": ..., "y": ..., "r": ...}],
//                "residuals": {"tangency": ..., "overlap": ...},
//                "iterations": ..., "converged": ...}.
// Floats carry 17 significant digits, so values round trip bit-exactly.
std::string packing_to_json(const Packing& p);
Packing packing_from_json(const std::string& text);

// VerifyReport JSON with the census keyed as {"f": {...}, "d_k": ..., "f_k": ...}.
std::string report_to_json(const VerifyReport& r);

std::string search_result_to_json(const SearchResult& r);

// Max-edge table for n in [n_min, n_max]; format "csv" or "md".
std::string format_table(long long k, long long n_min, long long n_max,
                         const std::string& format);

// Reads/writes whole files; throws IoError saying whether the file is
// missing or unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Straight-line layout with the vertices of `outer` pinned to a convex
// polygon and every other vertex at the average of its neighbors
// (iterated to a fixed point). Fallback for graphs a packing cannot
// place.
std::vector<std::array<double, 2>> tutte_layout(const PlaneGraph& g, const Face& outer);

// Deterministic SVG: one circle per coin, one line per tangency, elements
// sorted and coordinates fixed to six decimals, so output is
// byte-identical for identical input.
std::string packing_to_svg(const Packing& p, const PlaneGraph& g);

// Graph rendering: realizes g as coins via its augmentation when
// possible, otherwise falls back to a Tutte layout with uniform dots.
std::string graph_to_svg(const PlaneGraph& g);

}  // namespace kgon::io
