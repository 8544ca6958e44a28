#include "kgon/cli.hpp"

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgon/circle_pack.hpp"
#include "kgon/construct.hpp"
#include "kgon/errors.hpp"
#include "kgon/formula.hpp"
#include "kgon/io.hpp"
#include "kgon/ip_oracle.hpp"
#include "kgon/plane_graph.hpp"
#include "kgon/search.hpp"
#include "kgon/verify.hpp"

namespace kgon::cli {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void note_k3(long long k) {
    if (k == 3)
        std::cout << "note: k = 3 imposes no restriction (every face has at least "
                     "3 sides); the maximum is 3n - 6\n";
}

int cmd_formula(long long k, long long n, bool as_json) {
    ExtremalParams p = ExtremalParams::make(k, n);
    long long mu = ip_minimum(n, k);
    if (as_json) {
        nlohmann::json j;
        j["k"] = p.k;
        j["n"] = p.n;
        j["max_edges"] = p.max_edges;
        j["quotient"] = p.quotient;
        j["residue"] = p.residue;
        j["shift"] = p.shift;
        j["correction"] = p.correction;
        j["ip_min"] = mu;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "max edges: " << p.max_edges << "\n"
                  << "k = " << p.k << ", n = " << p.n << ", quotient = " << p.quotient
                  << ", residue = " << p.residue << ", shift = " << p.shift
                  << ", correction = " << p.correction << "\n"
                  << "ip minimum: " << mu << "  (max edges = 3n - 6 - ip minimum)\n";
        note_k3(k);
    }
    return kOk;
}

int cmd_mu(long long n, long long k, bool oracle, const std::string& scan_path) {
    ExtremalParams p = ExtremalParams::make(k, n);
    long long closed = ip_minimum(n, k);
    std::cout << "ip minimum: " << closed << "\n"
              << "minimizer: degree_sum = " << (n + p.shift) << ", face_count = "
              << (n + p.shift) / k << "\n";
    int rc = kOk;
    if (oracle) {
        IpSolution sol = ip_minimum_bruteforce(n, k);
        std::cout << "oracle minimum: " << sol.value << " at degree_sum = "
                  << sol.minimizer.degree_sum << ", face_count = "
                  << sol.minimizer.face_count << "\n";
        if (sol.value == closed) {
            std::cout << "oracle agrees: yes\n";
        } else {
            std::cout << "oracle agrees: NO\n";
            rc = kCheckFailed;
        }
    }
    if (!scan_path.empty()) {
        std::ostringstream buf;
        write_region_scan(buf, n, k);
        io::write_file(scan_path, buf.str());
        std::cout << "wrote scan: " << scan_path << "\n";
    }
    return rc;
}

int cmd_construct(long long k, long long n, const std::string& out_path,
                  const std::string& svg_path) {
    Construction c = construct(k, n);
    io::write_file(out_path, io::graph_to_json(c.graph));
    std::cout << "wrote " << out_path << ": n = " << n << ", edges = "
              << c.graph.edge_count() << " (cycle " << c.plan.cycle_edges
              << " + junction " << c.plan.junction_edges << " + chord "
              << c.plan.chord_edges << " + fan " << c.plan.fan_edges << ")\n";
    note_k3(k);
    if (!svg_path.empty()) {
        io::write_file(svg_path, io::graph_to_svg(c.graph));
        std::cout << "wrote " << svg_path << "\n";
    }
    return kOk;
}

int cmd_verify(long long k, const std::string& in_path, const std::string& report_path) {
    PlaneGraph g = io::graph_from_json(io::read_file(in_path));
    VerifyReport r = check_extremal(g, static_cast<int>(k));
    std::string text = io::report_to_json(r);
    std::cout << text;
    if (!report_path.empty()) io::write_file(report_path, text);
    return r.extremal ? kOk : kCheckFailed;
}

int cmd_search(long long k, long long n, bool allow_n7, int threads, long long budget,
               const std::string& out_path) {
    if (n == 7)
        std::cerr << "warning: n = 7 enumerates a very large space; "
                     "expect a long run or a budget abort\n";
    SearchOptions opt;
    opt.allow_n7 = allow_n7;
    opt.threads = threads;
    opt.budget = budget;
    SearchResult r = search(k, n, opt);
    std::string text = io::search_result_to_json(r);
    std::cout << text;
    if (!out_path.empty()) io::write_file(out_path, text);
    return kOk;
}

int cmd_pack(const std::string& in_path, const std::string& out_path,
             const std::string& svg_path, double tol, long long max_iter) {
    PlaneGraph g = io::graph_from_json(io::read_file(in_path));
    PackOptions opt;
    opt.angle_tol = tol;
    opt.max_sweeps = max_iter;
    Augmentation aug = augment(g, 4);
    Packing p = pack(aug, opt);
    CoinReport rep = coin_report(p, g, opt.tangency_tol);
    io::write_file(out_path, io::packing_to_json(p));
    std::cout << "wrote " << out_path << ": " << p.circles.size() << " coins, "
              << p.iterations << " sweeps, tangency residual " << rep.tangency_residual
              << ", overlap residual " << rep.overlap_residual << "\n";
    if (!rep.flower_centers.empty()) {
        std::cout << "flower centers:";
        for (VertexId v : rep.flower_centers) std::cout << ' ' << v;
        std::cout << "\n";
    }
    if (!svg_path.empty()) {
        io::write_file(svg_path, io::packing_to_svg(p, g));
        std::cout << "wrote " << svg_path << "\n";
    }
    return kOk;
}

int cmd_flowers(const std::string& in_path) {
    PlaneGraph g = io::graph_from_json(io::read_file(in_path));
    nlohmann::json j;
    j["flower_centers"] = flower_centers(g);
    std::cout << j.dump() << "\n";
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"extremal plane graphs with large faces at every vertex, "
                 "and their coin-graph realizations"};
    app.require_subcommand(1);

    long long k = 0, n = 0, n_min = 0, n_max = 0;
    long long budget = 1'000'000'000, max_iter = 1'000'000;
    int threads = 1;
    double tol = 1e-10;
    bool as_json = false, oracle = false, allow_n7 = false;
    std::string in_path, out_path, svg_path, report_path, scan_path, format = "csv";

    auto* formula = app.add_subcommand("formula", "closed-form edge maximum");
    formula->add_option("--k", k, "face-size threshold")->required();
    formula->add_option("--n", n, "vertex count")->required();
    formula->add_flag("--json", as_json, "emit JSON");

    auto* table = app.add_subcommand("table", "edge maxima for a range of n");
    table->add_option("--k", k)->required();
    table->add_option("--n-min", n_min)->required();
    table->add_option("--n-max", n_max)->required();
    table->add_option("--format", format, "csv or md");

    auto* mu = app.add_subcommand("mu", "the integer-program minimum behind the bound");
    mu->add_option("--n", n)->required();
    mu->add_option("--k", k)->required();
    mu->add_flag("--oracle", oracle, "cross-check against brute force");
    mu->add_option("--scan-csv", scan_path, "write the feasible-region scan as CSV");

    auto* cons = app.add_subcommand("construct", "build an extremal witness");
    cons->add_option("--k", k)->required();
    cons->add_option("--n", n)->required();
    cons->add_option("--out", out_path, "graph JSON path")->required();
    cons->add_option("--svg", svg_path, "also render as SVG");

    auto* verify = app.add_subcommand("verify", "check a graph against the maximum");
    verify->add_option("--k", k)->required();
    verify->add_option("--in", in_path, "graph JSON path")->required();
    verify->add_option("--report", report_path, "also write the report JSON");

    auto* search_cmd = app.add_subcommand("search", "exhaustive maximum for tiny n");
    search_cmd->add_option("--k", k)->required();
    search_cmd->add_option("--n", n)->required();
    search_cmd->add_flag("--allow-n7", allow_n7, "enable the slow n = 7 search");
    search_cmd->add_option("--threads", threads, "parallel workers");
    search_cmd->add_option("--budget", budget, "rotation-system cap");
    search_cmd->add_option("--out", out_path, "also write the result JSON");

    auto* pack_cmd = app.add_subcommand("pack", "realize a graph as tangent coins");
    pack_cmd->add_option("--in", in_path, "graph JSON path")->required();
    pack_cmd->add_option("--out", out_path, "packing JSON path")->required();
    pack_cmd->add_option("--svg", svg_path, "also render as SVG");
    pack_cmd->add_option("--tol", tol, "angle-sum tolerance");
    pack_cmd->add_option("--max-iter", max_iter, "sweep cap");

    auto* flowers_cmd = app.add_subcommand("flowers", "vertices ringed by triangles only");
    flowers_cmd->add_option("--in", in_path, "graph JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (formula->parsed()) return cmd_formula(k, n, as_json);
        if (table->parsed()) {
            std::cout << io::format_table(k, n_min, n_max, format);
            return kOk;
        }
        if (mu->parsed()) return cmd_mu(n, k, oracle, scan_path);
        if (cons->parsed()) return cmd_construct(k, n, out_path, svg_path);
        if (verify->parsed()) return cmd_verify(k, in_path, report_path);
        if (search_cmd->parsed())
            return cmd_search(k, n, allow_n7, threads, budget, out_path);
        if (pack_cmd->parsed()) return cmd_pack(in_path, out_path, svg_path, tol, max_iter);
        if (flowers_cmd->parsed()) return cmd_flowers(in_path);
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const MalformedRotation& e) {
        std::cerr << "error: invalid graph: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace kgon::cli
