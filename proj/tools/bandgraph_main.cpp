#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "bandgraph/complex_arr.hpp"
#include "bandgraph/configs.hpp"
#include "bandgraph/feasibility.hpp"
#include "bandgraph/svg.hpp"

using namespace bandgraph;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // infeasible / violations / no realization
constexpr int kExitError = 2;

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// catalog name or JSON file path
Configuration load_config(const std::string& spec, json& digests) {
    if (spec == "a4" || spec == "a5" || spec == "pentagram") return config_catalog(spec);
    std::string text = read_file(spec);
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx", (unsigned long long)fnv1a(text));
    digests[spec] = hex;
    return Configuration::from_json(text);
}

struct Cli {
    std::string graph_spec;
    std::string config_spec;
    std::string radius = "1";
    std::string rin = "1", rout = "1";
    std::string region = "band";
    std::string eps = "1/100";
    std::string mode = "certified";
    std::string svg_path, out_path;
    double tol = 1e-6, rcap = 100.0;
    unsigned jobs = 0;
    int max_n = 5;
    uint64_t samples = 10000, seed = 1;
    int polygon_k = 5;

    SolveOptions solve_options() const {
        SolveOptions o;
        if (mode == "fast")
            o.mode = SolveMode::Fast;
        else if (mode == "certified")
            o.mode = SolveMode::Certified;
        else
            throw std::invalid_argument("--mode must be fast or certified");
        o.jobs = jobs;
        return o;
    }
};

json run_report_header(const std::vector<std::string>& argv) {
    json doc;
    doc["command"] = argv;
    doc["input_digests"] = json::object();
    return doc;
}

void print_report(json& doc, double wall_ms) {
    doc["wall_ms"] = wall_ms;
    std::cout << doc.dump(2) << "\n";
}

int cmd_feasible(const Cli& cli, json doc, std::chrono::steady_clock::time_point t0) {
    Graph g = Graph::from_spec(cli.graph_spec);
    Scalar R = Scalar::parse_cli(cli.radius);
    FeasibilityResult res = feasible(g, R, cli.solve_options());
    doc["result"] = json::parse(feasibility_report_json(g, R, res, cli.solve_options().mode));
    if (!cli.svg_path.empty() && res.witness) {
        write_file(cli.svg_path, render_svg(res.witness->config, g, Scalar(1), R,
                                            RegionKind::Band));
        doc["svg"] = cli.svg_path;
    }
    print_report(doc, std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count());
    return res.feasible ? kExitOk : kExitNegative;
}

int cmd_rmax(const Cli& cli, json doc, std::chrono::steady_clock::time_point t0) {
    Graph g = Graph::from_spec(cli.graph_spec);
    RmaxResult res = rmax(g, cli.tol, cli.rcap, cli.solve_options());
    json r;
    r["graph"] = g.serialize();
    r["tol"] = cli.tol;
    r["rcap"] = cli.rcap;
    r["mode"] = cli.mode;
    switch (res.status) {
        case RmaxResult::Status::Bracketed: r["status"] = "bracketed"; break;
        case RmaxResult::Status::ExceedsCap: r["status"] = "exceeds_cap"; break;
        case RmaxResult::Status::NotRealizable: r["status"] = "not_realizable"; break;
    }
    r["lo"] = res.lo;
    r["hi"] = std::isinf(res.hi) ? json("infinity") : json(res.hi);
    r["midpoint"] = std::isinf(res.hi) ? json("infinity") : json((res.lo + res.hi) / 2);
    r["probes"] = res.probes;
    r["advisory_upper"] = res.stats.advisory;
    r["cases_solved"] = res.stats.cases_solved;
    r["cases_pruned"] = res.stats.cases_pruned;
    r["certificate_failures"] = res.stats.certificate_failures;
    if (res.witness) {
        r["witness"] = json::parse(res.witness->config.to_json());
        r["witness_margin"] = res.witness->margin.str();
        r["witness_nonedge_min"] = res.witness->achieved.nonedge_min
                                       ? res.witness->achieved.nonedge_min->str()
                                       : "infinity";
    }
    doc["result"] = r;
    if (!cli.svg_path.empty() && res.witness) {
        Scalar rr(mpq_class(res.lo));
        write_file(cli.svg_path,
                   render_svg(res.witness->config, g, Scalar(1), rr, RegionKind::Band));
        doc["svg"] = cli.svg_path;
    }
    print_report(doc, std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count());
    return res.status == RmaxResult::Status::NotRealizable ? kExitNegative : kExitOk;
}

int cmd_verify(const Cli& cli, json doc, std::chrono::steady_clock::time_point t0) {
    Graph g = Graph::from_spec(cli.graph_spec);
    Configuration cfg = load_config(cli.config_spec, doc["input_digests"]);
    Scalar rin = Scalar::parse_cli(cli.rin), rout = Scalar::parse_cli(cli.rout);
    RegionKind kind = cli.region == "ball" ? RegionKind::Ball : RegionKind::Band;
    if (cli.region != "ball" && cli.region != "band")
        throw std::invalid_argument("--region must be band or ball");
    VerifyResult res = verify_realization(cfg, g, rin, rout, kind);
    json r;
    r["graph"] = g.serialize();
    r["region"] = cli.region;
    r["r_in"] = rin.str();
    r["r_out"] = rout.str();
    r["ok"] = res.ok();
    r["violations"] = json::array();
    for (const Violation& v : res.violations)
        r["violations"].push_back({{"pair", std::to_string(v.i) + "-" + std::to_string(v.j)},
                                   {"reason", v.reason}});
    doc["result"] = r;
    if (!cli.svg_path.empty()) {
        write_file(cli.svg_path, render_svg(cfg, g, rin, rout, kind));
        doc["svg"] = cli.svg_path;
    }
    print_report(doc, std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count());
    return res.ok() ? kExitOk : kExitNegative;
}

int cmd_flatten(const Cli& cli, json doc, std::chrono::steady_clock::time_point t0) {
    Graph g = Graph::from_spec(cli.graph_spec);
    Configuration cfg = load_config(cli.config_spec, doc["input_digests"]);
    Scalar R = Scalar::parse_cli(cli.radius), eps = Scalar::parse_cli(cli.eps);
    Configuration flat = flatten_to_ball(cfg, g, R, eps);
    Scalar r_out = R * (Scalar(1) - eps);
    json r;
    r["graph"] = g.serialize();
    r["R"] = R.str();
    r["eps"] = eps.str();
    r["ball_r_out"] = r_out.str();
    r["config"] = json::parse(flat.to_json());
    r["verified"] = verify_realization(flat, g, Scalar(1), r_out, RegionKind::Ball).ok();
    doc["result"] = r;
    if (!cli.out_path.empty()) {
        write_file(cli.out_path, flat.to_json());
        doc["config_out"] = cli.out_path;
    }
    if (!cli.svg_path.empty()) {
        write_file(cli.svg_path, render_svg(flat, g, Scalar(1), r_out, RegionKind::Ball));
        doc["svg"] = cli.svg_path;
    }
    print_report(doc, std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count());
    return kExitOk;
}

int cmd_complex_g6(const Cli& cli, json doc, std::chrono::steady_clock::time_point t0) {
    std::string report = complex_g6_report_json();
    doc["result"] = json::parse(report);
    if (!cli.svg_path.empty()) {
        write_file(cli.svg_path, render_g6_schematic_svg());
        doc["svg"] = cli.svg_path;
    }
    bool ok = doc["result"]["matches_g6"].get<bool>();
    print_report(doc, std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count());
    return ok ? kExitOk : kExitNegative;
}

int cmd_menelaus(const Cli& cli, json doc, std::chrono::steady_clock::time_point t0) {
    std::mt19937 rng(uint32_t(cli.seed));
    std::uniform_int_distribution<long> coord(-40, 40), den(1, 8);
    auto frac = [](long p, long q) {
        mpq_class v(p, q);
        v.canonicalize();
        return v;
    };
    uint64_t done = 0, parity_odd = 0, product_off = 0;
    while (done < cli.samples) {
        PolygonInstance inst;
        for (int i = 0; i < cli.polygon_k; ++i)
            inst.vertices.push_back({frac(coord(rng), den(rng)), frac(coord(rng), den(rng))});
        inst.u = frac(coord(rng), den(rng));
        inst.v = frac(coord(rng), den(rng));
        inst.w = frac(coord(rng), den(rng));
        if (inst.u == 0 && inst.v == 0) continue;
        try {
            if (menelaus_product(inst) != Scalar(1)) ++product_off;
            if (!crossing_parity(inst).even) ++parity_odd;
        } catch (const std::invalid_argument&) {
            continue;  // degenerate draw, resample
        }
        ++done;
    }
    json r;
    r["samples"] = done;
    r["seed"] = cli.seed;
    r["k"] = cli.polygon_k;
    r["product_not_one"] = product_off;
    r["parity_odd"] = parity_odd;
    doc["result"] = r;
    print_report(doc, std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count());
    return product_off == 0 && parity_odd == 0 ? kExitOk : kExitNegative;
}

int cmd_an_sweep(const Cli& cli, json doc, std::chrono::steady_clock::time_point t0) {
    if (cli.max_n > 5 && cli.mode == "certified")
        throw ResourceCapError(
            "an-sweep: certified runs beyond n = 5 exceed the sign-case budget "
            "(4^(n(n-1)/2-1) cases); rerun with --max-n 5 or --mode fast for small n");
    if (cli.max_n > 5)
        throw ResourceCapError("an-sweep: n > 5 exceeds the resource cap in every mode");
    json rows = json::array();
    for (int n = 2; n <= cli.max_n; ++n) {
        Graph g = Graph::catalog("A" + std::to_string(n));
        RmaxResult res = rmax(g, cli.tol, cli.rcap, cli.solve_options());
        json row;
        row["graph"] = "A" + std::to_string(n);
        switch (res.status) {
            case RmaxResult::Status::Bracketed:
                row["status"] = "bracketed";
                row["lo"] = res.lo;
                row["hi"] = res.hi;
                row["midpoint"] = (res.lo + res.hi) / 2;
                break;
            case RmaxResult::Status::ExceedsCap:
                row["status"] = "exceeds_cap";
                row["rcap"] = cli.rcap;
                break;
            case RmaxResult::Status::NotRealizable: row["status"] = "not_realizable"; break;
        }
        rows.push_back(row);
        std::cerr << "A" << n << ": " << row["status"].get<std::string>();
        if (row.contains("midpoint")) std::cerr << " ~ " << row["midpoint"].get<double>();
        std::cerr << "\n";
    }
    json r;
    r["sweep"] = rows;
    r["note"] = "midpoints trend toward 3 as n grows";
    doc["result"] = r;
    print_report(doc, std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    auto t0 = std::chrono::steady_clock::now();
    CLI::App app{"line-arrangement band/ball intersection-graph solver"};
    app.require_subcommand(1);

    Cli cli;
    std::vector<std::string> argv_echo(argv, argv + argc);

    auto* feas = app.add_subcommand("feasible", "decide band feasibility of (graph, R)");
    feas->add_option("--graph", cli.graph_spec, "catalog name or n=..;edges=..")->required();
    feas->add_option("--R", cli.radius, "outer radius, exact scalar (e.g. 3+2*s@2)")->required();
    feas->add_option("--mode", cli.mode, "fast|certified");
    feas->add_option("--jobs", cli.jobs, "worker threads (0 = auto)");
    feas->add_option("--svg", cli.svg_path, "write witness figure");

    auto* rm = app.add_subcommand("rmax", "bisect the maximal feasible radius");
    rm->add_option("--graph", cli.graph_spec)->required();
    rm->add_option("--tol", cli.tol, "bracket width target");
    rm->add_option("--rcap", cli.rcap, "upper search bound");
    rm->add_option("--mode", cli.mode, "fast|certified");
    rm->add_option("--jobs", cli.jobs);
    rm->add_option("--svg", cli.svg_path, "write witness figure at lo");

    auto* ver = app.add_subcommand("verify", "verify a configuration against a graph");
    ver->add_option("--config", cli.config_spec, "config JSON path or catalog name")->required();
    ver->add_option("--graph", cli.graph_spec)->required();
    ver->add_option("--rin", cli.rin, "inner radius (exact scalar)");
    ver->add_option("--rout", cli.rout, "outer radius (exact scalar)")->required();
    ver->add_option("--region", cli.region, "band|ball");
    ver->add_option("--svg", cli.svg_path);

    auto* fl = app.add_subcommand("flatten", "band-to-ball flattening transform");
    fl->add_option("--config", cli.config_spec)->required();
    fl->add_option("--graph", cli.graph_spec)->required();
    fl->add_option("--R", cli.radius, "band outer radius the input realizes")->required();
    fl->add_option("--eps", cli.eps, "homothety parameter in (0,1)");
    fl->add_option("--out", cli.out_path, "write flattened config JSON");
    fl->add_option("--svg", cli.svg_path);

    auto* cg = app.add_subcommand("complex-g6", "complex wheel-graph arrangement report");
    cg->add_option("--svg", cli.svg_path, "write the pentagram schematic");

    auto* men = app.add_subcommand("menelaus", "randomized transversal-product checks");
    men->add_option("--samples", cli.samples);
    men->add_option("--seed", cli.seed);
    men->add_option("--k", cli.polygon_k, "polygon size");

    auto* sweep = app.add_subcommand("an-sweep", "rmax over the paths A2..A<max-n>");
    sweep->add_option("--max-n", cli.max_n);
    sweep->add_option("--tol", cli.tol);
    sweep->add_option("--rcap", cli.rcap);
    sweep->add_option("--mode", cli.mode, "fast|certified");
    sweep->add_option("--jobs", cli.jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        json doc = run_report_header(argv_echo);
        doc["mode"] = cli.mode;
        if (app.got_subcommand(feas)) return cmd_feasible(cli, std::move(doc), t0);
        if (app.got_subcommand(rm)) return cmd_rmax(cli, std::move(doc), t0);
        if (app.got_subcommand(ver)) return cmd_verify(cli, std::move(doc), t0);
        if (app.got_subcommand(fl)) return cmd_flatten(cli, std::move(doc), t0);
        if (app.got_subcommand(cg)) return cmd_complex_g6(cli, std::move(doc), t0);
        if (app.got_subcommand(men)) return cmd_menelaus(cli, std::move(doc), t0);
        if (app.got_subcommand(sweep)) return cmd_an_sweep(cli, std::move(doc), t0);
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
