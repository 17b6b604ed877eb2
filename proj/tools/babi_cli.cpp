// babi: balanced biregular graph constructions, bounds and exhaustive search.
//
// Data stream (stdout) carries exactly one JSON document (or raw graph6 with
// --g6-only); diagnostics go to stderr.  Exit codes: 0 success, 2 invalid
// arguments, 3 construction/validation failure, 4 search budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "babi/checkpoint.hpp"
#include "babi/constructions.hpp"
#include "babi/graph6.hpp"
#include "babi/json_io.hpp"
#include "babi/named_graphs.hpp"
#include "babi/search.hpp"

using namespace babi;
using nlohmann::json;

namespace {

std::string g_assets_dir;

std::string asset_path(const std::string& name) {
    std::string dir = g_assets_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("BABI_ASSET_DIR")) dir = env;
    }
    if (dir.empty()) dir = "data";
    return dir + "/" + named_graph_entry(name).file;
}

Graph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
    return Graph::from_edges(n, es);
}

Graph matching_graph(int n) {
    if (n % 2) throw std::invalid_argument("perfect matching needs an even order");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; i += 2) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

// named graph or graph6 file
Graph resolve_graph(const std::string& name, int order_hint) {
    if (name == "petersen") return petersen();
    if (name == "robertson") return robertson();
    if (name == "heawood") return heawood();
    if (name == "hoffman_singleton") return hoffman_singleton();
    if (name == "robertson_wegner") return robertson_wegner().graph;
    if (name == "cycle") return cycle_graph(order_hint);
    if (name == "matching") return matching_graph(order_hint);
    for (const auto& e : named_graph_entries())
        if (e.name == name) return load_named(name, asset_path(name));
    std::ifstream in(name, std::ios::binary);
    if (!in) throw std::invalid_argument("unknown graph name and unreadable file: " + name);
    std::string line;
    std::getline(in, line);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    return graph6_decode(line);
}

struct ConstructionRecipe {
    std::string name;
    std::string params;
    std::string domain;
    std::string order;
};

const std::vector<ConstructionRecipe>& catalog_entries() {
    static const std::vector<ConstructionRecipe> entries{
        {"g3", "--r R --s S", "2 <= r < s", "2(s-r+1) if s+1 >= 2r, else s+1..s+4 by case"},
        {"g4", "--r R --s S", "2 <= r < s", "4(s-r) if s >= 2r; 2s (s even); 2(s+1) (s odd)"},
        {"babi235", "", "-", "8"},
        {"babi345", "", "-", "16"},
        {"babi455_24", "", "-", "24"},
        {"babi455_28", "", "-", "28"},
        {"babi565", "", "needs the cage_6_5 asset", "36"},
        {"babi675", "", "-", "48"},
        {"babi3555", "", "-", "28"},
        {"amalgam", "--q Q --type 1|2 --gamma NAME",
         "prime power q <= 32; gamma k-regular, girth >= 5, order q (type 1) or q-1 (type 2)",
         "2q^2 (type 1) or 2q^2-2 (type 2); params (q, q+k; 5)"},
        {"compose", "--gr G --gs G --g GIRTH",
         "G_r r-regular, G_s s-regular, both girth g, 2 <= r < s, s > 2",
         "2 lcm(|G_r|, |G_s|); params (r, s; g)"},
        {"g6pair", "--q Q", "prime power q <= 32", "2(q^2+q); params (q, q+1; 6)"},
        {"g6triangle", "--q Q", "prime power 3 < q <= 32", "2(q^2+q-2); params (q, q+1; 6)"},
        {"g6mod4", "--q Q", "prime power q = 1 (mod 4), q <= 29", "2q^2+q+1; params (q, q+1; 6)"},
        {"g6oval", "--q Q", "odd prime power 3 < q <= 31", "2q(q-1); params (q-2, q; 6)"},
        {"petersen", "", "-", "10 (3-regular, girth 5)"},
        {"heawood", "", "-", "14 (3-regular, girth 6)"},
        {"robertson", "", "-", "19 (4-regular, girth 5)"},
        {"hoffman_singleton", "", "-", "50 (7-regular, girth 5)"},
        {"robertson_wegner", "", "-", "30 (5-regular, girth 5)"},
        {"cage_6_5", "", "asset file", "40 (6-regular, girth 5)"},
        {"hog_53705", "", "asset file", "14; (2,4;5)-babi-cage"},
        {"hog_54321", "", "asset file", "12; (2,3;6)-babi-cage"},
        {"levi", "--q Q", "prime power q <= 32", "2(q^2+q+1); (q+1)-regular, girth 6"},
        {"biaffine", "--q Q --type 1|2", "prime power q <= 32",
         "2q^2 or 2q^2-2; q-regular, girth 6"},
    };
    return entries;
}

json graph_only_json(const Graph& g, const std::string& provenance) {
    json j;
    j["schema"] = 1;
    j["order"] = g.order();
    json degs = json::object();
    for (auto [d, n] : g.degree_counts()) degs[std::to_string(d)] = n;
    j["degrees"] = degs;
    auto gg = girth(g);
    j["girth"] = gg ? json(*gg) : json("acyclic");
    j["balanced"] = false;
    j["census"] = nullptr;
    j["connected"] = g.connected();
    j["provenance"] = provenance;
    j["params"] = nullptr;
    return j;
}

int emit_construct(const Graph& g, const json& cert, const std::string& out_file,
                   bool g6_only) {
    std::string g6 = graph6_encode(g);
    if (!out_file.empty()) {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_file << "\n";
            return 3;
        }
        out << g6 << "\n";
    }
    if (g6_only) {
        std::cout << g6 << "\n";
        return 0;
    }
    json j;
    j["schema"] = 1;
    j["graph6"] = g6;
    j["certificate"] = cert;
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced biregular graphs: constructions, bounds, search"};
    app.require_subcommand(1);
    app.add_option("--assets-dir", g_assets_dir,
                   "graph6 asset directory (default: $BABI_ASSET_DIR, then ./data)");

    // construct
    auto* con = app.add_subcommand("construct", "run a named recipe");
    std::string recipe, out_file, gamma_name = "petersen", gr_name, gs_name;
    int con_r = 0, con_s = 0, con_q = 0, con_type = 1, con_g = 5;
    bool g6_only = false;
    con->add_option("recipe", recipe, "recipe name (see catalog)")->required();
    con->add_option("--r", con_r, "thin degree");
    con->add_option("--s", con_s, "fat degree");
    con->add_option("--q", con_q, "plane order");
    con->add_option("--type", con_type, "biaffine type (1 or 2)");
    con->add_option("--g", con_g, "girth (compose)");
    con->add_option("--gamma", gamma_name, "amalgamated graph (name or graph6 file)");
    con->add_option("--gr", gr_name, "r-regular input (name or graph6 file)");
    con->add_option("--gs", gs_name, "s-regular input (name or graph6 file)");
    con->add_option("-o,--output", out_file, "also write graph6 to this file");
    con->add_flag("--g6-only", g6_only, "print raw graph6 instead of JSON");

    // verify
    auto* ver = app.add_subcommand("verify", "verify a graph6 file against (r,s,g)");
    std::string ver_file;
    std::vector<int> ver_params;
    ver->add_option("file", ver_file, "graph6 file")->required();
    ver->add_option("--params", ver_params, "r,s,g")->delimiter(',')->expected(3)->required();

    // bound
    auto* bnd = app.add_subcommand("bound", "print all applicable bounds for (r,s,g)");
    int b_r = 0, b_s = 0, b_g = 0;
    bnd->add_option("r", b_r)->required();
    bnd->add_option("s", b_s)->required();
    bnd->add_option("g", b_g)->required();

    // search
    auto* sea = app.add_subcommand("search", "exhaustive minimal-order search");
    int s_r = 0, s_s = 0, s_g = 0, s_vmax = 0;
    int s_workers = static_cast<int>(std::thread::hardware_concurrency());
    bool prove_min = false;
    long long s_nodes = -1;
    double s_time = -1;
    std::string ckpt_file, resume_file;
    sea->add_option("r", s_r)->required();
    sea->add_option("s", s_s)->required();
    sea->add_option("g", s_g)->required();
    sea->add_option("--vmax", s_vmax, "order ceiling")->required();
    sea->add_flag("--prove-min", prove_min, "enumerate the full minimal order");
    sea->add_option("--workers", s_workers, "worker threads (default: hardware)");
    sea->add_option("--node-limit", s_nodes, "search node budget");
    sea->add_option("--time-limit", s_time, "time budget in seconds");
    sea->add_option("--checkpoint", ckpt_file, "write checkpoint JSON here");
    sea->add_option("--resume", resume_file, "resume from this checkpoint file");

    // plane: incidence structure export
    auto* pln = app.add_subcommand("plane", "export an incidence structure as JSON");
    int p_q = 0, p_biaffine = 0;
    pln->add_option("--q", p_q, "plane order (prime power <= 32)")->required();
    pln->add_option("--biaffine", p_biaffine, "export the biaffine plane of this type (1|2)");

    // catalog
    auto* cat = app.add_subcommand("catalog", "list recipes with domains and orders");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*con) {
            ConstructionResult res;
            if (recipe == "g3") res = babi_g3(con_r, con_s);
            else if (recipe == "g4") res = babi_g4(con_r, con_s);
            else if (recipe == "babi235") res = babi_235();
            else if (recipe == "babi345") res = babi_345();
            else if (recipe == "babi455_24") res = babi_455_24();
            else if (recipe == "babi455_28") res = babi_455_28();
            else if (recipe == "babi565")
                res = babi_565(load_named("cage_6_5", asset_path("cage_6_5")));
            else if (recipe == "babi675") res = babi_675();
            else if (recipe == "babi3555") res = babi_3555_from_rw();
            else if (recipe == "amalgam") {
                BiaffineKind kind = con_type == 1 ? BiaffineKind::type1 : BiaffineKind::type2;
                int order = kind == BiaffineKind::type1 ? con_q : con_q - 1;
                Graph gamma = resolve_graph(gamma_name, order);
                res = amalgamate(con_q, kind, gamma, gamma_name);
            } else if (recipe == "compose") {
                res = compose_babi(resolve_graph(gr_name, 0), resolve_graph(gs_name, 0),
                                   con_g);
            } else if (recipe == "g6pair") res = babi_g6_pair(con_q);
            else if (recipe == "g6triangle") res = babi_g6_triangle(con_q);
            else if (recipe == "g6mod4") res = babi_g6_mod4(con_q);
            else if (recipe == "g6oval") res = babi_g6_oval(con_q);
            else if (recipe == "levi") {
                Graph g = levi(pg2(con_q));
                return emit_construct(g, graph_only_json(g, "levi(pg2(" +
                                                                std::to_string(con_q) + "))"),
                                      out_file, g6_only);
            } else if (recipe == "biaffine") {
                BiaffineKind kind = con_type == 1 ? BiaffineKind::type1 : BiaffineKind::type2;
                Graph g = levi(biaffine(con_q, kind));
                return emit_construct(
                    g, graph_only_json(g, "levi(biaffine(" + std::to_string(con_q) + ",type" +
                                              std::to_string(con_type) + "))"),
                    out_file, g6_only);
            } else {
                // named graphs and assets
                bool known = false;
                for (const auto& e : catalog_entries())
                    if (e.name == recipe) known = true;
                if (!known) throw std::invalid_argument("unknown recipe: " + recipe);
                Graph g = resolve_graph(recipe, 0);
                return emit_construct(g, graph_only_json(g, recipe), out_file, g6_only);
            }
            return emit_construct(res.graph, certificate_json(res.cert), out_file, g6_only);
        }

        if (*ver) {
            std::ifstream in(ver_file, std::ios::binary);
            if (!in) {
                std::cerr << "cannot open " << ver_file << "\n";
                return 3;
            }
            std::string line;
            std::getline(in, line);
            while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
                line.pop_back();
            Graph g = graph6_decode(line);
            BabiParams p(ver_params[0], ver_params[1], ver_params[2]);
            Certificate c = verify_babi(g, p, "verify " + ver_file);
            std::cout << certificate_json(c).dump(2) << "\n";
            return c.balanced ? 0 : 3;
        }

        if (*bnd) {
            BabiParams p(b_r, b_s, b_g);  // validates the domain
            json j;
            j["schema"] = 1;
            j["params"] = {{"r", p.r}, {"s", p.s}, {"g", p.g}};
            if (p.r >= 3) j["moore_r"] = bound_json(moore(p.r, p.g));
            j["moore_s"] = bound_json(moore(p.s, p.g));
            j["babi_lower"] = bound_json(babi_lower(p.r, p.s, p.g));
            j["babi_upper"] = bound_json(babi_upper(p.r, p.s, p.g));
            if (p.g == 3) j["exact"] = bound_json(babi_g3_exact(p.r, p.s));
            if (p.g == 4) j["exact"] = bound_json(babi_g4_exact(p.r, p.s));
            if (p.g == 5 && p.s == p.r + 1 && p.r > 2)
                j["semireg5_lower"] = bound_json(semireg5_lower(p.r));
            if (p.g == 6 && p.s == p.r + 1)
                j["semireg6_lower"] = bound_json(semireg6_lower(p.r));
            if (p.g == 5 || p.g == 6) {
                auto e = equality56_feasible(p.r, p.s, p.g);
                j["equality_feasible"] = e.feasible;
                if (e.witness_d) j["equality_witness_d"] = *e.witness_d;
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*sea) {
            SearchSpec spec{BabiParams(s_r, s_s, s_g), s_vmax,
                            prove_min ? SearchSpec::Mode::prove_min
                                      : SearchSpec::Mode::find_first,
                            s_nodes, s_time, std::max(1, s_workers)};
            std::string path = !resume_file.empty() ? resume_file : ckpt_file;
            SearchOutcome out = exhaustive_min_checkpointed(spec, path,
                                                            !resume_file.empty());
            std::string wg6 = out.witness ? graph6_encode(*out.witness) : "";
            std::cout << outcome_json(out, wg6).dump(2) << "\n";
            return out.exhaustive ? 0 : 4;
        }

        if (*pln) {
            IncidenceStructure inc =
                p_biaffine ? biaffine(p_q, p_biaffine == 1 ? BiaffineKind::type1
                                                           : BiaffineKind::type2)
                           : pg2(p_q);
            json j;
            j["schema"] = 1;
            j["order"] = inc.q;
            j["points"] = inc.point_labels;
            j["lines"] = inc.line_labels;
            j["incidence"] = inc.lines;  // per line, sorted point indices
            if (!inc.classes.empty()) j["classes"] = inc.classes;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*cat) {
            json arr = json::array();
            for (const auto& e : catalog_entries())
                arr.push_back({{"recipe", e.name},
                               {"parameters", e.params},
                               {"domain", e.domain},
                               {"expected_order", e.order}});
            std::cout << json{{"schema", 1}, {"recipes", arr}}.dump(2) << "\n";
            return 0;
        }
    } catch (const SearchBudgetError& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 0;
}
