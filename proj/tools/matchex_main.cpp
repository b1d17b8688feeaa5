// matchex: matching / bounded-degree / domination complexes of graphs,
// element-matching schedules, and exact integral homology.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchex/bounds.hpp"
#include "matchex/complex.hpp"
#include "matchex/errors.hpp"
#include "matchex/graph.hpp"
#include "matchex/homology.hpp"
#include "matchex/morse.hpp"
#include "matchex/report.hpp"
#include "matchex/verify.hpp"

namespace {

using matchex::Complex;
using matchex::Face;
using matchex::Graph;
using matchex::Json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct CommonOpts {
    int kn = 0;
    std::vector<int> knn;        // m n
    std::string graph_file;
    int r = 0;
    std::string lambda;          // comma-separated bounds
    std::vector<int> domination; // n gamma
    std::string format = "json";
    std::string out_path;
    std::string cache_dir;
    bool timings = false;
    int threads = 0;
};

void add_graph_flags(CLI::App* cmd, CommonOpts& o, bool with_domination) {
    cmd->add_option("--kn", o.kn, "built-in complete graph K_n");
    cmd->add_option("--knn", o.knn, "built-in complete bipartite K_{m,n}")->expected(2);
    cmd->add_option("--graph", o.graph_file, "edge-list file: 'n m' then m lines 'u v'");
    cmd->add_option("--r", o.r, "uniform degree bound r");
    cmd->add_option("--lambda", o.lambda, "per-vertex degree bounds, comma separated");
    if (with_domination)
        cmd->add_option("--domination", o.domination,
                        "domination complex D_{n,gamma}: two values n gamma")
            ->expected(2);
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", o.out_path, "write the report to a file instead of stdout");
    cmd->add_option("--cache", o.cache_dir, "complex cache directory (or MATCHEX_CACHE)");
    cmd->add_flag("--timings", o.timings, "include real timings in reports");
    cmd->add_option("--threads", o.threads, "worker threads for homology (0 = auto)");
}

void emit(const CommonOpts& o, const std::string& payload) {
    if (o.out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(o.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + o.out_path);
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << '\n';
}

Graph load_graph(const CommonOpts& o) {
    int sources = (o.kn > 0) + (!o.knn.empty()) + (!o.graph_file.empty());
    if (sources != 1)
        throw std::invalid_argument("pick exactly one graph source: --kn, --knn, or --graph");
    if (o.kn > 0) return Graph::complete(o.kn);
    if (!o.knn.empty()) return Graph::complete_bipartite(o.knn[0], o.knn[1]);
    std::ifstream in(o.graph_file);
    if (!in) throw std::runtime_error("cannot read " + o.graph_file);
    return Graph::read_edge_list(in);
}

std::vector<int> parse_lambda(const std::string& text, int n) {
    std::vector<int> bounds;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) bounds.push_back(std::stoi(item));
    if (static_cast<int>(bounds.size()) != n)
        throw std::invalid_argument("lambda needs exactly " + std::to_string(n) + " entries");
    return bounds;
}

std::string cache_directory(const CommonOpts& o) {
    if (!o.cache_dir.empty()) return o.cache_dir;
    if (const char* env = std::getenv("MATCHEX_CACHE")) return env;
    return {};
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Complex cached_build(const CommonOpts& o, const std::string& key,
                     const std::function<Complex()>& build) {
    std::string dir = cache_directory(o);
    if (dir.empty()) return build();
    std::ostringstream name;
    name << dir << "/" << std::hex << fnv1a(key) << ".cpx";
    {
        std::ifstream in(name.str());
        if (in) {
            std::string word, stored;
            if (in >> word && word == "key" && std::getline(in, stored) &&
                stored == " " + key) {
                return Complex::load(in);
            }
        }
    }
    Complex k = build();
    std::ofstream out(name.str(), std::ios::binary);
    if (out) {
        out << "key " << key << '\n';
        k.save(out);
    }
    return k;
}

// Build the complex requested by the shared flags, plus a cache key.
Complex build_complex(const CommonOpts& o) {
    if ((o.r > 0) + (!o.lambda.empty()) + (!o.domination.empty()) > 1)
        throw std::invalid_argument("--r, --lambda, and --domination are mutually exclusive");
    if (!o.domination.empty()) {
        if (o.kn > 0 || !o.knn.empty() || !o.graph_file.empty())
            throw std::invalid_argument("--domination already names its graph; drop the graph source");
        int n = o.domination[0], gamma = o.domination[1];
        std::string key = "dom|n=" + std::to_string(n) + "|gamma=" + std::to_string(gamma);
        return cached_build(o, key, [&] { return matchex::domination_complex(n, gamma); });
    }
    Graph g = load_graph(o);
    std::vector<int> bounds;
    if (!o.lambda.empty())
        bounds = parse_lambda(o.lambda, g.vertex_count());
    else if (o.r > 0)
        bounds.assign(static_cast<std::size_t>(g.vertex_count()), o.r);
    else
        throw std::invalid_argument("need --r or --lambda (or --domination)");
    std::ostringstream key;
    key << "bd|n=" << g.vertex_count() << "|edges=";
    for (const auto& [u, v] : g.edges()) key << u << '-' << v << ';';
    key << "|bounds=";
    for (int b : bounds) key << b << ',';
    return cached_build(o, key.str(), [&] { return bounded_degree_complex(g, bounds); });
}

matchex::Schedule load_schedule(const std::string& selector, const Graph& g) {
    if (selector == "kn") {
        if (g.bipartition())
            throw std::invalid_argument("--schedule kn expects a complete graph source");
        return matchex::kn_schedule(g.vertex_count());
    }
    if (selector == "knn") {
        const auto& bip = g.bipartition();
        if (!bip || bip->left != bip->right)
            throw std::invalid_argument("--schedule knn expects --knn n n");
        return matchex::knn_schedule(bip->left);
    }
    std::ifstream in(selector);
    if (!in) throw std::runtime_error("cannot read schedule file " + selector);
    std::vector<int> labels;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long long> nums;
        long long x;
        while (ls >> x) nums.push_back(x);
        if (nums.empty()) continue;
        if (nums.size() == 1)
            labels.push_back(static_cast<int>(nums[0]));
        else if (nums.size() == 2)
            labels.push_back(g.edge_index(static_cast<int>(nums[0]), static_cast<int>(nums[1])));
        else
            throw std::runtime_error("schedule line needs one index or one 'u v' pair");
    }
    return matchex::Schedule(std::move(labels), g.edge_count());
}

int run_build(const CommonOpts& o, const std::string& save_path) {
    Complex k = build_complex(o);
    if (!save_path.empty()) {
        std::ofstream out(save_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + save_path);
        k.save(out);
    }
    auto s = k.stats();
    if (o.format == "json")
        emit(o, matchex::stats_to_json(s).dump(2));
    else if (o.format == "csv")
        emit(o, matchex::stats_to_csv(s));
    else
        emit(o, matchex::stats_to_text(s));
    return exit_ok;
}

int run_homology(const CommonOpts& o, const std::string& load_path, const std::string& expect) {
    Complex k = [&] {
        if (load_path.empty()) return build_complex(o);
        std::ifstream in(load_path);
        if (!in) throw std::runtime_error("cannot read " + load_path);
        return Complex::load(in);
    }();
    matchex::HomologyProfile p = matchex::reduced_homology(k, o.threads);
    if (o.format == "json")
        emit(o, matchex::homology_to_json(p).dump(2));
    else if (o.format == "csv")
        emit(o, matchex::homology_to_csv(p));
    else
        emit(o, matchex::homology_to_text(p));
    if (!expect.empty()) {
        std::string text = expect;
        if (text.front() == '@') {
            std::ifstream in(text.substr(1));
            if (!in) throw std::runtime_error("cannot read " + text.substr(1));
            std::stringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        Json want = Json::parse(text);
        if (want != matchex::homology_to_json(p)) {
            std::cerr << "homology does not match --expect\n";
            return exit_check_failed;
        }
    }
    return exit_ok;
}

int run_morse(const CommonOpts& o, const std::string& schedule_sel, const std::string& export_path) {
    if (!o.domination.empty())
        throw std::invalid_argument("morse run works on graph complexes; use --kn/--knn/--graph");
    Graph g = load_graph(o);
    std::vector<int> bounds;
    if (!o.lambda.empty())
        bounds = parse_lambda(o.lambda, g.vertex_count());
    else if (o.r > 0)
        bounds.assign(static_cast<std::size_t>(g.vertex_count()), o.r);
    else
        throw std::invalid_argument("need --r or --lambda");
    Complex k = bounded_degree_complex(g, bounds);
    matchex::Schedule sched = load_schedule(schedule_sel, g);
    matchex::MorseMatching m = matchex::run_schedule(k, sched);
    bool acyclic = matchex::is_acyclic(k, m).acyclic;
    if (!export_path.empty()) {
        std::ofstream out(export_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + export_path);
        m.write(out);
    }
    auto s = matchex::summarize(m);
    long long pairs = static_cast<long long>(m.pairs.size());
    if (o.format == "text")
        emit(o, matchex::morse_summary_to_text(s, pairs, acyclic));
    else
        emit(o, matchex::morse_summary_to_json(s, pairs, acyclic).dump(2));
    return exit_ok;
}

int emit_reports(const CommonOpts& o, const std::vector<matchex::VerificationReport>& reports) {
    if (o.format == "json")
        emit(o, matchex::reports_to_json(reports, o.timings).dump(2));
    else if (o.format == "csv")
        emit(o, matchex::reports_to_csv(reports, o.timings));
    else
        emit(o, matchex::reports_to_text(reports, o.timings));
    // When the machine-readable report goes to a file, keep the table on
    // stdout for the human running it.
    if (!o.out_path.empty() && o.format != "text")
        std::cout << matchex::reports_to_text(reports, o.timings);
    return matchex::all_passed(reports) ? exit_ok : exit_check_failed;
}

int run_domination(const CommonOpts& o) {
    Graph g = load_graph(o);
    int dom = g.domination_number(g.full_edge_set());
    if (o.format == "text") {
        emit(o, "domination number: " + std::to_string(dom));
    } else {
        Json out;
        out["n"] = g.vertex_count();
        out["edges"] = g.edge_count();
        out["domination_number"] = dom;
        emit(o, out.dump(2));
    }
    return exit_ok;
}

int run_bound(const CommonOpts& o, int n, int d) {
    auto b = matchex::jonsson_nu(n, d);
    if (o.format == "text")
        emit(o, matchex::bound_to_text(b));
    else
        emit(o, matchex::bound_to_json(b).dump(2));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching / bounded-degree / domination complexes, element-matching "
                 "schedules, exact integral homology"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* build = app.add_subcommand("build", "construct a complex and print its stats");
    std::string save_path;
    add_graph_flags(build, o, true);
    add_output_flags(build, o);
    build->add_option("--save", save_path, "serialize the complex to a file");

    auto* homology = app.add_subcommand("homology", "reduced integral homology of a complex");
    std::string load_path, expect;
    add_graph_flags(homology, o, true);
    add_output_flags(homology, o);
    homology->add_option("--load", load_path, "load a serialized complex instead of building");
    homology->add_option("--expect", expect,
                         "JSON profile (or @file) to compare against; mismatch exits 1");

    auto* morse = app.add_subcommand("morse", "element-matching schedules");
    morse->require_subcommand(1);
    auto* morse_run = morse->add_subcommand("run", "run a schedule and summarize");
    std::string schedule_sel, export_path;
    add_graph_flags(morse_run, o, false);
    add_output_flags(morse_run, o);
    morse_run->add_option("--schedule", schedule_sel, "kn, knn, or a schedule file")->required();
    morse_run->add_option("--export", export_path, "write the matching (pairs + critical)");

    auto* verify = app.add_subcommand("verify", "run built-in checks");
    verify->require_subcommand(1);
    int verify_n = 0;
    int kn_max = matchex::kn_verify_cap, knn_max = matchex::knn_verify_cap;
    bool no_exploratory = false;
    auto* v_kn = verify->add_subcommand("kn", "wedge-of-spheres check for M_{n-2}(K_n)");
    v_kn->add_option("--n", verify_n, "3..6")->required();
    auto* v_knn = verify->add_subcommand("knn", "sphere check for M_{n-1}(K_{n,n})");
    v_knn->add_option("--n", verify_n, "2..4")->required();
    auto* v_sharp = verify->add_subcommand("sharpness", "connectivity bound sharpness");
    v_sharp->add_option("--n", verify_n, ">= 4; formula-only above the build cap")->required();
    auto* v_dom = verify->add_subcommand("domination", "D_{6,3} homology table");
    auto* v_filt = verify->add_subcommand("filtration", "domination filtration facts");
    v_filt->add_option("--n", verify_n, "3..6")->required();
    auto* v_facets = verify->add_subcommand("facets", "facet size bounds");
    v_facets->add_option("--n", verify_n, "2..6")->required();
    auto* v_join = verify->add_subcommand("join", "join construction for M_r(K_{m,n})");
    auto* v_formula = verify->add_subcommand("formula", "connectivity bound identities");
    auto* v_all = verify->add_subcommand("all", "the whole battery");
    v_all->add_option("--kn-max", kn_max, "cap for the K_n route (default 6)");
    v_all->add_option("--knn-max", knn_max, "cap for the K_{n,n} route (default 4)");
    v_all->add_flag("--no-exploratory", no_exploratory, "skip exploratory entries");
    for (CLI::App* sub : {v_kn, v_knn, v_sharp, v_dom, v_filt, v_facets, v_join, v_formula, v_all})
        add_output_flags(sub, o);

    auto* domination = app.add_subcommand("domination", "domination number of a graph");
    add_graph_flags(domination, o, false);
    add_output_flags(domination, o);

    auto* bound = app.add_subcommand("bound", "connectivity lower bound for M_d(K_n)");
    int bound_n = 0, bound_d = 0;
    bound->add_option("--n", bound_n, "number of vertices")->required();
    bound->add_option("--d", bound_d, "degree bound d >= 2")->required();
    add_output_flags(bound, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) return run_build(o, save_path);
        if (*homology) return run_homology(o, load_path, expect);
        if (*morse) return run_morse(o, schedule_sel, export_path);
        if (*domination) return run_domination(o);
        if (*bound) return run_bound(o, bound_n, bound_d);
        if (*verify) {
            std::vector<matchex::VerificationReport> reports;
            if (*v_kn) reports.push_back(matchex::verify_theorem_kn(verify_n, o.threads));
            else if (*v_knn) reports.push_back(matchex::verify_theorem_knn(verify_n, o.threads));
            else if (*v_sharp) reports.push_back(matchex::verify_sharpness(verify_n, nullptr, o.threads));
            else if (*v_dom) reports.push_back(matchex::verify_domination_table(o.threads));
            else if (*v_filt) reports.push_back(matchex::verify_domination_filtration(verify_n));
            else if (*v_facets) reports.push_back(matchex::verify_facet_bounds(verify_n));
            else if (*v_join) reports.push_back(matchex::verify_join_construction());
            else if (*v_formula) reports.push_back(matchex::verify_jonsson_formula());
            else if (*v_all) reports = matchex::verify_all(kn_max, knn_max, !no_exploratory, o.threads);
            return emit_reports(o, reports);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const matchex::CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
