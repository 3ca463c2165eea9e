// Command-line front end: exact counting, listing, bijective mapping, series
// expansion, verification suites and ASCII rendering for directed convex
// polyominoes.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyforge/json_io.hpp"
#include "polyforge/polyforge.hpp"

namespace {

using namespace polyforge;
using nlohmann::json;

int worker_count() {
    if (const char* env = std::getenv("POLYFORGE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

PolyominoClass class_from_string(const std::string& s) {
    if (s == "convex") return PolyominoClass::convex;
    if (s == "directed") return PolyominoClass::directed;
    if (s == "parallelogram") return PolyominoClass::parallelogram;
    fail(errc::unknown_name, "unknown class: " + s);
}

// per-semi-perimeter counting, farmed out across worker threads
std::vector<CountRow> parallel_count(PolyominoClass cls, int max_sp, int degree_cap) {
    std::vector<CountRow> rows(static_cast<size_t>(std::max(0, max_sp - 1)));
    int workers = std::min(worker_count(), std::max(1, max_sp - 1));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int sp = 2 + w; sp <= max_sp; sp += workers)
                rows[sp - 2] = CountRow{sp, count_one(cls, sp, degree_cap)};
        });
    }
    for (auto& t : pool) t.join();
    return rows;
}

std::string render_polyomino(const Polyomino& p) {
    std::string out;
    for (int j = p.height() - 1; j >= 0; --j) {
        for (int i = 0; i < p.width(); ++i) out += p.contains(i, j) ? '#' : '.';
        out += '\n';
    }
    return out;
}

void render_tree(const OrderedTree& t, int depth, std::string& out) {
    out.append(static_cast<size_t>(2 * depth), ' ');
    out += "*\n";
    for (const auto& c : t.children) render_tree(c, depth + 1, out);
}

json read_stdin_json() {
    json j;
    try {
        std::cin >> j;
    } catch (const json::exception& e) {
        fail(errc::bad_input, std::string("stdin is not valid JSON: ") + e.what());
    }
    return j;
}

GfName gf_name_from_string(const std::string& s) {
    if (s == "directed") return GfName::directed;
    if (s == "symmetric") return GfName::symmetric;
    if (s == "trees_le") return GfName::trees_le;
    if (s == "trees_eq") return GfName::trees_eq;
    if (s == "kpar") return GfName::kpar;
    if (s == "kdir") return GfName::kdir;
    if (s == "dk_minus") return GfName::dk_minus;
    if (s == "fd_flat") return GfName::fd_flat;
    if (s == "zconvex") return GfName::zconvex;
    fail(errc::unknown_name, "unknown series name: " + s);
}

bool marked_name_from_string(const std::string& s, MarkedName& out) {
    if (s == "toprow_pd") out = MarkedName::toprow_pd;
    else if (s == "toprow_d") out = MarkedName::toprow_d;
    else if (s == "width_height") out = MarkedName::width_height;
    else if (s == "corners_out") out = MarkedName::corners_out;
    else if (s == "corners_in") out = MarkedName::corners_in;
    else if (s == "site") out = MarkedName::site;
    else return false;
    return true;
}

int run(int argc, char** argv) {
    CLI::App app{"polyforge: exact enumeration of directed convex polyominoes"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "count polyominoes per semi-perimeter (CSV)");
    std::string count_class;
    int count_max_sp = 0, count_k = -1;
    count->add_option("--class", count_class, "convex|directed|parallelogram")->required();
    count->add_option("--max-sp", count_max_sp, "largest semi-perimeter")->required();
    count->add_option("--k", count_k, "restrict to degree of convexity <= k");

    // list
    auto* list = app.add_subcommand("list", "list all polyominoes of one semi-perimeter");
    std::string list_class, list_format = "json";
    int list_sp = 0, list_k = -1;
    list->add_option("--class", list_class, "convex|directed|parallelogram")->required();
    list->add_option("--sp", list_sp, "semi-perimeter")->required();
    list->add_option("--k", list_k, "restrict to degree of convexity <= k");
    list->add_option("--format", list_format, "json|ascii")->check(CLI::IsMember({"json", "ascii"}));

    // map
    auto* map = app.add_subcommand("map", "convert between representations (JSON stdin -> stdout)");
    std::string map_from, map_to;
    map->add_option("--from", map_from, "polyomino|triplet|bilateral")
        ->required()
        ->check(CLI::IsMember({"polyomino", "triplet", "bilateral"}));
    map->add_option("--to", map_to, "triplet|polyomino|bilateral|forests|skeleton")
        ->required()
        ->check(CLI::IsMember({"triplet", "polyomino", "bilateral", "forests", "skeleton"}));

    // series
    auto* series = app.add_subcommand("series", "expand a generating function");
    std::string series_name, series_format = "csv";
    int series_k = -1, series_order = 0;
    bool series_markers = false;
    series->add_option("--name", series_name, "series family")->required();
    series->add_option("--k", series_k, "family parameter k");
    series->add_option("--order", series_order, "truncation order")->required();
    series->add_flag("--markers", series_markers, "expand a marked (multivariate) family");
    series->add_option("--format", series_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run cross-validation suites");
    std::string verify_suite = "all";
    int verify_max_sp = 10;
    verify->add_option("--suite", verify_suite, "bijections|counts|identities|bounce|all")
        ->check(CLI::IsMember({"bijections", "counts", "identities", "bounce", "all"}));
    verify->add_option("--max-sp", verify_max_sp, "enumeration bound");

    // render
    auto* render = app.add_subcommand("render", "ASCII rendering (JSON stdin)");
    std::string render_type;
    render->add_option("--type", render_type, "polyomino|tree|path")
        ->required()
        ->check(CLI::IsMember({"polyomino", "tree", "path"}));

    // asymptotics
    auto* asym = app.add_subcommand("asymptotics", "growth data for directed k-convex counts");
    int asym_k = 1;
    asym->add_option("--k", asym_k, "convexity bound k")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (count->parsed()) {
        if (count_max_sp < 2) fail(errc::bad_input, "count: --max-sp must be >= 2");
        auto rows = parallel_count(class_from_string(count_class), count_max_sp, count_k);
        std::printf("sp,count\n");
        for (const auto& row : rows) std::printf("%d,%llu\n", row.sp, (unsigned long long)row.count);
        return 0;
    }

    if (list->parsed()) {
        auto all = collect_sorted(class_from_string(list_class), list_sp, list_k);
        for (const auto& p : all) {
            if (list_format == "json")
                std::cout << polyomino_to_json(p).dump() << "\n";
            else
                std::cout << render_polyomino(p) << "\n";
        }
        return 0;
    }

    if (map->parsed()) {
        json in = read_stdin_json();
        // normalize the input to a triplet, then emit the requested view
        Triplet t;
        if (map_from == "polyomino") {
            t = to_triplet(polyomino_from_json(in));
        } else if (map_from == "triplet") {
            t = triplet_from_json(in);
        } else {
            if (!in.is_string()) fail(errc::bad_input, "bilateral input must be a JSON string over u/d");
            BilateralParse parse = bilateral_to_triplet(in.get<std::string>());
            t = Triplet{std::move(parse.fe), std::move(parse.fs), CutPath{"e" + parse.lambda + "s"}};
        }
        json out;
        if (map_to == "triplet") {
            out = triplet_to_json(t);
        } else if (map_to == "polyomino") {
            out = polyomino_to_json(from_triplet(t));
        } else if (map_to == "bilateral") {
            std::string core = t.cut.word.substr(1, t.cut.word.size() - 2);
            out = json(triplet_to_bilateral(t.fe, t.fs, core));
        } else if (map_to == "forests") {
            Polyomino d = from_triplet(t);
            auto [fe, fs] = phi(complete_to_parallelogram(d));
            json jfe = json::array(), jfs = json::array();
            for (const auto& tr : fe) jfe.push_back(tree_to_paren(tr));
            for (const auto& tr : fs) jfs.push_back(tree_to_paren(tr));
            out = json{{"fe", jfe}, {"fs", jfs}};
        } else { // skeleton
            Polyomino d = from_triplet(t);
            out = skeleton_to_json(bounce_skeleton(complete_to_parallelogram(d)));
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (series->parsed()) {
        if (series_order < 0) fail(errc::bad_input, "series: --order must be >= 0");
        MarkedName marked;
        bool is_marked = marked_name_from_string(series_name, marked);
        if (series_markers && !is_marked)
            fail(errc::unknown_name, "series: --markers given but " + series_name + " is univariate");
        if (is_marked) {
            std::cout << marked_series_to_json(gf_marked(marked, series_order)).dump(2) << "\n";
            return 0;
        }
        GfName name = gf_name_from_string(series_name);
        if (gf_needs_k(name) && series_k < 0) fail(errc::bad_k, "series: this family needs --k");
        Series s = gf_univariate(name, series_k, series_order);
        if (series_format == "json") {
            std::cout << series_to_json(s).dump() << "\n";
        } else {
            std::printf("degree,coefficient\n");
            for (int n = 0; n <= s.order(); ++n)
                std::printf("%d,%s\n", n, s.coeff(n).num().to_string().c_str());
        }
        return 0;
    }

    if (verify->parsed()) {
        if (verify_max_sp < 2) fail(errc::bad_input, "verify: --max-sp must be >= 2");
        auto results = run_verification(verify_suite, verify_max_sp);
        int failures = 0;
        for (const auto& r : results) {
            std::printf("[%s] %s/%s%s%s\n", r.pass ? "PASS" : "FAIL", r.suite.c_str(), r.name.c_str(),
                        r.pass ? "" : " — ", r.pass ? "" : r.detail.c_str());
            if (!r.pass) ++failures;
        }
        std::printf("%zu checks, %d failed\n", results.size(), failures);
        return failures ? 1 : 0;
    }

    if (render->parsed()) {
        json in = read_stdin_json();
        if (render_type == "polyomino") {
            std::cout << render_polyomino(polyomino_from_json(in));
        } else if (render_type == "tree") {
            if (!in.is_string()) fail(errc::bad_input, "tree input must be a JSON string of parentheses");
            std::string out;
            render_tree(tree_from_paren(in.get<std::string>()), 0, out);
            std::cout << out;
        } else {
            if (!in.is_string()) fail(errc::bad_input, "path input must be a JSON string");
            std::string w = in.get<std::string>();
            for (char c : w)
                if (c != 'e' && c != 's' && c != 'u' && c != 'd')
                    fail(errc::bad_input, "path letters must be e/s (cuts) or u/d (Dyck words)");
            std::cout << w << "\n";
        }
        return 0;
    }

    if (asym->parsed()) {
        AsymptoticInfo info = asymptotic_mu(asym_k);
        std::printf("k: %d\n", asym_k);
        std::printf("mu: %.12f\n", info.mu);
        std::printf("smallest_root: %.12f\n", info.root);
        std::printf("mu_times_root: %.12f\n", info.mu * info.root);
        RatioDrift drift = asymptotic_ratio_drift(asym_k, 40, 60);
        std::printf("ratio_n40: %.9g\n", drift.ratio_lo);
        std::printf("ratio_n60: %.9g\n", drift.ratio_hi);
        std::printf("max_drift: %.6f\n", drift.max_drift);
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const polyforge::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
