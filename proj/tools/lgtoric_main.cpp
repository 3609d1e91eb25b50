// lgtoric: checks the combinatorics behind a table of toric Landau-Ginzburg
// models for Fano threefolds: reflexivity and degrees of Newton polytopes,
// period sequence prefixes, polynomial mutations, and the two link graphs.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lgtoric/catalog.hpp"
#include "lgtoric/json_io.hpp"
#include "lgtoric/mutation.hpp"
#include "lgtoric/period.hpp"
#include "lgtoric/polygons.hpp"

using namespace lgtoric;

namespace {

std::string default_dataset() {
    if (const char* env = std::getenv("LG_DATASET_PATH")) return env;
#ifdef LGTORIC_DATA_FILE
    return LGTORIC_DATA_FILE;
#else
    return "data/catalog.json";
#endif
}

std::string default_cache() {
    if (const char* env = std::getenv("LG_CACHE_DIR")) return env;
    return "";
}

LaurentPolynomial input_poly(const Catalog* cat, int row, const std::string& expr, int dim = 3) {
    if (row > 0) {
        if (!cat) throw SchemaError("a dataset is required for --row");
        return cat->row(row).poly;
    }
    if (expr.empty()) throw ParseError("no polynomial given (expression or --row)");
    return parse_laurent(expr, dim);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for toric Landau-Ginzburg models of Fano threefolds"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    std::string format = "text";
    unsigned long seed = 0;
    int jobs = 0;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--jobs", jobs, "worker threads (0 = library default)");

    std::string dataset = default_dataset();

    // validate
    auto* validate = app.add_subcommand("validate", "run every dataset check");
    long period_depth = 6;
    int gl_checks = 0;
    bool no_parallel = false;
    validate->add_option("--dataset", dataset, "dataset file");
    validate->add_option("--period-depth", period_depth, "support-congruence depth");
    validate->add_option("--gl-checks", gl_checks, "random unimodular spot checks per row");
    validate->add_flag("--serial", no_parallel, "disable row-level parallelism");
    validate->add_flag("--parallel", [](std::int64_t) {}, "row-level parallelism (default)");

    // period
    auto* period = app.add_subcommand(
        "period",
        "period sequence prefix of a polynomial\n"
        "expression grammar: integer coefficients, variables x y z, + - * / ^,\n"
        "parentheses; division only by single-term values, e.g. (x+y+z+1)^4/(x*y*z)");
    std::string expr;
    int row = 0;
    int dim = 3;
    long depth = 10;
    std::string cache = default_cache();
    std::string ref_file;
    bool serial = false;
    period->add_option("expr", expr, "Laurent polynomial expression");
    period->add_option("--dim", dim, "variables in the expression (2 or 3)")
        ->check(CLI::IsMember({2, 3}));
    period->add_option("--row", row, "dataset row id");
    period->add_option("--dataset", dataset, "dataset file");
    period->add_option("--depth", depth, "depth N (computes a_0..a_N)");
    period->add_option("--cache", cache, "cache directory (also LG_CACHE_DIR)");
    period->add_option("--check-ref", ref_file,
                       "compare against a reference file {\"N\":int,\"values\":[\"1\",...]}");
    period->add_flag("--serial", serial, "disable the parallel kernel");

    // mutate
    auto* mut = app.add_subcommand("mutate", "apply or search a mutation");
    std::string decomposition_file;
    int search_pivot = -1;
    int max_support = 8;
    long mut_depth = 10;
    mut->add_option("expr", expr, "Laurent polynomial expression");
    mut->add_option("--row", row, "dataset row id");
    mut->add_option("--dataset", dataset, "dataset file");
    mut->add_option("--decomposition", decomposition_file, "decomposition JSON file");
    mut->add_option("--search", search_pivot, "search decompositions at this pivot (0=x,1=y,2=z)");
    mut->add_option("--max-support", max_support, "factor support bound for the search");
    mut->add_option("--depth", mut_depth, "period comparison depth");

    // polytope
    auto* poly = app.add_subcommand("polytope", "Newton polytope queries");
    bool show_dual = false, show_nf = false, show_points = false;
    poly->add_option("expr", expr, "Laurent polynomial expression");
    poly->add_option("--dim", dim, "variables in the expression (2 or 3)")
        ->check(CLI::IsMember({2, 3}));
    poly->add_option("--row", row, "dataset row id");
    poly->add_option("--dataset", dataset, "dataset file");
    poly->add_flag("--dual", show_dual, "print dual vertices");
    poly->add_flag("--nf", show_nf, "print the normal form hex string");
    poly->add_flag("--points", show_points, "print lattice point counts");

    // graph
    auto* graph = app.add_subcommand("graph", "emit a link graph as DOT");
    bool g_snake = false, g_delpezzo = false;
    std::string dot_out;
    graph->add_flag("--snake", g_snake, "row graph from the dataset");
    graph->add_flag("--delpezzo", g_delpezzo, "reflexive polygon blow-down graph");
    graph->add_option("--dot", dot_out, "output file (default stdout)");
    graph->add_option("--dataset", dataset, "dataset file");

    // polygons
    auto* polygons = app.add_subcommand("polygons", "classify the reflexive polygons");

    // bench
    auto* bench = app.add_subcommand("bench", "period engine timing, serial vs parallel");
    std::vector<int> bench_rows{1, 24, 25};
    long bench_depth = 20;
    bench->add_option("--rows", bench_rows, "dataset rows to benchmark");
    bench->add_option("--depth", bench_depth, "period depth");
    bench->add_option("--dataset", dataset, "dataset file");

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif

    auto t0 = std::chrono::steady_clock::now();
    try {
        if (*validate) {
            Catalog cat = load_catalog(dataset);
            ValidationOptions opts;
            opts.period_depth = period_depth;
            opts.parallel = !no_parallel;
            opts.gl_checks = gl_checks;
            opts.seed = seed;
            ValidationReport rep = validate_all(cat, opts);
            if (format == "json") {
                nlohmann::json j;
                j["command"] = "validate";
                j["dataset"] = dataset;
                j["report"] = report_to_json(rep);
                std::cerr << "elapsed_ms " << ms_since(t0) << "\n";
                std::cout << j.dump(1) << "\n";
            } else {
                for (const RowCheck& r : rep.rows)
                    std::cout << "row " << r.id << ": " << (r.pass() ? "ok" : "FAIL")
                              << " (reflexive=" << r.reflexive << " volume=" << r.dual_volume
                              << " points=" << r.dual_points << ")\n";
                for (const EdgeCheck& e : rep.edges) {
                    std::cout << "edge " << e.parent << "->" << e.child << " ["
                              << to_string(e.type) << "]: " << (e.pass() ? "ok" : "FAIL");
                    if (e.containment == CheckState::Skipped) std::cout << " (containment skipped)";
                    std::cout << "\n";
                }
                for (const std::string& s : rep.global_failures) std::cout << "global: " << s << "\n";
                for (const std::string& s : rep.period_failures) std::cout << "period: " << s << "\n";
                std::cout << (rep.pass ? "PASS" : "FAIL") << " (" << rep.rows.size() << " rows, "
                          << rep.edges.size() << " edges)\n";
            }
            return rep.pass ? 0 : 1;
        }

        if (*period) {
            Catalog cat;
            bool have_cat = false;
            if (row > 0) {
                cat = load_catalog(dataset);
                have_cat = true;
            }
            LaurentPolynomial f = input_poly(have_cat ? &cat : nullptr, row, expr, dim);
            PeriodOptions popts;
            popts.parallel = !serial;
            popts.cache_dir = cache;
            if (!ref_file.empty()) {
                std::ifstream in(ref_file);
                if (!in) throw Error("cannot open " + ref_file);
                nlohmann::json rj;
                in >> rj;
                std::vector<Int> ref;
                for (const auto& v : rj.at("values")) ref.emplace_back(v.get<std::string>());
                ReferenceCheck rc = check_reference(f, ref, popts);
                if (rc.length_warning) std::cerr << "warning: empty reference, vacuous pass\n";
                if (format == "json") {
                    nlohmann::json j;
                    j["command"] = "period --check-ref";
                    j["pass"] = rc.pass;
                    j["compared"] = rc.compared;
                    j["mismatches"] = rc.mismatches;
                    std::cout << j.dump(1) << "\n";
                } else {
                    if (rc.pass)
                        std::cout << "reference matches through i=" << rc.compared - 1 << "\n";
                    else
                        for (long i : rc.mismatches)
                            std::cout << "mismatch at i=" << i << "\n";
                }
                return rc.pass ? 0 : 1;
            }
            PeriodSequence seq = period_sequence(f, depth, popts);
            if (format == "json") {
                nlohmann::json j;
                j["command"] = "period";
                j["N"] = seq.depth;
                j["hash"] = seq.source_hash;
                std::vector<std::string> vals;
                for (const Int& v : seq.values) vals.push_back(v.get_str());
                j["values"] = vals;
                std::cerr << "elapsed_ms " << ms_since(t0) << "\n";
                std::cout << j.dump(1) << "\n";
            } else {
                for (size_t i = 0; i < seq.values.size(); ++i)
                    std::cout << (i ? " " : "") << seq.values[i];
                std::cout << "\n";
            }
            return 0;
        }

        if (*mut) {
            Catalog cat;
            bool have_cat = false;
            if (row > 0) {
                cat = load_catalog(dataset);
                have_cat = true;
            }
            LaurentPolynomial f = input_poly(have_cat ? &cat : nullptr, row, expr);
            std::vector<MutationData> cands;
            if (!decomposition_file.empty()) {
                std::ifstream in(decomposition_file);
                if (!in) throw Error("cannot open " + decomposition_file);
                nlohmann::json j;
                in >> j;
                MutationData d = mutation_from_json(j);
                if (!validate_decomposition(f, d)) {
                    std::cerr << "decomposition does not reproduce the polynomial\n";
                    return 1;
                }
                cands.push_back(std::move(d));
            } else if (search_pivot >= 0) {
                cands = find_decompositions(f, search_pivot, max_support);
                if (cands.empty()) {
                    std::cerr << "no decomposition found at pivot " << search_pivot << "\n";
                    return 1;
                }
            } else {
                std::cerr << "need --decomposition or --search\n";
                return 1;
            }
            const MutationData& d = cands.front();
            LaurentPolynomial g = mutate(f, d);
            PeriodEqual pe = period_equal(f, g, mut_depth);
            if (format == "json") {
                nlohmann::json j;
                j["command"] = "mutate";
                j["candidates"] = cands.size();
                j["decomposition"] = mutation_to_json(d);
                j["result_terms"] = terms_to_json(g);
                j["result"] = g.to_expression();
                j["periods_equal_through"] = pe.equal ? mut_depth : pe.first_mismatch - 1;
                j["periods_equal"] = pe.equal;
                std::cerr << "elapsed_ms " << ms_since(t0) << "\n";
                std::cout << j.dump(1) << "\n";
            } else {
                std::cout << g.to_expression() << "\n";
                if (pe.equal)
                    std::cout << "periods equal through N=" << mut_depth << "\n";
                else
                    std::cout << "PERIOD MISMATCH at i=" << pe.first_mismatch << "\n";
            }
            return pe.equal ? 0 : 1;
        }

        if (*poly) {
            Catalog cat;
            bool have_cat = false;
            if (row > 0) {
                cat = load_catalog(dataset);
                have_cat = true;
            }
            LaurentPolynomial f = input_poly(have_cat ? &cat : nullptr, row, expr, dim);
            LatticePolytope nt = f.newton_polytope();
            nlohmann::json j;
            j["command"] = "polytope";
            nlohmann::json vj = nlohmann::json::array();
            std::ostringstream text;
            text << "vertices:";
            for (const Vec& v : nt.vertices()) {
                text << " " << v.str();
                nlohmann::json row_j = nlohmann::json::array();
                for (int i = 0; i < nt.dim(); ++i) row_j.push_back(v[i].get_si());
                vj.push_back(row_j);
            }
            text << "\n";
            j["dim"] = nt.dim();
            j["vertices"] = vj;
            if (show_dual) {
                RationalPolytope d = nt.dual();
                text << "dual vertices:";
                nlohmann::json dj = nlohmann::json::array();
                for (const RatVec& u : d.vertices()) {
                    text << " (";
                    nlohmann::json uj = nlohmann::json::array();
                    for (int i = 0; i < d.dim(); ++i) {
                        text << (i ? "," : "") << u[i].get_str();
                        uj.push_back(u[i].get_str());
                    }
                    text << ")";
                    dj.push_back(uj);
                }
                text << "\n";
                j["dual_vertices"] = dj;
            }
            if (show_nf) {
                std::string nf = nt.normal_form_hex();
                text << "normal form: " << nf << "\n";
                j["normal_form"] = nf;
            }
            if (show_points) {
                LatticeCount own = nt.lattice_points();
                LatticeCount dual = nt.dual().lattice_points();
                text << "points: " << own.all << " (interior: " << own.interior << ")\n";
                text << "dual: " << dual.all << " points (interior: " << dual.interior << ")\n";
                j["points"] = {{"all", own.all}, {"interior", own.interior}};
                j["dual_points"] = {{"all", dual.all}, {"interior", dual.interior}};
            }
            if (format == "json")
                std::cout << j.dump(1) << "\n";
            else
                std::cout << text.str();
            return 0;
        }

        if (*graph) {
            if (g_snake == g_delpezzo) {
                std::cerr << "pick exactly one of --snake / --delpezzo\n";
                return 2;
            }
            std::string dot;
            if (g_snake) {
                Catalog cat = load_catalog(dataset);
                dot = fano_snake_dot(cat);
            } else {
                dot = del_pezzo_dot(build_del_pezzo_graph());
            }
            write_output(dot_out, dot);
            return 0;
        }

        if (*polygons) {
            DelPezzoGraph g = build_del_pezzo_graph();
            int from_p2 = 0, from_roots = 0;
            for (char c : g.reachable_from_p2) from_p2 += c;
            for (char c : g.reachable_from_roots) from_roots += c;
            if (format == "json") {
                nlohmann::json j;
                j["command"] = "polygons";
                j["count"] = g.nodes.size();
                j["classes"] = nlohmann::json::array();
                for (size_t i = 0; i < g.nodes.size(); ++i) {
                    const PolygonClass& pc = g.nodes[i];
                    nlohmann::json cj;
                    cj["index"] = i + 1;
                    cj["degree"] = pc.degree;
                    cj["vertices"] = nlohmann::json::array();
                    for (const Vec& v : pc.representative.vertices())
                        cj["vertices"].push_back({v[0].get_si(), v[1].get_si()});
                    cj["normal_form"] = pc.nf_hex;
                    cj["reachable_from_p2"] = static_cast<bool>(g.reachable_from_p2[i]);
                    cj["reachable_from_roots"] = static_cast<bool>(g.reachable_from_roots[i]);
                    j["classes"].push_back(std::move(cj));
                }
                j["edges"] = g.edges;
                j["reached_from_p2"] = from_p2;
                j["reached_from_roots"] = from_roots;
                std::cerr << "elapsed_ms " << ms_since(t0) << "\n";
                std::cout << j.dump(1) << "\n";
            } else {
                for (size_t i = 0; i < g.nodes.size(); ++i) {
                    const PolygonClass& pc = g.nodes[i];
                    std::cout << "N" << i + 1 << " deg=" << pc.degree << " vertices=[";
                    bool first = true;
                    for (const Vec& v : pc.representative.vertices()) {
                        std::cout << (first ? "" : " ") << v.str();
                        first = false;
                    }
                    std::cout << "] nf=" << pc.nf_hex.substr(0, 16) << "...\n";
                }
                std::cout << g.nodes.size() << " classes, " << g.edges.size()
                          << " blow-down edges; reachable from the degree-9 class: " << from_p2
                          << "/16, from the three roots: " << from_roots << "/16\n";
            }
            return 0;
        }

        if (*bench) {
            Catalog cat = load_catalog(dataset);
            std::cout << "row  depth  serial_ms  parallel_ms  speedup  match\n";
            bool all_match = true;
            for (int rid : bench_rows) {
                const CatalogRow& r = cat.row(rid);
                PeriodOptions ser;
                ser.parallel = false;
                auto ts = std::chrono::steady_clock::now();
                PeriodSequence a = period_sequence(r.poly, bench_depth, ser);
                double ms_serial = ms_since(ts);
                PeriodOptions par;
                par.parallel = true;
                auto tp = std::chrono::steady_clock::now();
                PeriodSequence b = period_sequence(r.poly, bench_depth, par);
                double ms_par = ms_since(tp);
                bool match = a.values == b.values;
                all_match = all_match && match;
                std::printf("%-4d %-6ld %-10.1f %-12.1f %-8.2f %s\n", rid, bench_depth, ms_serial,
                            ms_par, ms_par > 0 ? ms_serial / ms_par : 0.0,
                            match ? "yes" : "NO");
            }
            return all_match ? 0 : 1;
        }
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateInput& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
