#include "lgtoric/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lgtoric/period.hpp"

namespace lgtoric {

const char* to_string(LinkType t) {
    switch (t) {
        case LinkType::II_p: return "II_p";
        case LinkType::II_odp: return "II_odp";
        case LinkType::II_cDV: return "II_cDV";
        case LinkType::II_l: return "II_l";
        case LinkType::II_c: return "II_c";
    }
    return "?";
}

LinkType link_type_from_string(const std::string& s) {
    if (s == "II_p") return LinkType::II_p;
    if (s == "II_odp") return LinkType::II_odp;
    if (s == "II_cDV") return LinkType::II_cDV;
    if (s == "II_l") return LinkType::II_l;
    if (s == "II_c") return LinkType::II_c;
    throw SchemaError("unknown link type '" + s + "'");
}

int degree_drop(LinkType t) {
    switch (t) {
        case LinkType::II_p: return 8;
        case LinkType::II_l: return 4;
        case LinkType::II_c: return 6;
        case LinkType::II_odp: return 2;
        case LinkType::II_cDV: return 2;
    }
    return 0;
}

int CatalogRow::picard_rank() const {
    size_t dotpos = fano_label.find('.');
    if (dotpos == std::string::npos) return 0;
    try {
        return std::stoi(fano_label.substr(0, dotpos));
    } catch (...) {
        return 0;
    }
}

const CatalogRow& Catalog::row(int id) const {
    if (id < 1 || id > static_cast<int>(rows.size()))
        throw UnknownRow("no row with id " + std::to_string(id));
    return rows[static_cast<size_t>(id - 1)];
}

namespace {

[[noreturn]] void schema_fail(int row_id, const std::string& field, const std::string& what) {
    std::ostringstream os;
    os << "row " << row_id << ", field '" << field << "': " << what;
    throw SchemaError(os.str());
}

} // namespace

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open dataset file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }

    Catalog cat;
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
        throw SchemaError("missing schema_version");
    cat.schema_version = j["schema_version"].get<int>();
    if (cat.schema_version != 1)
        throw SchemaError("unsupported schema_version " + std::to_string(cat.schema_version));
    cat.source = j.value("source", "");
    if (!j.contains("rows") || !j["rows"].is_array()) throw SchemaError("missing rows array");

    for (const auto& rj : j["rows"]) {
        CatalogRow row;
        if (!rj.contains("id") || !rj["id"].is_number_integer()) throw SchemaError("row without id");
        row.id = rj["id"].get<int>();
        if (!rj.contains("fano_label") || !rj["fano_label"].is_string())
            schema_fail(row.id, "fano_label", "expected string");
        row.fano_label = rj["fano_label"].get<std::string>();
        if (!rj.contains("degree") || !rj["degree"].is_number_integer())
            schema_fail(row.id, "degree", "expected integer");
        row.degree = rj["degree"].get<long>();
        if (row.degree <= 0 || row.degree % 2 != 0)
            schema_fail(row.id, "degree", "must be positive and even");

        for (const auto& pj : rj.value("parents", nlohmann::json::array())) {
            if (!pj.is_array() || pj.size() != 2)
                schema_fail(row.id, "parents", "expected [id, link_type] pairs");
            row.parents.emplace_back(pj[0].get<int>(),
                                     link_type_from_string(pj[1].get<std::string>()));
        }
        for (const auto& dj : rj.value("descendants", nlohmann::json::array()))
            row.descendants.push_back(dj.get<int>());

        if (!rj.contains("terms") || !rj["terms"].is_array() || rj["terms"].empty())
            schema_fail(row.id, "terms", "expected non-empty term list");
        LaurentPolynomial poly(3);
        for (const auto& tj : rj["terms"]) {
            if (!tj.is_array() || tj.size() != 2 || !tj[0].is_string() || !tj[1].is_array() ||
                tj[1].size() != 3)
                schema_fail(row.id, "terms", "expected [coeff_string, [e1,e2,e3]]");
            Int c;
            try {
                c = Int(tj[0].get<std::string>());
            } catch (...) {
                schema_fail(row.id, "terms", "bad coefficient '" + tj[0].get<std::string>() + "'");
            }
            if (c == 0) schema_fail(row.id, "terms", "zero coefficient stored");
            ExpVec e(3);
            for (int i = 0; i < 3; ++i) e[i] = tj[1][static_cast<size_t>(i)].get<std::int32_t>();
            if (poly.coefficient(e) != 0) schema_fail(row.id, "terms", "duplicate exponent");
            poly.set(e, c);
        }
        row.poly = poly;

        if (rj.contains("transform") && !rj["transform"].is_null()) {
            if (rj["transform"].is_string()) {
                if (rj["transform"].get<std::string>() != "unknown")
                    schema_fail(row.id, "transform", "expected matrix, null, or \"unknown\"");
                row.transform_unknown = true;
            } else {
                std::vector<std::vector<Int>> m;
                for (const auto& rrow : rj["transform"]) {
                    std::vector<Int> r;
                    for (const auto& x : rrow) r.push_back(Int(x.get<long>()));
                    m.push_back(std::move(r));
                }
                UnimodularMap u = UnimodularMap::from_rows(m);
                if (!u.is_unimodular()) schema_fail(row.id, "transform", "determinant is not +-1");
                row.transform = u;
            }
        }
        row.display = rj.value("display", "");
        row.notes = rj.value("notes", "");
        cat.rows.push_back(std::move(row));
    }

    std::sort(cat.rows.begin(), cat.rows.end(),
              [](const CatalogRow& a, const CatalogRow& b) { return a.id < b.id; });
    for (size_t i = 0; i < cat.rows.size(); ++i)
        if (cat.rows[i].id != static_cast<int>(i) + 1)
            throw SchemaError("row ids are not dense 1..n");
    int n = static_cast<int>(cat.rows.size());
    for (const CatalogRow& row : cat.rows) {
        for (const auto& [pid, t] : row.parents)
            if (pid < 1 || pid > n) schema_fail(row.id, "parents", "dangling id " + std::to_string(pid));
        for (int did : row.descendants)
            if (did < 1 || did > n)
                schema_fail(row.id, "descendants", "dangling id " + std::to_string(did));
    }
    return cat;
}

nlohmann::json catalog_to_json(const Catalog& cat) {
    nlohmann::json j;
    j["schema_version"] = cat.schema_version;
    j["source"] = cat.source;
    j["rows"] = nlohmann::json::array();
    for (const CatalogRow& row : cat.rows) {
        nlohmann::json rj;
        rj["id"] = row.id;
        rj["fano_label"] = row.fano_label;
        rj["degree"] = row.degree;
        rj["parents"] = nlohmann::json::array();
        for (const auto& [pid, t] : row.parents) rj["parents"].push_back({pid, to_string(t)});
        rj["descendants"] = row.descendants;
        if (row.transform_unknown)
            rj["transform"] = "unknown";
        else if (row.transform) {
            nlohmann::json m = nlohmann::json::array();
            for (const auto& r : row.transform->rows()) {
                nlohmann::json mr = nlohmann::json::array();
                for (const Int& x : r) mr.push_back(x.get_si());
                m.push_back(mr);
            }
            rj["transform"] = m;
        } else {
            rj["transform"] = nullptr;
        }
        rj["display"] = row.display;
        rj["terms"] = nlohmann::json::array();
        for (const auto& [e, c] : row.poly.terms())
            rj["terms"].push_back({c.get_str(), {e[0], e[1], e[2]}});
        rj["notes"] = row.notes;
        j["rows"].push_back(std::move(rj));
    }
    return j;
}

EdgeCheck verify_link(const CatalogRow& parent, const CatalogRow& child, LinkType t) {
    EdgeCheck c;
    c.parent = parent.id;
    c.child = child.id;
    c.type = t;
    c.drop_ok = parent.degree - child.degree == degree_drop(t);

    LatticePolytope np = parent.poly.newton_polytope();
    LatticePolytope nc = child.poly.newton_polytope();
    c.reflexive_ok = np.is_reflexive() && nc.is_reflexive();

    if (child.transform_unknown) {
        c.containment = CheckState::Skipped;
        c.note = "change of variables footnoted but not recorded; containment not checkable";
        return c;
    }
    LatticePolytope mapped = child.transform ? np.apply(*child.transform) : np;
    bool inside = true;
    for (const Vec& v : mapped.vertices())
        if (!nc.contains(v)) {
            inside = false;
            break;
        }
    c.containment = inside ? CheckState::Pass : CheckState::Fail;
    return c;
}

ValidationReport validate_all(const Catalog& cat, const ValidationOptions& opts) {
    ValidationReport rep;
    int n = static_cast<int>(cat.rows.size());
    rep.rows.resize(static_cast<size_t>(n));

    std::vector<std::string> row_errors(static_cast<size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
    for (int i = 0; i < n; ++i) {
        const CatalogRow& row = cat.rows[static_cast<size_t>(i)];
        RowCheck rc;
        rc.id = row.id;
        try {
            LatticePolytope nt = row.poly.newton_polytope();
            rc.reflexive = nt.is_reflexive();
            RationalPolytope d = nt.dual();
            Rat vol = d.normalized_volume();
            rc.volume_ok = vol.get_den() == 1 && vol.get_num() == row.degree;
            rc.dual_volume = static_cast<long>(vol.get_num().get_si());
            LatticeCount lc = d.lattice_points();
            rc.dual_points = lc.all;
            rc.points_ok = lc.all == row.degree / 2 + 3;
            rc.interior_ok = lc.interior == 1;
            if (!row.display.empty()) rc.display_ok = parse_laurent(row.display, 3) == row.poly;
        } catch (const std::exception& e) {
            row_errors[static_cast<size_t>(i)] = e.what();
        }
        rep.rows[static_cast<size_t>(i)] = rc;
    }
    for (int i = 0; i < n; ++i)
        if (!row_errors[static_cast<size_t>(i)].empty())
            rep.global_failures.push_back("row " + std::to_string(i + 1) + ": " +
                                          row_errors[static_cast<size_t>(i)]);

    // recorded links
    std::vector<std::tuple<int, int, LinkType>> edge_list;
    for (const CatalogRow& row : cat.rows)
        for (const auto& [pid, t] : row.parents) edge_list.emplace_back(pid, row.id, t);
    std::sort(edge_list.begin(), edge_list.end());
    rep.edges.resize(edge_list.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
    for (long i = 0; i < static_cast<long>(edge_list.size()); ++i) {
        auto [pid, cid, t] = edge_list[static_cast<size_t>(i)];
        rep.edges[static_cast<size_t>(i)] =
            verify_link(cat.row(pid), cat.row(cid), t);
    }

    // global cross-field checks
    for (const CatalogRow& row : cat.rows) {
        for (const auto& [pid, t] : row.parents) {
            const auto& d = cat.row(pid).descendants;
            if (std::find(d.begin(), d.end(), row.id) == d.end())
                rep.global_failures.push_back("row " + std::to_string(pid) +
                                              " missing descendant " + std::to_string(row.id));
        }
        for (int did : row.descendants) {
            const auto& ps = cat.row(did).parents;
            bool ok = std::any_of(ps.begin(), ps.end(),
                                  [&](const auto& p) { return p.first == row.id; });
            if (!ok)
                rep.global_failures.push_back("row " + std::to_string(did) +
                                              " missing parent " + std::to_string(row.id));
        }
        if (row.degree / 2 + 1 < 2)
            rep.global_failures.push_back("row " + std::to_string(row.id) +
                                          ": genus is not at least 2");
        bool has_iip = std::any_of(row.parents.begin(), row.parents.end(),
                                   [](const auto& p) { return p.second == LinkType::II_p; });
        if (has_iip && row.degree <= 24 && row.notes.empty())
            rep.global_failures.push_back("row " + std::to_string(row.id) +
                                          ": point projection at degree <= 24 needs a note");
    }
    {
        std::set<std::string> labels;
        for (const CatalogRow& row : cat.rows)
            if (!labels.insert(row.fano_label).second)
                rep.global_failures.push_back("duplicate label " + row.fano_label);
    }

    // period support congruences
    if (opts.period_depth > 0) {
        std::vector<std::string> fails(static_cast<size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
        for (int i = 0; i < n; ++i) {
            const CatalogRow& row = cat.rows[static_cast<size_t>(i)];
            PeriodOptions po;
            po.parallel = false; // rows already run in parallel
            PeriodSequence seq = period_sequence(row.poly, opts.period_depth, po);
            for (long idx : forced_zero_indices(row.poly, opts.period_depth))
                if (seq.values[static_cast<size_t>(idx)] != 0)
                    fails[static_cast<size_t>(i)] += "a_" + std::to_string(idx) +
                                                     " should vanish by lattice congruence; ";
        }
        for (int i = 0; i < n; ++i)
            if (!fails[static_cast<size_t>(i)].empty())
                rep.period_failures.push_back("row " + std::to_string(i + 1) + ": " +
                                              fails[static_cast<size_t>(i)]);
    }

    // optional random unimodular spot checks
    if (opts.gl_checks > 0) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<int> entry(-3, 3);
        for (const CatalogRow& row : cat.rows) {
            LatticePolytope nt = row.poly.newton_polytope();
            std::string nf = nt.normal_form_hex();
            Int vol = nt.normalized_volume();
            for (int k = 0; k < opts.gl_checks; ++k) {
                UnimodularMap u = UnimodularMap::identity(3);
                // random product of shears keeps the determinant at +-1
                for (int s = 0; s < 6; ++s) {
                    int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
                    if (a == b) continue;
                    UnimodularMap sh = UnimodularMap::identity(3);
                    sh.m[static_cast<size_t>(a)][static_cast<size_t>(b)] = entry(rng);
                    u = u.compose(sh);
                }
                bool small = true;
                for (int r = 0; r < 3 && small; ++r)
                    for (int cidx = 0; cidx < 3; ++cidx)
                        if (abs(u.m[static_cast<size_t>(r)][static_cast<size_t>(cidx)]) > 3)
                            small = false;
                if (!small) continue;
                LatticePolytope img = nt.apply(u);
                if (img.normal_form_hex() != nf || img.normalized_volume() != vol) {
                    rep.global_failures.push_back("row " + std::to_string(row.id) +
                                                  ": unimodular invariance violated");
                    break;
                }
            }
        }
    }

    bool rows_ok = std::all_of(rep.rows.begin(), rep.rows.end(),
                               [](const RowCheck& r) { return r.pass(); });
    bool edges_ok = std::all_of(rep.edges.begin(), rep.edges.end(),
                                [](const EdgeCheck& e) { return e.pass(); });
    rep.pass = rows_ok && edges_ok && rep.global_failures.empty() && rep.period_failures.empty();
    return rep;
}

nlohmann::json report_to_json(const ValidationReport& rep) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const RowCheck& r : rep.rows) {
        j["rows"].push_back({{"id", r.id},
                             {"reflexive", r.reflexive},
                             {"volume", r.volume_ok},
                             {"points", r.points_ok},
                             {"interior", r.interior_ok},
                             {"display", r.display_ok},
                             {"dual_volume", r.dual_volume},
                             {"dual_points", r.dual_points}});
    }
    j["edges"] = nlohmann::json::array();
    for (const EdgeCheck& e : rep.edges) {
        nlohmann::json ej = {{"parent", e.parent},
                             {"child", e.child},
                             {"type", to_string(e.type)},
                             {"checks",
                              {{"drop", e.drop_ok},
                               {"reflexive", e.reflexive_ok},
                               {"containment", e.containment != CheckState::Fail}}}};
        if (e.containment == CheckState::Skipped) ej["containment_skipped"] = true;
        if (!e.note.empty()) ej["note"] = e.note;
        j["edges"].push_back(std::move(ej));
    }
    j["global_failures"] = rep.global_failures;
    j["period_failures"] = rep.period_failures;
    j["pass"] = rep.pass;
    return j;
}

std::string fano_snake_dot(const Catalog& cat) {
    for (const CatalogRow& row : cat.rows) {
        for (const auto& [pid, t] : row.parents) {
            const auto& d = cat.row(pid).descendants;
            if (std::find(d.begin(), d.end(), row.id) == d.end())
                throw InconsistentCatalog("parent/descendant columns disagree at rows " +
                                          std::to_string(pid) + "/" + std::to_string(row.id));
        }
        for (int did : row.descendants) {
            const auto& ps = cat.row(did).parents;
            if (!std::any_of(ps.begin(), ps.end(),
                             [&](const auto& p) { return p.first == row.id; }))
                throw InconsistentCatalog("parent/descendant columns disagree at rows " +
                                          std::to_string(row.id) + "/" + std::to_string(did));
        }
    }
    std::ostringstream os;
    os << "digraph fano_snake {\n  rankdir=TB;\n";
    for (const CatalogRow& row : cat.rows) {
        os << "  n" << row.id << " [label=\"N" << row.id << " " << row.fano_label
           << " deg=" << row.degree << "\"";
        if (row.picard_rank() == 1) os << ", penwidth=2.4";
        os << "];\n";
    }
    std::vector<std::tuple<int, int, std::string>> edges;
    for (const CatalogRow& row : cat.rows)
        for (const auto& [pid, t] : row.parents) edges.emplace_back(pid, row.id, to_string(t));
    std::sort(edges.begin(), edges.end());
    for (const auto& [p, c, t] : edges)
        os << "  n" << p << " -> n" << c << " [label=\"" << t << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace lgtoric
