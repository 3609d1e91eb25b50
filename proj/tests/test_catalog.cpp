#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "lgtoric/catalog.hpp"
#include "lgtoric/json_io.hpp"

using namespace lgtoric;

#ifndef LGTORIC_DATASET
#error "LGTORIC_DATASET must point at the bundled catalog"
#endif

namespace {

const Catalog& bundled() {
    static Catalog cat = load_catalog(LGTORIC_DATASET);
    return cat;
}

std::string write_temp(const nlohmann::json& j, const std::string& tag) {
    std::filesystem::path p =
        std::filesystem::temp_directory_path() / ("lgtoric_test_" + tag + ".json");
    std::ofstream out(p);
    out << j.dump(1);
    return p.string();
}

} // namespace

TEST_CASE("bundled dataset loads with the expected shape") {
    const Catalog& cat = bundled();
    REQUIRE(cat.rows.size() == 27);
    CHECK(cat.schema_version == 1);

    const CatalogRow& r2 = cat.row(2);
    CHECK(r2.degree == 56);
    REQUIRE(r2.parents.size() == 1);
    CHECK(r2.parents[0].first == 1);
    CHECK(r2.parents[0].second == LinkType::II_p);

    // the displayed constant -12 cancels against the fraction's constant term
    const CatalogRow& r23 = cat.row(23);
    CHECK(r23.poly.constant_term() == 0);
    CHECK(r23.display.find("- 12") != std::string::npos);
    CHECK(r23.transform_unknown);

    CHECK(cat.row(24).poly.constant_term() == 24);
    CHECK(cat.row(14).transform.has_value());

    int edge_count = 0;
    for (const CatalogRow& r : cat.rows) edge_count += static_cast<int>(r.parents.size());
    CHECK(edge_count == 26);

    CHECK_THROWS_AS(cat.row(99), UnknownRow);
}

TEST_CASE("display strings parse to the stored term lists") {
    for (const CatalogRow& r : bundled().rows) {
        REQUIRE(!r.display.empty());
        CHECK(parse_laurent(r.display, 3) == r.poly);
    }
}

TEST_CASE("load/serialize round trip") {
    const Catalog& cat = bundled();
    std::string path = write_temp(catalog_to_json(cat), "roundtrip");
    Catalog back = load_catalog(path);
    REQUIRE(back.rows.size() == cat.rows.size());
    for (size_t i = 0; i < cat.rows.size(); ++i) {
        const CatalogRow& a = cat.rows[i];
        const CatalogRow& b = back.rows[i];
        CHECK(a.id == b.id);
        CHECK(a.fano_label == b.fano_label);
        CHECK(a.degree == b.degree);
        CHECK(a.parents == b.parents);
        CHECK(a.descendants == b.descendants);
        CHECK(a.poly == b.poly);
        CHECK(a.transform_unknown == b.transform_unknown);
        CHECK(a.transform.has_value() == b.transform.has_value());
        CHECK(a.display == b.display);
        CHECK(a.notes == b.notes);
    }
    std::filesystem::remove(path);
}

TEST_CASE("schema violations are rejected with locations") {
    nlohmann::json base = catalog_to_json(bundled());

    nlohmann::json dangling = base;
    dangling["rows"][1]["parents"] = {{99, "II_p"}};
    CHECK_THROWS_AS(load_catalog(write_temp(dangling, "dangling")), SchemaError);

    nlohmann::json odd = base;
    odd["rows"][0]["degree"] = 63;
    CHECK_THROWS_AS(load_catalog(write_temp(odd, "odd")), SchemaError);

    nlohmann::json badlink = base;
    badlink["rows"][1]["parents"] = {{1, "II_x"}};
    CHECK_THROWS_AS(load_catalog(write_temp(badlink, "badlink")), SchemaError);

    nlohmann::json noversion = base;
    noversion.erase("schema_version");
    CHECK_THROWS_AS(load_catalog(write_temp(noversion, "noversion")), SchemaError);

    std::string garbled = write_temp(base, "garbled");
    std::ofstream(garbled) << "{ not json";
    CHECK_THROWS_AS(load_catalog(garbled), SchemaError);
}

TEST_CASE("degree drops derived from the table") {
    CHECK(degree_drop(LinkType::II_p) == 8);
    CHECK(degree_drop(LinkType::II_l) == 4);
    CHECK(degree_drop(LinkType::II_c) == 6);
    CHECK(degree_drop(LinkType::II_odp) == 2);
    CHECK(degree_drop(LinkType::II_cDV) == 2);

    const Catalog& cat = bundled();
    // spot checks against the recorded rows
    CHECK(cat.row(1).degree - cat.row(2).degree == 8);
    CHECK(cat.row(26).degree - cat.row(27).degree == 4);
    CHECK(cat.row(3).degree - cat.row(9).degree == 6);
    // and across every recorded edge
    for (const CatalogRow& r : cat.rows)
        for (const auto& [pid, t] : r.parents)
            CHECK(cat.row(pid).degree - r.degree == degree_drop(t));
}

TEST_CASE("verify_link passes the recorded edges and rejects a fake one") {
    const Catalog& cat = bundled();
    EdgeCheck e12 = verify_link(cat.row(1), cat.row(2), LinkType::II_p);
    CHECK(e12.pass());
    CHECK(e12.containment == CheckState::Pass);

    EdgeCheck e39 = verify_link(cat.row(3), cat.row(9), LinkType::II_c);
    CHECK(e39.pass());

    EdgeCheck fake = verify_link(cat.row(1), cat.row(9), LinkType::II_p);
    CHECK_FALSE(fake.drop_ok);
    CHECK_FALSE(fake.pass());

    EdgeCheck e2223 = verify_link(cat.row(22), cat.row(23), LinkType::II_cDV);
    CHECK(e2223.pass());
    CHECK(e2223.containment == CheckState::Skipped);

    EdgeCheck e1314 = verify_link(cat.row(13), cat.row(14), LinkType::II_odp);
    CHECK(e1314.pass());
    CHECK(e1314.containment == CheckState::Pass);
}

TEST_CASE("row 14 transform maps parent support plus one monomial onto the child") {
    const Catalog& cat = bundled();
    const CatalogRow& r13 = cat.row(13);
    const CatalogRow& r14 = cat.row(14);
    REQUIRE(r14.transform.has_value());

    LaurentPolynomial extended = r13.poly;
    ExpVec xyz(1, 1, 1);
    extended.set(xyz, Int(1));
    LaurentPolynomial mapped = extended.substitute_monomial(*r14.transform);
    CHECK(mapped == r14.poly);
    // the mapped parent polytope sits inside the child's
    LatticePolytope mapped_nt = r13.poly.newton_polytope().apply(*r14.transform);
    LatticePolytope child_nt = r14.poly.newton_polytope();
    for (const Vec& v : mapped_nt.vertices()) CHECK(child_nt.contains(v));
    CHECK(mapped.newton_polytope() == child_nt);
}

TEST_CASE("full validation of the bundled dataset") {
    ValidationOptions opts;
    opts.period_depth = 6;
    ValidationReport rep = validate_all(bundled(), opts);
    CHECK(rep.pass);
    CHECK(rep.rows.size() == 27);
    CHECK(rep.edges.size() == 26);
    for (const RowCheck& r : rep.rows) CHECK(r.pass());
    CHECK(rep.rows[0].dual_volume == 64);
    CHECK(rep.rows[24].dual_volume == 54);
    for (const EdgeCheck& e : rep.edges) CHECK(e.pass());
    CHECK(rep.global_failures.empty());
    CHECK(rep.period_failures.empty());
}

TEST_CASE("report JSON carries the published edge schema") {
    ValidationOptions opts;
    opts.period_depth = 0;
    nlohmann::json j = report_to_json(validate_all(bundled(), opts));
    REQUIRE(j.contains("edges"));
    REQUIRE(j["edges"].size() == 26);
    for (const auto& e : j["edges"]) {
        CHECK(e.contains("parent"));
        CHECK(e.contains("child"));
        CHECK(e.contains("type"));
        REQUIRE(e.contains("checks"));
        CHECK(e["checks"].contains("drop"));
        CHECK(e["checks"].contains("reflexive"));
        CHECK(e["checks"].contains("containment"));
    }
    CHECK(j["pass"].get<bool>());
}

TEST_CASE("fault injection: an edited degree breaks volume and drop checks") {
    nlohmann::json doc = catalog_to_json(bundled());
    doc["rows"][1]["degree"] = 54; // row 2
    Catalog cat = load_catalog(write_temp(doc, "edited"));
    ValidationOptions opts;
    opts.period_depth = 0;
    ValidationReport rep = validate_all(cat, opts);
    CHECK_FALSE(rep.pass);
    bool vol_fail = false, drop_fail = false;
    for (const RowCheck& r : rep.rows)
        if (r.id == 2 && !r.volume_ok) vol_fail = true;
    for (const EdgeCheck& e : rep.edges)
        if (e.parent == 1 && e.child == 2 && !e.drop_ok) drop_fail = true;
    CHECK(vol_fail);
    CHECK(drop_fail);
}

TEST_CASE("genus and threshold bookkeeping") {
    for (const CatalogRow& r : bundled().rows) {
        CHECK(r.degree / 2 + 1 >= 2);
        bool iip = false;
        for (const auto& [pid, t] : r.parents) iip = iip || t == LinkType::II_p;
        if (iip && r.degree <= 24) CHECK(!r.notes.empty());
    }
    // the point-projection chain
    std::vector<int> chain = {1, 2, 3, 5, 6, 7, 8};
    std::vector<long> degs;
    for (int id : chain) degs.push_back(bundled().row(id).degree);
    CHECK(degs == std::vector<long>{64, 56, 48, 40, 32, 24, 16});
}

TEST_CASE("snake graph is deterministic with bold rank-one rows") {
    const Catalog& cat = bundled();
    std::string a = fano_snake_dot(cat);
    std::string b = fano_snake_dot(cat);
    CHECK(a == b);
    CHECK(a.find("n27 [label=\"N27 3.23 deg=42\"]") != std::string::npos);
    size_t bold = 0, nodes = 0, edges = 0, pos = 0;
    while ((pos = a.find("penwidth", pos)) != std::string::npos) {
        ++bold;
        ++pos;
    }
    for (pos = 0; (pos = a.find("[label=\"N", pos)) != std::string::npos; ++pos) ++nodes;
    for (pos = 0; (pos = a.find("->", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(nodes == 27);
    CHECK(edges == 26);
    CHECK(bold == 15);

    // row 10 keeps both recorded parents
    CHECK(a.find("n9 -> n10") != std::string::npos);
    CHECK(a.find("n27 -> n10") != std::string::npos);
    // row 24 has no descendants
    CHECK(a.find("n24 ->") == std::string::npos);

    nlohmann::json doc = catalog_to_json(cat);
    doc["rows"][0]["descendants"] = nlohmann::json::array(); // drop 1 -> 2
    Catalog broken = load_catalog(write_temp(doc, "broken"));
    CHECK_THROWS_AS(fano_snake_dot(broken), InconsistentCatalog);
}

TEST_CASE("picard ranks parse from the labels") {
    const Catalog& cat = bundled();
    CHECK(cat.row(1).picard_rank() == 1);
    CHECK(cat.row(10).picard_rank() == 4);
    CHECK(cat.row(16).picard_rank() == 2);
    int rank1 = 0;
    for (const CatalogRow& r : cat.rows) rank1 += r.picard_rank() == 1;
    CHECK(rank1 == 15);
}
