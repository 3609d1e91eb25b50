#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lgtoric/laurent.hpp"

namespace lgtoric {

/// Basic-link type between consecutive table rows; the projection center is a
/// smooth point, ordinary double point, compound Du Val point, line or conic.
enum class LinkType { II_p, II_odp, II_cDV, II_l, II_c };

const char* to_string(LinkType t);
LinkType link_type_from_string(const std::string& s); // throws SchemaError

/// Anticanonical degree lost by one basic link, derived from the table rows.
int degree_drop(LinkType t);

struct CatalogRow {
    int id = 0;
    std::string fano_label;
    long degree = 0;
    std::vector<std::pair<int, LinkType>> parents;
    std::vector<int> descendants;
    LaurentPolynomial poly{3};
    std::optional<UnimodularMap> transform; // recorded change of variables
    bool transform_unknown = false;         // footnoted but not recorded
    std::string display;
    std::string notes;

    int picard_rank() const; // leading component of the label, 0 if unparsable
};

struct Catalog {
    int schema_version = 0;
    std::string source;
    std::vector<CatalogRow> rows; // ordered by id; ids dense 1..n

    const CatalogRow& row(int id) const; // throws UnknownRow
};

Catalog load_catalog(const std::string& path);            // throws SchemaError
nlohmann::json catalog_to_json(const Catalog& cat);       // inverse of load

enum class CheckState { Pass, Fail, Skipped };

struct EdgeCheck {
    int parent = 0, child = 0;
    LinkType type = LinkType::II_p;
    bool drop_ok = false;
    bool reflexive_ok = false;
    CheckState containment = CheckState::Fail;
    std::string note;
    bool pass() const { return drop_ok && reflexive_ok && containment != CheckState::Fail; }
};

/// Checks one recorded link: degree drop, reflexivity of both Newton
/// polytopes, and containment of the (transformed) parent polytope in the
/// child polytope. Rows whose transform is footnoted but unrecorded get the
/// containment check skipped.
EdgeCheck verify_link(const CatalogRow& parent, const CatalogRow& child, LinkType t);

struct RowCheck {
    int id = 0;
    bool reflexive = false;
    bool volume_ok = false;
    bool points_ok = false;
    bool interior_ok = false;
    bool display_ok = true;
    long dual_volume = 0;
    long dual_points = 0;
    bool pass() const {
        return reflexive && volume_ok && points_ok && interior_ok && display_ok;
    }
};

struct ValidationOptions {
    long period_depth = 6; // support-congruence check depth; 0 disables
    bool parallel = true;
    int gl_checks = 0;      // random unimodular invariance spot checks per row
    unsigned long seed = 0; // for gl_checks
};

struct ValidationReport {
    std::vector<RowCheck> rows;
    std::vector<EdgeCheck> edges;
    std::vector<std::string> global_failures;
    std::vector<std::string> period_failures;
    bool pass = false;
};

ValidationReport validate_all(const Catalog& cat, const ValidationOptions& opts = {});
nlohmann::json report_to_json(const ValidationReport& rep);

/// DOT rendering of the row graph (nodes = rows, edges = recorded links,
/// thick border on Picard-rank-1 rows). Throws InconsistentCatalog when the
/// parent and descendant columns disagree.
std::string fano_snake_dot(const Catalog& cat);

} // namespace lgtoric
