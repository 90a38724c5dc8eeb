#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcas/types.hpp"

namespace gcas {

/// Parameter-feasibility families: the two constructions built here plus the
/// closed-form parameter sets of earlier direct constructions (formulas only;
/// no arrays are generated for the Ref* families).
enum class Source { Th1, Th2, Ref11, Ref16, Ref17a, Ref17b, Ref18a, Ref18b, Ref12a, Ref12b };

const char* to_string(Source s);

struct CatalogBounds {
    Int max_L1 = 8;
    Int max_L2 = 8;
    Int max_set_size = 9;
    Int max_q = 12;
};

/// One achievable (set size, L1, L2, q) tuple with its parameter witness.
struct CatalogRow {
    Source source = Source::Th1;
    Int set_size = 0;
    Int L1 = 0;
    Int L2 = 0;
    Int q = 0;
    std::string q_constraint;
    std::vector<std::pair<std::string, Int>> params;

    std::string witness() const;
};

/// Exhaustively enumerate the source's achievable tuples within bounds.
/// Distinct (set_size, L1, L2, q) only; rows sorted by (L1, L2, set_size, q).
std::vector<CatalogRow> enumerate_feasible(Source source, const CatalogBounds& bounds);

/// Head-to-head entry at one (L1, L2, q) key. `b_matched` is the best row of
/// the second list sharing the witness of `a_best` (same named parameters),
/// which is the honest same-function comparison; `b_best` is the
/// unconstrained best. The ratio uses the matched value when it exists.
struct ComparisonEntry {
    Int L1 = 0;
    Int L2 = 0;
    Int q = 0;
    Int a_best = 0;
    std::string a_source;
    std::string a_witness;
    Int b_best = 0;
    std::string b_source;
    std::optional<Int> b_matched;
    std::string b_matched_source;
    double ratio = 0.0;
    bool a_exceeds_all_b = false;
};

std::vector<ComparisonEntry> compare(const std::vector<CatalogRow>& rows_a,
                                     const std::vector<CatalogRow>& rows_b);

std::string render_catalog_csv(const std::vector<CatalogRow>& rows);
std::string render_catalog_text(const std::vector<CatalogRow>& rows);
std::string render_comparison(const std::vector<ComparisonEntry>& entries);

}  // namespace gcas
