#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgp/params.hpp"

namespace hgp {

// One tabulated group: parameters and the published certificate word.
struct CatalogEntry {
    std::string label;
    int table = 0;  // 1, 2 or 3
    ParamTuple alpha, beta;
    std::string word;
    // C-42 prints a beta entry that fails Galois-stability; the row is kept
    // as printed, flagged, and carries the corrected reading alongside.
    bool suspect = false;
    std::optional<ParamTuple> beta_corrected;
};

// The 19 embedded rows, or the contents of $HGP_CATALOG when set (re-read
// when the variable changes).
const std::vector<CatalogEntry>& catalog();

std::vector<CatalogEntry> load_catalog_json(const std::string& json_text);
std::string catalog_to_json(const std::vector<CatalogEntry>& entries);

const CatalogEntry& lookup(const std::string& label);

// Parameters to actually verify: the printed ones when they build, otherwise
// the corrected reading of a suspect row.
struct ResolvedParams {
    ParamTuple alpha, beta;
    bool used_correction = false;
};
ResolvedParams resolve_entry(const CatalogEntry& entry);

}  // namespace hgp
