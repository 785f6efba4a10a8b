#include "hgp/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hgp/group.hpp"

namespace hgp {

namespace {

// Tables 1-3, labelled as in the source tables. A-16's word is one word
// printed across two lines.
constexpr const char* kEmbeddedCatalog = R"json([
  {"label": "A-15", "table": 1, "alpha": ["0","0","0","0","0","0"],
   "beta": ["1/3","1/3","1/3","2/3","2/3","2/3"], "word": "A^2B^{-5}"},
  {"label": "A-16", "table": 1, "alpha": ["0","0","0","0","0","0"],
   "beta": ["1/3","1/3","2/3","2/3","1/4","3/4"],
   "word": "ABA^{-1}B^{-8}A(AB^{-1})^7A^{-1}B^3(AB^{-1})^3ABA(AB^{-1})^3B^{-1}A(BA^{-1})^3BA^2B^4A^5"},
  {"label": "A-21", "table": 1, "alpha": ["0","0","0","0","0","0"],
   "beta": ["1/3","2/3","1/5","2/5","3/5","4/5"],
   "word": "B^2A^{-1}B^5A^{-1}B(BA^{-1})^9A^{-1}B^{-1}AB^{-6}A^4B^{-6}A^2"},
  {"label": "A-24", "table": 1, "alpha": ["0","0","0","0","0","0"],
   "beta": ["1/3","2/3","1/12","5/12","7/12","11/12"], "word": "B^6"},
  {"label": "A-39", "table": 1, "alpha": ["0","0","0","0","0","0"],
   "beta": ["1/14","3/14","5/14","9/14","11/14","13/14"], "word": "ABA^{-1}B^{-3}A^{-4}B^{-3}"},
  {"label": "C-01", "table": 2, "alpha": ["0","0","0","0","1/2","1/2"],
   "beta": ["1/3","1/3","2/3","2/3","1/6","5/6"], "word": "BA"},
  {"label": "C-09", "table": 2, "alpha": ["0","0","0","0","1/3","2/3"],
   "beta": ["1/7","2/7","3/7","4/7","5/7","6/7"],
   "word": "BA^{-1}B^{-1}AB^{-2}AB^{-1}(B^3A^2)^4"},
  {"label": "C-10", "table": 2, "alpha": ["0","0","0","0","1/3","2/3"],
   "beta": ["1/9","2/9","4/9","5/9","7/9","8/9"], "word": "BAB^2A^{-4}"},
  {"label": "C-29", "table": 2, "alpha": ["0","0","0","0","1/6","5/6"],
   "beta": ["1/3","1/3","1/3","2/3","2/3","2/3"], "word": "B^4A^{-1}B^6A^{-1}BA^{-2}"},
  {"label": "C-30", "table": 2, "alpha": ["0","0","0","0","1/6","5/6"],
   "beta": ["1/3","1/3","2/3","2/3","1/4","3/4"],
   "word": "B^3A^7BA^{-1}BA^{-1}B^4AB^4A^{-1}BA^2"},
  {"label": "C-31", "table": 2, "alpha": ["0","0","0","0","1/6","5/6"],
   "beta": ["1/3","2/3","1/5","2/5","3/5","4/5"],
   "word": "BABA^{-3}(BA^{-1})^3B^{-3}A^{-2}BA^{-1}B^6A^{-7}"},
  {"label": "C-39", "table": 2, "alpha": ["0","0","1/3","2/3","1/6","5/6"],
   "beta": ["1/7","2/7","3/7","4/7","5/7","6/7"], "word": "B^2A^{-2}B^{-3}A^{-2}B^{-3}A^2B^2A"},
  {"label": "C-42", "table": 2, "alpha": ["0","0","1/4","1/4","3/4","3/4"],
   "beta": ["1/3","2/3","1/12","5/12","7/12","1/12"], "word": "A^3",
   "suspect": true, "beta_corrected": ["1/3","2/3","1/12","5/12","7/12","11/12"]},
  {"label": "C-51", "table": 2, "alpha": ["0","0","1/6","1/6","5/6","5/6"],
   "beta": ["1/2","1/2","1/12","5/12","7/12","11/12"], "word": "A^6"},
  {"label": "C-59", "table": 2, "alpha": ["0","0","1/12","5/12","7/12","11/12"],
   "beta": ["1/3","2/3","1/4","1/4","3/4","3/4"], "word": "BA"},
  {"label": "C-60", "table": 2, "alpha": ["1/3","1/3","1/3","2/3","2/3","2/3"],
   "beta": ["1/6","1/6","1/6","5/6","5/6","5/6"], "word": "BA^{-1}BA^2BAB^{-1}A^{-4}"},
  {"label": "C-61", "table": 2, "alpha": ["1/3","1/3","1/3","2/3","2/3","2/3"],
   "beta": ["1/9","2/9","4/9","5/9","7/9","8/9"], "word": "AB^{-4}A^3"},
  {"label": "30", "table": 3, "alpha": ["0","0","1/4","3/4"],
   "beta": ["1/5","2/5","3/5","4/5"], "word": "BA^2B^{-2}(A^{-2}B^{-2}A^3B^{-2})^2"},
  {"label": "40", "table": 3, "alpha": ["0","0","1/6","5/6"],
   "beta": ["1/8","3/8","5/8","7/8"],
   "word": "(AB^{-1})^2A^{-1}(BA)^{-2}A^{-3}B^{-2}A^4B^{-2}A^{-4}B^{-2}A^4B^{-2}A^{-3}"}
])json";

ParamTuple tuple_from_json(const nlohmann::json& arr, const std::string& label) {
    if (!arr.is_array()) throw Error("catalog entry " + label + ": parameters must be an array");
    ParamTuple t;
    for (const auto& item : arr) {
        if (!item.is_string())
            throw Error("catalog entry " + label + ": parameters must be \"p/q\" strings");
        Rat q = parse_rat(item.get<std::string>());
        if (q < 0 || q >= 1)
            throw Error("catalog entry " + label + ": parameter outside [0,1)");
        t.entries.push_back(q);
    }
    return t;
}

nlohmann::json tuple_to_json(const ParamTuple& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rat& q : t.entries) arr.push_back(rat_str(q));
    return arr;
}

}  // namespace

std::vector<CatalogEntry> load_catalog_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("catalog is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw Error("catalog must be a JSON array of entries");

    std::vector<CatalogEntry> entries;
    std::set<std::string> labels;
    for (const auto& row : doc) {
        CatalogEntry e;
        try {
            e.label = row.at("label").get<std::string>();
            if (!labels.insert(e.label).second) throw Error("duplicate catalog label " + e.label);
            e.table = row.at("table").get<int>();
            if (e.table < 1 || e.table > 3) throw Error("catalog entry " + e.label + ": bad table");
            e.alpha = tuple_from_json(row.at("alpha"), e.label);
            e.beta = tuple_from_json(row.at("beta"), e.label);
            e.word = row.at("word").get<std::string>();
            if (row.contains("suspect")) e.suspect = row.at("suspect").get<bool>();
            if (row.contains("beta_corrected"))
                e.beta_corrected = tuple_from_json(row.at("beta_corrected"), e.label);
        } catch (const nlohmann::json::exception& ex) {
            throw Error("malformed catalog entry" +
                        (e.label.empty() ? std::string() : " " + e.label) + ": " + ex.what());
        }

        const std::size_t dim = (e.table == 3) ? 4 : 6;
        if (e.alpha.size() != dim || e.beta.size() != dim)
            throw Error("catalog entry " + e.label + ": wrong tuple length");
        if (e.table == 1)
            for (const Rat& q : e.alpha.entries)
                if (q != 0) throw Error("catalog entry " + e.label + ": table 1 requires alpha = 0");
        entries.push_back(std::move(e));
    }
    return entries;
}

std::string catalog_to_json(const std::vector<CatalogEntry>& entries) {
    nlohmann::json doc = nlohmann::json::array();
    for (const CatalogEntry& e : entries) {
        nlohmann::json row;
        row["label"] = e.label;
        row["table"] = e.table;
        row["alpha"] = tuple_to_json(e.alpha);
        row["beta"] = tuple_to_json(e.beta);
        row["word"] = e.word;
        if (e.suspect) row["suspect"] = true;
        if (e.beta_corrected) row["beta_corrected"] = tuple_to_json(*e.beta_corrected);
        doc.push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

const std::vector<CatalogEntry>& catalog() {
    static std::mutex mutex;
    static std::string cached_source;      // "" = embedded
    static std::vector<CatalogEntry> cached;
    static bool loaded = false;

    std::lock_guard<std::mutex> lock(mutex);
    const char* env = std::getenv("HGP_CATALOG");
    const std::string source = env ? env : "";
    if (!loaded || source != cached_source) {
        if (source.empty()) {
            cached = load_catalog_json(kEmbeddedCatalog);
        } else {
            std::ifstream in(source);
            if (!in) throw Error("cannot open catalog file " + source);
            std::ostringstream buf;
            buf << in.rdbuf();
            cached = load_catalog_json(buf.str());
        }
        cached_source = source;
        loaded = true;
    }
    return cached;
}

const CatalogEntry& lookup(const std::string& label) {
    for (const CatalogEntry& e : catalog())
        if (e.label == label) return e;
    throw Error("unknown catalog label " + label);
}

ResolvedParams resolve_entry(const CatalogEntry& entry) {
    try {
        build_group(entry.alpha, entry.beta);
        return ResolvedParams{entry.alpha, entry.beta, false};
    } catch (const Error&) {
        if (!entry.beta_corrected) throw;
        build_group(entry.alpha, *entry.beta_corrected);  // must succeed
        return ResolvedParams{entry.alpha, *entry.beta_corrected, true};
    }
}

}  // namespace hgp
