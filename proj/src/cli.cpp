#include "hgp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include <CLI11.hpp>

#include "hgp/report.hpp"

namespace hgp {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Inputs shared by verify/search/form: either a catalog label or an explicit
// alpha/beta pair.
struct ParamSelection {
    std::string label;
    std::string alpha_text, beta_text;

    bool from_label() const { return !label.empty(); }

    void validate() const {
        const bool has_pair = !alpha_text.empty() || !beta_text.empty();
        if (from_label() && has_pair)
            throw Error("give either --label or --alpha/--beta, not both");
        if (!from_label() && (alpha_text.empty() || beta_text.empty()))
            throw Error("either --label or both --alpha and --beta are required");
    }
};

struct ResolvedInput {
    std::string label;
    ParamTuple alpha, beta;
    bool suspect = false;
    bool used_correction = false;
    ParamTuple beta_printed;   // only meaningful when used_correction
    std::string default_word;  // catalog word when selected by label
};

ResolvedInput resolve_input(const ParamSelection& sel) {
    sel.validate();
    ResolvedInput in;
    if (sel.from_label()) {
        const CatalogEntry& entry = lookup(sel.label);
        const ResolvedParams rp = resolve_entry(entry);
        in.label = entry.label;
        in.alpha = rp.alpha;
        in.beta = rp.beta;
        in.suspect = entry.suspect;
        in.used_correction = rp.used_correction;
        if (rp.used_correction) in.beta_printed = entry.beta;
        in.default_word = entry.word;
    } else {
        in.alpha = parse_rational_tuple(sel.alpha_text);
        in.beta = parse_rational_tuple(sel.beta_text);
    }
    return in;
}

void add_row_flags(nlohmann::json& j, const ResolvedInput& in) {
    if (in.suspect) j["suspect"] = true;
    if (in.used_correction) {
        j["used_correction"] = true;
        j["beta_printed"] = tuple_to_json_array(in.beta_printed);
    }
}

int cmd_verify(const ResolvedInput& in, const std::string& word_text, std::ostream& out) {
    const auto start = Clock::now();
    Certificate cert{in.label, in.alpha, in.beta, parse_word(word_text)};
    const VerificationReport rep = check_certificate(cert);

    nlohmann::json j = report_to_json(rep, in.label, in.alpha, in.beta, word_text);
    add_row_flags(j, in);
    j["elapsed_ms"] = ms_since(start);
    out << j.dump(2) << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_search(const ResolvedInput& in, const SearchConfig& cfg, std::ostream& out,
               std::ostream& err) {
    const auto start = Clock::now();
    const GroupPresentation gp = build_group(in.alpha, in.beta);
    const SearchResult res = search_certificate(gp, cfg, &err);

    nlohmann::json j;
    if (res.found) {
        const std::string word_text = word_str(res.word);
        const VerificationReport rep = verify_pair(gp.generators(), res.word);
        j = report_to_json(rep, in.label, in.alpha, in.beta, word_text);
        j["found_word"] = word_text;
    } else {
        j["label"] = in.label.empty() ? nlohmann::json() : nlohmann::json(in.label);
        j["alpha"] = tuple_to_json_array(in.alpha);
        j["beta"] = tuple_to_json_array(in.beta);
        j["found_word"] = nullptr;
        j["verdict"] = "fail";
        j["reason"] = "no certificate word within max_depth/max_entry bounds";
    }
    add_row_flags(j, in);
    j["visited"] = static_cast<std::int64_t>(res.visited);
    j["depth_reached"] = res.depth_reached;
    j["elapsed_ms"] = ms_since(start);
    out << j.dump(2) << "\n";
    return res.found ? 0 : 1;
}

int cmd_form(const ResolvedInput& in, std::ostream& out) {
    const GroupPresentation gp = build_group(in.alpha, in.beta);
    const SymplecticForm form = solve_invariant_form(gp);
    out << matrix_str(form.omega);
    return 0;
}

int cmd_table(bool as_json, std::ostream& out) {
    const auto& entries = catalog();
    if (as_json) {
        out << catalog_to_json(entries);
        return 0;
    }
    for (const CatalogEntry& e : entries) {
        out << e.label << "  table=" << e.table << "  alpha=(" << tuple_str(e.alpha)
            << ")  beta=(" << tuple_str(e.beta) << ")  word=" << e.word;
        if (e.suspect) out << "  [suspect]";
        out << "\n";
    }
    return 0;
}

int cmd_batch_verify(bool with_witness, int threads, int witness_depth, std::ostream& out,
                     std::ostream& err) {
    const auto start = Clock::now();
    const std::vector<CatalogEntry>& entries = catalog();

    struct Row {
        nlohmann::json json;
        bool ok = false;
        std::string summary;
    };
    std::vector<Row> rows(entries.size());

    auto run_row = [&](std::size_t i) {
        const CatalogEntry& entry = entries[i];
        Row& row = rows[i];
        try {
            ResolvedInput in;
            const ResolvedParams rp = resolve_entry(entry);
            in.label = entry.label;
            in.alpha = rp.alpha;
            in.beta = rp.beta;
            in.suspect = entry.suspect;
            in.used_correction = rp.used_correction;
            if (rp.used_correction) in.beta_printed = entry.beta;

            const Word gamma = parse_word(entry.word);
            const GroupPresentation gp = build_group(in.alpha, in.beta);
            const GeneratorSet gens = gp.generators();
            const VerificationReport rep = verify_pair(gens, gamma);
            row.json = report_to_json(rep, entry.label, in.alpha, in.beta, entry.word);
            add_row_flags(row.json, in);
            row.ok = rep.pass;
            row.summary = rep.pass ? "pass" : ("FAIL: " + rep.reason);

            if (with_witness && rep.pass) {
                try {
                    const WitnessReport wit = build_proof_witness(gens, gamma, witness_depth);
                    row.json["witness"] = witness_to_json(wit);
                } catch (const Error& e) {
                    row.json["witness"] = {{"ok", false}, {"error", e.what()}};
                    row.ok = false;
                    row.summary = std::string("witness FAILED: ") + e.what();
                }
            }
        } catch (const Error& e) {
            row.json = {{"label", entry.label}, {"verdict", "fail"}, {"reason", e.what()}};
            row.ok = false;
            row.summary = std::string("FAIL: ") + e.what();
        }
    };

    threads = std::max(1, threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < entries.size(); ++i) run_row(i);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&run_row, &entries, t, threads] {
                for (std::size_t i = static_cast<std::size_t>(t); i < entries.size();
                     i += static_cast<std::size_t>(threads))
                    run_row(i);
            });
        for (auto& th : pool) th.join();
    }

    bool all_ok = true;
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        err << entries[i].label << ": " << rows[i].summary << "\n";
        all_ok = all_ok && rows[i].ok;
        arr.push_back(std::move(rows[i].json));
    }
    nlohmann::json result;
    result["rows"] = std::move(arr);
    result["all_pass"] = all_ok;
    result["elapsed_ms"] = ms_since(start);
    out << result.dump(2) << "\n";
    err << (all_ok ? "all rows pass" : "some rows FAILED") << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"symplectic hypergeometric monodromy groups: exact arithmeticity certificates"};
    app.name("hgp");
    app.require_subcommand(0, 1);

    ParamSelection sel;
    std::string word_text;

    auto add_param_flags = [&sel](CLI::App* cmd) {
        cmd->add_option("--label", sel.label, "catalog label (e.g. A-24, C-42, 30)");
        cmd->add_option("--alpha", sel.alpha_text, "alpha tuple, e.g. 0,0,0,0,0,0");
        cmd->add_option("--beta", sel.beta_text, "beta tuple, e.g. 1/3,2/3,1/12,5/12,7/12,11/12");
    };

    CLI::App* verify = app.add_subcommand("verify", "verify a certificate word");
    add_param_flags(verify);
    auto* word_opt = verify->add_option("--word", word_text, "certificate word gamma");

    CLI::App* search = app.add_subcommand("search", "search for a certificate word by orbit BFS");
    add_param_flags(search);
    std::string max_entry_text = "1000000";
    int max_depth = 40;
    int threads = 1;
    search->add_option("--max-entry", max_entry_text, "entry bound for pruning (default 1000000)");
    search->add_option("--max-depth", max_depth, "maximum BFS depth (default 40)");
    search->add_option("--threads", threads, "frontier expansion workers (default 1)");

    CLI::App* form = app.add_subcommand("form", "print the invariant symplectic form");
    add_param_flags(form);

    CLI::App* table = app.add_subcommand("table", "show the embedded catalog");
    bool list_flag = false;
    bool json_flag = false;
    table->add_flag("--list", list_flag, "one line per entry (default)");
    table->add_flag("--json", json_flag, "dump the catalog as JSON");

    CLI::App* batch = app.add_subcommand("batch-verify", "verify every catalog row");
    bool with_witness = false;
    int batch_threads = 1;
    int witness_depth = 8;
    batch->add_flag("--witness", with_witness, "also build the proof witness R for each row");
    batch->add_option("--threads", batch_threads, "rows verified in parallel (default 1)");
    batch->add_option("--witness-depth", witness_depth, "BFS depth for the witness x3 (default 8)");

    std::reverse(args.begin(), args.end());  // CLI11 consumes the vector as a stack
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    if (app.get_subcommands().empty()) {
        out << app.help();
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) {
            const ResolvedInput in = resolve_input(sel);
            const bool word_given = word_opt->count() > 0;
            if (!word_given && in.label.empty())
                throw Error("--word is required with --alpha/--beta");
            return cmd_verify(in, word_given ? word_text : in.default_word, out);
        }
        if (app.got_subcommand(search)) {
            SearchConfig cfg;
            Int bound;
            try {
                bound = Int(max_entry_text);
            } catch (const std::invalid_argument&) {
                throw Error("--max-entry must be a positive integer");
            }
            if (bound < 1) throw Error("--max-entry must be a positive integer");
            cfg.max_entry = bound;
            if (max_depth < 0) throw Error("--max-depth must be >= 0");
            cfg.max_depth = max_depth;
            if (threads < 1) throw Error("--threads must be >= 1");
            cfg.threads = threads;
            return cmd_search(resolve_input(sel), cfg, out, err);
        }
        if (app.got_subcommand(form)) return cmd_form(resolve_input(sel), out);
        if (app.got_subcommand(table)) {
            if (list_flag && json_flag) throw Error("give at most one of --list and --json");
            return cmd_table(json_flag, out);
        }
        if (app.got_subcommand(batch)) {
            if (batch_threads < 1) throw Error("--threads must be >= 1");
            return cmd_batch_verify(with_witness, batch_threads, witness_depth, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace hgp
