#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "seqcalc/catalog.hpp"
#include "seqcalc/identities.hpp"
#include "seqcalc/oeis.hpp"

namespace {

using namespace seqcalc;

// Exit codes: 0 pass, 1 verification failure, 2 usage or unknown key,
// 3 representation error, 4 missing data source.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRepresentation = 3;
constexpr int kExitMissingData = 4;

std::vector<std::string> key_terms(const CatalogKey& key, Index count) {
    std::vector<std::string> out;
    if (key.is_extended()) {
        ExtSequence s = key.build_extended();
        for (Index n = 0; n < count; ++n) out.push_back(s.term(n).str());
    } else {
        Sequence s = key.build();
        for (Index n = 0; n < count; ++n) out.push_back(s.term(n).str());
    }
    return out;
}

std::vector<Int> key_integer_terms(const CatalogKey& key, Index count) {
    if (key.is_extended()) throw not_integral(0);
    Sequence s = key.build();
    std::vector<Int> out;
    for (Index n = 0; n < count; ++n) out.push_back(s.term(n).integer_value());
    return out;
}

void emit(std::ostream& out, const CatalogKey& key, Index count, const std::string& format) {
    if (format == "plain") {
        auto terms = key_terms(key, count);
        for (std::size_t i = 0; i < terms.size(); ++i)
            out << terms[i] << (i + 1 < terms.size() ? ", " : "\n");
    } else if (format == "csv") {
        auto terms = key_terms(key, count);
        out << "n,value\n";
        for (std::size_t i = 0; i < terms.size(); ++i) out << i << "," << terms[i] << "\n";
    } else if (format == "json") {
        auto terms = key_terms(key, count);
        nlohmann::json j;
        j["key"] = key.str();
        j["terms"] = terms;
        out << j.dump(2) << "\n";
    } else if (format == "bfile") {
        write_bfile(out, key_integer_terms(key, count), 0, key.str());
    } else {
        throw error("unknown format '" + format + "'");
    }
}

int cmd_gen(const std::string& key_text, Index count, const std::string& format,
            const std::string& out_path) {
    CatalogKey key = CatalogKey::parse(key_text);
    try {
        if (out_path.empty()) {
            emit(std::cout, key, count, format);
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw error("cannot open '" + out_path + "'");
            emit(out, key, count, format);
        }
    } catch (const not_integral&) {
        std::cerr << "error: '" << key.str() << "' has non-integer terms; format '" << format
                  << "' cannot represent them\n";
        return kExitRepresentation;
    }
    return kExitOk;
}

void print_report(const VerificationReport& report) {
    std::cout << report.status << "  " << report.key << "  [" << report.mode << "]";
    if (report.first_mismatch)
        std::cout << "  first mismatch at " << report.first_mismatch->index << ": "
                  << report.first_mismatch->lhs << " vs " << report.first_mismatch->rhs;
    if (!report.note.empty()) std::cout << "  (" << report.note << ")";
    std::cout << "\n";
}

int cmd_verify(const std::vector<std::string>& keys, Index prefix, bool as_json) {
    VerifyOptions options;
    if (prefix > 0) options.prefix = prefix;
    std::vector<VerificationReport> reports;
    for (const std::string& key : keys) reports.push_back(verify(key, options));
    if (as_json) {
        std::cout << reports_to_json(reports) << "\n";
    } else {
        for (const auto& r : reports) print_report(r);
    }
    for (const auto& r : reports)
        if (!r.counts_as_pass()) return kExitVerifyFailed;
    return kExitOk;
}

int cmd_verify_all(Index prefix, bool as_json) {
    VerifyOptions options;
    if (prefix > 0) options.prefix = prefix;
    auto reports = verify_all(options);
    bool ok = true;
    long passed = 0;
    for (const auto& r : reports) {
        ok = ok && r.counts_as_pass();
        if (r.status == "pass") ++passed;
    }
    if (as_json) {
        std::cout << reports_to_json(reports) << "\n";
    } else {
        for (const auto& r : reports) print_report(r);
        std::cout << reports.size() << " identities: " << passed << " pass, "
                  << (reports.size() - static_cast<std::size_t>(passed)) << " documented/other\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_table() {
    for (const CatalogKey& key : CatalogKey::table_keys()) {
        auto terms = key_terms(key, 12);
        std::cout << key.str() << ": ";
        for (std::size_t i = 0; i < terms.size(); ++i)
            std::cout << terms[i] << (i + 1 < terms.size() ? ", " : "\n");
    }
    return kExitOk;
}

int cmd_oeis_match(const std::string& key_text, Index count, std::string snapshot_dir,
                   bool allow_fetch) {
    CatalogKey key = CatalogKey::parse(key_text);
    std::vector<Int> terms;
    try {
        terms = key_integer_terms(key, count);
    } catch (const not_integral&) {
        std::cerr << "error: '" << key.str() << "' has non-integer terms\n";
        return kExitRepresentation;
    }
    if (snapshot_dir.empty()) {
        if (const char* env = std::getenv("SEQCALC_OEIS_CACHE")) snapshot_dir = env;
    }
    OeisSnapshot snapshot =
        snapshot_dir.empty() ? OeisSnapshot() : OeisSnapshot::load(snapshot_dir);
    if (snapshot.empty() && !allow_fetch) {
        std::cerr << "error: no snapshot data found"
                  << (snapshot_dir.empty() ? " (set --snapshot or SEQCALC_OEIS_CACHE)" : "")
                  << " and fetching is disabled\n";
        return kExitMissingData;
    }
    auto matches = snapshot.find_containing(terms);
    if (matches.empty() && allow_fetch) {
        std::cerr << "note: no local match; fetching individual b-files requires knowing "
                     "candidate ids, use fetch-bfile\n";
    }
    for (const std::string& name : matches) std::cout << name << "\n";
    if (matches.empty()) std::cout << "no match among " << snapshot.size() << " entries\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sequence calculus: generate families, render the reference table, "
                 "and verify the identity registry"};
    app.require_subcommand(1);

    std::string gen_key, gen_format = "plain", gen_out;
    Index gen_terms = 16;
    auto* gen = app.add_subcommand("gen", "print terms of a catalog sequence");
    gen->add_option("key", gen_key, "catalog key, e.g. fib or exp:right:alpha=1")->required();
    gen->add_option("--terms", gen_terms, "number of terms")->check(CLI::PositiveNumber);
    gen->add_option("--format", gen_format, "plain|csv|json|bfile")
        ->check(CLI::IsMember({"plain", "csv", "json", "bfile"}));
    gen->add_option("--out", gen_out, "write to a file instead of stdout");

    std::vector<std::string> verify_keys;
    Index verify_prefix = 0;
    bool verify_json = false;
    auto* ver = app.add_subcommand("verify", "verify named identities");
    ver->add_option("keys", verify_keys, "identity keys")->required();
    ver->add_option("--terms", verify_prefix, "prefix length for exact checks");
    ver->add_flag("--json", verify_json, "emit JSON reports");

    Index all_prefix = 0;
    bool all_json = false;
    auto* all = app.add_subcommand("verify-all", "run the whole identity registry");
    all->add_option("--terms", all_prefix, "prefix length for exact checks");
    all->add_flag("--json", all_json, "emit JSON reports");

    bool table_appendix = false;
    auto* table = app.add_subcommand("table", "render the reference table of families");
    table->add_flag("--appendix", table_appendix, "12-term table in presentation order");

    std::string match_key, match_snapshot;
    Index match_terms = 12;
    bool match_fetch = false;
    auto* match = app.add_subcommand("oeis-match", "look a prefix up in a local snapshot");
    match->add_option("key", match_key, "catalog key")->required();
    match->add_option("--terms", match_terms, "prefix length")->check(CLI::PositiveNumber);
    match->add_option("--snapshot", match_snapshot, "snapshot directory");
    match->add_flag("--fetch", match_fetch, "allow network fetches into the snapshot");

    std::string fetch_id, fetch_dir;
    auto* fetch = app.add_subcommand("fetch-bfile", "download one b-file into a snapshot");
    fetch->add_option("a-number", fetch_id, "e.g. A000045")->required();
    fetch->add_option("--snapshot", fetch_dir, "snapshot directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(gen_key, gen_terms, gen_format, gen_out);
        if (*ver) return cmd_verify(verify_keys, verify_prefix, verify_json);
        if (*all) return cmd_verify_all(all_prefix, all_json);
        if (*table) return cmd_table();
        if (*match) return cmd_oeis_match(match_key, match_terms, match_snapshot, match_fetch);
        if (*fetch) {
            std::cout << fetch_bfile(fetch_id, fetch_dir) << "\n";
            return kExitOk;
        }
    } catch (const unknown_key& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const not_integral& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRepresentation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
