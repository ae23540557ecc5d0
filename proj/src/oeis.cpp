#include "seqcalc/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "seqcalc/errors.hpp"

#ifdef SEQCALC_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

namespace seqcalc {

namespace fs = std::filesystem;

void write_bfile(std::ostream& out, const std::vector<Int>& terms, long offset,
                 const std::string& comment) {
    if (!comment.empty()) out << "# " << comment << "\n";
    for (std::size_t i = 0; i < terms.size(); ++i)
        out << (offset + static_cast<long>(i)) << " " << terms[i].str() << "\n";
}

std::vector<BFileEntry> parse_bfile(std::istream& in) {
    std::vector<BFileEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream fields(line.substr(start));
        long index;
        std::string value;
        if (!(fields >> index >> value))
            throw parse_error("bad b-file line '" + line + "'");
        try {
            entries.push_back({index, Int(value)});
        } catch (const std::exception&) {
            throw parse_error("bad b-file value '" + value + "'");
        }
    }
    return entries;
}

namespace {

std::string bfile_a_number(const std::string& filename) {
    // b000045.txt -> A000045
    if (filename.size() < 6 || filename[0] != 'b') return {};
    auto dot = filename.find('.');
    if (dot == std::string::npos) return {};
    std::string digits = filename.substr(1, dot - 1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
        return {};
    return "A" + digits;
}

void load_stripped(const fs::path& path, std::map<std::string, std::vector<Int>>& entries) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        // "A000045 ,0,1,1,2,3,5,8,"
        std::istringstream fields(line);
        std::string name, body;
        if (!(fields >> name >> body)) continue;
        if (name.empty() || name[0] != 'A') continue;
        std::vector<Int> terms;
        std::stringstream items(body);
        std::string item;
        while (std::getline(items, item, ',')) {
            if (item.empty()) continue;
            try {
                terms.emplace_back(item);
            } catch (const std::exception&) {
                throw parse_error("bad term '" + item + "' in " + path.string());
            }
        }
        if (!terms.empty()) entries[name] = std::move(terms);
    }
}

} // namespace

OeisSnapshot OeisSnapshot::load(const std::string& directory) {
    OeisSnapshot snapshot;
    fs::path dir(directory);
    if (!fs::is_directory(dir)) return snapshot;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string name = entry.path().filename().string();
        if (name == "stripped" || name.ends_with(".stripped")) {
            load_stripped(entry.path(), snapshot.entries_);
        } else if (std::string a = bfile_a_number(name); !a.empty()) {
            std::ifstream in(entry.path());
            std::vector<Int> terms;
            for (const BFileEntry& e : parse_bfile(in)) terms.push_back(e.value);
            if (!terms.empty()) snapshot.entries_[a] = std::move(terms);
        }
    }
    return snapshot;
}

std::vector<std::string> OeisSnapshot::find_containing(const std::vector<Int>& terms) const {
    std::vector<std::string> matches;
    if (terms.empty()) return matches;
    for (const auto& [name, stored] : entries_) {
        if (stored.size() < terms.size()) continue;
        for (std::size_t at = 0; at + terms.size() <= stored.size(); ++at) {
            bool ok = true;
            for (std::size_t i = 0; i < terms.size() && ok; ++i)
                ok = stored[at + i] == terms[i];
            if (ok) {
                matches.push_back(name);
                break;
            }
        }
    }
    return matches;
}

std::string fetch_bfile(const std::string& a_number, const std::string& directory,
                        long min_delay_ms) {
    if (a_number.size() != 7 || a_number[0] != 'A')
        throw error("expected an A-number like A000045, got '" + a_number + "'");
#ifndef SEQCALC_HAVE_OPENSSL
    throw error("fetching requires TLS support, which this build lacks");
#else
    std::this_thread::sleep_for(std::chrono::milliseconds(std::max(min_delay_ms, 1000L)));
    httplib::SSLClient client("oeis.org");
    client.set_follow_location(true);
    std::string file = "b" + a_number.substr(1) + ".txt";
    std::string path = "/" + a_number + "/" + file;
    httplib::Headers headers = {{"User-Agent", "seqcalc/1.0 (sequence table lookup)"}};
    auto response = client.Get(path, headers);
    if (!response || response->status != 200)
        throw error("fetch of " + path + " failed" +
                    (response ? " with status " + std::to_string(response->status) : ""));
    fs::create_directories(directory);
    fs::path target = fs::path(directory) / file;
    std::ofstream out(target, std::ios::binary);
    out << response->body;
    return target.string();
#endif
}

} // namespace seqcalc
