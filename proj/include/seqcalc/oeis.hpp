#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "seqcalc/scalar.hpp"

namespace seqcalc {

struct BFileEntry {
    long index;
    Int value;
};

/// Lines "n a(n)", LF endings, optional leading '#' comments.
void write_bfile(std::ostream& out, const std::vector<Int>& terms, long offset = 0,
                 const std::string& comment = {});
std::vector<BFileEntry> parse_bfile(std::istream& in);

/// A read-only local directory of OEIS-style data: b-files named
/// b<number>.txt and/or `stripped`-format index files mapping A-numbers to
/// comma-separated prefixes. Lookups never touch the network.
class OeisSnapshot {
public:
    static OeisSnapshot load(const std::string& directory);

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// A-numbers whose stored prefix contains the given terms as a
    /// contiguous run.
    std::vector<std::string> find_containing(const std::vector<Int>& terms) const;

private:
    std::map<std::string, std::vector<Int>> entries_;
};

/// Downloads one b-file into the snapshot directory. The client identifies
/// itself and sleeps at least min_delay_ms before the request.
/// Returns the stored path.
std::string fetch_bfile(const std::string& a_number, const std::string& directory,
                        long min_delay_ms = 1000);

} // namespace seqcalc
