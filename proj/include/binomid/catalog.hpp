#ifndef BINOMID_CATALOG_HPP
#define BINOMID_CATALOG_HPP

#include <string>
#include <vector>

#include "binomid/ast.hpp"
#include "binomid/eval.hpp"

namespace binomid {

struct CatalogEntry {
    Identity identity;
    std::string location;        // where the identity comes from, in words
    std::string quote;           // compact rendering of the statement
    SweepRanges default_ranges;  // master regression sweep
    std::vector<std::string> tags;

    bool has_tag(const std::string& t) const {
        for (const auto& x : tags)
            if (x == t) return true;
        return false;
    }
};

// The full immutable registry; built once, thread-safe to read.
const std::vector<CatalogEntry>& catalog_entries();

const CatalogEntry& lookup(const std::string& id);  // throws UnknownId

// Shared default sample lists.
const std::vector<Rational>& default_n_range();        // 0..15
const std::vector<Rational>& default_n_range_single(); // 0..25
const std::vector<Rational>& default_v_grid();  // 0,1/2,...,4
const std::vector<Rational>& default_xy_samples();
const std::vector<Rational>& default_numeric_v();  // 3/10, 3/4, 11/5

}  // namespace binomid

#endif
