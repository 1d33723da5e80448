#pragma once

#include <string>
#include <vector>

namespace detrep {
namespace formulas {

// One row of the published (t, c, d) table of triples with Ext^1(L_2, L_1)
// forced nonzero. Each coordinate is a fixed value, an upper bound ("<= K",
// always from 2), or unbounded ("any").
struct TableRow {
    enum Kind { Fixed, Le, Any };
    Kind tk = Fixed, ck = Fixed, dk = Fixed;
    int tv = 0, cv = 0, dv = 0;
    std::string str() const;
};

const std::vector<TableRow>& paper_table();

struct TableCheck {
    TableRow row;
    bool box_ok = false;      // criterion true on the whole claimed box
    bool boundary_ok = false; // one step outside each bounded coordinate fails
    std::string detail;
};

// Re-derive every row from wild_criterion and diff against the hard-coded
// table; "any" coordinates are scanned up to cap.
std::vector<TableCheck> check_paper_table(int cap = 40);
bool table_diff_empty(int cap = 40);

} // namespace formulas
} // namespace detrep
