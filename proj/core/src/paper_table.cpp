#include "detrep/paper_table.hpp"

#include <sstream>

#include "detrep/formulas.hpp"

namespace detrep {
namespace formulas {

namespace {

TableRow row(TableRow::Kind tk, int tv, TableRow::Kind ck, int cv, TableRow::Kind dk, int dv) {
    TableRow r;
    r.tk = tk;
    r.ck = ck;
    r.dk = dk;
    r.tv = tv;
    r.cv = cv;
    r.dv = dv;
    return r;
}

using K = TableRow::Kind;

} // namespace

std::string TableRow::str() const {
    auto one = [](Kind k, int v) -> std::string {
        switch (k) {
            case Fixed: return std::to_string(v);
            case Le: return "<=" + std::to_string(v);
            case Any: return "any";
        }
        return "?";
    };
    return one(tk, tv) + "," + one(ck, cv) + "," + one(dk, dv);
}

const std::vector<TableRow>& paper_table() {
    static const std::vector<TableRow> rows = {
        row(K::Fixed, 2, K::Any, 0, K::Any, 0),
        row(K::Fixed, 3, K::Fixed, 2, K::Le, 16),
        row(K::Fixed, 3, K::Fixed, 3, K::Le, 10),
        row(K::Fixed, 3, K::Le, 4, K::Fixed, 8),
        row(K::Fixed, 3, K::Le, 5, K::Fixed, 7),
        row(K::Fixed, 3, K::Le, 8, K::Fixed, 6),
        row(K::Fixed, 3, K::Le, 26, K::Fixed, 5),
        row(K::Fixed, 3, K::Any, 0, K::Le, 4),
        row(K::Fixed, 4, K::Le, 23, K::Fixed, 3),
        row(K::Fixed, 5, K::Le, 5, K::Fixed, 3),
        row(K::Fixed, 6, K::Le, 3, K::Fixed, 3),
        row(K::Le, 9, K::Fixed, 2, K::Fixed, 3),
        row(K::Fixed, 4, K::Le, 5, K::Fixed, 4),
        row(K::Fixed, 5, K::Le, 3, K::Fixed, 4),
        row(K::Fixed, 6, K::Fixed, 2, K::Fixed, 4),
        row(K::Fixed, 4, K::Le, 3, K::Fixed, 5),
        row(K::Fixed, 5, K::Fixed, 2, K::Fixed, 5),
        row(K::Fixed, 4, K::Fixed, 2, K::Le, 8),
        row(K::Le, 17, K::Fixed, 2, K::Fixed, 2),
        row(K::Le, 11, K::Fixed, 3, K::Fixed, 2),
        row(K::Le, 9, K::Fixed, 4, K::Fixed, 2),
        row(K::Le, 8, K::Fixed, 5, K::Fixed, 2),
        row(K::Le, 7, K::Le, 8, K::Fixed, 2),
        row(K::Le, 6, K::Le, 26, K::Fixed, 2),
        row(K::Le, 5, K::Any, 0, K::Fixed, 2),
    };
    return rows;
}

namespace {

std::pair<int, int> coord_range(TableRow::Kind k, int v, int cap) {
    switch (k) {
        case TableRow::Fixed: return {v, v};
        case TableRow::Le: return {2, v};
        case TableRow::Any: return {2, cap};
    }
    return {2, 2};
}

bool box_all_true(const TableRow& r, int cap, std::string* fail) {
    auto [t0, t1] = coord_range(r.tk, r.tv, cap);
    auto [c0, c1] = coord_range(r.ck, r.cv, cap);
    auto [d0, d1] = coord_range(r.dk, r.dv, cap);
    for (int t = t0; t <= t1; ++t)
        for (int c = c0; c <= c1; ++c)
            for (int d = d0; d <= d1; ++d)
                if (!wild_criterion(t, c, d)) {
                    if (fail) {
                        std::ostringstream os;
                        os << "criterion false inside box at (" << t << "," << c << "," << d << ")";
                        *fail = os.str();
                    }
                    return false;
                }
    return true;
}

// for each "<= K" coordinate the value K+1 must fail somewhere in the box of
// the other two coordinates
bool boundary_fails(const TableRow& r, int cap, std::string* detail) {
    struct Bound {
        TableRow::Kind k;
        int v;
    };
    Bound bs[3] = {{r.tk, r.tv}, {r.ck, r.cv}, {r.dk, r.dv}};
    for (int axis = 0; axis < 3; ++axis) {
        if (bs[axis].k != TableRow::Le) continue;
        bool found_fail = false;
        auto [x0, x1] = coord_range(bs[(axis + 1) % 3].k, bs[(axis + 1) % 3].v, cap);
        auto [y0, y1] = coord_range(bs[(axis + 2) % 3].k, bs[(axis + 2) % 3].v, cap);
        for (int x = x0; x <= x1 && !found_fail; ++x)
            for (int y = y0; y <= y1 && !found_fail; ++y) {
                int v[3];
                v[axis] = bs[axis].v + 1;
                v[(axis + 1) % 3] = x;
                v[(axis + 2) % 3] = y;
                if (!wild_criterion(v[0], v[1], v[2])) found_fail = true;
            }
        if (!found_fail) {
            if (detail) {
                const char* names[3] = {"t", "c", "d"};
                *detail = std::string("no failure one step past ") + names[axis] + "<=" +
                          std::to_string(bs[axis].v);
            }
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<TableCheck> check_paper_table(int cap) {
    std::vector<TableCheck> out;
    for (const TableRow& r : paper_table()) {
        TableCheck tc;
        tc.row = r;
        std::string why;
        tc.box_ok = box_all_true(r, cap, &why);
        if (!tc.box_ok) tc.detail = why;
        tc.boundary_ok = boundary_fails(r, cap, tc.box_ok ? &tc.detail : nullptr);
        out.push_back(std::move(tc));
    }
    return out;
}

bool table_diff_empty(int cap) {
    for (const auto& tc : check_paper_table(cap))
        if (!tc.box_ok || !tc.boundary_ok) return false;
    return true;
}

} // namespace formulas
} // namespace detrep
