#include "twosq/report.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace twosq {

namespace {

std::pair<Side, Side> side_order(const ScanBranch& branch) {
    // t = -c gives gamma c^2 - beta c; lead with the slower-growing side.
    if (branch.quadratic.beta > 0) return {Side::Descending, Side::Ascending};
    return {Side::Ascending, Side::Descending};
}

std::vector<TableRow> rows_of(const std::vector<TableRow>& rows, Side side) {
    std::vector<TableRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out), [side](const TableRow& r) { return r.side == side; });
    return out;
}

// Lay out two columns of cells side by side, right-aligned, separated by " | ".
std::string two_columns(const std::vector<std::string>& left, const std::vector<std::string>& right,
                        const std::string& head_left, const std::string& head_right) {
    std::size_t wl = head_left.size();
    for (const auto& s : left) wl = std::max(wl, s.size());
    std::size_t wr = head_right.size();
    for (const auto& s : right) wr = std::max(wr, s.size());

    std::string out = fmt::format("{:>{}} | {:>{}}\n", head_left, wl, head_right, wr);
    const std::size_t rows = std::max(left.size(), right.size());
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string& l = i < left.size() ? left[i] : std::string();
        const std::string& r = i < right.size() ? right[i] : std::string();
        std::string line = fmt::format("{:>{}} | {:>{}}", l, wl, r, wr);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string side_label(Side s) { return s == Side::Descending ? "t <= 0" : "t >= 0"; }

}  // namespace

std::string render_difference_table(const ScanBranch& branch, const std::vector<TableRow>& rows) {
    const auto [first, second] = side_order(branch);
    const auto lrows = rows_of(rows, first);
    const auto rrows = rows_of(rows, second);

    std::size_t wt = 1, ws = 10, wd = 4;
    for (const auto& r : rows) {
        wt = std::max(wt, std::to_string(r.t).size());
        ws = std::max(ws, std::to_string(r.subtrahend).size());
        wd = std::max(wd, std::to_string(r.difference).size());
    }
    auto column = [&](const std::vector<TableRow>& side_rows) {
        std::vector<std::string> cells;
        for (std::size_t i = 0; i < side_rows.size(); ++i) {
            const auto& r = side_rows[i];
            const std::string d = i == 0 ? std::string() : std::to_string(r.difference);
            cells.push_back(fmt::format("{:>{}}  {:>{}}  {:>{}}", r.t, wt, r.subtrahend, ws, d, wd));
        }
        return cells;
    };
    const std::string head = fmt::format("{:>{}}  {:>{}}  {:>{}}", "t", wt, "subtrahend", ws, "diff", wd);

    std::string out = fmt::format("differences of {} ({} | {})\n", branch.quadratic.to_string(), side_label(first),
                                  side_label(second));
    return out + two_columns(column(lrows), column(rrows), head, head);
}

std::string render_scan_table(const ScanBranch& branch, const std::vector<TableRow>& rows,
                              const std::vector<ScanHit>& hits) {
    const auto [first, second] = side_order(branch);
    std::set<Natural> square_t;
    for (const auto& h : hits) square_t.insert(h.t);

    auto column = [&](Side side) {
        std::vector<std::string> cells;
        bool head = true;
        for (const auto& r : rows_of(rows, side)) {
            if (!head) cells.push_back(fmt::format("-{}", r.difference));
            head = false;
            cells.push_back(square_t.contains(r.t) ? fmt::format("* {}", r.value) : std::to_string(r.value));
        }
        return cells;
    };
    std::string out = fmt::format("running values of {} ({} | {})\n", branch.quadratic.to_string(), side_label(first),
                                  side_label(second));
    return out + two_columns(column(first), column(second), "value", "value");
}

std::string render_analysis(const Analysis& analysis) {
    const auto& e = analysis.eligibility;
    std::string out = fmt::format("n = {}\n", e.n);
    if (e.roots_mod25.empty()) return out + fmt::format("{} is not a square mod 25; nothing to scan\n", e.n_mod25);
    out += fmt::format("x = 25t + {}, roots of {} mod 25: {}\n", e.roots_mod25.front(), e.n_mod25,
                       fmt::join(e.roots_mod25, ", "));
    for (const auto& sb : analysis.branches) {
        const auto& b = sb.branch;
        out += fmt::format("\nbranch {}: {}\n  Q(u) = {}\n", b.id, b.describe(), b.quadratic.to_string("u"));
        if (!b.scannable()) {
            out += fmt::format("  pruned: {}\n", to_string(*b.reason));
            continue;
        }
        if (sb.result.hits.empty()) out += "  no squares\n";
        for (const auto& h : sb.result.hits) {
            const Point p = recover_xy(b, h);
            out += fmt::format("  square {} = {}^2 at u = {}  ->  {}^2 + {}^2\n", h.value, h.root, h.t, p.x, p.y);
        }
        if (!sb.result.rows.empty()) {
            out += "\n" + render_difference_table(b, sb.result.rows);
            out += "\n" + render_scan_table(b, sb.result.rows, sb.result.hits);
        }
    }
    return out;
}

std::string sweep_csv(std::vector<Certificate> certs) {
    std::sort(certs.begin(), certs.end(), [](const Certificate& a, const Certificate& b) { return a.n < b.n; });
    std::string out = "n,verdict,rep_count,factor1,factor2\n";
    for (const auto& c : certs) {
        out += fmt::format("{},{},{},", c.n, to_string(c.verdict), c.representations.size());
        if (c.factors) out += fmt::format("{},{}", c.factors->first, c.factors->second);
        else out += ",";
        out += "\n";
    }
    return out;
}

}  // namespace twosq
