#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "twosq/report.hpp"

using namespace twosq;

namespace {

struct Rendered {
    ScanBranch branch;
    ScanResult result;
    std::string differences;
    std::string running;
};

Rendered render(Natural n, int r, const std::string& id) {
    for (const auto& b : plan(n, r)) {
        if (b.id != id) continue;
        Rendered out{b, scan_branch(b), "", ""};
        out.differences = render_difference_table(b, out.result.rows);
        out.running = render_scan_table(b, out.result.rows, out.result.hits);
        return out;
    }
    FAIL("no branch " << id);
    return {};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

// Set TWOSQ_UPDATE_GOLDEN=1 to rewrite the files after a deliberate layout change.
void golden(const std::string& name, const std::string& text) {
    const std::string path = std::string(TWOSQ_GOLDEN_DIR) + "/" + name;
    if (std::getenv("TWOSQ_UPDATE_GOLDEN")) {
        std::ofstream(path, std::ios::binary) << text;
        return;
    }
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == text);
}

std::string right_cell(const std::string& line) {
    const auto bar = line.find('|');
    return bar == std::string::npos ? "" : line.substr(bar + 1);
}

std::string left_cell(const std::string& line) { return line.substr(0, line.find('|')); }

std::string trim(std::string s) {
    s.erase(0, s.find_first_not_of(' '));
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
}

}  // namespace

TEST_CASE("B of 1000009") {
    const auto r = render(1000009, 3, "Q.1.0");
    CHECK(r.branch.quadratic.to_string("t") == "39969 - 224t - 400t^2");
    golden("1000009_B.txt", r.differences + "\n" + r.running);

    // descending side: subtrahends 0, 176, 1152, 2928, 5504
    const auto d = lines(r.differences);
    REQUIRE(d.size() > 6);
    CHECK(d[0] == "differences of 39969 - 224t - 400t^2 (t <= 0 | t >= 0)");
    const char* expected[] = {"0           0", "-1         176   176", "-2        1152   976",
                              "-3        2928  1776", "-4        5504  2576"};
    for (int i = 0; i < 5; ++i) CHECK(trim(left_cell(d[static_cast<std::size_t>(i) + 2])) == expected[i]);

    const auto s = lines(r.running);
    std::string last_left;
    for (std::size_t i = 2; i < s.size(); ++i)
        if (!trim(left_cell(s[i])).empty()) last_left = trim(left_cell(s[i]));
    CHECK(last_left == "* 2209");
    CHECK(std::count(r.running.begin(), r.running.end(), '*') == 1);
}

TEST_CASE("C of 1000081") {
    const auto r = render(1000081, 9, "Q.1.1");
    CHECK(r.branch.quadratic.to_string("t") == "39993 + 128t - 400t^2");
    CHECK(r.result.hits.empty());
    golden("1000081_C.txt", r.differences + "\n" + r.running);

    const auto d = lines(r.differences);
    CHECK(d[0] == "differences of 39993 + 128t - 400t^2 (t >= 0 | t <= 0)");
    const char* negative[] = {"0           0", "-1         528   528", "-2        1856  1328", "-3        3984  2128"};
    for (int i = 0; i < 4; ++i) CHECK(trim(right_cell(d[static_cast<std::size_t>(i) + 2])) == negative[i]);

    const auto s = lines(r.running);
    CHECK(trim(left_cell(s.back())) == "1273");
    CHECK(r.running.find('*') == std::string::npos);
}

TEST_CASE("2500 - 9e - 100e^2 of 1000081") {
    const auto r = render(1000081, 9, "Q.0.0.0");
    CHECK(r.branch.quadratic.to_string("e") == "2500 - 9e - 100e^2");
    golden("1000081_A_even.txt", r.differences + "\n" + r.running);

    const auto s = lines(r.running);
    CHECK(trim(left_cell(s.back())) == "45");
    // the head value on both sides and nothing else
    CHECK(std::count(r.running.begin(), r.running.end(), '*') == 2);
    CHECK(r.running.find("* 2500") != std::string::npos);
}

TEST_CASE("second differences") {
    auto check = [](Natural n, int root, const std::string& id, Natural second) {
        const auto r = render(n, root, id);
        for (Side side : {Side::Descending, Side::Ascending}) {
            std::vector<Natural> diffs;
            for (const auto& row : r.result.rows)
                if (row.side == side && row.t != 0) diffs.push_back(row.difference);
            for (std::size_t i = 1; i < diffs.size(); ++i) REQUIRE(diffs[i] - diffs[i - 1] == second);
        }
    };
    check(1000009, 3, "Q.1.0", 800);
    check(1000081, 9, "Q.1.1", 800);
    check(1000081, 9, "Q.0.0.0", 200);
    check(1000081, 9, "Q.0.1.1", 200);
}

TEST_CASE("empty rows give a header") {
    const auto b = plan(1000009, 3).front();
    const auto t = render_difference_table(b, {});
    CHECK(std::count(t.begin(), t.end(), '\n') == 2);
    CHECK(t.rfind("differences of ", 0) == 0);
}

TEST_CASE("asterisks mark exactly the squares") {
    for (Natural n : {Natural{1000009}, Natural{1000081}, Natural{1009}, Natural{262769}, Natural{99981}, Natural{4141}}) {
        AnalyzeOptions opts;
        opts.scan.collect_rows = true;
        const auto a = analyze(n, opts);
        for (const auto& sb : a.branches) {
            if (sb.branch.status != BranchStatus::Scannable) continue;
            const auto text = render_scan_table(sb.branch, sb.result.rows, sb.result.hits);
            std::size_t marked = 0;
            for (const auto& line : lines(text)) {
                for (const auto& cell : {left_cell(line), right_cell(line)}) {
                    const auto c = trim(cell);
                    if (c.rfind("* ", 0) != 0) continue;
                    ++marked;
                    REQUIRE(is_perfect_square(std::stoll(c.substr(2))));
                }
            }
            // a hit at t = 0 heads both columns
            std::size_t expected = 0;
            for (const auto& h : sb.result.hits) expected += h.t == 0 ? 2 : 1;
            REQUIRE(marked == expected);
        }
    }
}

TEST_CASE("render_analysis") {
    AnalyzeOptions opts;
    opts.scan.collect_rows = true;
    const auto text = render_analysis(analyze(1000081, opts));
    CHECK(text.find("pruned: AlwaysFiveMod8") != std::string::npos);
    CHECK(text.find("1000^2") != std::string::npos);
    CHECK(render_analysis(analyze(1000081, opts)) == text);
}

TEST_CASE("sweep csv") {
    CHECK(sweep_csv({}) == "n,verdict,rep_count,factor1,factor2\n");
    CHECK(sweep_csv({decide(1000081), decide(1000009)}) ==
          "n,verdict,rep_count,factor1,factor2\n"
          "1000009,CompositeWithFactors,2,293,3413\n"
          "1000081,Prime,1,,\n");
    CHECK(sweep_csv({decide(21)}) == "n,verdict,rep_count,factor1,factor2\n21,CompositeNoRepresentation,0,,\n");
}
