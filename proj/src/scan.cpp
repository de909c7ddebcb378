#include "twosq/scan.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace twosq {

namespace {

Natural floor_div(Natural a, Natural b) {
    Natural q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

bool any_square(const std::array<bool, 8>& res) { return res[0] || res[1] || res[4]; }

bool any_nonsquare(const std::array<bool, 8>& res) {
    return res[2] || res[3] || res[5] || res[6] || res[7];
}

bool all_evenly_even(const std::array<bool, 8>& res) {
    for (int i = 0; i < 8; ++i)
        if (res[i] && i % 4 != 0) return false;
    return true;
}

// Further splitting can only help while the residues mod 8 are mixed, or
// while every value is a multiple of 4 that the coefficients don't yet show.
bool worth_splitting(const Quadratic& q) {
    const auto res = q.residues_mod8();
    return (any_square(res) && any_nonsquare(res)) || all_evenly_even(res);
}

bool divisible_by_4(const Quadratic& q) { return q.m % 4 == 0 && q.beta % 4 == 0 && q.gamma % 4 == 0; }

ScanBranch split_child(const ScanBranch& parent, int j) {
    const Natural M = parent.base_modulus;
    Natural residue = parent.base_residue + j * M;
    if (residue > M) residue -= 2 * M;
    const Natural offset = (residue - parent.base_residue) / M;

    const Quadratic& q = parent.quadratic;
    ScanBranch child = parent;
    child.id = parent.id + "." + std::to_string(j);
    child.quadratic = Quadratic{
        narrow(q.eval(offset)),
        checked_add(checked_mul(2, q.beta), checked_mul(checked_mul(4, q.gamma), offset)),
        checked_mul(4, q.gamma),
    };
    child.chain.steps.push_back({2, offset});
    child.depth = parent.depth + 1;
    child.divided = false;
    child.base_modulus = 2 * M;
    child.base_residue = residue;
    return child;
}

void settle(ScanBranch child, std::vector<ScanBranch>& out, const RefineOptions& options);

void split_into(const ScanBranch& parent, std::vector<ScanBranch>& out, const RefineOptions& options) {
    for (int j = 0; j < 2; ++j) settle(split_child(parent, j), out, options);
}

void settle(ScanBranch child, std::vector<ScanBranch>& out, const RefineOptions& options) {
    if (divisible_by_4(child.quadratic)) {
        while (divisible_by_4(child.quadratic)) {
            child.quadratic.m /= 4;
            child.quadratic.beta /= 4;
            child.quadratic.gamma /= 4;
            child.chain.divisor = checked_mul(child.chain.divisor, 4);
        }
        child.divided = true;
        child.base_modulus = 1;
        child.base_residue = 0;
    }
    if (options.prune) {
        if (auto reason = prune_reason(child.quadratic)) {
            child.status = BranchStatus::Pruned;
            child.reason = reason;
            out.push_back(std::move(child));
            return;
        }
    }
    if (!child.divided && child.depth < options.max_depth && worth_splitting(child.quadratic)) {
        split_into(child, out, options);
        return;
    }
    out.push_back(std::move(child));
}

void expand(const ScanBranch& branch, std::vector<ScanBranch>& out, const RefineOptions& options) {
    if (!branch.scannable() || branch.depth >= options.max_depth || !worth_splitting(branch.quadratic)) {
        out.push_back(branch);
        return;
    }
    for (auto& child : refine(branch, options)) {
        if (child.divided && child.scannable())
            expand(child, out, options);
        else
            out.push_back(std::move(child));
    }
}

}  // namespace

std::array<bool, 8> Quadratic::residues_mod8() const {
    // Q(t + 8) - Q(t) = -8 beta - gamma (16 t + 64) = 0 (mod 8)
    std::array<bool, 8> res{};
    for (Natural t = 0; t < 8; ++t) {
        const Wide v = eval(t) % 8;
        res[static_cast<std::size_t>(v < 0 ? v + 8 : v)] = true;
    }
    return res;
}

std::string Quadratic::to_string(std::string_view var) const {
    std::string s = std::to_string(m);
    if (beta > 0)
        s += fmt::format(" - {}{}", beta, var);
    else if (beta < 0)
        s += fmt::format(" + {}{}", -beta, var);
    s += fmt::format(" - {}{}^2", gamma, var);
    return s;
}

Wide SubstitutionChain::outer(Natural inner) const {
    Wide t = inner;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) t = static_cast<Wide>(it->scale) * t + it->offset;
    return t;
}

AffineStep SubstitutionChain::composed() const {
    // outer(t) is affine in t: outer(t) = outer(0) + (outer(1) - outer(0)) t
    const Wide off = outer(0);
    return {narrow(outer(1) - off), narrow(off)};
}

std::string_view to_string(BranchStatus s) {
    return s == BranchStatus::Scannable ? "Scannable" : "Pruned";
}

std::string_view to_string(PruneReason r) {
    switch (r) {
        case PruneReason::AlwaysFiveMod8: return "AlwaysFiveMod8";
        case PruneReason::OddlyEven: return "OddlyEven";
        case PruneReason::OtherNonResidue: return "OtherNonResidue";
    }
    return "?";
}

std::string ScanBranch::describe() const {
    const AffineStep c = chain.composed();
    std::string map;
    if (c.scale == 1 && c.offset == 0)
        map = "t";
    else if (c.offset == 0)
        map = fmt::format("{}u", c.scale);
    else
        map = fmt::format("{}u{:+}", c.scale, c.offset);
    return fmt::format("x = 25({}) + {}, divisor {}", map, root, chain.divisor);
}

ScanBranch initial_quadratic(Natural n, int r) {
    if (n < 0) throw std::invalid_argument("n must be a natural number");
    if (r < 0 || r >= 25) throw std::invalid_argument("root must be a residue mod 25");
    if (mod(n - static_cast<Natural>(r) * r, 25) != 0)
        throw std::invalid_argument(fmt::format("{}^2 is not congruent to {} mod 25", r, n));
    ScanBranch b;
    b.n = n;
    b.root = r;
    b.quadratic = Quadratic{(n - static_cast<Natural>(r) * r) / 25, 2 * static_cast<Natural>(r), 25};
    return b;
}

std::optional<PruneReason> prune_reason(const Quadratic& q) {
    const auto res = q.residues_mod8();
    if (any_square(res)) return std::nullopt;
    bool only5 = true;
    bool oddly_even = true;
    for (int i = 0; i < 8; ++i) {
        if (!res[i]) continue;
        if (i != 5) only5 = false;
        if (i % 4 != 2) oddly_even = false;
    }
    if (only5) return PruneReason::AlwaysFiveMod8;
    if (oddly_even) return PruneReason::OddlyEven;
    return PruneReason::OtherNonResidue;
}

std::vector<ScanBranch> refine(const ScanBranch& branch, const RefineOptions& options) {
    if (!branch.scannable()) throw std::invalid_argument("cannot refine a pruned branch");
    std::vector<ScanBranch> out;
    split_into(branch, out, options);
    return out;
}

std::vector<ScanBranch> plan(Natural n, int r, const RefineOptions& options) {
    std::vector<ScanBranch> out;
    ScanBranch root = initial_quadratic(n, r);
    if (options.prune) {
        if (auto reason = prune_reason(root.quadratic)) {
            root.status = BranchStatus::Pruned;
            root.reason = reason;
        }
    }
    expand(root, out, options);
    std::sort(out.begin(), out.end(), [](const ScanBranch& a, const ScanBranch& b) { return a.id < b.id; });
    return out;
}

ScanResult scan_branch(const ScanBranch& branch, const ScanOptions& options) {
    if (!branch.scannable()) throw std::invalid_argument("cannot scan a pruned branch");
    const Quadratic& q = branch.quadratic;
    ScanResult result;

    Natural t0 = 0;
    if (q.eval(0) < 0) {
        // The nonnegative region, if any, surrounds the vertex -beta / (2 gamma).
        t0 = floor_div(-q.beta + q.gamma, 2 * q.gamma);
        if (q.eval(t0) < 0) return result;
    }
    const Natural head = narrow(q.eval(t0));

    auto test = [&](Natural t, Natural value) {
        if (auto root = is_perfect_square(value, options.prefilter))
            result.hits.push_back({branch.id, t, value, *root});
    };
    test(t0, head);

    for (Side side : {Side::Descending, Side::Ascending}) {
        const Natural step = side == Side::Ascending ? 1 : -1;
        // Q(t) - Q(t + s) = beta s + gamma (2 t s + 1); grows by 2 gamma per step.
        Natural diff = narrow(q.eval(t0) - q.eval(t0 + step));
        const Natural second = 2 * q.gamma;
        Natural value = head;
        Natural t = t0;
        if (options.collect_rows) result.rows.push_back({side, t0, q.m - head, 0, head});
        for (;;) {
            value -= diff;
            t += step;
            if (value < 0) break;
            if (options.cross_check && q.eval(t) != value)
                throw InternalError(fmt::format("difference table drifted at t = {} in {}", t, branch.id));
            if (options.collect_rows) result.rows.push_back({side, t, q.m - value, diff, value});
            test(t, value);
            diff = checked_add(diff, second);
        }
    }
    std::sort(result.hits.begin(), result.hits.end(), [](const ScanHit& a, const ScanHit& b) { return a.t < b.t; });
    return result;
}

Point recover_xy(const ScanBranch& branch, const ScanHit& hit) {
    const auto scale = is_perfect_square(branch.chain.divisor);
    if (!scale) throw InternalError("chain divisor is not a square");
    const Wide x = 25 * branch.chain.outer(hit.t) + branch.root;
    const Point p{narrow(x < 0 ? -x : x), checked_mul(*scale, hit.root)};
    const Wide sum = static_cast<Wide>(p.x) * p.x + static_cast<Wide>(p.y) * p.y;
    if (sum != branch.n)
        throw InternalError(fmt::format("hit t = {} in {} does not reconstruct {}", hit.t, branch.id, branch.n));
    return p;
}

}  // namespace twosq
