#pragma once

// Residual-quadratic scanning.
//
// For an eligible N with a square root r of N mod 25, every representation
// N = x^2 + y^2 with 5 | y has x = |25t + r| for exactly one integer t, and
// then (N - x^2)/25 = Q(t) with Q(t) = m - beta*t - gamma*t^2 must be a square.
// The search over t is narrowed by splitting t into residue classes mod 2,
// dividing out factors of 4 where every value is evenly even, and discarding
// classes whose values are never squares mod 8. What survives is scanned with
// a running difference table.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twosq/arith.hpp"

namespace twosq {

/// Q(t) = m - beta*t - gamma*t^2, gamma > 0.
struct Quadratic {
    Natural m = 0;
    Natural beta = 0;
    Natural gamma = 1;

    Wide eval(Natural t) const {
        const Wide wt = t;
        return static_cast<Wide>(m) - static_cast<Wide>(beta) * wt - static_cast<Wide>(gamma) * wt * wt;
    }

    /// Residues mod 8 taken by Q over one full period of t.
    std::array<bool, 8> residues_mod8() const;

    /// "39969 - 224t - 400t^2"
    std::string to_string(std::string_view var = "t") const;

    friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

/// t_outer = scale * t_inner + offset
struct AffineStep {
    Natural scale = 1;
    Natural offset = 0;

    friend bool operator==(const AffineStep&, const AffineStep&) = default;
};

struct SubstitutionChain {
    std::vector<AffineStep> steps;  // outermost first
    Natural divisor = 25;           // 25 * 4^k

    /// Value of the initial scan variable for a given innermost value.
    Wide outer(Natural inner) const;
    /// All steps folded into one map from the innermost variable.
    AffineStep composed() const;
};

enum class BranchStatus { Scannable, Pruned };
enum class PruneReason { AlwaysFiveMod8, OddlyEven, OtherNonResidue };

std::string_view to_string(BranchStatus s);
std::string_view to_string(PruneReason r);

struct ScanBranch {
    Natural n = 0;
    int root = 0;            // r in x = 25t + r
    std::string id = "Q";    // "Q", then one ".0"/".1" per parity split
    Quadratic quadratic;
    SubstitutionChain chain;
    BranchStatus status = BranchStatus::Scannable;
    std::optional<PruneReason> reason;
    int depth = 0;           // parity splits since the initial quadratic
    bool divided = false;    // last step divided the residual by 4

    // Residue class of the variable introduced by the last division (or the
    // initial one): base = base_modulus * t + base_residue, residue kept in
    // (-modulus/2, modulus/2].
    Natural base_modulus = 1;
    Natural base_residue = 0;

    bool scannable() const { return status == BranchStatus::Scannable; }

    /// e.g. "t = 4u+1, divisor 25"
    std::string describe() const;
};

struct RefineOptions {
    bool prune = true;
    int max_depth = 3;
};

/// Q(t) = (n - r^2)/25 - 2r t - 25 t^2. Throws std::invalid_argument when
/// r^2 is not n mod 25.
ScanBranch initial_quadratic(Natural n, int r);

/// Split a scannable branch by the parity of its variable and keep splitting
/// children whose residues mod 8 are still undecided, up to max_depth. A child
/// whose coefficients are all divisible by 4 is divided and returned as-is.
/// The children's t-domains partition the parent's.
std::vector<ScanBranch> refine(const ScanBranch& branch, const RefineOptions& options = {});

/// Why a quadratic can never take square values, if it can't.
std::optional<PruneReason> prune_reason(const Quadratic& q);

/// Every leaf branch for (n, r), sorted by id: the initial quadratic refined,
/// with divided children refined again while under the depth cap.
std::vector<ScanBranch> plan(Natural n, int r, const RefineOptions& options = {});

struct ScanHit {
    std::string branch;
    Natural t = 0;
    Natural value = 0;
    Natural root = 0;

    friend bool operator==(const ScanHit&, const ScanHit&) = default;
};

enum class Side {
    Descending,  // t = t0, t0 - 1, ...
    Ascending,   // t = t0, t0 + 1, ...
};

struct TableRow {
    Side side = Side::Ascending;
    Natural t = 0;
    Natural subtrahend = 0;  // m - Q(t), i.e. gamma t^2 + beta t
    Natural difference = 0;  // subtrahend step from the previous row; 0 on the head row
    Natural value = 0;       // Q(t)

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct ScanOptions {
    bool collect_rows = true;
    bool cross_check = false;  // re-evaluate Q(t) directly on every row
    Prefilter prefilter = Prefilter::Full;
};

struct ScanResult {
    std::vector<ScanHit> hits;  // ascending t
    std::vector<TableRow> rows; // descending side first, then ascending
};

ScanResult scan_branch(const ScanBranch& branch, const ScanOptions& options = {});

struct Point {
    Natural x = 0;
    Natural y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// (x, y) with x = |25 t_outer + r| and y = sqrt(divisor) * root, so that
/// x^2 + y^2 = n and 5 | y. Throws InternalError if that does not hold.
Point recover_xy(const ScanBranch& branch, const ScanHit& hit);

}  // namespace twosq
