#pragma once

#include <vector>

#include "twosq/arith.hpp"
#include "twosq/classify.hpp"
#include "twosq/scan.hpp"

namespace twosq {

/// Unordered pair a >= b >= 0 with a^2 + b^2 = N.
struct Representation {
    Natural a = 0;
    Natural b = 0;
    bool coprime = false;

    static Representation make(Natural x, Natural y);

    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Canonical order: descending a.
void sort_canonical(std::vector<Representation>& reps);

/// Everything the scan engine did for one n, kept for reporting.
struct ScannedBranch {
    ScanBranch branch;
    ScanResult result;  // empty for pruned branches
};

struct Analysis {
    Eligibility eligibility;
    std::vector<ScannedBranch> branches;
    std::vector<Representation> representations;
};

struct AnalyzeOptions {
    RefineOptions refine;
    ScanOptions scan{.collect_rows = false};
};

/// Classify, plan, scan every surviving branch and map hits back to
/// representations. Throws std::invalid_argument for ineligible n.
Analysis analyze(Natural n, const AnalyzeOptions& options = {});

/// All representations of an eligible n found by the scan, canonical order.
std::vector<Representation> representations(Natural n);

/// Brute force over x in [0, isqrt(n)]; any n >= 0.
std::vector<Representation> oracle_representations(Natural n);

}  // namespace twosq
