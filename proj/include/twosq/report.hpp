#pragma once

// Text renderings of scans and sweeps. All output is plain ASCII with LF
// line endings and no locale-dependent formatting.

#include <string>
#include <vector>

#include "twosq/certify.hpp"
#include "twosq/represent.hpp"
#include "twosq/scan.hpp"

namespace twosq {

/// t | subtrahend | diff, one column group per side. The side whose
/// subtrahend is gamma c^2 - |beta| c comes first.
std::string render_difference_table(const ScanBranch& branch, const std::vector<TableRow>& rows);

/// Running values down each side, the subtracted difference between them,
/// squares marked "* ".
std::string render_scan_table(const ScanBranch& branch, const std::vector<TableRow>& rows,
                              const std::vector<ScanHit>& hits);

/// One block per branch: chain, quadratic, status, hits and (for scannable
/// branches with rows) both tables.
std::string render_analysis(const Analysis& analysis);

/// Header `n,verdict,rep_count,factor1,factor2`, rows ascending by n.
std::string sweep_csv(std::vector<Certificate> certs);

}  // namespace twosq
