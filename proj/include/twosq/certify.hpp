#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twosq/arith.hpp"
#include "twosq/classify.hpp"
#include "twosq/factorize.hpp"
#include "twosq/represent.hpp"

namespace twosq {

enum class Verdict { Prime, CompositeWithFactors, CompositeNoRepresentation, Ineligible };

std::string_view to_string(Verdict v);
std::optional<Verdict> verdict_from_string(std::string_view s);

inline constexpr std::string_view kMethodVersion = "twosq-mod25-scan/1";

/// A verdict on n plus everything needed to re-check it without the scan.
///
///  Prime                      one representation, coprime, b >= 1
///  CompositeWithFactors       factors multiply to n, both strictly between 1 and n
///  CompositeNoRepresentation  no representation at all
///  Ineligible                 n outside the method's scope; no claim is made
struct Certificate {
    Natural n = 0;
    Verdict verdict = Verdict::Ineligible;
    std::vector<Representation> representations;
    std::optional<std::pair<Natural, Natural>> factors;
    std::optional<TwoRepWitness> witness;
    std::string notes;
    std::string method_version{kMethodVersion};

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Never throws for n in [0, 2^63 - 1]; out-of-scope n gets an Ineligible certificate.
Certificate decide(Natural n);

/// Re-derives the certificate from the brute-force representation oracle and
/// trial division. False on any discrepancy.
bool verify(const Certificate& cert);

bool is_prime_trial_division(Natural n);

/// Certificates for every eligible n in [from, to], ascending, computed on
/// `jobs` threads. The output does not depend on `jobs`.
std::vector<Certificate> decide_range(Natural from, Natural to, unsigned jobs = 1);

class CertificateFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Stable-key-order JSON; integers as decimal strings; trailing newline.
std::string to_json(const Certificate& cert);

/// Accepts a bare certificate or {"certificate": {...}, ...}. Throws
/// CertificateFormatError on anything malformed.
Certificate certificate_from_json(std::string_view text);

std::string to_text(const Certificate& cert);

}  // namespace twosq
