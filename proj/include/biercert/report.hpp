#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biercert/certify.hpp"
#include "biercert/simplicial_complex.hpp"

namespace bier {

struct ReportOptions {
    CertifyOptions certify;
    bool include_timings = false;  // timings are the one non-canonical field
};

/// Certificate plus the homological summary and the input digest; the
/// serialized form is byte-deterministic (fixed key order, sorted arrays,
/// integers only) whenever include_timings is off.
struct ReportDocument {
    int schema_version = 1;
    std::string input_digest;
    Certificate certificate;
    FVector f_vector;
    std::optional<std::int64_t> euler_characteristic;
    std::vector<std::int64_t> betti_numbers;
    std::string conclusion;
    std::vector<std::pair<std::string, std::int64_t>> timings_ms;  // per stage, in order
};

ReportDocument build_report(const SimplicialComplex& k, const ReportOptions& opts = {});

/// Canonical JSON with a fixed key order; ends with a newline.
std::string report_to_json(const ReportDocument& doc, bool include_timings = false);

}  // namespace bier
