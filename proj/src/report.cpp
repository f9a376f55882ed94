#include "biercert/report.hpp"

#include <chrono>

#include <json.hpp>

#include "biercert/cochain.hpp"
#include "biercert/errors.hpp"
#include "biercert/facet_file.hpp"

namespace bier {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string conclusion_text(const Certificate& cert) {
    if (!cert.index_lower || *cert.index_lower < 1) return "no obstruction found";
    return "no embedding into E^d for any d < " + std::to_string(*cert.index_lower) +
           "; every continuous map into such E^d identifies points of two disjoint faces";
}

}  // namespace

ReportDocument build_report(const SimplicialComplex& k, const ReportOptions& opts) {
    ReportDocument doc;
    doc.input_digest = input_digest(k);

    auto t0 = Clock::now();
    if (k.kind() != ComplexKind::Void) {
        doc.f_vector = f_vector(k);
        doc.euler_characteristic = euler_characteristic(k);
    }
    doc.timings_ms.emplace_back("f_vector", ms_since(t0));

    t0 = Clock::now();
    if (k.kind() != ComplexKind::Void) doc.betti_numbers = betti_numbers_z2(k);
    doc.timings_ms.emplace_back("betti_numbers", ms_since(t0));

    t0 = Clock::now();
    doc.certificate = nonembeddability_report(k, opts.certify);
    doc.timings_ms.emplace_back("certificate", ms_since(t0));

    doc.conclusion = conclusion_text(doc.certificate);
    return doc;
}

std::string report_to_json(const ReportDocument& doc, bool include_timings) {
    using json = nlohmann::ordered_json;
    const Certificate& c = doc.certificate;
    json j;
    j["schema_version"] = doc.schema_version;
    j["input_digest"] = doc.input_digest;
    j["n"] = c.n;
    j["kind"] = to_string(c.kind);
    if (c.dim)
        j["dim"] = *c.dim;
    else
        j["dim"] = nullptr;
    j["f_vector"] = doc.f_vector;
    if (doc.euler_characteristic)
        j["euler_characteristic"] = *doc.euler_characteristic;
    else
        j["euler_characteristic"] = nullptr;
    j["betti_numbers"] = doc.betti_numbers;
    j["complementarity"] = c.complementarity;
    if (c.complementarity_witness) {
        j["complementarity_witness"] = {
            {"vertices", c.complementarity_witness->labels()},
            {"condition", c.witness_both_faces ? "both-faces" : "neither-face"}};
    } else {
        j["complementarity_witness"] = nullptr;
    }
    j["self_dual"] = c.self_dual;
    j["neighborliness"] = c.neighborliness;
    j["nonface_count"] = c.nonface_count;
    j["kneser_edges"] = c.kneser_edges;
    j["chi_upper"] = c.chi_upper;
    j["chi_exact"] = c.chi_exact ? json(*c.chi_exact) : json(nullptr);
    j["chi_used"] = c.chi_used;
    j["sarkaria_lower"] = c.sarkaria_lower ? json(*c.sarkaria_lower) : json(nullptr);
    j["bier_lower"] = c.bier_lower ? json(*c.bier_lower) : json(nullptr);
    j["index_lower"] = c.index_lower ? json(*c.index_lower) : json(nullptr);
    j["nonembeddable_dims"] = c.nonembeddable_dims;
    j["method_trail"] = c.method_trail;
    j["conclusion"] = doc.conclusion;
    if (include_timings) {
        json t = json::object();
        for (const auto& [stage, ms] : doc.timings_ms) t[stage] = ms;
        j["timings_ms"] = t;
    }
    return j.dump(2) + "\n";
}

}  // namespace bier
