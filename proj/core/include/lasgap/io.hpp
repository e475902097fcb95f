#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "lasgap/scan.hpp"

namespace lasgap::io {

// Insertion-ordered JSON so serialized bytes are deterministic for fixed
// inputs. Rationals serialize as canonical "p" / "p/q" strings, never as
// floats; subsets as sorted 1-based index lists like "[1,3]".
using Json = nlohmann::ordered_json;

// Thrown on malformed documents; the CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json certificate_to_json(const GapCertificate& cert, const Json& metadata = Json());

struct CertificateDoc {
  GapCertificate certificate;
  Json metadata;  // null when absent
};
CertificateDoc certificate_from_json(const Json& j);

// Moment-vector documents ("repr": "moment") accepted by the feasibility
// command as an alternative to corner certificates.
Json moment_vector_to_json(const LatticeVector<Rat>& y);
LatticeVector<Rat> moment_vector_from_json(const Json& j);

// True when the document carries a moment vector rather than a certificate.
bool is_moment_document(const Json& j);

void save_json(const std::filesystem::path& path, const Json& j);
Json load_json(const std::filesystem::path& path);

Instance load_instance(const std::filesystem::path& path);
CertificateDoc load_certificate(const std::filesystem::path& path);

// Report serializers backing the CLI's --json mode; schemas live in
// docs/schemas/.
Json feasibility_report_to_json(const FeasibilityReport& report);
Json cert_report_to_json(const CertReport& report);
Json scan_result_to_json(const KnapScanResult& result);
Json svc_report_to_json(const Instance& inst);
Json degree_report_to_json(const MultilinearPoly& f);
Json spectrum_to_json(const SpectrumReport& report);

}  // namespace lasgap::io
