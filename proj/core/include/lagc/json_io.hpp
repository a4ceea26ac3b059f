#pragma once

#include "lagc/complement.hpp"
#include "lagc/opmodel.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace lagc {

using Json = nlohmann::ordered_json;

/// Instance file: a space description plus a family of Lagrangian bases.
struct Instance {
    SymplecticSpace space; // standard model after loading
    std::vector<Lagrangian> lagrangians;
    std::uint64_t seed = 0;
    std::string generator;
};

Json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const Json& j);

Json lagrangian_to_json(const Lagrangian& L);
Json symmetric_operator_to_json(const SymmetricOperator& A);
SymmetricOperator symmetric_operator_from_json(const Json& j);

RawSymplecticForm raw_form_from_json(const Json& j);

Json instance_to_json(const Instance& inst);
/// Parses and validates an instance: a raw space is normalized and
/// standardized, bases are mapped along and must pass is_lagrangian.
Instance instance_from_json(const Json& j);

Json certificate_to_json(const TransversalityCertificate& cert);

Json stress_report_to_json(const std::vector<StressRow>& rows);

struct VerifyReport {
    bool pass = false;
    std::vector<std::string> reasons;
};

/// Recomputes every certificate quantity from the raw bases in the two
/// files and checks them against the certificate's stated tolerances.
/// Nothing inside the certificate is trusted.
VerifyReport verify_certificate(const Json& certificate, const Json& instance);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace lagc
