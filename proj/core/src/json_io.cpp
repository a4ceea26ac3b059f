#include "lagc/json_io.hpp"

#include <cmath>
#include <fstream>

namespace lagc {

namespace {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace

Json matrix_to_json(const Matrix& M) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < M.cols(); ++j)
            row.push_back(M(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("matrix: expected nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    Matrix M(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols)
            throw ParseError("matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            const double v = j.at(i).at(c).get<double>();
            if (!std::isfinite(v))
                throw ParseError("matrix: non-finite entry");
            M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = v;
        }
    }
    return M;
}

Json lagrangian_to_json(const Lagrangian& L) {
    return Json{{"dim", L.space.dim}, {"basis", matrix_to_json(L.basis)}};
}

Json symmetric_operator_to_json(const SymmetricOperator& A) {
    return Json{{"n", A.size()}, {"A", matrix_to_json(A.A)}};
}

SymmetricOperator symmetric_operator_from_json(const Json& j) {
    Matrix A = matrix_from_json(j.at("A"));
    if (A.rows() != j.at("n").get<Eigen::Index>())
        throw ParseError("symmetric operator: size field disagrees with matrix");
    return make_symmetric_operator(A);
}

RawSymplecticForm raw_form_from_json(const Json& j) {
    RawSymplecticForm raw;
    raw.H = matrix_from_json(j.at("H"));
    const auto dim = j.at("dim").get<Eigen::Index>();
    if (raw.H.rows() != dim || raw.H.cols() != dim)
        throw ParseError("raw form: H shape disagrees with dim");
    if (j.contains("gram"))
        raw.gram = matrix_from_json(j.at("gram"));
    else
        raw.gram = Matrix::Identity(dim, dim);
    return raw;
}

Json instance_to_json(const Instance& inst) {
    Json j;
    j["space"] = Json{{"standard_n", inst.space.half_dim()}};
    Json lags = Json::array();
    for (const auto& L : inst.lagrangians)
        lags.push_back(lagrangian_to_json(L));
    j["lagrangians"] = std::move(lags);
    j["meta"] = Json{{"seed", inst.seed}, {"generator", inst.generator}};
    return j;
}

Instance instance_from_json(const Json& j) {
    Instance inst;
    const Json& sp = j.at("space");
    Matrix to_standard;
    if (sp.contains("standard_n")) {
        inst.space = standard_space(sp.at("standard_n").get<Eigen::Index>());
        to_standard = Matrix::Identity(inst.space.dim, inst.space.dim);
    } else if (sp.contains("raw")) {
        auto normalized = normalize(raw_form_from_json(sp.at("raw")));
        auto std_space = standardize(normalized);
        inst.space = std_space.space;
        to_standard = std_space.to_standard;
    } else {
        throw ParseError("instance: space must give standard_n or raw");
    }

    for (const auto& lj : j.at("lagrangians")) {
        if (lj.at("dim").get<Eigen::Index>() != inst.space.dim)
            throw ParseError("instance: Lagrangian dim disagrees with space");
        Matrix basis = to_standard * matrix_from_json(lj.at("basis"));
        inst.lagrangians.push_back(make_lagrangian(inst.space, basis));
    }
    if (j.contains("meta")) {
        inst.seed = j.at("meta").value("seed", std::uint64_t{0});
        inst.generator = j.at("meta").value("generator", std::string{});
    }
    return inst;
}

Json certificate_to_json(const TransversalityCertificate& cert) {
    Json j;
    j["tolerances"] = Json{{"tau_transversal", cert.tau_transversal},
                           {"lagrangian_residual", 1e-8}};
    j["seed"] = cert.seed;
    Json members = Json::array();
    for (const auto& m : cert.members) {
        members.push_back(Json{{"id", m.id},
                               {"sigma_min", m.sigma_min},
                               {"residuals", Json{{"orthonormality", m.orthonormality_residual},
                                                  {"isotropy", m.isotropy_residual}}}});
    }
    j["members"] = std::move(members);
    j["candidate"] = lagrangian_to_json(cert.candidate);
    j["trace"] = Json{{"iterations", cert.trace.iterations},
                      {"final_delta", cert.trace.final_delta}};
    return j;
}

Json stress_report_to_json(const std::vector<StressRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows)
        out.push_back(Json{{"m", r.m},
                           {"max_f", r.max_f},
                           {"min_gap", r.min_gap},
                           {"sigma_min_vertical", r.sigma_min_vertical}});
    return out;
}

VerifyReport verify_certificate(const Json& certificate, const Json& instance) {
    VerifyReport report;
    Instance inst;
    try {
        inst = instance_from_json(instance);
    } catch (const std::exception& e) {
        report.reasons.push_back(std::string("instance invalid: ") + e.what());
        return report;
    }

    Matrix cand_basis;
    double tau = 0.0, residual_tol = 0.0;
    try {
        cand_basis = matrix_from_json(certificate.at("candidate").at("basis"));
        tau = certificate.at("tolerances").at("tau_transversal").get<double>();
        residual_tol = certificate.at("tolerances").at("lagrangian_residual").get<double>();
    } catch (const std::exception& e) {
        report.reasons.push_back(std::string("certificate malformed: ") + e.what());
        return report;
    }

    if (cand_basis.rows() != inst.space.dim) {
        report.reasons.push_back("candidate dimension does not match instance space");
        return report;
    }

    auto check = is_lagrangian(inst.space, cand_basis, residual_tol);
    if (!check.ok)
        report.reasons.push_back(
            "candidate is not Lagrangian (orth " + std::to_string(check.orthonormality_residual) +
            ", isotropy " + std::to_string(check.isotropy_residual) + ")");

    const auto& members = certificate.at("members");
    if (members.size() != inst.lagrangians.size())
        report.reasons.push_back("member count does not match instance family size");

    Lagrangian cand{inst.space, cand_basis};
    for (std::size_t i = 0; i < inst.lagrangians.size() && i < members.size(); ++i) {
        const double sigma =
            is_complementary(inst.lagrangians[i], cand, tau).sigma_min;
        if (sigma < tau)
            report.reasons.push_back("member " + std::to_string(i) +
                                     ": recomputed sigma_min " + std::to_string(sigma) +
                                     " below tolerance");
        const double stated = members.at(i).at("sigma_min").get<double>();
        if (std::abs(stated - sigma) > 1e-6 * std::max(1.0, std::abs(stated)))
            report.reasons.push_back("member " + std::to_string(i) +
                                     ": stated sigma_min disagrees with recomputation");
    }

    report.pass = report.reasons.empty();
    return report;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open file for writing: " + path);
    out << j.dump(2) << '\n';
}

} // namespace lagc
