#include "lagc/json_io.hpp"
#include "lagc/rng.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

using namespace lagc;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitAlgorithm = 3;

std::uint64_t resolve_seed(std::uint64_t seed, bool seed_given) {
    if (seed_given)
        return seed;
    if (const char* env = std::getenv("LAGC_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

std::vector<Lagrangian> generate_family(const SymplecticSpace& space, std::size_t count,
                                        const std::string& mode, std::uint64_t seed,
                                        Eigen::Index isect_dim) {
    const Eigen::Index n = space.half_dim();
    GaussianSource seeder(seed);
    std::vector<Lagrangian> fam;
    fam.reserve(count);

    if (mode == "random") {
        for (std::size_t i = 0; i < count; ++i)
            fam.push_back(random_lagrangian(space, seeder.raw()));
        return fam;
    }

    auto chart = make_chart(horizontal_lagrangian(space), vertical_lagrangian(space));

    if (mode == "nested") {
        // consecutive members differ by a rank-one chart perturbation, so
        // neighbouring intersections have dimension n - 1
        Matrix A = random_symmetric(n, seeder.raw());
        for (std::size_t i = 0; i < count; ++i) {
            fam.push_back(chart_decode(chart, make_symmetric_operator(A)));
            GaussianSource g(seeder.raw());
            Vector u(n);
            for (Eigen::Index k = 0; k < n; ++k)
                u(k) = g.gaussian();
            u.normalize();
            A += (0.5 + g.uniform()) * u * u.transpose();
        }
        return fam;
    }

    if (mode == "intersecting") {
        if (isect_dim < 1 || isect_dim >= n)
            throw ContractError("intersecting mode needs 1 <= isect-dim <= n-1");
        // shared leading block forces every pairwise intersection to
        // contain a fixed isect_dim-dimensional subspace
        Matrix common = random_symmetric(isect_dim, seeder.raw());
        Matrix rot = random_unitary_rotation(n, seeder.raw());
        for (std::size_t i = 0; i < count; ++i) {
            Matrix A = Matrix::Zero(n, n);
            A.topLeftCorner(isect_dim, isect_dim) = common;
            A.bottomRightCorner(n - isect_dim, n - isect_dim) =
                random_symmetric(n - isect_dim, seeder.raw());
            Lagrangian L = chart_decode(chart, make_symmetric_operator(A));
            fam.push_back(make_lagrangian(space, Matrix(rot * L.basis)));
        }
        return fam;
    }

    throw ContractError("unknown generation mode: " + mode);
}

int cmd_gen(Eigen::Index n, std::size_t count, const std::string& mode,
            std::uint64_t seed, Eigen::Index isect_dim, const std::string& out_path) {
    Instance inst;
    inst.space = standard_space(n);
    inst.lagrangians = generate_family(inst.space, count, mode, seed, isect_dim);
    inst.seed = seed;
    inst.generator = mode;
    write_json_file(out_path, instance_to_json(inst));
    return kExitOk;
}

int cmd_complement(const std::string& instance_path, const EngineConfig& config,
                   const std::string& algo, std::size_t max_tries,
                   const std::string& out_path) {
    Instance inst;
    try {
        inst = instance_from_json(load_json_file(instance_path));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    if (inst.lagrangians.empty()) {
        std::cerr << "error: instance has no Lagrangians\n";
        return kExitInput;
    }

    TransversalityCertificate cert;
    try {
        if (algo == "refine")
            cert = family_complement(inst.lagrangians, config);
        else if (algo == "random")
            cert = randomized_complement(inst.lagrangians, config.seed, max_tries, config);
        else {
            std::cerr << "error: unknown algorithm '" << algo << "'\n";
            return kExitInput;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAlgorithm;
    }

    Json out = certificate_to_json(cert);
    std::cout << out.dump(2) << "\n";
    if (!out_path.empty())
        write_json_file(out_path, out);
    if (!cert.all_pass()) {
        std::cerr << "error: certificate margins below tolerance\n";
        return kExitAlgorithm;
    }
    return kExitOk;
}

int cmd_verify(const std::string& cert_path, const std::string& instance_path) {
    Json cert, inst;
    try {
        cert = load_json_file(cert_path);
        inst = load_json_file(instance_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    auto report = verify_certificate(cert, inst);
    if (report.pass) {
        std::cout << "PASS\n";
        return kExitOk;
    }
    std::cout << "FAIL\n";
    for (const auto& r : report.reasons)
        std::cout << "  " << r << "\n";
    return kExitFail;
}

int cmd_stress(const std::vector<std::size_t>& m_list, double epsilon) {
    auto rows = unbounded_stress(m_list, epsilon);
    std::cout << stress_report_to_json(rows).dump(2) << "\n";
    return kExitOk;
}

// Debug chart: the instance's first two Lagrangians define the chart.
int cmd_chart(const std::string& instance_path, bool decode, const std::string& op_path) {
    Instance inst;
    try {
        inst = instance_from_json(load_json_file(instance_path));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    if (inst.lagrangians.size() < 2) {
        std::cerr << "error: chart needs at least two Lagrangians (L0, L1)\n";
        return kExitInput;
    }
    try {
        auto chart = make_chart(inst.lagrangians[0], inst.lagrangians[1]);
        if (decode) {
            auto A = symmetric_operator_from_json(load_json_file(op_path));
            std::cout << lagrangian_to_json(chart_decode(chart, A)).dump(2) << "\n";
        } else {
            if (inst.lagrangians.size() < 3) {
                std::cerr << "error: encode needs a third Lagrangian\n";
                return kExitInput;
            }
            auto A = chart_encode(chart, inst.lagrangians[2]);
            std::cout << symmetric_operator_to_json(A).dump(2) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAlgorithm;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Common complementary Lagrangian subspaces with machine-checkable "
                 "certificates"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate an instance file");
    Eigen::Index gen_dim = 2;
    std::size_t gen_count = 1;
    std::string gen_mode = "random";
    std::uint64_t gen_seed = 0;
    bool gen_seed_given = false;
    Eigen::Index gen_isect = 1;
    std::string gen_out;
    gen->add_option("--dim", gen_dim, "Half-dimension n (space is 2n-dimensional)")
        ->check(CLI::PositiveNumber);
    gen->add_option("--count", gen_count, "Family size")->check(CLI::PositiveNumber);
    gen->add_option("--mode", gen_mode, "random|nested|intersecting");
    gen->add_option("--seed", gen_seed, "RNG seed")->each([&](const std::string&) {
        gen_seed_given = true;
    });
    gen->add_option("--isect-dim", gen_isect, "Shared intersection dimension");
    gen->add_option("--out", gen_out, "Output path")->required();

    // complement
    auto* comp = app.add_subcommand("complement", "Compute a common complement");
    std::string comp_instance, comp_algo = "refine", comp_out;
    EngineConfig config;
    std::size_t comp_tries = 200;
    bool comp_seed_given = false;
    comp->add_option("instance", comp_instance, "Instance file")->required();
    comp->add_option("--eps", config.epsilon, "Spectral shift epsilon (0 = auto)");
    comp->add_option("--tol", config.tau_transversal, "Transversality tolerance");
    comp->add_option("--seed", config.seed, "RNG seed")->each([&](const std::string&) {
        comp_seed_given = true;
    });
    comp->add_option("--algo", comp_algo, "refine|random");
    comp->add_option("--max-tries", comp_tries, "Sampler try budget");
    comp->add_option("--out", comp_out, "Also write the certificate to a file");

    // verify
    auto* ver = app.add_subcommand("verify", "Re-check a certificate from files alone");
    std::string ver_cert, ver_instance;
    ver->add_option("certificate", ver_cert, "Certificate file")->required();
    ver->add_option("instance", ver_instance, "Instance file")->required();

    // opmodel-stress
    auto* stress = app.add_subcommand("opmodel-stress", "Growing-multiplier harness");
    std::vector<std::size_t> stress_m = {8, 16, 32, 64, 128, 256, 512};
    double stress_eps = 1.0;
    stress->add_option("--m", stress_m, "Atom counts");
    stress->add_option("--eps", stress_eps, "Band width epsilon");

    // chart
    auto* chart = app.add_subcommand("chart", "Debug chart encode/decode");
    std::string chart_instance, chart_op;
    bool chart_decode_flag = false;
    chart->add_option("instance", chart_instance, "Instance (L0, L1[, L])")->required();
    chart->add_flag("--decode", chart_decode_flag, "Decode instead of encode");
    chart->add_option("--op", chart_op, "Symmetric operator file (decode)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(gen_dim, gen_count, gen_mode,
                           resolve_seed(gen_seed, gen_seed_given), gen_isect, gen_out);
        if (comp->parsed()) {
            config.seed = resolve_seed(config.seed, comp_seed_given);
            return cmd_complement(comp_instance, config, comp_algo, comp_tries, comp_out);
        }
        if (ver->parsed())
            return cmd_verify(ver_cert, ver_instance);
        if (stress->parsed())
            return cmd_stress(stress_m, stress_eps);
        if (chart->parsed())
            return cmd_chart(chart_instance, chart_decode_flag, chart_op);
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAlgorithm;
    }
    return kExitOk;
}
