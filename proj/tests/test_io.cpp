#include <doctest.h>

#include <sstream>

#include "gal/experiment.hpp"
#include "gal/io.hpp"

using gal::Complex;
using gal::InstanceFile;

TEST_CASE("complex values serialize as {re, im} objects") {
    const nlohmann::json node = gal::complex_to_json(Complex{1.5, -2.25});
    CHECK(node["re"] == 1.5);
    CHECK(node["im"] == -2.25);
    CHECK(gal::complex_from_json(node) == Complex{1.5, -2.25});
    CHECK_THROWS_AS(gal::complex_from_json(nlohmann::json{{"re", 1.0}}), gal::Error);
}

TEST_CASE("format_double is fixed-width scientific with a point separator") {
    CHECK(gal::format_double(0.25) == "2.500000000000e-01");
    CHECK(gal::format_double(-1.0) == "-1.000000000000e+00");
    CHECK(gal::format_double(0.0) == "0.000000000000e+00");
    CHECK(gal::format_double(std::nan("")) == "nan");
}

TEST_CASE("instance files round-trip losslessly") {
    const auto marked_form = nlohmann::json::parse(R"({
        "n": 8,
        "marked": [1, 5],
        "init": { "kind": "noisy_uniform", "noise_sigma": 0.25, "seed": 11 },
        "sim": { "method": "wht", "norm_check_every": 16 },
        "tolerances": { "norm": 1e-8, "algebra": 1e-13 }
    })");
    const InstanceFile a = gal::instance_from_json(marked_form);
    CHECK(a.n == 8);
    CHECK(a.marked == std::vector<std::size_t>{1, 5});
    CHECK(a.init.kind == gal::DistributionKind::NoisyUniform);
    CHECK(a.init.noise_sigma == 0.25);
    CHECK(a.init.seed == 11);
    CHECK(a.has_sim);
    CHECK(a.sim.diffusion_method == gal::DiffusionMethod::WalshHadamard);
    CHECK(a.sim.norm_check_every == 16);
    CHECK(a.has_tolerances);
    CHECK(a.tolerances.norm == 1e-8);

    const nlohmann::json emitted = gal::instance_to_json(a);
    const InstanceFile b = gal::instance_from_json(emitted);
    CHECK(gal::instance_to_json(b) == emitted);  // canonical form is idempotent
    CHECK(b.marked == a.marked);

    // the r-form keeps its shape and defaults to the last r indices
    const auto r_form = nlohmann::json::parse(
            R"({ "n": 16, "r": 3, "init": { "kind": "uniform" } })");
    const InstanceFile c = gal::instance_from_json(r_form);
    CHECK(c.marked == std::vector<std::size_t>{13, 14, 15});
    CHECK(c.marked_by_count);
    const nlohmann::json c_emitted = gal::instance_to_json(c);
    CHECK(c_emitted.contains("r"));
    CHECK_FALSE(c_emitted.contains("marked"));
    CHECK(c_emitted["r"] == 3);
    CHECK(gal::instance_to_json(gal::instance_from_json(c_emitted)) == c_emitted);

    const gal::SearchInstance inst = gal::make_instance(c);
    CHECK(inst.n() == 16);
    CHECK(inst.r() == 3);
}

TEST_CASE("instance parsing reports precise errors") {
    CHECK_THROWS_AS(gal::instance_from_json(nlohmann::json::parse(R"({"n": 4})")), gal::Error);
    CHECK_THROWS_AS(gal::instance_from_json(nlohmann::json::parse(
                            R"({"n": 4, "marked": [0], "r": 1, "init": {"kind": "uniform"}})")),
                    gal::Error);
    CHECK_THROWS_AS(gal::instance_from_json(nlohmann::json::parse(
                            R"({"n": 4, "marked": [0], "init": {"kind": "banana"}})")),
                    gal::Error);
    CHECK_THROWS_AS(gal::instance_from_json(nlohmann::json::parse(
                            R"({"n": 4, "marked": [0], "init": {"kind": "circular", "branch": "up"}})")),
                    gal::Error);
    CHECK_THROWS_AS(gal::instance_from_json(nlohmann::json::parse(
                            R"({"n": 4, "marked": [0], "init": {"kind": "noisy_uniform"}})")),
                    gal::Error);
}

TEST_CASE("explicit amplitudes round-trip through the instance file") {
    const auto raw = nlohmann::json::parse(R"({
        "n": 2, "marked": [1],
        "init": { "kind": "explicit",
                  "amplitudes": [ {"re": 0.6, "im": 0.0}, {"re": 0.0, "im": 0.8} ] }
    })");
    const InstanceFile file = gal::instance_from_json(raw);
    REQUIRE(file.init.amplitudes.size() == 2);
    CHECK(file.init.amplitudes[1] == Complex{0.0, 0.8});
    const InstanceFile again = gal::instance_from_json(gal::instance_to_json(file));
    CHECK(again.init.amplitudes == file.init.amplitudes);
}

TEST_CASE("trajectory CSV carries the schema line and fixed columns") {
    std::vector<gal::StepRow> rows(1);
    rows[0].t = 3;
    rows[0].p_analytic = 0.25;
    rows[0].k_analytic = Complex{0.5, -0.5};

    std::ostringstream out;
    gal::write_trajectory_csv(out, rows);
    const std::string expected =
            "# gal.run.v1\n"
            "t,p_analytic,p_sim,k_re_analytic,k_im_analytic,l_re_analytic,l_im_analytic,"
            "k_re_sim,k_im_sim,l_re_sim,l_im_sim,norm_drift\n"
            "3,2.500000000000e-01,nan,5.000000000000e-01,-5.000000000000e-01,nan,nan,"
            "nan,nan,nan,nan,nan\n";
    CHECK(out.str() == expected);
}

TEST_CASE("sweep CSV header is pinned") {
    std::ostringstream out;
    gal::write_sweep_csv(out, {});
    CHECK(out.str() ==
          "# gal.sweep.v1\n"
          "noise_sigma,seeds,sigma_l_sq_mean,sigma_l_sq_std,p_max_formula_mean,"
          "p_max_formula_std,p_best_pred_mean,p_best_pred_std,p_best_sim_mean,"
          "p_best_sim_std,t_star_mean\n");
}

TEST_CASE("summary JSON exposes the spectral and profile fields") {
    InstanceFile file;
    file.n = 4;
    file.marked = {3};
    file.init = gal::DistributionSpec::uniform();
    const gal::RunOutput run = gal::run_predict(file);
    const nlohmann::json node = gal::summary_to_json(run.summary);
    CHECK(node["schema"] == "gal.summary.v1");
    CHECK(node["regime"] == "LinearReal");
    CHECK(node["omega"].get<double>() == doctest::Approx(1.0471975511965979));
    CHECK(node["p_max"].get<double>() == doctest::Approx(1.0));
    CHECK(node["phi"]["re"].get<double>() == doctest::Approx(0.5235987755982988));
    CHECK(node["plan"]["t_int"][0] == 1);
    CHECK(node["generator"] == "mt19937_64/box-muller");
    CHECK(node["two_time"]["t2"].get<int>() - node["two_time"]["t1"].get<int>() == 1);
}

TEST_CASE("sweep spec parsing") {
    const auto spec = gal::sweep_spec_from_json(nlohmann::json::parse(
            R"({"n": 64, "r": 2, "noise_levels": [0.1], "seeds_per_level": 4, "base_seed": 3})"));
    CHECK(spec.n == 64);
    CHECK(spec.r == 2);
    CHECK(spec.seeds_per_level == 4);
    CHECK_THROWS_AS(gal::sweep_spec_from_json(nlohmann::json::parse(
                            R"({"n": 64, "r": 2, "noise_levels": [], "seeds_per_level": 4})")),
                    gal::Error);
}
