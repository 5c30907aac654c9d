#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "curlicue/analysis.hpp"
#include "curlicue/errors.hpp"
#include "curlicue/interferometer.hpp"
#include "support/fixtures.hpp"

using namespace curlicue;
using namespace curlicue::testing;

TEST_CASE("path_length") {
    const InterferometerConfig cfg{0.0, 523426.8, SumSpec(3, 2)};
    CHECK(path_length(cfg, 1) == 0.0);
    CHECK(path_length(cfg, 3) == doctest::Approx(2093707.2).epsilon(1e-15));
    CHECK(path_length({100.0, 1.0, SumSpec(3, 2)}, 2) == 101.0);
    CHECK(path_length({0.0, 2.0, SumSpec(4, 3)}, 4) == 54.0);
    CHECK_THROWS_AS(path_length(cfg, 0), IndexOutOfRange);
    CHECK_THROWS_AS(path_length(cfg, 4), IndexOutOfRange);
}

TEST_CASE("config and window validation") {
    CHECK_THROWS_AS(InterferometerConfig({0.0, 0.0, SumSpec(3, 2)}).validate(), InvalidArgument);
    CHECK_THROWS_AS(InterferometerConfig({-1.0, 1.0, SumSpec(3, 2)}).validate(), InvalidArgument);
    CHECK_THROWS_AS(SpectralWindow({400.0, 400.0, 2048}).validate(), InvalidArgument);
    CHECK_THROWS_AS(SpectralWindow({0.0, 400.0, 2048}).validate(), InvalidArgument);
    CHECK_THROWS_AS(SpectralWindow({400.0, 800.0, 1}).validate(), InvalidArgument);
}

TEST_CASE("min_pixels") {
    CHECK(min_pixels(demo_config(), demo_window()) == 381);
    CHECK(min_pixels(demo_config(), demo_window()) <= 2048);
    CHECK(min_pixels({0.0, 1600.0, SumSpec(2, 2)}, {400.0, 800.0, 2048}) == 64);

    // The returned count satisfies the guard and one fewer does not.
    const InterferometerConfig cfg{0.0, 58806.25, SumSpec(3, 2)};
    SpectralWindow window{400.0, 800.0, 2048};
    window.pixel_count = min_pixels(cfg, window);
    CHECK_NOTHROW(simulate(cfg, window, std::nullopt));
    window.pixel_count -= 1;
    CHECK_THROWS_AS(simulate(cfg, window, std::nullopt), UnderSampled);
    CHECK_NOTHROW(simulate(cfg, window, std::nullopt, {.allow_undersampled = true}));
}

TEST_CASE("UnderSampled reports the required pixel count") {
    try {
        simulate(demo_config(), {kDemoLambdaMinNm, kDemoLambdaMaxNm, 100}, std::nullopt);
        FAIL("expected UnderSampled");
    } catch (const UnderSampled& e) {
        CHECK(e.required_pixels() == 381);
    }
}

TEST_CASE("simulate: grid layout") {
    const auto& ig = demo_interferogram();
    REQUIRE(ig.samples.size() == 2048);
    const double step = (kDemoLambdaMaxNm - kDemoLambdaMinNm) / 2048;
    CHECK(ig.samples.front().lambda_nm == doctest::Approx(kDemoLambdaMinNm + 0.5 * step));
    CHECK(ig.samples.back().lambda_nm == doctest::Approx(kDemoLambdaMaxNm - 0.5 * step));
    for (std::size_t j = 1; j < ig.samples.size(); ++j) {
        CHECK(ig.samples[j - 1].lambda_nm < ig.samples[j].lambda_nm);
    }
    CHECK_NOTHROW(ig.validate());
}

TEST_CASE("simulate: the sample nearest 462.8 nm sits on the q = 1131 maximum") {
    const auto& ig = demo_interferogram();
    const auto nearest = std::min_element(ig.samples.begin(), ig.samples.end(),
                                          [](const Sample& a, const Sample& b) {
                                              return std::fabs(a.lambda_nm - 462.8) <
                                                     std::fabs(b.lambda_nm - 462.8);
                                          });
    const double step = (kDemoLambdaMaxNm - kDemoLambdaMinNm) / 2048;
    const double xi_step = kDemoDisplacementNm * step / (462.8 * 462.8);
    CHECK(nearest->intensity >= intensity(SumSpec(3, 2), 1131.0 + xi_step));
    CHECK(nearest->intensity > 0.99);
}

TEST_CASE("property: noiseless samples equal the sum intensity") {
    const auto& ig = demo_interferogram();
    for (const auto& s : ig.samples) {
        CHECK(std::fabs(s.intensity - intensity(SumSpec(3, 2), kDemoDisplacementNm / s.lambda_nm)) <=
              1e-12);
    }
}

TEST_CASE("property: reference arm length drops out") {
    for (double x : {1600.0, 523426.8, 77777.7}) {
        const SpectralWindow window{400.0, 800.0, 4096};
        const auto a = simulate({0.0, x, SumSpec(3, 2)}, window, std::nullopt,
                                {.allow_undersampled = true});
        const auto b = simulate({1e6, x, SumSpec(3, 2)}, window, std::nullopt,
                                {.allow_undersampled = true});
        CHECK(a.samples == b.samples);
    }
}

TEST_CASE("property: deterministic for any thread count") {
    const InterferometerConfig cfg{250.0, 523426.8, SumSpec(4, 2)};
    const SpectralWindow window{460.0, 470.0, 40000};
    const NoiseModel noise{10.0, {0.4, 0.3, 0.2, 0.1}, 0.02, 1234};
    const auto serial = simulate(cfg, window, noise, {.threads = 1});
    for (unsigned threads : {2u, 3u, 8u, 0u}) {
        CHECK(simulate(cfg, window, noise, {.threads = threads}) == serial);
    }
    CHECK(simulate(cfg, window, noise, {.threads = 1}) == serial);

    NoiseModel other = noise;
    other.seed = 1235;
    CHECK(simulate(cfg, window, other) != serial);
}

TEST_CASE("noise model validation") {
    CHECK_THROWS_AS(NoiseModel({-1.0, {}, 0.0, 0}).validate(3), InvalidArgument);
    CHECK_THROWS_AS(NoiseModel({0.0, {}, -0.1, 0}).validate(3), InvalidArgument);
    CHECK_THROWS_AS(NoiseModel({0.0, {0.5, 0.5}, 0.0, 0}).validate(3), InvalidArgument);
    CHECK_THROWS_AS(NoiseModel({0.0, {0.5, 0.4, 0.2}, 0.0, 0}).validate(3), InvalidArgument);
    CHECK_THROWS_AS(NoiseModel({0.0, {1.2, -0.1, -0.1}, 0.0, 0}).validate(3), InvalidArgument);
    CHECK_NOTHROW(NoiseModel({0.0, {0.5, 0.25, 0.25}, 0.0, 0}).validate(3));
}

TEST_CASE("single weighted arm gives a flat unit spectrum") {
    const NoiseModel one_arm{0.0, {1.0, 0.0, 0.0}, 0.0, 9};
    const auto ig = simulate(demo_config(), demo_window(), one_arm);
    for (const auto& s : ig.samples) CHECK(s.intensity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ig.provenance.arm_weights == one_arm.arm_weights);
    CHECK(ig.provenance.seed == 9);
}

TEST_CASE("detector noise stays within the clipped range") {
    const NoiseModel noisy{0.0, {}, 0.05, 3};
    const auto ig = simulate(demo_config(), demo_window(), noisy);
    double max_dev = 0.0;
    for (const auto& s : ig.samples) {
        CHECK(s.intensity >= 0.0);
        CHECK(s.intensity <= 1.0 + 5.0 * 0.05);
        max_dev = std::max(max_dev, std::fabs(s.intensity - intensity(SumSpec(3, 2),
                                                                     kDemoDisplacementNm / s.lambda_nm)));
    }
    CHECK(max_dev > 0.05);
    CHECK_NOTHROW(ig.validate());
}

TEST_CASE("mirror placement error of 10 nm keeps factor peaks") {
    const NoiseModel stage{10.0, {}, 0.0, 0};
    const auto ig = simulate(demo_config(), demo_window(), stage);
    const auto peaks = detect_peaks(ig);
    REQUIRE(peaks.size() == 7);
    for (const auto& p : peaks) CHECK(p.intensity_peak > 0.9);
}

TEST_CASE("Interferogram::validate") {
    Interferogram ig;
    ig.displacement_unit_nm = 1000.0;
    ig.samples = {{400.0, 0.5}};
    CHECK_THROWS_AS(ig.validate(), InvalidArgument);
    ig.samples = {{400.0, 0.5}, {400.0, 0.5}};
    CHECK_THROWS_AS(ig.validate(), InvalidArgument);
    ig.samples = {{400.0, 0.5}, {401.0, 1.5}};
    CHECK_THROWS_AS(ig.validate(), InvalidArgument);
    ig.provenance.detector_sigma = 0.1;
    CHECK_NOTHROW(ig.validate());
    ig.samples = {{400.0, -0.01}, {401.0, 0.5}};
    CHECK_THROWS_AS(ig.validate(), InvalidArgument);
}
