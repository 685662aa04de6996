// Serialization, the points reader, the result cache, and report rendering.
// Golden strings here are the format contract: if one of these assertions
// breaks, existing files on disk stop being readable, so change them only
// with a version bump.

#include <catch2/catch_amalgamated.hpp>

#include "qstable/cache.hpp"
#include "qstable/family.hpp"
#include "qstable/io.hpp"
#include "qstable/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using qstab::Face;
using qstab::Json;
using qstab::Rational;

namespace {

// Fresh directory under the system temp root, removed by the caller.
std::filesystem::path scratch_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("qstable_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("complex JSON round trip") {
    const auto complex = qstab::cyclic_stable(7, 2);
    const Json j = qstab::complex_to_json(complex);
    CHECK(j.at("version") == 1);
    CHECK(j.at("universe") == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
    CHECK(qstab::complex_from_json(j) == complex);

    // Readers accept files written before the version field existed.
    Json bare;
    bare["universe"] = {1, 2, 3};
    bare["maximal_faces"] = {{1, 2}, {3}};
    const auto parsed = qstab::complex_from_json(bare);
    CHECK(parsed.maximal_faces() == std::vector<Face>{Face{1, 2}, Face{3}});
}

TEST_CASE("complex JSON rejects malformed input") {
    CHECK_THROWS_AS(qstab::complex_from_json(Json::array()), std::runtime_error);
    Json missing;
    missing["universe"] = {1, 2};
    CHECK_THROWS_AS(qstab::complex_from_json(missing), std::runtime_error);
    Json outside;
    outside["universe"] = {1, 2};
    outside["maximal_faces"] = {{1, 5}};
    CHECK_THROWS_AS(qstab::complex_from_json(outside), std::invalid_argument);
}

TEST_CASE("complex files read back with contextual errors") {
    const auto dir = scratch_dir("complex_files");
    const auto good = dir / "good.json";
    qstab::write_text_file(good.string(),
                           qstab::complex_to_json(qstab::linear_stable(6, 2)).dump());
    CHECK(qstab::read_complex_file(good.string()) == qstab::linear_stable(6, 2));

    CHECK_THROWS_AS(qstab::read_complex_file((dir / "absent.json").string()),
                    std::runtime_error);

    const auto broken = dir / "broken.json";
    qstab::write_text_file(broken.string(), "{not json");
    using Catch::Matchers::ContainsSubstring;
    CHECK_THROWS_WITH(qstab::read_complex_file(broken.string()),
                      ContainsSubstring("broken.json"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("points reader accepts all three number forms") {
    std::istringstream in(
        "# demo configuration\n"
        "0 0.5\n"
        "\n"
        "1/3 -2\n"
        "4 5   # trailing note\n");
    const auto cfg = qstab::parse_points(in);
    CHECK(cfg.dimension == 2);
    CHECK(cfg.size() == 3);
    CHECK(cfg.point(1) == std::vector<Rational>{Rational(0), Rational(1, 2)});
    CHECK(cfg.point(2) == std::vector<Rational>{Rational(1, 3), Rational(-2)});
    CHECK(cfg.point(3) == std::vector<Rational>{Rational(4), Rational(5)});
}

TEST_CASE("points reader reports the offending line") {
    using Catch::Matchers::ContainsSubstring;
    {
        std::istringstream in("1 2\n3 4\n5 banana\n");
        CHECK_THROWS_WITH(qstab::parse_points(in), ContainsSubstring("line 3"));
    }
    {
        std::istringstream in("1 2\n\n# comment\n3 4 5\n");
        CHECK_THROWS_WITH(qstab::parse_points(in),
                          ContainsSubstring("line 4") && ContainsSubstring("expected 2"));
    }
    {
        std::istringstream in("# nothing but comments\n\n");
        CHECK_THROWS_WITH(qstab::parse_points(in), ContainsSubstring("no points"));
    }
}

TEST_CASE("certificate JSON carries exact rationals as strings") {
    qstab::PartitionCertificate cert;
    cert.parts = {{1, 2}, {3}};
    cert.weights = {{Rational(1, 2), Rational(1, 2)}, {Rational(1)}};
    cert.common_point_value = {Rational(1)};
    const Json j = qstab::certificate_to_json(cert);
    CHECK(j.at("version") == 1);
    CHECK(j.at("type") == "partition_certificate");
    CHECK(j.at("parts") == Json({{1, 2}, {3}}));
    CHECK(j.at("weights")[0] == Json({"1/2", "1/2"}));
    CHECK(j.at("weights")[1] == Json({"1"}));
    CHECK(j.at("common_point") == Json({"1"}));
}

TEST_CASE("plan report JSON shape") {
    const Json j = qstab::plan_to_json(qstab::plan(2, 1));
    CHECK(j.at("version") == 1);
    CHECK(j.at("type") == "plan_report");
    CHECK(j.at("route") == "prime_power_q");
    CHECK(j.at("q") == 2);
    CHECK(j.at("d") == 1);
    CHECK(j.at("p") == 29);
    CHECK(j.at("a") == 13);
    CHECK(j.at("c") == 4);
    CHECK(j.at("n") == 4);
    CHECK(j.at("bound_ok") == true);
}

TEST_CASE("homology JSON lists one group per dimension") {
    // Boundary of a triangle: a circle, free rank 1 in dimension 1.
    const auto circle = qstab::make_complex({1, 2, 3}, {Face{1, 2}, Face{1, 3}, Face{2, 3}});
    const Json j = qstab::homology_to_json(qstab::integral_homology(circle));
    CHECK(j.at("version") == 1);
    CHECK(j.at("reduced") == true);
    CHECK(j.at("top_dim") == 1);
    CHECK(j.at("empty_complex") == false);
    CHECK(j.at("groups").size() == 2);
    CHECK(j.at("groups")[0].at("free_rank") == 0);
    CHECK(j.at("groups")[1].at("free_rank") == 1);
    CHECK(j.at("groups")[1].at("torsion") == Json::array());
    CHECK(j.at("face_counts") == std::vector<int>{3, 3});

    const Json b = qstab::betti_to_json(qstab::betti_rational(circle));
    CHECK(b.at("coefficients") == "Q");
    CHECK(b.at("betti") == std::vector<long long>{0, 1});
}

TEST_CASE("content hash matches the published test vectors") {
    CHECK(qstab::content_hash("") == "cbf29ce484222325");
    CHECK(qstab::content_hash("abc") == "e71fa2190541574b");
    CHECK(qstab::content_hash("abc") != qstab::content_hash("abd"));
}

TEST_CASE("cache stores and retrieves payloads") {
    const auto dir = scratch_dir("cache_roundtrip");
    const qstab::ResultCache cache(dir.string());
    REQUIRE(cache.enabled());
    CHECK_FALSE(cache.lookup("deadbeefdeadbeef").has_value());

    cache.store("deadbeefdeadbeef", "{\"betti\":[0,1]}");
    const auto hit = cache.lookup("deadbeefdeadbeef");
    REQUIRE(hit.has_value());
    CHECK(*hit == "{\"betti\":[0,1]}");

    // The entry on disk is a self-describing envelope.
    const Json envelope =
        Json::parse(qstab::read_text_file((dir / "deadbeefdeadbeef.json").string()));
    CHECK(envelope.at("version") == 1);
    CHECK(envelope.at("key") == "deadbeefdeadbeef");
    CHECK(envelope.at("checksum") == qstab::content_hash("{\"betti\":[0,1]}"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache treats damage as a miss, never an error") {
    const auto dir = scratch_dir("cache_damage");
    const qstab::ResultCache cache(dir.string());

    qstab::write_text_file((dir / "0000000000000001.json").string(), "not json at all");
    CHECK_FALSE(cache.lookup("0000000000000001").has_value());

    // Valid envelope, payload silently edited: checksum no longer matches.
    cache.store("0000000000000002", "original");
    auto envelope = Json::parse(qstab::read_text_file((dir / "0000000000000002.json").string()));
    envelope["payload"] = "tampered";
    qstab::write_text_file((dir / "0000000000000002.json").string(), envelope.dump());
    CHECK_FALSE(cache.lookup("0000000000000002").has_value());

    // Envelope filed under a key it does not claim to be.
    cache.store("0000000000000003", "payload");
    std::filesystem::rename(dir / "0000000000000003.json", dir / "0000000000000004.json");
    CHECK_FALSE(cache.lookup("0000000000000004").has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache can be disabled or unwritable without failing the run") {
    const qstab::ResultCache disabled("");
    CHECK_FALSE(disabled.enabled());
    CHECK_FALSE(disabled.lookup("anything").has_value());
    disabled.store("anything", "payload");  // must be a silent no-op

    const qstab::ResultCache broken("/proc/definitely/not/writable");
    CHECK(broken.enabled());
    broken.store("key", "payload");  // warning on stderr, no exception
    CHECK_FALSE(broken.lookup("key").has_value());
}

TEST_CASE("report renders to CSV with escaping") {
    qstab::Report report;
    report.columns = {"claim", "value", "expected", "pass", "witness_ref"};
    report.add_row({"5.1", "2", "2", "true", ""}, true);
    report.add_row({"5.1", "1,2", "say \"hi\"", "false", "betti=[0|1]"}, false);

    CHECK(qstab::report_to_csv(report) ==
          "claim,value,expected,pass,witness_ref\n"
          "5.1,2,2,true,\n"
          "5.1,\"1,2\",\"say \"\"hi\"\"\",false,betti=[0|1]\n");
    CHECK_FALSE(report.all_pass());
    CHECK(report.fail_count() == 1);

    const Json j = qstab::report_to_json(report);
    CHECK(j.at("version") == 1);
    CHECK(j.at("all_pass") == false);
    CHECK(j.at("rows").size() == 2);
    CHECK(j.at("rows")[0].at("claim") == "5.1");
    CHECK(j.at("rows")[1].at("value") == "1,2");
}
