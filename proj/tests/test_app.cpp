#include <thread>

#include <doctest.h>
#include <httplib.h>
#include <json.hpp>

#include "dentage/errors.hpp"
#include "dentage/pipeline.hpp"
#include "dentage/service.hpp"

using namespace dentage;

namespace {

const std::string kFixtures = std::string(DENTAGE_DATA_DIR) + "/fixtures/patients.json";

const PatientStore& fixtures() {
    static const PatientStore store = load_patients(kFixtures);
    return store;
}

}  // namespace

TEST_CASE("build_report surfaces unknown patients as a domain error") {
    CHECK_THROWS_WITH_AS(
        build_report(fixtures(), default_coefficients(), ReportRequest{"nope", Language::en,
                                                                       ReportKind::detailed}),
        doctest::Contains("UNKNOWN_PATIENT"), Error);
    try {
        build_report(fixtures(), default_coefficients(),
                     ReportRequest{"nope", Language::en, ReportKind::detailed});
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::domain);
        CHECK(e.qualified_code() == "app/UNKNOWN_PATIENT");
    }
}

TEST_CASE("text and structured renderings carry the image references") {
    const ReportBundle bundle = build_report(fixtures(), default_coefficients(),
                                             ReportRequest{"2324", Language::en,
                                                           ReportKind::detailed});
    const std::string text = render_report_text(bundle);
    CHECK(text.find(bundle.report.introduction) == 0);
    CHECK(text.find(bundle.report.disclaimer) != std::string::npos);

    const nlohmann::json doc = nlohmann::json::parse(render_report_json(bundle));
    CHECK(doc["patient_id"] == "2324");
    CHECK(doc["opg_path"] == "opg/2324.png");
    CHECK(doc["heatmap_path"] == "heatmaps/2324.png");
    CHECK(doc["introduction"] == bundle.report.introduction);
    CHECK(doc["body"] == bundle.report.body);
    CHECK(doc["sentences"].is_array());
    CHECK(doc["sentences"].size() == bundle.report.sentences.size());
    for (const auto& s : doc["sentences"]) {
        CHECK(s.contains("text"));
        CHECK(s.contains("rule_id"));
        CHECK(s.contains("kind"));
        CHECK(s.contains("paragraph"));
    }

    const ReportBundle no_heatmap = build_report(
        fixtures(), default_coefficients(), ReportRequest{"2102", Language::en, ReportKind::brief});
    const nlohmann::json doc2 = nlohmann::json::parse(render_report_json(no_heatmap));
    CHECK(doc2["heatmap_path"].is_null());
}

TEST_CASE("service: report endpoint, status codes, and CLI-equality of bytes") {
    ReportService service(fixtures(), default_coefficients());
    const int port = service.bind_any_port("127.0.0.1");
    std::thread runner([&] { service.serve_after_bind(); });
    REQUIRE(service.wait_until_ready());

    httplib::Client client("127.0.0.1", port);

    SUBCASE("success returns the structured document, identical to the library rendering") {
        for (const char* id : {"2324", "2102", "3407", "3514"}) {
            for (const char* lang : {"en", "es"}) {
                for (const char* detail : {"short", "detailed"}) {
                    const auto res = client.Get("/patients/" + std::string(id) +
                                                "/report?lang=" + lang + "&detail=" + detail);
                    REQUIRE(res);
                    CHECK(res->status == 200);
                    const ReportBundle bundle = build_report(
                        fixtures(), default_coefficients(),
                        ReportRequest{id, language_from_string(lang),
                                      report_kind_from_string(detail)});
                    CHECK(res->body == render_report_json(bundle));
                }
            }
        }
    }

    SUBCASE("defaults are en + detailed") {
        const auto res = client.Get("/patients/2324/report");
        REQUIRE(res);
        CHECK(res->status == 200);
        const nlohmann::json doc = nlohmann::json::parse(res->body);
        CHECK(doc["language"] == "en");
        CHECK(doc["detail"] == "detailed");
    }

    SUBCASE("unknown id is 404 with the code") {
        const auto res = client.Get("/patients/unknown/report");
        REQUIRE(res);
        CHECK(res->status == 404);
        CHECK(nlohmann::json::parse(res->body)["error"]["code"] == "UNKNOWN_PATIENT");
    }

    SUBCASE("malformed parameters are 400") {
        const auto bogus_detail = client.Get("/patients/2324/report?detail=bogus");
        REQUIRE(bogus_detail);
        CHECK(bogus_detail->status == 400);
        const auto bogus_lang = client.Get("/patients/2324/report?lang=fr");
        REQUIRE(bogus_lang);
        CHECK(bogus_lang->status == 400);
    }

    SUBCASE("no mutating routes exist") {
        const auto post = client.Post("/patients/2324/report", "{}", "application/json");
        REQUIRE(post);
        CHECK(post->status == 404);
        const auto put = client.Put("/patients/2324", "{}", "application/json");
        REQUIRE(put);
        CHECK(put->status == 404);
    }

    service.stop();
    runner.join();
}
