#include <doctest.h>

#include "dentage/errors.hpp"
#include "dentage/store.hpp"

using namespace dentage;

namespace {
const std::string kFixtures = std::string(DENTAGE_DATA_DIR) + "/fixtures/patients.json";
const std::string kDefaults = std::string(DENTAGE_DATA_DIR) + "/default_coefficients.json";
}  // namespace

TEST_CASE("load_patients: the shipped fixture file holds four validation cases") {
    const PatientStore store = load_patients(kFixtures);
    CHECK(store.records.size() == 4);
    CHECK(store.find("2324") != nullptr);
    CHECK(store.find("2102") != nullptr);
    CHECK(store.find("3407") != nullptr);
    CHECK(store.find("3514") != nullptr);
    CHECK(store.find("9999") == nullptr);  // a miss, not an error
    CHECK(store.find("2102")->heatmap_path == std::nullopt);
}

TEST_CASE("load_patients: duplicate ids are rejected by name") {
    const std::string text = R"([
      {"id": "a", "age_days": 2000, "sex": "F", "opg_path": "x.png", "teeth": {}, "predictions": {}},
      {"id": "a", "age_days": 2100, "sex": "M", "opg_path": "y.png", "teeth": {}, "predictions": {}}
    ])";
    CHECK_THROWS_WITH_AS(load_patients_from_string(text), doctest::Contains("DUPLICATE_ID"),
                         Error);
    CHECK_THROWS_WITH_AS(load_patients_from_string(text), doctest::Contains("'a'"), Error);
}

TEST_CASE("load_patients: an empty list is an empty store") {
    CHECK(load_patients_from_string("[]").records.empty());
}

TEST_CASE("load_patients: parse and schema failures carry position or field context") {
    CHECK_THROWS_WITH_AS(load_patients_from_string("[{"), doctest::Contains("PARSE_ERROR"), Error);
    CHECK_THROWS_WITH_AS(load_patients_from_string("{}"), doctest::Contains("SCHEMA_VIOLATION"),
                         Error);

    // unknown fields are rejected, not ignored
    const std::string unknown = R"([{"id": "a", "age_days": 2000, "sex": "F", "opg_path": "x",
                                     "teeth": {}, "predictions": {}, "extra": 1}])";
    CHECK_THROWS_WITH_AS(load_patients_from_string(unknown), doctest::Contains("unknown field"),
                         Error);

    const std::string missing = R"([{"id": "a", "sex": "F", "opg_path": "x",
                                     "teeth": {}, "predictions": {}}])";
    CHECK_THROWS_WITH_AS(load_patients_from_string(missing), doctest::Contains("age_days"), Error);

    const std::string bad_tooth = R"([{"id": "a", "age_days": 2000, "sex": "F", "opg_path": "x",
                                       "teeth": {}, "predictions": {"99": {"mu_days": 1, "sigma_days": 1}}}])";
    CHECK_THROWS_WITH_AS(load_patients_from_string(bad_tooth),
                         doctest::Contains("SCHEMA_VIOLATION"), Error);
}

TEST_CASE("load_patients: invariant violations fail the load, listing record ids") {
    const std::string text = R"([{
      "id": "bad1", "age_days": 2000, "sex": "F", "opg_path": "x",
      "teeth": {"45": {"height_px": 30.0, "width_px": 10.0, "ratio": 2.0, "came1_px": 0.0, "csm": 0.0}},
      "predictions": {"45": {"mu_days": 2000.0, "sigma_days": 100.0}}
    }])";
    CHECK_THROWS_WITH_AS(load_patients_from_string(text), doctest::Contains("VALIDATION_FAILED"),
                         Error);
    CHECK_THROWS_WITH_AS(load_patients_from_string(text), doctest::Contains("bad1"), Error);
    CHECK_THROWS_WITH_AS(load_patients_from_string(text), doctest::Contains("RATIO_MISMATCH"),
                         Error);
}

TEST_CASE("coefficients: the shipped defaults load with the reference constants") {
    const Coefficients c = load_coefficients(kDefaults);
    CHECK(c.cameriere.intercept == 8.971);
    CHECK(c.cameriere.coef_g == 0.357);
    CHECK(c.cameriere.coef_csm45 == 1.631);
    CHECK(c.cameriere.coef_n0 == 0.674);
    CHECK(c.cameriere.coef_s == -1.034);
    CHECK(c.cameriere.coef_s_n0 == -0.176);
    CHECK(c.penalty_p == 1.0);
    CHECK(c.dbscan_eps_years == 0.03);
    CHECK(c.population_stats.at(ToothId(37)).mean_days == 450.168);
    CHECK(c.population_stats.at(ToothId(37)).std_days == 132.235);
    CHECK(c.population_stats.at(ToothId(47)).mean_days == 467.895);
    CHECK(c.quantifiers.active == "identity");
    CHECK(c.count_lexicon.labels ==
          std::vector<std::string>{"none", "few", "most", "all"});
    CHECK(c.apex_lexicon.labels ==
          std::vector<std::string>{"completely_closed", "fairly_closed", "fairly_open",
                                   "quite_open"});
}

TEST_CASE("coefficients: the embedded defaults are the shipped file, byte for byte") {
    CHECK(default_coefficients_json() == read_file(kDefaults));
}

TEST_CASE("coefficients: constraint violations name the field") {
    std::string text = read_file(kDefaults);
    const std::string needle = "\"penalty_p\": 1.0";
    const auto at = text.find(needle);
    REQUIRE(at != std::string::npos);
    text.replace(at, needle.size(), "\"penalty_p\": -1.0");
    CHECK_THROWS_WITH_AS(parse_coefficients(text), doctest::Contains("CONSTRAINT_VIOLATION"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_coefficients(text), doctest::Contains("penalty_p"), Error);
}

TEST_CASE("coefficients: unknown sections are rejected") {
    std::string text = read_file(kDefaults);
    text.insert(1, "\"mystery\": 1,");
    CHECK_THROWS_WITH_AS(parse_coefficients(text), doctest::Contains("unknown field"), Error);
}

TEST_CASE("round-trips are stable after the first save") {
    SUBCASE("coefficients") {
        const Coefficients c = load_coefficients(kDefaults);
        const std::string once = serialize_coefficients(c);
        const std::string twice = serialize_coefficients(parse_coefficients(once));
        CHECK(once == twice);
        // values survive exactly
        const Coefficients back = parse_coefficients(once);
        CHECK(back.cameriere.intercept == c.cameriere.intercept);
        CHECK(back.reliability_labels.low_below == c.reliability_labels.low_below);
        CHECK(back.population_stats.at(ToothId(38)).std_days ==
              c.population_stats.at(ToothId(38)).std_days);
        CHECK(back.templates.at("es").at("intro") == c.templates.at("es").at("intro"));
        CHECK(back.synthetic.curves.at(ToothId(48)).completion_years ==
              c.synthetic.curves.at(ToothId(48)).completion_years);
    }

    SUBCASE("patients") {
        const std::string text = read_file(kFixtures);
        const std::vector<PatientRecord> records = parse_patients(text);
        const std::string once = serialize_patients(records);
        const std::string twice = serialize_patients(parse_patients(once));
        CHECK(once == twice);
    }
}
