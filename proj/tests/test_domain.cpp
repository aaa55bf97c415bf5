#include <doctest.h>

#include "dentage/age_units.hpp"
#include "dentage/cohort.hpp"
#include "dentage/errors.hpp"
#include "dentage/records.hpp"
#include "dentage/store.hpp"
#include "oracles.hpp"

using namespace dentage;

TEST_CASE("age conversion: years and months") {
    const YearsMonths zero = age_to_years_months(0.0);
    CHECK(zero.years == 0);
    CHECK(zero.months == 0);

    const YearsMonths example = age_to_years_months(2831.0);
    CHECK(example.years == 7);
    CHECK(example.months == 9);

    // 365 days stays short of a full year and clamps to 11 months.
    const YearsMonths eleven = age_to_years_months(365.0);
    CHECK(eleven.years == 0);
    CHECK(eleven.months == 11);

    CHECK_THROWS_WITH_AS(age_to_years_months(-1.0), doctest::Contains("INVALID_AGE"), Error);
}

TEST_CASE("age conversion agrees with the repeated-subtraction oracle") {
    oracles::TestRng rng(101);
    for (int i = 0; i < 2000; ++i) {
        const double days = rng.uniform(0.0, 40000.0);
        const YearsMonths ym = age_to_years_months(days);
        const auto [oy, om] = oracles::years_months_direct(days);
        CAPTURE(days);
        CHECK(ym.years == oy);
        CHECK(ym.months == om);
        // floor property
        CHECK(ym.years * kDaysPerYear <= days);
        CHECK(days < (ym.years + 1) * kDaysPerYear);
        CHECK(ym.months >= 0);
        CHECK(ym.months <= 11);
    }
}

namespace {

PatientRecord consistent_record() {
    // One record out of the deterministic generator: internally consistent by
    // construction.
    SyntheticCohort cohort = generate_cohort(1, 7, default_coefficients());
    PatientRecord rec = cohort.records.front();
    rec.id = "t001";
    return rec;
}

}  // namespace

TEST_CASE("validate_record: consistent record has no violations") {
    CHECK(validate_record(consistent_record()).empty());
}

TEST_CASE("validate_record: ratio contradiction is flagged on the tooth") {
    PatientRecord rec = consistent_record();
    ToothMeasurement m;
    m.height_px = 30.0;
    m.width_px = 10.0;
    m.ratio = 2.0;  // 30/10 = 3
    m.came1_px = 0.0;
    m.csm = 0.0;
    rec.measurements[ToothId(44)] = m;
    const auto violations = validate_record(rec);
    REQUIRE(!violations.empty());
    bool found = false;
    for (const Violation& v : violations) {
        if (v.code == "RATIO_MISMATCH" && v.tooth && v.tooth->code() == 44) found = true;
    }
    CHECK(found);
}

TEST_CASE("validate_record: non-posterior teeth are rejected") {
    PatientRecord rec = consistent_record();
    rec.predictions[ToothId(11)] = ToothPrediction{2000.0, 100.0};
    const auto violations = validate_record(rec);
    REQUIRE(violations.size() == 1);
    CHECK(violations.front().code == "NON_POSTERIOR_TOOTH");
    CHECK(violations.front().tooth->code() == 11);

    // 41-43 are representable but not accepted for data either.
    rec.predictions.erase(ToothId(11));
    rec.measurements[ToothId(42)] = rec.measurements.begin()->second;
    bool found = false;
    for (const Violation& v : validate_record(rec)) {
        if (v.code == "NON_POSTERIOR_TOOTH" && v.tooth->code() == 42) found = true;
    }
    CHECK(found);
}

TEST_CASE("validate_record: degenerate prediction uncertainty is rejected") {
    PatientRecord rec = consistent_record();
    rec.predictions[ToothId(45)] = ToothPrediction{2000.0, 0.0};
    bool found = false;
    for (const Violation& v : validate_record(rec)) {
        if (v.code == "NONPOSITIVE_SIGMA") found = true;
    }
    CHECK(found);
}

TEST_CASE("validate_record: came2 only for molars") {
    PatientRecord rec = consistent_record();
    ToothMeasurement premolar;
    premolar.height_px = 300.0;
    premolar.width_px = 150.0;
    premolar.ratio = 2.0;
    premolar.came1_px = 15.0;
    premolar.came2_px = 5.0;  // not a molar
    premolar.csm = 20.0 / 300.0;
    rec.measurements[ToothId(45)] = premolar;
    bool found = false;
    for (const Violation& v : validate_record(rec)) {
        if (v.code == "CAME2_ON_NON_MOLAR" && v.tooth->code() == 45) found = true;
    }
    CHECK(found);
}

TEST_CASE("validate_record is idempotent and order-insensitive") {
    PatientRecord rec = consistent_record();
    rec.predictions[ToothId(45)] = ToothPrediction{-1.0, 0.0};
    const auto first = validate_record(rec);
    const auto second = validate_record(rec);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].code == second[i].code);
    }
    // Rebuild the maps in a different insertion order; the violations are the
    // same because reporting follows FDI order, not insertion order.
    PatientRecord reordered = rec;
    reordered.measurements.clear();
    for (auto it = rec.measurements.rbegin(); it != rec.measurements.rend(); ++it) {
        reordered.measurements.emplace(it->first, it->second);
    }
    const auto third = validate_record(reordered);
    REQUIRE(third.size() == first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(third[i].code == first[i].code);
    }
}

TEST_CASE("patient records round-trip through the file format") {
    SyntheticCohort cohort = generate_cohort(20, 99, default_coefficients());
    const std::string text = serialize_patients(cohort.records);
    const std::vector<PatientRecord> back = parse_patients(text);
    REQUIRE(back.size() == cohort.records.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        const PatientRecord& a = cohort.records[i];
        const PatientRecord& b = back[i];
        CHECK(a.id == b.id);
        CHECK(a.age_days == b.age_days);
        CHECK(a.sex == b.sex);
        CHECK(a.opg_path == b.opg_path);
        CHECK(a.heatmap_path == b.heatmap_path);
        REQUIRE(a.measurements.size() == b.measurements.size());
        for (const auto& [tooth, m] : a.measurements) {
            const ToothMeasurement& n = b.measurements.at(tooth);
            CHECK(m.height_px == doctest::Approx(n.height_px).epsilon(1e-12));
            CHECK(m.ratio == doctest::Approx(n.ratio).epsilon(1e-12));
            CHECK(m.csm == doctest::Approx(n.csm).epsilon(1e-12));
            CHECK(m.came2_px.has_value() == n.came2_px.has_value());
        }
        REQUIRE(a.predictions.size() == b.predictions.size());
        for (const auto& [tooth, p] : a.predictions) {
            CHECK(p.mu_days == doctest::Approx(b.predictions.at(tooth).mu_days).epsilon(1e-12));
            CHECK(p.sigma_days ==
                  doctest::Approx(b.predictions.at(tooth).sigma_days).epsilon(1e-12));
        }
    }
}

TEST_CASE("tooth ids expose FDI structure") {
    const ToothId t47(47);
    CHECK(t47.quadrant() == 4);
    CHECK(t47.position() == 7);
    CHECK(t47.molar());
    CHECK(t47.posterior_mandibular());
    CHECK(!ToothId(33).posterior_mandibular());
    CHECK(!ToothId(45).molar());
    CHECK_THROWS_AS(ToothId(90), Error);
    CHECK_THROWS_AS(ToothId(9), Error);
}
