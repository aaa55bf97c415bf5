#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dentage/cohort.hpp"
#include "dentage/errors.hpp"
#include "dentage/pipeline.hpp"
#include "dentage/service.hpp"
#include "dentage/store.hpp"
#include "dentage/surrogate.hpp"

namespace {

using dentage::Coefficients;
using dentage::Error;
using dentage::PatientRecord;
using dentage::PatientStore;
using dentage::ToothId;
using nlohmann::json;

Coefficients load_coeffs(const std::string& path) {
    return path.empty() ? dentage::default_coefficients() : dentage::load_coefficients(path);
}

std::vector<PatientRecord> store_records(const PatientStore& store) {
    std::vector<PatientRecord> records;
    records.reserve(store.records.size());
    for (const auto& [id, rec] : store.records) records.push_back(rec);
    return records;
}

struct SigmaStats {
    int n = 0;
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation, meaningful for n >= 2
};

std::map<ToothId, SigmaStats> uncertainty_stats(const std::vector<PatientRecord>& records) {
    std::map<ToothId, std::vector<double>> sigmas;
    for (const PatientRecord& rec : records) {
        for (const auto& [tooth, p] : rec.predictions) sigmas[tooth].push_back(p.sigma_days);
    }
    std::map<ToothId, SigmaStats> out;
    for (const auto& [tooth, values] : sigmas) {
        SigmaStats st;
        st.n = static_cast<int>(values.size());
        for (double v : values) st.mean += v;
        st.mean /= values.size();
        if (st.n >= 2) {
            double acc = 0.0;
            for (double v : values) acc += (v - st.mean) * (v - st.mean);
            st.stddev = std::sqrt(acc / (values.size() - 1));
        }
        out.emplace(tooth, st);
    }
    return out;
}

void print_correlation_text(const std::map<ToothId, dentage::ToothCorrelations>& table) {
    std::printf("%-6s %14s %14s %14s %14s\n", "tooth", "ratio_vs_mu", "ratio_vs_sigma",
                "csm_vs_mu", "csm_vs_sigma");
    auto cell = [](const dentage::CorrelationCell& c) {
        return c.value ? std::to_string(*c.value).substr(0, 9) : "-";
    };
    for (const auto& [tooth, tc] : table) {
        std::printf("%-6s %14s %14s %14s %14s\n", tooth.str().c_str(),
                    cell(tc.ratio_vs_mu).c_str(), cell(tc.ratio_vs_sigma).c_str(),
                    cell(tc.csm_vs_mu).c_str(), cell(tc.csm_vs_sigma).c_str());
    }
}

json correlation_json(const std::map<ToothId, dentage::ToothCorrelations>& table) {
    json out = json::object();
    auto cell = [](const dentage::CorrelationCell& c) {
        if (c.value) return json(*c.value);
        return json{{"absent", c.absent_reason}};
    };
    for (const auto& [tooth, tc] : table) {
        out[tooth.str()] = json{{"ratio_vs_mu", cell(tc.ratio_vs_mu)},
                                {"ratio_vs_sigma", cell(tc.ratio_vs_sigma)},
                                {"csm_vs_mu", cell(tc.csm_vs_mu)},
                                {"csm_vs_sigma", cell(tc.csm_vs_sigma)}};
    }
    return out;
}

json metrics_json(const dentage::MetricsReport& m) {
    return json{{"explained_variance", m.explained_variance},
                {"mean_squared_error", m.mean_squared_error},
                {"mean_error", m.mean_error},
                {"signed_mean_error", m.signed_mean_error},
                {"max_error", m.max_error},
                {"mean_absolute_error", m.mean_absolute_error},
                {"r2", m.r2},
                {"pearson", std::isnan(m.pearson) ? json(nullptr) : json(m.pearson)}};
}

int run(int argc, char** argv) {
    CLI::App app{"Dental age estimation engine: bilingual rule-based reports, fuzzy reliability "
                 "and surrogate-regression analysis over per-tooth data"};
    app.require_subcommand(1);

    // report
    auto* report = app.add_subcommand("report", "Generate a patient report");
    std::string patients_path, coeffs_path, patient_id;
    std::string lang = "en", detail = "detailed", format = "text";
    report->add_option("--patients", patients_path, "Patient database file")->required();
    report->add_option("--coefficients", coeffs_path, "Coefficients file (default: shipped)");
    report->add_option("--id", patient_id, "Patient id")->required();
    report->add_option("--lang", lang, "Report language (en|es)");
    report->add_option("--detail", detail, "Report detail (short|detailed)");
    report->add_option("--format", format, "Output format (text|structured)");
    report->callback([&] {
        const PatientStore store = dentage::load_patients(patients_path);
        const Coefficients coeffs = load_coeffs(coeffs_path);
        dentage::ReportRequest request{patient_id, dentage::language_from_string(lang),
                                       dentage::report_kind_from_string(detail)};
        const dentage::ReportBundle bundle = dentage::build_report(store, coeffs, request);
        if (format == "structured") {
            std::cout << dentage::render_report_json(bundle);
        } else if (format == "text") {
            std::cout << dentage::render_report_text(bundle);
            std::cout << "\nOPG: " << bundle.opg_path << "\n";
            if (bundle.heatmap_path) std::cout << "Heat-map: " << *bundle.heatmap_path << "\n";
        } else {
            throw Error::domain("app", "UNSUPPORTED_FORMAT", "format must be text or structured");
        }
    });

    // stats
    auto* stats = app.add_subcommand("stats", "Per-tooth uncertainty and correlation tables");
    std::string stats_patients, stats_format = "text";
    stats->add_option("--patients", stats_patients, "Patient database file")->required();
    stats->add_option("--format", stats_format, "Output format (text|structured)");
    stats->callback([&] {
        const PatientStore store = dentage::load_patients(stats_patients);
        if (store.records.empty()) {
            throw Error::domain("app", "NO_DATA", "the patient store is empty");
        }
        const auto records = store_records(store);
        const auto sigma = uncertainty_stats(records);
        const auto correlations = dentage::correlation_table(records);
        if (stats_format == "structured") {
            json unc = json::object();
            for (const auto& [tooth, st] : sigma) {
                unc[tooth.str()] = json{{"n", st.n},
                                        {"mean_days", st.mean},
                                        {"std_days", st.n >= 2 ? json(st.stddev) : json(nullptr)}};
            }
            std::cout << json{{"uncertainty", std::move(unc)},
                              {"correlations", correlation_json(correlations)}}
                             .dump(2)
                      << "\n";
        } else {
            std::printf("%-6s %6s %12s %12s\n", "tooth", "n", "sigma_mean", "sigma_std");
            for (const auto& [tooth, st] : sigma) {
                std::printf("%-6s %6d %12.3f %12s\n", tooth.str().c_str(), st.n, st.mean,
                            st.n >= 2 ? std::to_string(st.stddev).substr(0, 10).c_str() : "-");
            }
            std::printf("\n");
            print_correlation_text(correlations);
        }
    });

    // correlate
    auto* correlate = app.add_subcommand("correlate", "Per-tooth measurement/prediction correlations");
    std::string corr_patients, corr_format = "text";
    correlate->add_option("--patients", corr_patients, "Patient database file")->required();
    correlate->add_option("--format", corr_format, "Output format (text|structured)");
    correlate->callback([&] {
        const PatientStore store = dentage::load_patients(corr_patients);
        if (store.records.empty()) {
            throw Error::domain("app", "NO_DATA", "the patient store is empty");
        }
        const auto table = dentage::correlation_table(store_records(store));
        if (corr_format == "structured") {
            std::cout << correlation_json(table).dump(2) << "\n";
        } else {
            print_correlation_text(table);
        }
    });

    // fit-surrogate
    auto* fit = app.add_subcommand("fit-surrogate",
                                   "Fit the transparent CSM regressor and report its metrics");
    std::string fit_patients, fit_format = "text";
    int fit_tooth = 45;
    fit->add_option("--patients", fit_patients, "Patient database file")->required();
    fit->add_option("--tooth", fit_tooth, "Target tooth (FDI code, default 45)");
    fit->add_option("--format", fit_format, "Output format (text|structured)");
    fit->callback([&] {
        const PatientStore store = dentage::load_patients(fit_patients);
        const auto records = store_records(store);
        const ToothId target(fit_tooth);
        const dentage::RegressionModel model = dentage::fit_surrogate(records, target);
        const dentage::MetricsReport metrics = dentage::evaluate_regressor(model, records);
        if (fit_format == "structured") {
            std::cout << json{{"target_tooth", target.str()},
                              {"fitted_on", model.fitted_on},
                              {"weights", json{{"intercept", model.intercept},
                                               {"w_sex", model.w_sex},
                                               {"w_ratio", model.w_ratio},
                                               {"w_mu_years", model.w_mu}}},
                              {"metrics", metrics_json(metrics)}}
                             .dump(2)
                      << "\n";
        } else {
            std::printf("target tooth: %s (%s)\n", target.str().c_str(), model.fitted_on.c_str());
            std::printf("  intercept            %+.9f\n", model.intercept);
            std::printf("  w_sex                %+.9f\n", model.w_sex);
            std::printf("  w_ratio              %+.9f\n", model.w_ratio);
            std::printf("  w_mu_years           %+.9f\n", model.w_mu);
            std::printf("  explained_variance   %.6f\n", metrics.explained_variance);
            std::printf("  mean_squared_error   %.6f\n", metrics.mean_squared_error);
            std::printf("  mean_error           %.6f\n", metrics.mean_error);
            std::printf("  max_error            %.6f\n", metrics.max_error);
            std::printf("  mean_absolute_error  %.6f\n", metrics.mean_absolute_error);
            std::printf("  r2                   %.6f\n", metrics.r2);
            std::printf("  pearson              %.6f\n", metrics.pearson);
            std::printf("  signed_mean_error    %+.6f\n", metrics.signed_mean_error);
        }
    });

    // validate
    auto* validate = app.add_subcommand("validate", "Check a patient file against every invariant");
    std::string validate_patients;
    validate->add_option("--patients", validate_patients, "Patient database file")->required();
    validate->callback([&] {
        const auto records = dentage::parse_patients(dentage::read_file(validate_patients));
        std::size_t violation_count = 0;
        std::map<std::string, int> seen_ids;
        for (const PatientRecord& rec : records) {
            if (++seen_ids[rec.id] == 2) {
                std::cout << rec.id << ": DUPLICATE_ID (id appears more than once)\n";
                ++violation_count;
            }
            for (const dentage::Violation& v : dentage::validate_record(rec)) {
                std::cout << rec.id << ": " << v.code
                          << (v.tooth ? " tooth " + v.tooth->str() : "") << " (" << v.detail
                          << ")\n";
                ++violation_count;
            }
        }
        if (violation_count > 0) {
            throw Error::domain("domain", "VALIDATION_FAILED",
                                std::to_string(violation_count) + " violation(s) in " +
                                    validate_patients);
        }
        std::cout << records.size() << " record(s), no violations\n";
    });

    // synth
    auto* synth = app.add_subcommand("synth", "Generate a deterministic synthetic cohort");
    std::string synth_coeffs, synth_out, synth_mode;
    int synth_n = 125;
    std::uint64_t synth_seed = 42;
    synth->add_option("--n", synth_n, "Cohort size (default 125)");
    synth->add_option("--seed", synth_seed, "Generator seed (default 42)");
    synth->add_option("--coefficients", synth_coeffs, "Coefficients file (default: shipped)");
    synth->add_option("--mode", synth_mode, "Override generator mode (curve|affine)");
    synth->add_option("--out", synth_out, "Output file (default: stdout)");
    synth->callback([&] {
        Coefficients coeffs = load_coeffs(synth_coeffs);
        if (!synth_mode.empty()) coeffs.synthetic.mode = synth_mode;
        const dentage::SyntheticCohort cohort = dentage::generate_cohort(synth_n, synth_seed, coeffs);
        const std::string text = dentage::serialize_patients(cohort.records);
        if (synth_out.empty()) {
            std::cout << text;
        } else {
            dentage::write_file(synth_out, text);
            std::cout << "wrote " << cohort.records.size() << " record(s) to " << synth_out << "\n";
        }
    });

    // serve
    auto* serve = app.add_subcommand("serve", "Serve read-only reports over HTTP");
    std::string serve_patients, serve_coeffs, bind = "127.0.0.1:8080";
    serve->add_option("--patients", serve_patients, "Patient database file")->required();
    serve->add_option("--coefficients", serve_coeffs, "Coefficients file (default: shipped)");
    serve->add_option("--bind", bind, "host:port to bind (default 127.0.0.1:8080)");
    serve->callback([&] {
        const auto colon = bind.rfind(':');
        if (colon == std::string::npos) {
            throw Error::domain("app", "INVALID_BIND", "--bind expects host:port");
        }
        const std::string host = bind.substr(0, colon);
        const int port = std::stoi(bind.substr(colon + 1));
        dentage::ReportService service(dentage::load_patients(serve_patients),
                                       load_coeffs(serve_coeffs));
        std::cerr << "serving on http://" << host << ":" << port
                  << " (GET /patients/{id}/report?lang=en|es&detail=short|detailed)\n";
        service.listen(host, port);
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == Error::Kind::domain ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
