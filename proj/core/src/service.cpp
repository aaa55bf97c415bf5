#include "dentage/service.hpp"

#include <chrono>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "dentage/errors.hpp"

namespace dentage {

namespace {

std::string error_body(const std::string& code, const std::string& message) {
    return nlohmann::json{{"error", {{"code", code}, {"message", message}}}}.dump(2) + "\n";
}

}  // namespace

struct ReportService::Impl {
    const PatientStore patients;
    const Coefficients coeffs;
    httplib::Server server;

    Impl(PatientStore p, Coefficients c) : patients(std::move(p)), coeffs(std::move(c)) {
        server.Get(R"(/patients/([^/]+)/report)",
                   [this](const httplib::Request& req, httplib::Response& res) {
                       handle_report(req, res);
                   });
    }

    void handle_report(const httplib::Request& req, httplib::Response& res) {
        ReportRequest request;
        request.patient_id = req.matches[1];
        try {
            request.language = language_from_string(req.get_param_value("lang").empty()
                                                        ? "en"
                                                        : req.get_param_value("lang"));
            request.detail = report_kind_from_string(req.get_param_value("detail").empty()
                                                         ? "detailed"
                                                         : req.get_param_value("detail"));
        } catch (const Error& e) {
            res.status = 400;
            res.set_content(error_body(e.code(), e.what()), "application/json");
            return;
        }
        try {
            const ReportBundle bundle = build_report(patients, coeffs, request);
            res.status = 200;
            res.set_content(render_report_json(bundle), "application/json");
        } catch (const Error& e) {
            res.status = e.code() == "UNKNOWN_PATIENT" ? 404 : 422;
            res.set_content(error_body(e.code(), e.what()), "application/json");
        }
    }
};

ReportService::ReportService(PatientStore patients, Coefficients coeffs)
    : impl_(std::make_unique<Impl>(std::move(patients), std::move(coeffs))) {}

ReportService::~ReportService() {
    stop();
}

void ReportService::listen(const std::string& host, int port) {
    if (!impl_->server.listen(host, port)) {
        throw Error::io("app", "BIND_FAILED",
                        "cannot bind " + host + ":" + std::to_string(port));
    }
}

int ReportService::bind_any_port(const std::string& host) {
    const int port = impl_->server.bind_to_any_port(host);
    if (port <= 0) {
        throw Error::io("app", "BIND_FAILED", "cannot bind an ephemeral port on " + host);
    }
    return port;
}

void ReportService::serve_after_bind() {
    impl_->server.listen_after_bind();
}

bool ReportService::wait_until_ready(int timeout_ms) const {
    const auto deadline =
        std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
    while (std::chrono::steady_clock::now() < deadline) {
        if (impl_->server.is_running()) return true;
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    return impl_->server.is_running();
}

void ReportService::stop() {
    if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace dentage
