#pragma once

#include <memory>
#include <string>

#include "dentage/pipeline.hpp"

namespace dentage {

// Read-only report endpoint over immutable stores:
//   GET /patients/{id}/report?lang=en|es&detail=short|detailed
// 200 with the structured report document, 404 UNKNOWN_PATIENT, 400 on
// malformed parameters. No mutating route exists.
class ReportService {
public:
    ReportService(PatientStore patients, Coefficients coeffs);
    ~ReportService();

    ReportService(const ReportService&) = delete;
    ReportService& operator=(const ReportService&) = delete;

    // Blocks serving requests; throws BIND_FAILED if the address is taken.
    void listen(const std::string& host, int port);
    // Binds an ephemeral port and returns it; serving still requires a call
    // to serve_after_bind (usually from another thread).
    int bind_any_port(const std::string& host);
    void serve_after_bind();

    bool wait_until_ready(int timeout_ms = 5000) const;
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace dentage
