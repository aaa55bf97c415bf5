#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dentage/config.hpp"
#include "dentage/records.hpp"

namespace dentage {

// Immutable-after-load patient database (one structured text document, a
// list of patient objects). Unknown fields are rejected, not ignored, so a
// report can never silently describe data the engine does not understand.
struct PatientStore {
    std::map<std::string, PatientRecord> records;
    std::string source_path;

    const PatientRecord* find(const std::string& id) const {
        const auto it = records.find(id);
        return it == records.end() ? nullptr : &it->second;
    }
};

// Schema-level parse only; records may still carry invariant violations.
std::vector<PatientRecord> parse_patients(const std::string& json_text);

// Parse + validate every record; fails listing every violation with its
// record id. No partially populated store is observable on failure.
PatientStore load_patients(const std::string& path);
PatientStore load_patients_from_string(const std::string& json_text, std::string source_path = "");

std::string serialize_patients(std::span<const PatientRecord> records);
void save_patients(std::span<const PatientRecord> records, const std::string& path);

// Coefficients-and-constants database.
Coefficients parse_coefficients(const std::string& json_text);
Coefficients load_coefficients(const std::string& path);
std::string serialize_coefficients(const Coefficients& coeffs);
void save_coefficients(const Coefficients& coeffs, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dentage
