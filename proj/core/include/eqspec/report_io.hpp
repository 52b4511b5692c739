#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "eqspec/expfit.hpp"
#include "eqspec/spectral.hpp"

namespace eqspec {

inline constexpr const char* kSchemaVersion = "1";

// Fixed 12-significant-digit rendering; deterministic across runs.
std::string format_double(double v);

// Minimal CSV emitter with the deterministic float format.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void header(std::initializer_list<std::string> names);
    void field(const std::string& v);
    void field(double v);
    void field(long v);
    void end_row();

private:
    struct Impl;
    Impl* impl_;
};

nlohmann::json solve_metadata_json(const EigenSolution& sol);
nlohmann::json spectrum_report_json(const EigenSolution& sol,
                                    const SpectrumReport& report,
                                    const StateClassification* cls);
nlohmann::json fit_result_json(const FitResult& fit);

void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace eqspec
