#include "eqspec/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

#include "eqspec/errors.hpp"

namespace eqspec {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct CsvWriter::Impl {
    std::ofstream out;
    bool row_started = false;
};

CsvWriter::CsvWriter(const std::string& path) : impl_(new Impl) {
    impl_->out.open(path);
    if (!impl_->out) {
        delete impl_;
        throw IoError("cannot open for writing: " + path);
    }
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::header(std::initializer_list<std::string> names) {
    bool first = true;
    for (const auto& n : names) {
        if (!first) impl_->out << ',';
        impl_->out << n;
        first = false;
    }
    impl_->out << '\n';
}

void CsvWriter::field(const std::string& v) {
    if (impl_->row_started) impl_->out << ',';
    impl_->out << v;
    impl_->row_started = true;
}

void CsvWriter::field(double v) { field(format_double(v)); }
void CsvWriter::field(long v) { field(std::to_string(v)); }

void CsvWriter::end_row() {
    impl_->out << '\n';
    impl_->row_started = false;
}

json solve_metadata_json(const EigenSolution& sol) {
    json j;
    j["grid"] = {{"x_min", sol.grid.x_min()},
                 {"x_max", sol.grid.x_max()},
                 {"n_points", sol.grid.size()},
                 {"spacing", sol.grid.spacing()}};
    j["scale"] = {{"physical", sol.scale.physical},
                  {"mass_ratio", sol.scale.mass_ratio},
                  {"hbar_omega_ev", sol.scale.hbar_omega_ev}};
    j["boundary_policy"] = sol.boundary_policy;
    j["boundary_ok"] = sol.boundary_ok;
    return j;
}

json spectrum_report_json(const EigenSolution& sol, const SpectrumReport& report,
                          const StateClassification* cls) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["solver"] = solve_metadata_json(sol);
    j["energies"] = sol.energies;
    j["window"] = {report.window_lo, report.window_hi};
    j["spacings"] = report.spacings;
    j["mean_spacing"] = report.mean_spacing;
    j["cv"] = report.cv;
    j["energy_fit"] = {{"slope", report.energy_fit.slope},
                       {"intercept", report.energy_fit.intercept},
                       {"r2", report.energy_fit.r2}};
    if (cls) {
        json c;
        c["labels"] = cls->label;
        c["ipr"] = cls->ipr;
        c["mean_x"] = cls->mean_x;
        c["confidence"] = cls->confidence;
        c["split"] = cls->split;
        c["regions"] = cls->regions;
        c["thresholds"] = {{"min_amplitude", cls->options_used.min_amplitude},
                           {"pair_distance", cls->options_used.pair_distance},
                           {"region_halfwidth", cls->options_used.region_halfwidth},
                           {"ipr_factor", cls->options_used.ipr_factor}};
        for (int label : {1, 2}) {
            const ClassSpacings sp =
                class_spacings(sol, *cls, label, report.window_lo, report.window_hi);
            c["class_" + std::to_string(label)] = {{"mean_spacing", sp.mean},
                                                   {"cv", sp.cv},
                                                   {"spacings", sp.raw},
                                                   {"healed", sp.healed}};
        }
        j["classification"] = c;
    }
    return j;
}

json fit_result_json(const FitResult& fit) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["model"] =
        fit.model == FitModel::fixed_inverse ? "fixed_inverse" : "power_law";
    j["C_eV_nm"] = fit.c_ev_nm;
    j["alpha"] = fit.alpha;
    if (fit.model == FitModel::power_law)
        j["alpha_ci95"] = {fit.alpha_ci_lo, fit.alpha_ci_hi};
    j["V0_over_mstar_eV"] = fit.v0_over_mstar_ev;
    j["r_squared"] = fit.r_squared;
    j["n_records"] = fit.n_records;
    return j;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace eqspec
