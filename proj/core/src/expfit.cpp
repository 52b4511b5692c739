#include "eqspec/expfit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "eqspec/errors.hpp"
#include "eqspec/potentials.hpp"
#include "eqspec/spectral.hpp"

namespace eqspec {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        // trim
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    return out;
}

double parse_positive(const std::string& s, const char* what, long line_no) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        if (!(v > 0.0))
            throw IoError(std::string(what) + " must be positive", line_no);
        return v;
    } catch (const IoError&) {
        throw;
    } catch (const std::exception&) {
        throw IoError(std::string("cannot parse ") + what + ": '" + s + "'",
                      line_no);
    }
}

}  // namespace

FilmDataset load_dataset(const std::string& path, double d_bl_nm) {
    if (!(d_bl_nm > 0.0)) throw std::invalid_argument("d_BL must be positive");
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset: " + path);

    FilmDataset data;
    data.d_bl_nm = d_bl_nm;
    std::string line;
    long line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_csv_line(line);
        if (!header_seen) {
            if (fields.size() < 4 || fields[0] != "source" ||
                fields[1] != "d_value" || fields[2] != "d_unit" ||
                fields[3] != "dE_meV")
                throw IoError("expected header source,d_value,d_unit,dE_meV[,sigma_meV]",
                              line_no);
            header_seen = true;
            continue;
        }
        if (fields.size() < 4)
            throw IoError("row needs at least 4 fields", line_no);
        FilmRecord rec;
        rec.source = fields[0];
        const double d_value = parse_positive(fields[1], "d_value", line_no);
        if (fields[2] == "nm")
            rec.d_nm = d_value;
        else if (fields[2] == "BL")
            rec.d_nm = d_value * d_bl_nm;
        else
            throw IoError("d_unit must be nm or BL, got '" + fields[2] + "'",
                          line_no);
        rec.de_mev = parse_positive(fields[3], "dE_meV", line_no);
        if (fields.size() >= 5 && !fields[4].empty())
            rec.sigma_mev = parse_positive(fields[4], "sigma_meV", line_no);
        data.records.push_back(std::move(rec));
    }
    if (!header_seen) throw IoError("empty file: " + path);
    if (data.records.empty()) throw IoError("no records in " + path);
    return data;
}

FitResult fit_inverse_law(const FilmDataset& data, FitModel model) {
    const auto& rec = data.records;
    const std::size_t n = rec.size();
    const std::size_t need = (model == FitModel::fixed_inverse) ? 3 : 4;
    if (n < need)
        throw std::invalid_argument("fit_inverse_law: not enough records");

    FitResult fit;
    fit.model = model;
    fit.n_records = n;

    auto weight = [&](const FilmRecord& r) {
        return r.sigma_mev ? 1.0 / (*r.sigma_mev * *r.sigma_mev) : 1.0;
    };

    if (model == FitModel::fixed_inverse) {
        // dE = C / d through the origin in the variable x = 1/d
        double sxy = 0.0, sxx = 0.0;
        for (const auto& r : rec) {
            const double w = weight(r);
            const double x = 1.0 / r.d_nm;
            const double y = r.de_mev * 1e-3;  // eV
            sxy += w * x * y;
            sxx += w * x * x;
        }
        if (sxx == 0.0) throw NumericError("fit_inverse_law: singular design");
        fit.c_ev_nm = sxy / sxx;
        fit.alpha = 1.0;
        double ss_res = 0.0, ss_tot = 0.0, ybar = 0.0, wsum = 0.0;
        for (const auto& r : rec) {
            ybar += weight(r) * r.de_mev * 1e-3;
            wsum += weight(r);
        }
        ybar /= wsum;
        for (const auto& r : rec) {
            const double y = r.de_mev * 1e-3;
            const double e = y - fit.c_ev_nm / r.d_nm;
            ss_res += weight(r) * e * e;
            ss_tot += weight(r) * (y - ybar) * (y - ybar);
        }
        fit.r_squared = (ss_tot > 0) ? 1.0 - ss_res / ss_tot : 1.0;
    } else {
        // log dE = log C - alpha log d
        std::vector<double> lx(n), ly(n), w(n);
        for (std::size_t i = 0; i < n; ++i) {
            lx[i] = std::log(rec[i].d_nm);
            ly[i] = std::log(rec[i].de_mev * 1e-3);
            w[i] = weight(rec[i]);
        }
        auto wls = [&](const std::vector<double>& yy, double& slope,
                       double& icept) {
            double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (std::size_t i = 0; i < n; ++i) {
                sw += w[i];
                sx += w[i] * lx[i];
                sy += w[i] * yy[i];
                sxx += w[i] * lx[i] * lx[i];
                sxy += w[i] * lx[i] * yy[i];
            }
            const double det = sw * sxx - sx * sx;
            if (det == 0.0) throw NumericError("fit_inverse_law: singular design");
            slope = (sw * sxy - sx * sy) / det;
            icept = (sy - slope * sx) / sw;
        };
        double slope, icept;
        wls(ly, slope, icept);
        fit.alpha = -slope;
        fit.c_ev_nm = std::exp(icept);
        double ss_res = 0, ss_tot = 0, ybar = 0, wsum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            ybar += w[i] * ly[i];
            wsum += w[i];
        }
        ybar /= wsum;
        std::vector<double> resid(n);
        for (std::size_t i = 0; i < n; ++i) {
            resid[i] = ly[i] - (icept + slope * lx[i]);
            ss_res += w[i] * resid[i] * resid[i];
            ss_tot += w[i] * (ly[i] - ybar) * (ly[i] - ybar);
        }
        fit.r_squared = (ss_tot > 0) ? 1.0 - ss_res / ss_tot : 1.0;

        // deterministic residual bootstrap for alpha
        std::mt19937 rng(12345u);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::vector<double> alphas;
        const int n_boot = 200;
        std::vector<double> yy(n);
        for (int b = 0; b < n_boot; ++b) {
            for (std::size_t i = 0; i < n; ++i)
                yy[i] = icept + slope * lx[i] + resid[pick(rng)];
            double s2, i2;
            wls(yy, s2, i2);
            alphas.push_back(-s2);
        }
        std::sort(alphas.begin(), alphas.end());
        fit.alpha_ci_lo = alphas[static_cast<std::size_t>(0.025 * n_boot)];
        fit.alpha_ci_hi = alphas[static_cast<std::size_t>(0.975 * n_boot) - 1];
    }

    fit.v0_over_mstar_ev =
        fit.c_ev_nm * fit.c_ev_nm / (8.0 * constants::hbar_sq_over_me_eV_nm2);
    return fit;
}

TruncatedCrossCheck cross_validate_truncated(double v0_over_mstar_ev, double d_nm) {
    if (!(v0_over_mstar_ev > 0.0) || !(d_nm > 0.0))
        throw std::invalid_argument("cross_validate_truncated: inputs must be positive");

    const PotentialModel model = PotentialModel::truncated(v0_over_mstar_ev, d_nm);
    const ClosedFormSpectrum ref = reference_spectrum(model, 0);

    TruncatedCrossCheck out;
    out.de_formula_mev = ref.spacing * 1e3;

    // wall margin: a few decay lengths of the highest level of interest
    const double v0 = v0_over_mstar_ev;
    const double kappa =
        std::sqrt(2.0 * 0.1 * v0 / constants::hbar_sq_over_me_eV_nm2);
    const double margin = std::min(12.0 / kappa, 4.0 * d_nm);
    const double half = 0.5 * d_nm + margin;
    const Grid1D grid = Grid1D::with_spacing(-half, half, 0.005);

    const std::size_t k_est =
        static_cast<std::size_t>(std::floor(0.9 * v0 / ref.spacing)) + 2;
    const EigenSolution sol =
        solve_potential(model, grid, SolveScale::for_mass(1.0), k_est);

    for (double e : sol.energies)
        if (e < 0.9 * v0) out.levels_ev.push_back(e);
    out.enough_levels = out.levels_ev.size() >= 2;
    for (std::size_t i = 0; i + 1 < out.levels_ev.size(); ++i) {
        const double sp = (out.levels_ev[i + 1] - out.levels_ev[i]) * 1e3;
        out.spacings_mev.push_back(sp);
        out.max_rel_deviation =
            std::max(out.max_rel_deviation,
                     std::abs(sp - out.de_formula_mev) / out.de_formula_mev);
    }
    return out;
}

}  // namespace eqspec
