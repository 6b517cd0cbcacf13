#include "strichartz/runner.hpp"

#include "strichartz/csv.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <stdexcept>

namespace strichartz {

namespace {

double rat(const Rational& r) { return boost::rational_cast<double>(r); }

std::string opt_rational(const std::optional<Rational>& r)
{
    return r ? format_double(rat(*r)) : "none";
}

void emit(RunOutput& out, const std::string& out_dir, const std::string& name,
          const CsvWriter& csv)
{
    out.csv_files[name] = csv.str();
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        csv.save((std::filesystem::path(out_dir) / name).string());
    }
}

void fit_row(CsvWriter& csv, const std::string& quantity, const ScalingFit& fit, double predicted,
             bool pass)
{
    csv.add_row({quantity, CsvWriter::cell(fit.slope), CsvWriter::cell(predicted),
                 CsvWriter::cell(fit.intercept), CsvWriter::cell(fit.max_residual),
                 fit.dropped_first ? "yes" : "no", pass ? "pass" : "fail"});
}

} // namespace

void set_workers(int workers)
{
#ifdef _OPENMP
    if (workers > 0)
        omp_set_num_threads(workers);
    else
        omp_set_num_threads(omp_get_num_procs());
#else
    (void)workers;
#endif
}

KnappConfig knapp_config_from(const Config& cfg)
{
    KnappConfig k;
    k.n = cfg.get_int("knapp", "n", 2);
    k.family = DispersionRelation::from_token(cfg.get_or("knapp", "family", "power:2"));
    k.rho0 = cfg.get_double("knapp", "rho0", 1.25);
    k.p = LebesgueExponent::parse(cfg.get_or("knapp", "p", "4"));
    k.q = LebesgueExponent::parse(cfg.get_or("knapp", "q", "4"));
    k.r_list = cfg.get_list("knapp", "r_list", {16, 32, 64, 128, 256, 512});
    std::string centering = cfg.get_or("knapp", "tube_centering", "both");
    if (centering == "group")
        k.centering = TubeCentering::GroupVelocity;
    else if (centering == "phase")
        k.centering = TubeCentering::PhaseVelocity;
    else if (centering == "both")
        k.centering = TubeCentering::Both;
    else
        throw std::invalid_argument("knapp: tube_centering must be group, phase or both");
    return k;
}

ProbeConfig probe_config_from(const Config& cfg, const std::string& section)
{
    ProbeConfig p;
    p.n = cfg.get_int(section, "n", 2);
    p.nu = cfg.get_double(section, "nu", section == "wave-probe" ? 0.5 : 0.0);
    p.family = DispersionRelation::from_token(cfg.get_or(section, "family", "power:2"));
    p.p = LebesgueExponent::parse(cfg.get_or(section, "p", "inf"));
    p.q = LebesgueExponent::parse(cfg.get_or(section, "q", "4"));
    p.r_list = cfg.get_list(section, "r_list", {16, 32, 64, 128, 256});
    p.random_probes = cfg.get_int(section, "random_probes", 8);
    p.seed = static_cast<unsigned>(cfg.get_int("experiment", "seed", 7106242));
    return p;
}

HomoConfig homo_config_from(const Config& cfg)
{
    HomoConfig h;
    h.n = cfg.get_int("homo-probe", "n", 2);
    h.family = DispersionRelation::from_token(cfg.get_or("homo-probe", "family", "power:2"));
    h.p = LebesgueExponent::parse(cfg.get_or("homo-probe", "p", "4"));
    h.q = LebesgueExponent::parse(cfg.get_or("homo-probe", "q", "3"));
    h.alpha = cfg.get_double("homo-probe", "alpha", 0.5);
    std::vector<double> ks = cfg.get_list("homo-probe", "k_list", {0, 1, 2, 4});
    h.k_list.clear();
    for (double k : ks) h.k_list.push_back(static_cast<int>(k));
    h.n_list = cfg.get_list("homo-probe", "n_list", {0.25, 1.0, 4.0});
    h.r_list = cfg.get_list("homo-probe", "r_list", {});
    return h;
}

RunOutput run_exponents_command(int n, const std::string& p_text, const std::string& q_text,
                                std::string& stdout_text)
{
    RunOutput out;
    LebesgueExponent p = LebesgueExponent::parse(p_text);
    LebesgueExponent q = LebesgueExponent::parse(q_text);
    StrichartzExponents e = exponents(n, p, q);
    AdmissibilityClass c = classify(n, p, q);

    CsvWriter csv({"n", "p", "q", "s1", "s2", "s", "region", "alpha_thm1", "alpha_thm2",
                   "alpha_wave"});
    csv.add_row({CsvWriter::cell(n), p.str(), q.str(), CsvWriter::cell(rat(e.s1)),
                 CsvWriter::cell(rat(e.s2)), CsvWriter::cell(rat(e.s)), region_name(c.region),
                 opt_rational(c.alpha_thm1), opt_rational(c.alpha_thm2),
                 opt_rational(c.alpha_wave)});
    stdout_text = csv.str();
    out.csv_files["exponents.csv"] = csv.str();
    return out;
}

RunOutput run_knapp(const KnappConfig& cfg, double slope_tol, double residual_tol,
                    const std::string& out_dir)
{
    RunOutput out;
    KnappResult res = knapp_scaling_experiment(cfg);

    CsvWriter detail({"R", "centering", "tube_norm", "data_norm", "ratio", "tube_mass_fraction"});
    for (const KnappRow& row : res.rows)
        detail.add_row({CsvWriter::cell(row.R), row.centering, CsvWriter::cell(row.tube_norm),
                        CsvWriter::cell(row.data_norm), CsvWriter::cell(row.ratio),
                        CsvWriter::cell(row.tube_mass_fraction)});
    emit(out, out_dir, "knapp_detail.csv", detail);

    const bool field_ok = std::abs(res.field_fit.slope - res.predicted_field_slope) <= slope_tol &&
                          res.field_fit.max_residual <= residual_tol;
    const bool ratio_ok = std::abs(res.ratio_fit.slope - res.predicted_ratio_slope) <= slope_tol;

    CsvWriter summary({"quantity", "slope", "predicted", "intercept", "max_residual",
                       "dropped_first", "pass"});
    fit_row(summary, "field", res.field_fit, res.predicted_field_slope, field_ok);
    fit_row(summary, "data", res.data_fit, -0.25, true);
    fit_row(summary, "ratio", res.ratio_fit, res.predicted_ratio_slope, ratio_ok);
    emit(out, out_dir, "knapp_summary.csv", summary);

    out.exit_code = (field_ok && ratio_ok) ? kOk : kCheckFailed;
    return out;
}

namespace {

RunOutput run_probe_common(const ProbeResult& res, const std::string& stem, double slope_tol,
                           double residual_tol, const std::string& out_dir)
{
    RunOutput out;
    CsvWriter detail({"R", "probe", "value"});
    for (const ProbeRow& row : res.rows)
        detail.add_row({CsvWriter::cell(row.R), row.probe, CsvWriter::cell(row.value)});
    emit(out, out_dir, stem + "_detail.csv", detail);

    bool pass = true;
    CsvWriter summary({"slope", "predicted", "intercept", "max_residual", "dropped_first",
                       "exponential_regime", "pass"});
    if (res.exponential_regime) {
        summary.add_row({"nan", CsvWriter::cell(res.predicted_slope), "nan", "nan", "no", "yes",
                         "pass"});
    } else {
        pass = std::abs(res.fit.slope - res.predicted_slope) <= slope_tol &&
               res.fit.max_residual <= residual_tol;
        summary.add_row({CsvWriter::cell(res.fit.slope), CsvWriter::cell(res.predicted_slope),
                         CsvWriter::cell(res.fit.intercept),
                         CsvWriter::cell(res.fit.max_residual),
                         res.fit.dropped_first ? "yes" : "no", "no", pass ? "pass" : "fail"});
    }
    emit(out, out_dir, stem + "_summary.csv", summary);
    out.exit_code = pass ? kOk : kCheckFailed;
    return out;
}

} // namespace

RunOutput run_operator_probe(const ProbeConfig& cfg, double slope_tol, double residual_tol,
                             const std::string& out_dir)
{
    return run_probe_common(operator_scaling_probe(cfg), "operator_probe", slope_tol,
                            residual_tol, out_dir);
}

RunOutput run_wave_probe(const ProbeConfig& cfg, double slope_tol, double residual_tol,
                         const std::string& out_dir)
{
    return run_probe_common(wave_exponent_probe(cfg), "wave_probe", slope_tol, residual_tol,
                            out_dir);
}

RunOutput run_homo(const HomoConfig& cfg, const std::string& out_dir)
{
    RunOutput out;
    HomoResult res = homo_ratio_probe(cfg);

    CsvWriter detail({"sweep", "parameter", "field_norm", "data_norm", "ratio"});
    for (const HomoRow& row : res.rows)
        detail.add_row({row.sweep, CsvWriter::cell(row.parameter),
                        CsvWriter::cell(row.field_norm), CsvWriter::cell(row.data_norm),
                        CsvWriter::cell(row.ratio)});
    emit(out, out_dir, "homo_detail.csv", detail);

    CsvWriter summary({"max_ratio", "alpha", "alpha_threshold", "alpha_below_threshold"});
    summary.add_row({CsvWriter::cell(res.max_ratio), CsvWriter::cell(cfg.alpha),
                     CsvWriter::cell(res.alpha_threshold),
                     res.alpha_below_threshold ? "yes" : "no"});
    emit(out, out_dir, "homo_summary.csv", summary);
    return out;
}

RunOutput run_bessel_audit(double c_max, const std::string& out_dir)
{
    RunOutput out;
    BesselAuditReport rep = bessel_bound_audit_suite(c_max);
    CsvWriter csv({"check", "value", "bound", "pass"});
    for (const AuditCheck& c : rep.checks)
        csv.add_row({c.name, CsvWriter::cell(c.value), CsvWriter::cell(c.bound),
                     c.pass ? "pass" : "fail"});
    emit(out, out_dir, "bessel_audit.csv", csv);
    out.exit_code = rep.all_pass() ? kOk : kCheckFailed;
    return out;
}

RunOutput run_from_config(const Config& cfg)
{
    set_workers(cfg.get_int("experiment", "workers", 0));
    std::string out_dir = cfg.get_or("experiment", "output_dir", "out");
    if (const char* env = std::getenv("STRICHARTZ_OUT")) out_dir = env;
    const double slope_tol = cfg.get_double("experiment", "slope_tol", 0.1);
    const double residual_tol = cfg.get_double("experiment", "residual_tol", 0.1);

    const std::string kind = cfg.get("experiment", "kind");
    if (kind == "exponents") {
        std::string text;
        return run_exponents_command(cfg.get_int("exponents", "n", 2),
                                     cfg.get_or("exponents", "p", "2"),
                                     cfg.get_or("exponents", "q", "2"), text);
    }
    if (kind == "knapp") return run_knapp(knapp_config_from(cfg), slope_tol, residual_tol, out_dir);
    if (kind == "operator-probe")
        return run_operator_probe(probe_config_from(cfg, "operator-probe"), slope_tol,
                                  residual_tol, out_dir);
    if (kind == "wave-probe")
        return run_wave_probe(probe_config_from(cfg, "wave-probe"), slope_tol, residual_tol,
                              out_dir);
    if (kind == "homo-probe") return run_homo(homo_config_from(cfg), out_dir);
    if (kind == "bessel-audit")
        return run_bessel_audit(cfg.get_double("bessel-audit", "c_max", 10.0), out_dir);
    throw std::invalid_argument("unknown experiment kind: " + kind);
}

} // namespace strichartz
