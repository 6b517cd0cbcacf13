#include "strichartz/config.hpp"
#include "strichartz/csv.hpp"
#include "strichartz/runner.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace strichartz;

namespace {

// Every subcommand assembles the same flat config that the `run` command
// reads from a file, so flags and config files stay interchangeable.
struct CommonOpts {
    int workers = 0;
    int seed = 7106242;
    std::string out_dir = "out";
    double slope_tol = 0.1;
    double residual_tol = 0.1;
};

void apply_common(Config& cfg, const CommonOpts& c)
{
    cfg.set("experiment", "workers", std::to_string(c.workers));
    cfg.set("experiment", "seed", std::to_string(c.seed));
    cfg.set("experiment", "output_dir", c.out_dir);
    cfg.set("experiment", "slope_tol", format_double(c.slope_tol));
    cfg.set("experiment", "residual_tol", format_double(c.residual_tol));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dispersive propagator laboratory: Bessel-kernel operators, mixed space-time "
                 "norms, and scaling-exponent experiments in spherical coordinates"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--workers", common.workers, "worker threads (0 = hardware, 1 = serial)");
    app.add_option("--seed", common.seed, "seed for the random probe profiles");
    app.add_option("--out", common.out_dir, "output directory for CSV reports");
    app.add_option("--slope-tol", common.slope_tol, "pass tolerance on fitted slopes");
    app.add_option("--residual-tol", common.residual_tol, "pass tolerance on log-fit residuals");

    // exponents n p q
    auto* exp_cmd = app.add_subcommand("exponents", "print the exponent triple and region");
    int exp_n = 2;
    std::string exp_p = "2", exp_q = "2";
    exp_cmd->add_option("n", exp_n, "ambient dimension")->required();
    exp_cmd->add_option("p", exp_p, "spatial exponent (number, fraction or inf)")->required();
    exp_cmd->add_option("q", exp_q, "temporal exponent")->required();

    // knapp
    auto* knapp_cmd = app.add_subcommand("knapp", "wave-packet necessity experiment");
    Config knapp_cfg;
    std::string k_family = "power:2", k_p = "4", k_q = "4", k_centering = "both",
                k_rlist = "16,32,64,128,256,512";
    int k_n = 2;
    double k_rho0 = 1.25;
    knapp_cmd->add_option("--n", k_n, "ambient dimension");
    knapp_cmd->add_option("--family", k_family, "dispersion family token");
    knapp_cmd->add_option("--rho0", k_rho0, "window center in [1, 2]");
    knapp_cmd->add_option("--p", k_p, "spatial exponent");
    knapp_cmd->add_option("--q", k_q, "temporal exponent");
    knapp_cmd->add_option("--r-list", k_rlist, "comma-separated dyadic radii");
    knapp_cmd->add_option("--centering", k_centering, "tube centering: group|phase|both");

    // operator-probe / wave-probe share flags
    auto* op_cmd = app.add_subcommand("operator-probe", "shell operator norm growth probe");
    auto* wave_cmd = app.add_subcommand("wave-probe", "same probe with the linear phase");
    struct ProbeFlags {
        int n = 2;
        double nu = 0.0;
        std::string family = "power:2", p = "inf", q = "4", rlist = "16,32,64,128,256";
        int random_probes = 8;
    } opf, wvf;
    wvf.n = 3;
    wvf.nu = 0.5;
    wvf.p = "inf";
    wvf.q = "2";
    for (auto [cmd, f] : {std::pair{op_cmd, &opf}, std::pair{wave_cmd, &wvf}}) {
        cmd->add_option("--n", f->n, "ambient dimension");
        cmd->add_option("--nu", f->nu, "Bessel order");
        cmd->add_option("--p", f->p, "spatial exponent");
        cmd->add_option("--q", f->q, "temporal exponent");
        cmd->add_option("--r-list", f->rlist, "comma-separated dyadic radii");
        cmd->add_option("--random-probes", f->random_probes, "number of random probes");
        if (f == &opf) cmd->add_option("--family", f->family, "dispersion family token");
    }

    // homo-probe
    auto* homo_cmd = app.add_subcommand("homo-probe", "estimate ratio probe (k / band / R sweeps)");
    struct {
        int n = 2;
        std::string family = "power:2", p = "4", q = "3", klist = "0,1,2,4", nlist = "0.25,1,4",
                    rlist;
        double alpha = 0.5;
    } hf;
    homo_cmd->add_option("--n", hf.n, "ambient dimension");
    homo_cmd->add_option("--family", hf.family, "dispersion family token");
    homo_cmd->add_option("--p", hf.p, "spatial exponent");
    homo_cmd->add_option("--q", hf.q, "temporal exponent");
    homo_cmd->add_option("--alpha", hf.alpha, "angular regularity");
    homo_cmd->add_option("--k-list", hf.klist, "harmonic degrees");
    homo_cmd->add_option("--n-list", hf.nlist, "dyadic frequency bands");
    homo_cmd->add_option("--r-list", hf.rlist, "optional Knapp radii");

    // bessel-audit
    auto* audit_cmd = app.add_subcommand("bessel-audit", "remainder/decay/square-function audits");
    double audit_cmax = 10.0;
    audit_cmd->add_option("--c-max", audit_cmax, "cap on r |J - main|");

    // run <config>
    auto* run_cmd = app.add_subcommand("run", "run an experiment from a config file");
    std::string config_path;
    run_cmd->add_option("config", config_path, "config file path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        Config cfg;
        if (exp_cmd->parsed()) {
            std::string text;
            set_workers(common.workers);
            RunOutput out = run_exponents_command(exp_n, exp_p, exp_q, text);
            std::cout << text;
            return out.exit_code;
        }
        if (run_cmd->parsed()) {
            cfg = Config::load(config_path);
        } else if (knapp_cmd->parsed()) {
            cfg.set("experiment", "kind", "knapp");
            cfg.set("knapp", "n", std::to_string(k_n));
            cfg.set("knapp", "family", k_family);
            cfg.set("knapp", "rho0", format_double(k_rho0));
            cfg.set("knapp", "p", k_p);
            cfg.set("knapp", "q", k_q);
            cfg.set("knapp", "r_list", k_rlist);
            cfg.set("knapp", "tube_centering", k_centering);
        } else if (op_cmd->parsed() || wave_cmd->parsed()) {
            const auto& f = op_cmd->parsed() ? opf : wvf;
            const std::string section = op_cmd->parsed() ? "operator-probe" : "wave-probe";
            cfg.set("experiment", "kind", section);
            cfg.set(section, "n", std::to_string(f.n));
            cfg.set(section, "nu", format_double(f.nu));
            cfg.set(section, "family", f.family);
            cfg.set(section, "p", f.p);
            cfg.set(section, "q", f.q);
            cfg.set(section, "r_list", f.rlist);
            cfg.set(section, "random_probes", std::to_string(f.random_probes));
        } else if (homo_cmd->parsed()) {
            cfg.set("experiment", "kind", "homo-probe");
            cfg.set("homo-probe", "n", std::to_string(hf.n));
            cfg.set("homo-probe", "family", hf.family);
            cfg.set("homo-probe", "p", hf.p);
            cfg.set("homo-probe", "q", hf.q);
            cfg.set("homo-probe", "alpha", format_double(hf.alpha));
            cfg.set("homo-probe", "k_list", hf.klist);
            cfg.set("homo-probe", "n_list", hf.nlist);
            if (!hf.rlist.empty()) cfg.set("homo-probe", "r_list", hf.rlist);
        } else if (audit_cmd->parsed()) {
            cfg.set("experiment", "kind", "bessel-audit");
            cfg.set("bessel-audit", "c_max", format_double(audit_cmax));
        }

        if (!run_cmd->parsed()) apply_common(cfg, common);
        // Flags override the file's common section when both are given.
        if (run_cmd->parsed() && common.workers > 0)
            cfg.set("experiment", "workers", std::to_string(common.workers));

        RunOutput out = run_from_config(cfg);
        for (const auto& [name, text] : out.csv_files)
            std::cerr << "wrote " << name << " (" << text.size() << " bytes)\n";
        return out.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
}
