#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "prohecke/suite.hpp"

using namespace prohecke;

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Iwahori-fixed vectors and the Bruhat-Tits resolution for GL_n over F_q((t))"};
    VerifierConfig cfg;
    std::string out;
    std::string checks;
    bool list = false, audit = false;
    app.add_option("--n", cfg.n, "rank, 2 or 3")->capture_default_str();
    app.add_option("--q", cfg.q, "residue field size, 2 or 3")->capture_default_str();
    app.add_option("--char", cfg.characteristic, "characteristic of k, 0 for Q")->capture_default_str();
    app.add_option("--ext-degree", cfg.ext_degree, "degree of k over its prime field")->capture_default_str();
    app.add_option("--chi", cfg.chi, "\"trivial\" or \"z=[...];tame=[...]\"")->capture_default_str();
    app.add_option("--budget-L", cfg.budget_L, "length budget of the fiber truncation")->capture_default_str();
    app.add_option("--radius", cfg.radius, "ball radius for the tree checks")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed of the sampled checks")->capture_default_str();
    app.add_option("--checks", checks, "comma separated check names; empty runs all");
    app.add_option("--cache-dir", cfg.cache_dir, std::string("coset table cache; default $") + kCacheDirEnv +
                                                     " or .prohecke-cache");
    app.add_option("--jobs", cfg.jobs, "checks run concurrently")->capture_default_str();
    app.add_option("--out", out, "write the certificate JSON here instead of stdout");
    app.add_flag("--list", list, "print the check names and exit");
    app.add_flag("--audit", audit, "run twice and compare the certificates without timing fields");
    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const auto& c : check_catalog()) std::cout << c.name << "  " << c.statement << "\n";
        return 0;
    }
    std::stringstream ss(checks);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) cfg.checks.push_back(item);

    std::vector<Certificate> certs;
    try {
        certs = run_suite(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    }
    bool audit_ok = true;
    if (audit) {
        const auto again = run_suite(cfg);
        audit_ok = certificates_json(cfg, certs, false) == certificates_json(cfg, again, false);
    }

    const std::string json = certificates_json(cfg, certs, true);
    if (out.empty()) {
        std::cout << json;
        std::cerr << summary_table(certs);
    } else {
        std::ofstream f(out);
        f << json;
        if (!f) {
            std::cerr << "cannot write " << out << "\n";
            return 2;
        }
        std::cout << summary_table(certs);
    }
    if (audit) std::cerr << "determinism audit: " << (audit_ok ? "pass" : "fail") << "\n";
    return aggregate_pass(certs) && audit_ok ? 0 : 1;
}
