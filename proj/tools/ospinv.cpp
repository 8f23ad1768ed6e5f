// ospinv: compute super Pfaffians and run the verification suites.

#include "ospinv/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using ospinv::Check;
using ospinv::Status;
using ospinv::SuiteOptions;
using ospinv::SuiteResult;

struct Common {
    std::string format = "json";
    std::string out;
    bool timing = false;
};

struct SuiteReport {
    std::string suite;
    nlohmann::json params = nlohmann::json::object();
    SuiteResult result;
    long long elapsed_ms = 0;
    nlohmann::json artifacts;
};

nlohmann::json options_json(const SuiteOptions& o) {
    nlohmann::json j = nlohmann::json::object();
    auto put = [&](const char* key, const std::optional<int>& v) {
        if (v) j[key] = *v;
    };
    put("m", o.m);
    put("n", o.n);
    put("bign", o.bign);
    put("power", o.power);
    put("degree", o.degree);
    put("max_k", o.max_k);
    put("max_ell", o.max_ell);
    return j;
}

std::string render(const SuiteReport& r, const std::string& format) {
    int pass = 0, fail = 0, skip = 0;
    for (const auto& c : r.result.checks) {
        if (c.status == Status::Pass) ++pass;
        if (c.status == Status::Fail) ++fail;
        if (c.status == Status::Skip) ++skip;
    }
    if (format == "text") {
        std::ostringstream os;
        os << "suite " << r.suite << " " << r.params.dump() << "\n";
        for (const auto& c : r.result.checks) {
            os << (c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP") << "  " << c.name
               << " " << c.params.dump();
            if (!c.detail.empty()) os << "  " << c.detail;
            os << "\n";
        }
        for (const auto& obs : r.result.observations) os << "NOTE  " << obs << "\n";
        os << pass << " passed, " << fail << " failed, " << skip << " skipped";
        if (r.elapsed_ms > 0) os << " in " << r.elapsed_ms << " ms";
        os << "\n";
        return os.str();
    }
    nlohmann::json j;
    j["schema"] = 1;
    j["suite"] = r.suite;
    j["params"] = r.params;
    auto checks = nlohmann::json::array();
    for (const auto& c : r.result.checks) checks.push_back(ospinv::check_to_json(c));
    j["checks"] = checks;
    j["observations"] = r.result.observations;
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"skip", skip}};
    j["elapsed_ms"] = r.elapsed_ms;
    if (!r.artifacts.is_null()) j["artifacts"] = r.artifacts;
    return j.dump(2) + "\n";
}

void emit(const std::string& text, const Common& c) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << text;
}

int finish(SuiteReport& r, const Common& c, std::chrono::steady_clock::time_point start) {
    if (c.timing) {
        r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                           .count();
    }
    emit(render(r, c.format), c);
    return ospinv::all_pass(r.result.checks) ? 0 : 1;
}

nlohmann::json tensor_json(const ospinv::TensorVector& v) {
    auto j = nlohmann::json::array();
    for (const auto& [word, c] : v.coeffs)
        j.push_back({{"word", word}, {"coeff", {{"re", c.re().to_string()}, {"im", c.im().to_string()}}}});
    return j;
}

int cmd_omega(int m, int n, const Common& c) {
    if (m < 1 || n < 0) throw std::invalid_argument("omega needs m >= 1 and n >= 0");
    if (c.format == "text") {
        auto om = ospinv::omega(m, n);
        std::ostringstream os;
        os << "Omega(m=" << m << ", n=" << n << ") degree " << om.total_degree().value_or(-1) << ", " << om.size()
           << " terms\n"
           << "leading term: " << ospinv::leading_term(om).to_string() << "\n"
           << om.to_string() << "\n";
        emit(os.str(), c);
        return 0;
    }
    auto j = ospinv::omega_document(m, n);
    emit(j.dump(2) + "\n", c);
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact super Pfaffian computations and verification suites"};
    app.require_subcommand(1);
    Common common;
    SuiteOptions opts;
    opts.threads = ospinv::default_threads();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", common.out, "write the report to FILE");
        sub->add_option("--threads", opts.threads, "worker count (default: OSPINV_THREADS or 1)")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--timing", common.timing, "record elapsed_ms (reports are then not reproducible)");
    };
    auto add_int = [](CLI::App* sub, const std::string& flag, std::optional<int>& target, const std::string& help) {
        sub->add_option_function<int>(flag, [&target](const int& v) { target = v; }, help);
    };

    int om_m = 1, om_n = 0;
    auto* omega = app.add_subcommand("omega", "print the super Pfaffian Omega for (m, n)");
    omega->add_option("--m", om_m, "even dimension")->required();
    omega->add_option("--n", om_n, "half the odd dimension")->required();
    add_common(omega);

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(ospinv::suite_names()));
    add_int(verify, "--m", opts.m, "even dimension");
    add_int(verify, "--n", opts.n, "half the odd dimension");
    add_int(verify, "--bign", opts.bign, "number of copies N");
    add_int(verify, "--power", opts.power, "tensor power");
    add_int(verify, "--degree", opts.degree, "maximal degree");
    add_int(verify, "--max-k", opts.max_k, "maximal k");
    add_int(verify, "--max-ell", opts.max_ell, "maximal power ell");
    add_common(verify);

    auto* decompose = app.add_subcommand("decompose", "compare brute invariant dimensions with the gl_N decomposition");
    add_int(decompose, "--m", opts.m, "even dimension");
    add_int(decompose, "--n", opts.n, "half the odd dimension");
    add_int(decompose, "--bign", opts.bign, "number of copies N");
    add_int(decompose, "--degree", opts.degree, "maximal degree");
    add_common(decompose);

    auto* tensor = app.add_subcommand("tensor", "invariants and pseudo invariants in a tensor power of V");
    add_int(tensor, "--m", opts.m, "even dimension");
    add_int(tensor, "--n", opts.n, "half the odd dimension");
    add_int(tensor, "--power", opts.power, "tensor power N");
    add_common(tensor);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        if (*omega) return cmd_omega(om_m, om_n, common);
        if (*verify) {
            SuiteReport r{suite, options_json(opts), ospinv::run_suite(suite, opts), 0, {}};
            return finish(r, common, start);
        }
        if (*decompose) {
            opts.m = opts.m.value_or(1);
            opts.n = opts.n.value_or(1);
            opts.bign = opts.bign.value_or(2);
            opts.degree = opts.degree.value_or(3);
            SuiteReport r{"decompose", options_json(opts), ospinv::run_suite("decomposition", opts), 0, {}};
            return finish(r, common, start);
        }
        if (*tensor) {
            int m = opts.m.value_or(1), n = opts.n.value_or(1), N = opts.power.value_or(2);
            if (m < 0 || n < 0 || N < 1) throw std::invalid_argument("tensor needs m, n >= 0 and power >= 1");
            auto t = ospinv::tensor_invariants(m, n, N, opts.threads);
            long long fi = 0, fp = 0;
            for (const auto& mu : ospinv::enumerate_partitions(N, N, ospinv::PartitionFilter::EvenHook, m, n))
                fi += ospinv::f_mu(mu);
            for (const auto& mu : ospinv::enumerate_partitions(N, N, ospinv::PartitionFilter::PseudoAdmissible, m, n))
                fp += ospinv::f_mu(mu);
            nlohmann::json p{{"m", m}, {"n", n}, {"N", N}};
            SuiteReport r{"tensor", p, {}, 0, nlohmann::json::object()};
            auto q = p;
            q["formula"] = fi;
            q["brute"] = t.dim_inv;
            r.result.checks.push_back(Check::of("tensor.invariant", q, fi == t.dim_inv));
            q["formula"] = fp;
            q["brute"] = t.dim_pseudo;
            r.result.checks.push_back(Check::of("tensor.pseudo", q, fp == t.dim_pseudo));
            auto inv = nlohmann::json::array(), ps = nlohmann::json::array();
            for (const auto& v : t.inv_basis) inv.push_back(tensor_json(v));
            for (const auto& v : t.pseudo_basis) ps.push_back(tensor_json(v));
            r.artifacts = {{"dims", {t.dim_inv, t.dim_pseudo}}, {"invariant_basis", inv}, {"pseudo_basis", ps}};
            return finish(r, common, start);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "ospinv: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "ospinv: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "ospinv: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "ospinv: internal error: " << e.what() << "\n";
        return 1;
    }
}
