// Runs every acceptance criterion once and prints one PASS/FAIL line each.

#include "ospinv/suites.hpp"

#include <functional>
#include <iostream>
#include <map>

namespace {

using ospinv::Check;
using ospinv::Status;
using ospinv::SuiteOptions;
using ospinv::SuiteResult;

struct Criterion {
    std::string title;
    std::string suite;
    std::function<bool(const Check&)> select;
};

bool named(const Check& c, std::initializer_list<const char*> names) {
    for (const char* n : names)
        if (c.name == n) return true;
    return false;
}

}  // namespace

int main() {
    SuiteOptions opts;
    opts.threads = ospinv::default_threads();
    auto any = [](const Check&) { return true; };
    std::vector<Criterion> criteria{
        {"identity suite", "identities", any},
        {"super Pfaffian invariance", "invariance",
         [](const Check& c) {
             return named(c, {"omega.invariant", "omega.leading-term", "omega.square", "omega.degree"});
         }},
        {"pseudo-invariance under the even group", "pseudo", any},
        {"localization threshold", "regular-singular", [](const Check& c) { return c.name == "membership"; }},
        {"osp(2|2) equivalence", "osp22", any},
        {"invariant decomposition and D_lambda", "decomposition",
         [](const Check& c) {
             bool cell = c.params["m"] == 1 && c.params["n"] == 1 && c.params["N"] == 2;
             if (c.name == "decomposition.invariant") return cell && c.params["d"].get<int>() <= 6;
             return cell && c.name == "decomposition.D_lambda";
         }},
        {"pseudo decomposition and small k", "decomposition",
         [](const Check& c) { return named(c, {"decomposition.pseudo", "small-k"}); }},
        {"generation by Gamma(N) and the q_ij", "generation", [](const Check& c) { return c.name == "generation"; }},
        {"tensor invariants, Brauer span and Gamma^0", "tensor", any},
        {"structure relations", "structure", any},
        {"Gamma(N) dimension formula", "generation", [](const Check& c) { return c.name == "gamma.dimension"; }},
    };

    std::map<std::string, SuiteResult> cache;
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& cr = criteria[i];
        std::string error;
        std::vector<const Check*> selected;
        try {
            if (!cache.count(cr.suite)) cache.emplace(cr.suite, ospinv::run_suite(cr.suite, opts));
            for (const auto& c : cache.at(cr.suite).checks)
                if (cr.select(c)) selected.push_back(&c);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const Check* bad = nullptr;
        for (const auto* c : selected)
            if (c->status == Status::Fail && !bad) bad = c;
        bool ok = error.empty() && !selected.empty() && !bad;
        if (!ok) ++failed;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << cr.title << " (" << selected.size()
                  << " checks)";
        if (!error.empty()) std::cout << "  error: " << error;
        if (bad) std::cout << "  first failure: " << bad->name << " " << bad->params.dump() << " " << bad->detail;
        std::cout << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
