#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace ospinv {

enum class Status { Pass, Fail, Skip };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        case Status::Skip:
            return "skip";
    }
    return "fail";
}

/// One verified statement with its parameters.
struct Check {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::Pass;
    std::string detail;

    static Check of(std::string name, nlohmann::json params, bool ok, std::string detail = "") {
        return Check{std::move(name), std::move(params), ok ? Status::Pass : Status::Fail, std::move(detail)};
    }
};

inline bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status != Status::Fail; });
}

inline nlohmann::json check_to_json(const Check& c) {
    return {{"name", c.name}, {"params", c.params}, {"status", status_name(c.status)}, {"detail", c.detail}};
}

}  // namespace ospinv
