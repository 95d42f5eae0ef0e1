#ifndef ALPWAVE_REPORT_HPP
#define ALPWAVE_REPORT_HPP

#include <string>
#include <vector>

namespace alpwave {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

}  // namespace alpwave

#endif
