#pragma once

#include <string>
#include <vector>

namespace torq {

struct check_result {
    std::string name;
    bool passed = true;
    std::vector<std::string> witnesses;

    void fail(std::string w) {
        passed = false;
        witnesses.push_back(std::move(w));
    }
    void note(std::string w) { witnesses.push_back(std::move(w)); }
};

struct report {
    std::vector<check_result> checks;

    check_result& add(std::string name) {
        checks.push_back(check_result{std::move(name), true, {}});
        return checks.back();
    }
    bool all_passed() const {
        for (const check_result& c : checks)
            if (!c.passed)
                return false;
        return true;
    }
};

}  // namespace torq
