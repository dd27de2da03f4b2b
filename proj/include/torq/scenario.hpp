#pragma once

#include <string>
#include <vector>

#include "torq/torsion.hpp"

namespace torq {

struct scenario_parse_error : std::runtime_error {
    int line;
    scenario_parse_error(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
};

/* A verification scenario: category, torsion pair, slice cap and the checks
 * to run. Scenario files are versioned key = value text; three built-in
 * scenarios reproduce the worked examples. */
struct scenario {
    std::string name;
    torsion_pair pair;
    int cap = 0;
    std::vector<std::string> checks;
    std::string format = "text";
};

const std::vector<std::string>& check_registry();
std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);
scenario builtin_scenario(const std::string& name);

scenario parse_scenario_text(const std::string& text, const std::string& name);
scenario load_scenario(const std::string& path_or_builtin);

}  // namespace torq
