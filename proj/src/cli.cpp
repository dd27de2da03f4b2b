#include "torq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "torq/equivalence.hpp"
#include "torq/figure.hpp"
#include "torq/scenario.hpp"

namespace torq {

namespace {

using json = nlohmann::ordered_json;

check_result run_check(const std::string& name, const torsion_pair& pair, int cap,
                       const fp_field& F) {
    if (name == "torsion-pair")
        return verify_torsion_pair(pair, cap, F);
    if (name == "equivalence")
        return verify_equivalence(pair, cap, F);
    if (name == "ff-corollary")
        return verify_ff_corollary(pair, cap, F);
    if (name == "ideal-identity")
        return verify_ideal_identity(pair, cap, F);
    if (name == "wakamatsu")
        return wakamatsu_suite(pair, cap, F);
    if (name == "lwc-triple")
        return verify_lwc_triple(pair, cap, F);
    throw std::invalid_argument("unknown check '" + name + "'");
}

std::string report_json(const scenario& sc, int cap, uint32_t prime,
                        const report& rep) {
    json doc;
    doc["schema_version"] = 1;
    doc["scenario"] = sc.name;
    doc["category"] = sc.pair.spec.describe();
    doc["prime"] = prime;
    doc["cap"] = cap;
    doc["checks"] = json::array();
    for (const check_result& c : rep.checks) {
        json jc;
        jc["name"] = c.name;
        jc["status"] = c.passed ? "pass" : "fail";
        jc["witnesses"] = c.witnesses;
        doc["checks"].push_back(jc);
    }
    doc["status"] = rep.all_passed() ? "pass" : "fail";
    return doc.dump(2) + "\n";
}

std::string report_text(const scenario& sc, int cap, uint32_t prime,
                        const report& rep) {
    std::string out = "scenario " + sc.name + "  " + sc.pair.spec.describe() +
                      "  prime " + std::to_string(prime) + "  cap " +
                      std::to_string(cap) + "\n";
    for (const check_result& c : rep.checks) {
        out += "check " + c.name + ": " + (c.passed ? "PASS" : "FAIL") + "\n";
        for (const std::string& w : c.witnesses)
            out += "  " + w + "\n";
    }
    out += std::string("overall: ") + (rep.all_passed() ? "PASS" : "FAIL") + "\n";
    return out;
}

int cmd_verify(const std::string& target, int cap_override, const std::string& format,
               uint32_t prime, cli_result& res) {
    scenario sc = load_scenario(target);
    int cap = cap_override > 0 ? cap_override : sc.cap;
    std::string fmt = format.empty() ? sc.format : format;
    fp_field F(prime);
    report rep;
    for (const std::string& name : sc.checks)
        rep.checks.push_back(run_check(name, sc.pair, cap, F));
    res.out = fmt == "structured" ? report_json(sc, cap, prime, rep)
                                  : report_text(sc, cap, prime, rep);
    return rep.all_passed() ? cli_ok : cli_check_failed;
}

int cmd_enumerate(int n, const std::string& format, uint32_t prime, cli_result& res) {
    if (n < 1 || n > 6) {
        res.err = "enumerate: --n must lie in 1..6 (the search is exponential in the "
                  "number of indecomposables)\n";
        return cli_input_error;
    }
    fp_field F(prime);
    category_spec spec = category_spec::linear(n);
    std::vector<torsion_pair> pairs = enumerate_torsion_pairs(spec);
    bool all_pass = true;
    std::vector<std::pair<std::string, bool>> rows;
    for (const torsion_pair& p : pairs) {
        bool ok = verify_equivalence(p, n, F).passed;
        all_pass = all_pass && ok;
        formal_object t;
        t.summands = p.torsion_list;
        rows.push_back({display(t), ok});
    }
    if (format == "structured") {
        json doc;
        doc["schema_version"] = 1;
        doc["category"] = spec.describe();
        doc["prime"] = prime;
        doc["count"] = pairs.size();
        doc["pairs"] = json::array();
        for (const auto& [tdesc, ok] : rows) {
            json jp;
            jp["torsion"] = tdesc;
            jp["equivalence"] = ok ? "pass" : "fail";
            doc["pairs"].push_back(jp);
        }
        doc["status"] = all_pass ? "pass" : "fail";
        res.out = doc.dump(2) + "\n";
    } else {
        res.out = "torsion pairs of " + spec.describe() + ": " +
                  std::to_string(pairs.size()) + "\n";
        for (const auto& [tdesc, ok] : rows)
            res.out += "  T = " + tdesc + "  equivalence " + (ok ? "PASS" : "FAIL") +
                       "\n";
        res.out += std::string("overall: ") + (all_pass ? "PASS" : "FAIL") + "\n";
    }
    return all_pass ? cli_ok : cli_check_failed;
}

int cmd_figure(const std::string& target, int cap_override, uint32_t prime,
               cli_result& res) {
    scenario sc = load_scenario(target);
    int cap = cap_override > 0 ? cap_override : sc.cap;
    fp_field F(prime);
    res.out = render_figure(sc, cap, F);
    return cli_ok;
}

}  // namespace

cli_result run_cli(const std::vector<std::string>& args) {
    cli_result res;
    CLI::App app{"torsion pair and universal extension verifier"};
    app.require_subcommand(1);

    std::string target;
    int cap = 0;
    std::string format;
    uint32_t prime = 101;
    int n = 0;

    CLI::App* verify = app.add_subcommand("verify", "run a scenario's checks");
    verify->add_option("scenario", target, "scenario file or built-in name")
        ->required();
    verify->add_option("--cap", cap, "slice cap override");
    verify->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    verify->add_option("--prime", prime, "oracle field characteristic");

    CLI::App* enumerate = app.add_subcommand("enumerate",
                                             "all torsion pairs of linear_a(n)");
    enumerate->add_option("--n", n, "number of vertices (1..6)")->required();
    enumerate->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    enumerate->add_option("--prime", prime, "oracle field characteristic");

    CLI::App* figure = app.add_subcommand("figure", "render membership pictures");
    figure->add_option("scenario", target, "scenario file or built-in name")
        ->required();
    figure->add_option("--cap", cap, "slice cap override");
    figure->add_option("--prime", prime, "oracle field characteristic");

    std::vector<const char*> argv;
    argv.push_back("torq");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()),
                  const_cast<char**>(argv.data()));
    } catch (const CLI::CallForHelp& e) {
        res.out = app.help();
        res.code = cli_ok;
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string(e.what()) + "\n";
        res.code = cli_input_error;
        return res;
    }

    try {
        if (verify->parsed())
            res.code = cmd_verify(target, cap, format, prime, res);
        else if (enumerate->parsed())
            res.code = cmd_enumerate(n, format, prime, res);
        else if (figure->parsed())
            res.code = cmd_figure(target, cap, prime, res);
    } catch (const scenario_parse_error& e) {
        res.err = std::string("scenario error: ") + e.what() + "\n";
        res.code = cli_input_error;
    } catch (const not_stabilized_error& e) {
        res.err = std::string("not stabilized: ") + e.what() + "\n";
        res.code = cli_not_stabilized;
    } catch (const cap_error& e) {
        res.err = std::string("cap error: ") + e.what() + "\n";
        res.code = cli_input_error;
    } catch (const std::invalid_argument& e) {
        res.err = std::string("input error: ") + e.what() + "\n";
        res.code = cli_input_error;
    }
    return res;
}

}  // namespace torq
