#include "torq/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace torq {

const std::vector<std::string>& check_registry() {
    static const std::vector<std::string> names = {
        "torsion-pair", "equivalence", "ff-corollary",
        "ideal-identity", "wakamatsu", "lwc-triple"};
    return names;
}

std::vector<std::string> builtin_names() {
    return {"a3-paper", "tube5-case1-paper", "tube5-case2-paper"};
}

bool is_builtin(const std::string& name) {
    for (const std::string& b : builtin_names())
        if (b == name)
            return true;
    return false;
}

scenario builtin_scenario(const std::string& name) {
    scenario sc;
    sc.name = name;
    if (name == "a3-paper") {
        category_spec a3 = category_spec::linear(3);
        sc.pair = torsion_pair::explicit_lists(
            a3, {indec{2, 1}}, {indec{1, 1}, indec{1, 2}, indec{1, 3}, indec{3, 1}});
        sc.cap = 3;
        sc.checks = {"torsion-pair", "equivalence", "ff-corollary", "wakamatsu",
                     "lwc-triple"};
        return sc;
    }
    if (name == "tube5-case1-paper") {
        category_spec t5 = category_spec::tube(5, 30);
        wing_pair w0;
        w0.torsion = {indec{1, 3}, indec{2, 2}, indec{3, 1}};
        w0.free = {indec{0, 1}, indec{0, 2}, indec{0, 3}, indec{0, 4},
                   indec{1, 1}, indec{1, 2}, indec{2, 1}};
        wing_pair w1;
        w1.free = {indec{4, 1}};
        sc.pair = torsion_pair::tube_case1(t5, {0, 4}, {w0, w1});
        sc.cap = 8;
        sc.checks = {"torsion-pair", "equivalence", "ff-corollary", "wakamatsu"};
        return sc;
    }
    if (name == "tube5-case2-paper") {
        category_spec t5 = category_spec::tube(5, 40);
        wing_pair w;
        w.torsion = {indec{1, 5}, indec{2, 4}, indec{3, 3}, indec{4, 2},
                     indec{0, 1}, indec{3, 1}};
        w.free = {indec{1, 1}, indec{1, 2}, indec{1, 3}, indec{1, 4},
                  indec{2, 1}, indec{2, 2}, indec{2, 3}, indec{4, 1}};
        sc.pair = torsion_pair::tube_case2(t5, {0}, {w});
        sc.cap = 10;
        sc.checks = {"torsion-pair", "equivalence", "ideal-identity", "wakamatsu"};
        return sc;
    }
    throw std::invalid_argument("unknown built-in scenario: " + name);
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

}  // namespace

scenario parse_scenario_text(const std::string& text, const std::string& name) {
    std::map<std::string, std::pair<std::string, int>> kv;  // value + line number
    std::istringstream in(text);
    std::string line;
    int lno = 0;
    while (std::getline(in, line)) {
        ++lno;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw scenario_parse_error(lno, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw scenario_parse_error(lno, "empty key");
        if (kv.count(key))
            throw scenario_parse_error(lno, "duplicate key '" + key + "'");
        kv[key] = {val, lno};
    }

    auto get = [&](const std::string& key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end())
            throw scenario_parse_error(0, "missing required key '" + key + "'");
        return it->second.first;
    };
    auto line_of = [&](const std::string& key) {
        auto it = kv.find(key);
        return it == kv.end() ? 0 : it->second.second;
    };
    auto get_int = [&](const std::string& key) {
        try {
            return std::stoi(get(key));
        } catch (const scenario_parse_error&) {
            throw;
        } catch (const std::exception&) {
            throw scenario_parse_error(line_of(key), "'" + key + "' must be an integer");
        }
    };
    auto has = [&](const std::string& key) { return kv.count(key) > 0; };

    if (!has("schema"))
        throw scenario_parse_error(0, "missing required key 'schema'");
    if (get_int("schema") != 1)
        throw scenario_parse_error(line_of("schema"), "unsupported schema version");

    scenario sc;
    sc.name = name;
    std::string cat = get("category");
    category_spec spec;
    if (cat == "linear_a")
        spec = category_spec::linear(get_int("n"));
    else if (cat == "tube")
        spec = category_spec::tube(get_int("rank"),
                                   has("length_cap") ? get_int("length_cap") : 30);
    else
        throw scenario_parse_error(line_of("category"),
                                   "category must be linear_a or tube");

    auto parse_members = [&](const std::string& key) {
        std::vector<indec> out;
        if (!has(key))
            return out;
        for (const std::string& tok : split_ws(get(key))) {
            auto m = parse_indec(spec, tok);
            if (!m)
                throw scenario_parse_error(line_of(key),
                                           "bad member '" + tok + "' for " +
                                               spec.describe());
            out.push_back(*m);
        }
        return out;
    };
    auto parse_indices = [&](const std::string& key) {
        std::vector<int> out;
        for (const std::string& tok : split_ws(get(key))) {
            try {
                out.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw scenario_parse_error(line_of(key), "bad index '" + tok + "'");
            }
        }
        return out;
    };

    std::string pk = get("pair");
    try {
        if (pk == "explicit") {
            sc.pair = torsion_pair::explicit_lists(spec, parse_members("torsion"),
                                                   parse_members("free"));
        } else if (pk == "rays" || pk == "corays") {
            if (spec.kind != cat_kind::tube)
                throw scenario_parse_error(line_of("pair"),
                                           "ray/coray pairs require a tube");
            std::vector<int> idx = parse_indices(pk);
            std::vector<indec> wt = parse_members("wing_torsion");
            std::vector<indec> wf = parse_members("wing_free");
            // distribute wing members over the wings they sit in
            std::sort(idx.begin(), idx.end());
            size_t kc = idx.size();
            std::vector<wing_pair> wings(kc);
            auto wing_range = [&](size_t a) {
                int lo, hi;
                if (pk == "rays") {
                    lo = idx[a];
                    hi = (a + 1 < kc ? idx[a + 1] : idx[0] + spec.rank) - 1;
                } else {
                    lo = idx[a] + 1;
                    hi = a + 1 < kc ? idx[a + 1] : idx[0] + spec.rank;
                }
                return std::pair<int, int>{lo, hi};
            };
            auto place = [&](const indec& m, bool torsion) {
                for (size_t a = 0; a < kc; ++a) {
                    auto [lo, hi] = wing_range(a);
                    int s = spec.kind == cat_kind::tube ? lo + spec.norm(m.socle - lo)
                                                        : m.socle;
                    if (s + m.len - 1 <= hi) {
                        (torsion ? wings[a].torsion : wings[a].free).push_back(m);
                        return;
                    }
                }
                throw scenario_parse_error(
                    line_of(torsion ? "wing_torsion" : "wing_free"),
                    "member " + display(m) + " lies in no wing");
            };
            for (const indec& m : wt)
                place(m, true);
            for (const indec& m : wf)
                place(m, false);
            sc.pair = pk == "rays" ? torsion_pair::tube_case1(spec, idx, wings)
                                   : torsion_pair::tube_case2(spec, idx, wings);
        } else {
            throw scenario_parse_error(line_of("pair"),
                                       "pair must be explicit, rays or corays");
        }
    } catch (const std::invalid_argument& e) {
        throw scenario_parse_error(line_of("pair"), e.what());
    }

    sc.cap = has("cap") ? get_int("cap")
                        : (spec.kind == cat_kind::linear_a ? spec.n : 8);
    if (sc.cap < 1)
        throw scenario_parse_error(line_of("cap"), "cap must be positive");
    if (has("checks")) {
        for (const std::string& c : split_ws(get("checks"))) {
            bool known = false;
            for (const std::string& r : check_registry())
                if (r == c)
                    known = true;
            if (!known)
                throw scenario_parse_error(line_of("checks"), "unknown check '" + c +
                                                                  "'");
            sc.checks.push_back(c);
        }
    }
    if (has("format")) {
        std::string f = get("format");
        if (f != "text" && f != "structured")
            throw scenario_parse_error(line_of("format"),
                                       "format must be text or structured");
        sc.format = f;
    }
    return sc;
}

scenario load_scenario(const std::string& path_or_builtin) {
    if (is_builtin(path_or_builtin))
        return builtin_scenario(path_or_builtin);
    std::ifstream in(path_or_builtin);
    if (!in)
        throw scenario_parse_error(0, "cannot open scenario '" + path_or_builtin +
                                          "' (not a file or built-in name)");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string stem = path_or_builtin;
    size_t slash = stem.find_last_of('/');
    if (slash != std::string::npos)
        stem = stem.substr(slash + 1);
    size_t dot = stem.find_last_of('.');
    if (dot != std::string::npos)
        stem = stem.substr(0, dot);
    return parse_scenario_text(buf.str(), stem);
}

}  // namespace torq
