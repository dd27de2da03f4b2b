#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torq/cli.hpp"
#include "torq/equivalence.hpp"
#include "torq/figure.hpp"
#include "torq/scenario.hpp"

namespace py = pybind11;
using namespace torq;

namespace {

indec parse_or_throw(const category_spec& spec, const std::string& s) {
    auto m = parse_indec(spec, s);
    if (!m)
        throw py::value_error("bad indecomposable '" + s + "' for " + spec.describe());
    return *m;
}

std::vector<std::string> displays(const std::vector<indec>& v) {
    std::vector<std::string> out;
    for (const indec& m : v)
        out.push_back(display(m));
    return out;
}

py::dict check_to_dict(const check_result& c) {
    py::dict d;
    d["name"] = c.name;
    d["passed"] = c.passed;
    d["witnesses"] = c.witnesses;
    return d;
}

/* python-facing wrapper bundling a pair with the oracle field */
struct py_pair {
    torsion_pair pair;
    fp_field F;
};

}  // namespace

PYBIND11_MODULE(torq, m) {
    m.doc() = "torsion pairs and universal extensions in serial categories";

    py::class_<category_spec>(m, "Category")
        .def_property_readonly("describe", &category_spec::describe)
        .def("__repr__", &category_spec::describe);

    m.def("linear_a", &category_spec::linear, py::arg("n"),
          "representations of the linearly oriented A_n quiver");
    m.def("tube", &category_spec::tube, py::arg("rank"), py::arg("length_cap"),
          "nilpotent representations of the cyclic quiver (a tube)");

    m.def("indecomposables", [](const category_spec& spec) {
        return displays(list_indecomposables(spec));
    });
    m.def("hom_dim", [](const category_spec& spec, const std::string& a,
                        const std::string& b) {
        return hom_dim(spec, parse_or_throw(spec, a), parse_or_throw(spec, b));
    });
    m.def("ext_dim", [](const category_spec& spec, const std::string& a,
                        const std::string& b) {
        return ext_dim(spec, parse_or_throw(spec, a), parse_or_throw(spec, b));
    });
    m.def("tau", [](const category_spec& spec, const std::string& a) -> py::object {
        auto t = tau(spec, parse_or_throw(spec, a));
        if (!t)
            return py::none();
        return py::str(display(*t));
    });
    m.def("ar_sequence",
          [](const category_spec& spec, const std::string& a) -> py::object {
              fp_field F(101);
              auto e = ar_sequence(spec, parse_or_throw(spec, a), F);
              if (!e)
                  return py::none();
              py::dict d;
              d["sub"] = display(e->sub);
              d["mid"] = display(e->mid);
              d["quot"] = display(e->quot);
              return d;
          });
    m.def("enumerate_count", [](int n) {
        return enumerate_torsion_pairs(category_spec::linear(n)).size();
    });

    py::class_<py_pair>(m, "TorsionPair")
        .def_property_readonly("category",
                               [](const py_pair& p) { return p.pair.spec; })
        .def("membership",
             [](const py_pair& p, const std::string& s) {
                 switch (p.pair.membership(parse_or_throw(p.pair.spec, s))) {
                     case side::torsion:
                         return "torsion";
                     case side::free_part:
                         return "free";
                     default:
                         return "neither";
                 }
             })
        .def("verify",
             [](const py_pair& p, int cap) {
                 return check_to_dict(verify_torsion_pair(p.pair, cap, p.F));
             })
        .def("torsion_sequence",
             [](const py_pair& p, const std::string& s) {
                 formal_object x = formal_object::of(parse_or_throw(p.pair.spec, s));
                 ses e = torsion_sequence(p.pair, x, p.F);
                 py::dict d;
                 d["sub"] = display(e.sub);
                 d["mid"] = display(e.mid);
                 d["quot"] = display(e.quot);
                 return d;
             })
        .def("perp_slice",
             [](const py_pair& p, int cap) {
                 return displays(perp_ext_slice(p.pair, cap, p.F).members);
             })
        .def("script_e_slice",
             [](const py_pair& p, int cap) {
                 return displays(script_e_slice(p.pair, cap, p.F).members);
             })
        .def("functor_f",
             [](const py_pair& p, const std::string& s) {
                 formal_object x = formal_object::of(parse_or_throw(p.pair.spec, s));
                 return display(functor_f_obj(p.pair, x));
             })
        .def("functor_c",
             [](const py_pair& p, const std::string& s) {
                 formal_object x = formal_object::of(parse_or_throw(p.pair.spec, s));
                 return display(functor_c_obj(p.pair, x, p.F));
             })
        .def("minimal_universal_extension",
             [](const py_pair& p, const std::string& s) {
                 universal_extension ue = minimal_universal_extension(
                     p.pair, parse_or_throw(p.pair.spec, s), p.F);
                 py::dict d;
                 d["sub"] = display(ue.seq.sub);
                 d["mid"] = display(ue.seq.mid);
                 d["quot"] = display(ue.seq.quot);
                 return d;
             })
        .def("admits_universal_extension",
             [](const py_pair& p, const std::string& s, int cap) {
                 admit_decision d = admits_universal_extension(
                     p.pair, parse_or_throw(p.pair.spec, s), cap, p.F);
                 py::dict out;
                 out["admits"] = d.admits;
                 out["certificate"] = d.certificate;
                 return out;
             })
        .def("verify_equivalence",
             [](const py_pair& p, int cap) {
                 return check_to_dict(verify_equivalence(p.pair, cap, p.F));
             })
        .def("verify_ff_corollary",
             [](const py_pair& p, int cap) {
                 return check_to_dict(verify_ff_corollary(p.pair, cap, p.F));
             })
        .def("verify_ideal_identity",
             [](const py_pair& p, int cap) {
                 return check_to_dict(verify_ideal_identity(p.pair, cap, p.F));
             })
        .def("verify_lwc_triple",
             [](const py_pair& p, int cap) {
                 return check_to_dict(verify_lwc_triple(p.pair, cap, p.F));
             })
        .def("wakamatsu_suite",
             [](const py_pair& p, int cap) {
                 return check_to_dict(wakamatsu_suite(p.pair, cap, p.F));
             })
        .def("is_functorially_finite", [](const py_pair& p) {
            ff_decision d = is_functorially_finite(p.pair);
            py::dict out;
            out["value"] = d.value;
            out["reason"] = d.reason;
            return out;
        });

    m.def(
        "explicit_pair",
        [](const category_spec& spec, const std::vector<std::string>& torsion,
           const std::vector<std::string>& free, uint32_t prime) {
            std::vector<indec> t, f;
            for (const std::string& s : torsion)
                t.push_back(parse_or_throw(spec, s));
            for (const std::string& s : free)
                f.push_back(parse_or_throw(spec, s));
            return py_pair{torsion_pair::explicit_lists(spec, t, f), fp_field(prime)};
        },
        py::arg("category"), py::arg("torsion"), py::arg("free"),
        py::arg("prime") = 101);
    m.def(
        "builtin_pair",
        [](const std::string& name, uint32_t prime) {
            return py_pair{builtin_scenario(name).pair, fp_field(prime)};
        },
        py::arg("name"), py::arg("prime") = 101);
    m.def("builtin_scenarios", &builtin_names);

    m.def(
        "figure",
        [](const std::string& name, int cap, uint32_t prime) {
            scenario sc = load_scenario(name);
            fp_field F(prime);
            return render_figure(sc, cap > 0 ? cap : sc.cap, F);
        },
        py::arg("scenario"), py::arg("cap") = 0, py::arg("prime") = 101);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        cli_result r = run_cli(args);
        return py::make_tuple(r.code, r.out, r.err);
    });
}
