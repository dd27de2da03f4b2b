#include "torq/figure.hpp"

#include <functional>

#include "torq/equivalence.hpp"

namespace torq {

namespace {

/* node column: tubes wrap around a strip of width 2*rank, the linear quiver
 * spreads into a triangle */
int column_of(const category_spec& spec, const indec& m) {
    if (spec.kind == cat_kind::linear_a)
        return 2 * (m.socle - 1) + (m.len - 1);
    return (2 * m.socle + m.len - 1) % (2 * spec.rank);
}

std::string grid(const category_spec& spec, int cap,
                 const std::function<char(const indec&)>& mark) {
    int width = spec.kind == cat_kind::linear_a ? 2 * spec.n - 1 : 2 * spec.rank;
    int top = std::min(cap, spec.max_len());
    std::string out;
    for (int l = top; l >= 1; --l) {
        std::string row(width, ' ');
        for (const indec& m : list_indecomposables(spec))
            if (m.len == l)
                row[column_of(spec, m)] = mark(m);
        while (!row.empty() && row.back() == ' ')
            row.pop_back();
        char label[16];
        std::snprintf(label, sizeof(label), "l=%2d  ", l);
        out += label;
        out += row;
        out += '\n';
    }
    std::string axis(width, ' ');
    for (int s = spec.min_socle(); s < spec.min_socle() + spec.vertex_count(); ++s) {
        int col = spec.kind == cat_kind::linear_a ? 2 * (s - 1) : 2 * s;
        axis[col] = static_cast<char>('0' + s % 10);
    }
    out += "socle ";
    out += axis;
    out += '\n';
    return out;
}

/* structurally excluded nodes of the classification families: outside every
 * wing and not on a declared ray/coray */
bool structurally_excluded(const torsion_pair& p, const indec& m) {
    if (p.k == torsion_pair::kind::explicit_pair)
        return false;
    const category_spec& spec = p.spec;
    for (const wing_pair& w : p.wings) {
        int s = w.lo + spec.norm(m.socle - w.lo);
        if (s + m.len - 1 <= w.hi)
            return false;
    }
    for (int i : p.indices) {
        if (p.k == torsion_pair::kind::tube_rays && spec.socle_eq(m.socle, i))
            return false;
        if (p.k == torsion_pair::kind::tube_corays && spec.socle_eq(m.top(), i))
            return false;
    }
    return true;
}

}  // namespace

std::string render_figure(const scenario& sc, int cap, const fp_field& F) {
    const torsion_pair& p = sc.pair;
    const category_spec& spec = p.spec;
    std::string out;
    out += "figure " + sc.name + "  " + spec.describe() + "  slice cap " +
           std::to_string(cap) + "\n";
    out += "marks: # torsion  * free  o neither  x excluded";
    if (spec.kind == cat_kind::tube)
        out += "   (strip wraps: left and right edges identified)";
    out += "\n\n";
    out += grid(spec, cap, [&](const indec& m) {
        switch (p.membership(m)) {
            case side::torsion:
                return '#';
            case side::free_part:
                return '*';
            case side::neither:
                return structurally_excluded(p, m) ? 'x' : 'o';
        }
        return '?';
    });

    subcategory_slice perp = perp_ext_slice(p, cap, F);
    subcategory_slice esl = script_e_slice(p, cap, F);

    out += "\next-orthogonal complement of the torsion part, torsion summands "
           "removed (@ = member):\n";
    out += grid(spec, cap, [&](const indec& m) {
        return perp.has(m) && p.membership(m) != side::torsion ? '@' : '.';
    });
    out += "\ntorsion-free objects admitting a universal extension (@ = member):\n";
    out += grid(spec, cap, [&](const indec& m) { return esl.has(m) ? '@' : '.'; });
    return out;
}

}  // namespace torq
