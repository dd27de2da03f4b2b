#include "torq/extensions.hpp"

#include <algorithm>

namespace torq {

namespace {

/* hom_element as a column/row over summands: helpers for the categorical
 * Gauss pivoting used by minimalize */

hom_element restrict_column(const category_spec& spec, const hom_element& f, int j) {
    // f restricted to source summand j
    formal_object src = formal_object::of(f.src.summands[j]);
    hom_element out(src, f.dst);
    (void)spec;
    for (size_t i = 0; i < f.dst.summands.size(); ++i)
        for (const hom_term& t : f.entry(static_cast<int>(i), j))
            out.entry(static_cast<int>(i), 0).push_back(t);
    return out;
}

hom_element restrict_row(const category_spec& spec, const hom_element& f, int i) {
    formal_object dst = formal_object::of(f.dst.summands[i]);
    hom_element out(f.src, dst);
    (void)spec;
    for (size_t j = 0; j < f.src.summands.size(); ++j)
        for (const hom_term& t : f.entry(i, static_cast<int>(j)))
            out.entry(0, static_cast<int>(j)).push_back(t);
    return out;
}

/* inverse of an automorphism of a formal object, via the matrix oracle */
hom_element hom_inverse(const category_spec& spec, const fp_field& F,
                        const hom_element& u) {
    if (!(u.src == u.dst))
        throw std::logic_error("hom_inverse: not an endomorphism");
    rep_layout L = layout_of(spec, u.src);
    vertex_maps m = hom_to_mats(spec, F, u, L, L);
    vertex_maps inv(m.size());
    for (size_t v = 0; v < m.size(); ++v)
        inv[v] = mat_inverse(F, m[v]);
    return mats_to_hom(spec, F, inv, L, L);
}

formal_object drop_summand(const formal_object& x, int idx) {
    std::vector<indec> parts;
    for (size_t i = 0; i < x.summands.size(); ++i)
        if (static_cast<int>(i) != idx)
            parts.push_back(x.summands[i]);
    formal_object out;
    out.summands = std::move(parts);  // order preserved (still sorted)
    return out;
}

hom_element drop_row_col(const hom_element& f, int drop_i, int drop_j) {
    formal_object src = drop_j >= 0 ? drop_summand(f.src, drop_j) : f.src;
    formal_object dst = drop_i >= 0 ? drop_summand(f.dst, drop_i) : f.dst;
    hom_element out(src, dst);
    int ii = 0;
    for (size_t i = 0; i < f.dst.summands.size(); ++i) {
        if (static_cast<int>(i) == drop_i)
            continue;
        int jj = 0;
        for (size_t j = 0; j < f.src.summands.size(); ++j) {
            if (static_cast<int>(j) == drop_j)
                continue;
            out.entry(ii, jj) = f.entry(static_cast<int>(i), static_cast<int>(j));
            ++jj;
        }
        ++ii;
    }
    return out;
}

}  // namespace

std::vector<indec> relevant_generators(const torsion_pair& pair, const indec& y) {
    const category_spec& spec = pair.spec;
    int probe = spec.kind == cat_kind::linear_a ? spec.n : spec.rank;
    std::vector<indec> gens;
    for (const indec& g : pair.torsion_members(probe))
        if (ext_dim(spec, y, g) > 0)
            gens.push_back(g);
    for (int t : pair.intensional_coray_tops())
        if (pair.ext_to_coray_nonzero(y, t))
            throw std::domain_error(
                "no universal extension: " + display(y) +
                " has nonzero extensions by coray members of every length (top residue " +
                std::to_string(t) + ")");
    return gens;
}

universal_extension bongartz_extension(const torsion_pair& pair, const indec& y,
                                       const std::vector<indec>& generators,
                                       const fp_field& F) {
    const category_spec& spec = pair.spec;
    require_indec(spec, y);
    for (const indec& g : generators)
        if (pair.membership(g) != side::torsion)
            throw std::invalid_argument("generator " + display(g) + " is not torsion");

    formal_object yobj = formal_object::of(y);
    std::vector<indec> gens = generators;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<ses> basis;
    std::vector<indec> sub_parts;
    for (const indec& g : gens)
        for (ses& e : ext_basis(spec, y, g, F)) {
            sub_parts.push_back(g);
            basis.push_back(std::move(e));
        }

    if (basis.empty()) {
        universal_extension ue;
        ue.seq.sub = formal_object::zero();
        ue.seq.mid = yobj;
        ue.seq.quot = yobj;
        ue.seq.inc = hom_zero(ue.seq.sub, ue.seq.mid);
        ue.seq.prj = hom_identity(yobj);
        ue.minimal = true;
        return ue;
    }

    // sub_parts is collected in canonical order, so slots match the sorted sub
    formal_object sub(sub_parts);
    rep_layout LX = layout_of(spec, sub);
    rep_layout LY = layout_of(spec, yobj);

    // stacked cocycle: the class of the pullback of the direct sum along the
    // diagonal is the tuple of the summand classes
    std::vector<fmat> Cm(arrow_count(spec));
    for (int ai = 0; ai < arrow_count(spec); ++ai)
        Cm[ai] = fmat(LX.vdim[arrow_target_vidx(spec, ai)],
                      LY.vdim[arrow_source_vidx(spec, ai)]);
    for (size_t bi = 0; bi < basis.size(); ++bi) {
        const ses& e = basis[bi];
        rep_layout LG = layout_of(spec, e.sub);
        cocycle Ci = cocycle_of(spec, F, e);
        const indec& g = sub.summands[bi];
        for (int ai = 0; ai < arrow_count(spec); ++ai) {
            int tv = arrow_target_vidx(spec, ai);
            for (int t = 0; t < g.len; ++t) {
                if (vindex(spec, g.socle + t) != tv)
                    continue;
                int from_row = LG.pos[0][t];
                int to_row = LX.pos[bi][t];
                for (int c = 0; c < Ci[ai].cols; ++c)
                    Cm[ai].at(to_row, c) = Ci[ai].at(from_row, c);
            }
        }
    }

    matrix_rep E = extension_rep(spec, F, LX, LY, Cm);
    decomposition D = decompose(spec, F, E);
    rep_layout LM = layout_of(spec, D.obj);

    int nv = spec.vertex_count();
    vertex_maps iso_inv(nv);
    for (int v = 0; v < nv; ++v)
        iso_inv[v] = D.iso[v].rows > 0 ? mat_inverse(F, D.iso[v]) : fmat(0, 0);

    vertex_maps inc(nv), prj(nv);
    for (int v = 0; v < nv; ++v) {
        fmat i0(LX.vdim[v] + LY.vdim[v], LX.vdim[v]);
        for (int r = 0; r < LX.vdim[v]; ++r)
            i0.at(r, r) = 1;
        inc[v] = mat_mul(F, iso_inv[v], i0);
        fmat p0(LY.vdim[v], LX.vdim[v] + LY.vdim[v]);
        for (int r = 0; r < LY.vdim[v]; ++r)
            p0.at(r, LX.vdim[v] + r) = 1;
        prj[v] = mat_mul(F, p0, D.iso[v]);
    }

    universal_extension ue;
    ue.seq.sub = sub;
    ue.seq.mid = D.obj;
    ue.seq.quot = yobj;
    ue.seq.inc = mats_to_hom(spec, F, inc, LX, LM);
    ue.seq.prj = mats_to_hom(spec, F, prj, LM, LY);
    exact_certificate cert = certify_exact(spec, F, ue.seq);
    if (!cert.ok)
        throw std::logic_error("bongartz_extension: constructed sequence not exact: " +
                               cert.diagnostic);
    ue.minimal = false;
    return ue;
}

universal_extension minimalize(const universal_extension& in, const torsion_pair& pair,
                               const fp_field& F) {
    const category_spec& spec = pair.spec;
    ses cur = in.seq;

    // phase 1: right-minimalize the epi by zeroing columns with automorphisms
    bool changed = true;
    while (changed) {
        changed = false;
        int nmid = static_cast<int>(cur.mid.summands.size());
        for (int j = 0; j < nmid; ++j) {
            hom_element pj = restrict_column(spec, cur.prj, j);
            if (pj.is_zero())
                continue;
            // unknowns: basis maps mid_j -> mid_m (radical endomorphisms when
            // m = j); equation: pj + sum prj_m g_m = 0 in Hom(mid_j, quot)
            formal_object mj = formal_object::of(cur.mid.summands[j]);
            std::vector<hom_element> unknowns;
            for (int m = 0; m < nmid; ++m)
                for (int k : basis_hom_ks(spec, cur.mid.summands[j], cur.mid.summands[m])) {
                    if (m == j && k == 0)
                        continue;  // only radical endomorphisms keep U invertible
                    hom_element g(mj, cur.mid);
                    g.entry(m, 0).push_back(hom_term{k, 1});
                    unknowns.push_back(std::move(g));
                }
            std::vector<uint32_t> rhs = hom_coords(spec, pj);
            int rows = static_cast<int>(rhs.size());
            if (rows == 0)
                continue;
            fmat A(rows, static_cast<int>(unknowns.size()));
            for (size_t u = 0; u < unknowns.size(); ++u) {
                std::vector<uint32_t> col =
                    hom_coords(spec, hom_compose(spec, F, cur.prj, unknowns[u]));
                for (int r = 0; r < rows; ++r)
                    A.at(r, static_cast<int>(u)) = col[r];
            }
            std::vector<uint32_t> neg_rhs(rhs.size());
            for (size_t r = 0; r < rhs.size(); ++r)
                neg_rhs[r] = F.neg(rhs[r]);
            std::vector<uint32_t> sol;
            if (!solve(F, A, neg_rhs, sol))
                continue;  // this column is essential
            // U = id + Delta, Delta supported on column j
            hom_element U = hom_identity(cur.mid);
            for (size_t u = 0; u < unknowns.size(); ++u)
                if (sol[u]) {
                    for (int m = 0; m < nmid; ++m)
                        for (const hom_term& t : unknowns[u].entry(m, 0))
                            U.add_term(F, m, j, t.k, F.mul(t.c, sol[u]));
                }
            hom_element Uinv = hom_inverse(spec, F, U);
            cur.prj = hom_compose(spec, F, cur.prj, U);
            cur.inc = hom_compose(spec, F, Uinv, cur.inc);
            changed = true;
        }
    }

    // phase 2: split off middle summands with zero projection together with
    // the matching sub summands (the trivial factors), canonical order
    bool stripped = true;
    while (stripped) {
        stripped = false;
        int nmid = static_cast<int>(cur.mid.summands.size());
        for (int j = 0; j < nmid; ++j) {
            if (!restrict_column(spec, cur.prj, j).is_zero())
                continue;
            // composite sub -> mid_j must hit an invertible entry
            hom_element qj = restrict_row(spec, cur.inc, j);
            int pivot = -1;
            uint32_t pivot_c = 0;
            for (size_t m = 0; m < cur.sub.summands.size(); ++m) {
                if (!(cur.sub.summands[m] == cur.mid.summands[j]))
                    continue;
                for (const hom_term& t : qj.entry(0, static_cast<int>(m)))
                    if (t.k == 0 && t.c % F.p != 0) {
                        pivot = static_cast<int>(m);
                        pivot_c = t.c;
                        break;
                    }
                if (pivot >= 0)
                    break;
            }
            if (pivot < 0)
                throw std::logic_error(
                    "minimalize: zero column without a trivial factor; input is not a "
                    "universal extension over a torsion pair");
            (void)pivot_c;
            // column operations on sub making row j the unit at `pivot`
            hom_element g_m(formal_object::of(cur.sub.summands[pivot]),
                            formal_object::of(cur.mid.summands[j]));
            for (const hom_term& t : qj.entry(0, pivot))
                g_m.entry(0, 0).push_back(t);
            hom_element g_m_inv = hom_inverse(spec, F, g_m);  // same interval
            hom_element V = hom_identity(cur.sub);
            for (size_t kcol = 0; kcol < cur.sub.summands.size(); ++kcol) {
                if (static_cast<int>(kcol) == pivot) {
                    V.entry(pivot, pivot).clear();
                    for (const hom_term& t : g_m_inv.entry(0, 0))
                        V.entry(pivot, pivot).push_back(t);
                    continue;
                }
                // V[pivot][kcol] = -g_m^{-1} g_kcol
                hom_element g_k(formal_object::of(cur.sub.summands[kcol]),
                                formal_object::of(cur.mid.summands[j]));
                for (const hom_term& t : qj.entry(0, static_cast<int>(kcol)))
                    g_k.entry(0, 0).push_back(t);
                hom_element prod = hom_compose(spec, F, g_m_inv, g_k);
                for (const hom_term& t : prod.entry(0, 0))
                    V.add_term(F, pivot, static_cast<int>(kcol), t.k, F.neg(t.c));
            }
            cur.inc = hom_compose(spec, F, cur.inc, V);
            // row operations on mid clearing column `pivot` outside row j
            hom_element W = hom_identity(cur.mid);
            for (size_t r = 0; r < cur.mid.summands.size(); ++r) {
                if (static_cast<int>(r) == j)
                    continue;
                for (const hom_term& t : cur.inc.entry(static_cast<int>(r), pivot))
                    W.add_term(F, static_cast<int>(r), j, t.k, F.neg(t.c));
            }
            hom_element Winv = hom_inverse(spec, F, W);
            cur.inc = hom_compose(spec, F, W, cur.inc);
            cur.prj = hom_compose(spec, F, cur.prj, Winv);
            // drop the trivial factor
            cur.inc = drop_row_col(cur.inc, j, pivot);
            cur.prj = drop_row_col(cur.prj, -1, j);
            cur.sub = drop_summand(cur.sub, pivot);
            cur.mid = drop_summand(cur.mid, j);
            cur.prj.src = cur.mid;
            stripped = true;
            break;
        }
    }

    exact_certificate cert = certify_exact(spec, F, cur);
    if (!cert.ok)
        throw std::logic_error("minimalize: stripped sequence not exact: " +
                               cert.diagnostic);
    universal_extension out;
    out.seq = std::move(cur);
    out.minimal = true;
    return out;
}

universality_verdict is_universal_extension(const ses& e, const torsion_pair& pair,
                                            int cap, const fp_field& F) {
    const category_spec& spec = pair.spec;
    universality_verdict v;
    for (const indec& s : e.sub.summands)
        if (pair.membership(s) != side::torsion) {
            v.ok = false;
            v.witness = "sub summand " + display(s) + " is not torsion";
            return v;
        }
    cocycle C = e.sub.is_zero() ? cocycle() : cocycle_of(spec, F, e);
    rep_layout LS = layout_of(spec, e.sub);
    matrix_rep RQ = realize(spec, e.quot);
    for (const indec& g : pair.torsion_members(cap)) {
        formal_object gobj = formal_object::of(g);
        matrix_rep RG = realize(spec, gobj);
        ext_space es = make_ext_space(spec, F, RQ, RG);
        if (es.dim() == 0)
            continue;
        if (e.sub.is_zero()) {
            v.ok = false;
            v.witness = "Ext^1(quot, " + display(g) + ") is nonzero but the sub is zero";
            return v;
        }
        rep_layout LG = layout_of(spec, gobj);
        row_space span(F, es.dim());
        for (const hom_element& phi : hom_basis(spec, e.sub, gobj)) {
            vertex_maps pm = hom_to_mats(spec, F, phi, LS, LG);
            cocycle push(C.size());
            for (size_t ai = 0; ai < C.size(); ++ai)
                push[ai] = mat_mul(F, pm[arrow_target_vidx(spec, static_cast<int>(ai))],
                                   C[ai]);
            span.add(es.coords(spec, RQ, RG, push));
        }
        if (span.dim() < es.dim()) {
            v.ok = false;
            v.witness = "connecting map not surjective onto Ext^1(quot, " + display(g) +
                        ")";
            return v;
        }
    }
    return v;
}

universal_extension minimal_universal_extension(const torsion_pair& pair, const indec& y,
                                                const fp_field& F) {
    std::vector<indec> gens = relevant_generators(pair, y);
    universal_extension ue = bongartz_extension(pair, y, gens, F);
    return minimalize(ue, pair, F);
}

admit_decision admits_universal_extension(const torsion_pair& pair, const indec& f,
                                          int cap, const fp_field& F) {
    const category_spec& spec = pair.spec;
    admit_decision d;
    if (pair.membership(f) != side::free_part)
        throw std::invalid_argument("admits_universal_extension expects a torsion-free "
                                    "indecomposable, got " +
                                    display(f));
    bool obstructed = false;
    std::string probes;
    for (int t : pair.intensional_coray_tops())
        if (pair.ext_to_coray_nonzero(f, t)) {
            obstructed = true;
            probes = "unbounded obstruction against the coray with top residue " +
                     std::to_string(t) + ":";
            indec tf{spec.norm(f.socle - 1), f.len};
            for (int l = 1; l <= 2 * spec.rank + f.len; ++l) {
                indec member{spec.norm(t - l + 1), l};
                int d = static_cast<int>(basis_hom_ks(spec, member, tf).size());
                probes += " ext(" + display(f) + "," + display(member) + ")=" +
                          std::to_string(d);
            }
            probes += "; the Bongartz sub would grow without stabilizing";
            break;
        }
    if (pair.k == torsion_pair::kind::tube_corays) {
        // closed-form criterion: f must fit in an inner wing strictly between
        // consecutive corays
        bool inner = false;
        size_t kc = pair.indices.size();
        for (size_t a = 0; a < kc; ++a) {
            int lo = pair.indices[a] + 2;
            int hi = (a + 1 < kc ? pair.indices[a + 1] : pair.indices[0] + spec.rank) - 1;
            if (lo > hi)
                continue;
            int s = lo + spec.norm(f.socle - lo);
            if (s + f.len - 1 <= hi)
                inner = true;
        }
        if (inner == obstructed)
            throw std::logic_error(
                "inner-wing criterion and coray obstruction disagree for " + display(f));
        if (!inner) {
            d.admits = false;
            d.certificate = probes;
            return d;
        }
    } else if (obstructed) {
        d.admits = false;
        d.certificate = probes;
        return d;
    }
    universal_extension ue = minimal_universal_extension(pair, f, F);
    universality_verdict uv = is_universal_extension(ue.seq, pair, cap, F);
    if (!uv.ok)
        throw std::logic_error("constructed extension failed universality: " + uv.witness);
    d.admits = true;
    d.certificate = "minimal universal extension " + display(ue.seq.sub) + " >-> " +
                    display(ue.seq.mid) + " ->> " + display(ue.seq.quot);
    d.witness = std::move(ue);
    return d;
}

check_result wakamatsu_check(const universal_extension& ue, const torsion_pair& pair,
                             int cap, const fp_field& F) {
    const category_spec& spec = pair.spec;
    check_result res{"wakamatsu", true, {}};
    if (!ue.minimal)
        res.fail("input extension is not minimal");
    // (i) the middle is Ext-orthogonal to the torsion part
    for (const indec& m : ue.seq.mid.summands) {
        for (const indec& g : pair.torsion_members(cap))
            if (ext_dim(spec, m, g) != 0)
                res.fail("middle summand " + display(m) + " has Ext^1 against torsion " +
                         display(g));
        for (int t : pair.intensional_coray_tops())
            if (pair.ext_to_coray_nonzero(m, t))
                res.fail("middle summand " + display(m) +
                         " has Ext^1 against the coray at residue " + std::to_string(t));
    }
    // (ii) the epi is a right approximation from the Ext-orthogonal complement
    rep_layout LM = layout_of(spec, ue.seq.mid);
    rep_layout LQ = layout_of(spec, ue.seq.quot);
    vertex_maps prj = hom_to_mats(spec, F, ue.seq.prj, LM, LQ);
    int lim = std::min(cap, spec.max_len());
    for (const indec& z : list_indecomposables(spec)) {
        if (z.len > lim || !pair.in_perp_ext(z, cap))
            continue;
        formal_object zobj = formal_object::of(z);
        int target = hom_dim(spec, zobj, ue.seq.quot);
        if (target == 0)
            continue;
        rep_layout LZ = layout_of(spec, zobj);
        int cols = 0;
        for (int v = 0; v < spec.vertex_count(); ++v)
            cols += LQ.vdim[v] * LZ.vdim[v];
        row_space span(F, cols);
        for (const hom_element& h : hom_basis(spec, zobj, ue.seq.mid)) {
            vertex_maps hm = hom_to_mats(spec, F, h, LZ, LM);
            std::vector<uint32_t> vec;
            for (int v = 0; v < spec.vertex_count(); ++v) {
                fmat comp = mat_mul(F, prj[v], hm[v]);
                vec.insert(vec.end(), comp.a.begin(), comp.a.end());
            }
            span.add(std::move(vec));
        }
        if (span.dim() < target)
            res.fail("projection is not a right approximation against " + display(z));
    }
    return res;
}

pushout_certificate realize_as_pushout(const category_spec& spec, const fp_field& F,
                                       const ses& ue, const ses& target) {
    pushout_certificate cert;
    if (!(ue.quot == target.quot)) {
        cert.diagnostic = "quotients differ";
        return cert;
    }
    std::vector<hom_element> phis = hom_basis(spec, ue.sub, target.sub);
    std::vector<hom_element> psis = hom_basis(spec, ue.mid, target.mid);
    // unknowns (phi, psi): psi inc = inc' phi  and  prj' psi = prj
    std::vector<uint32_t> eq1_rhs = hom_coords(
        spec, hom_zero(ue.sub, target.mid));
    std::vector<uint32_t> eq2_rhs = hom_coords(spec, ue.prj);
    int rows1 = static_cast<int>(eq1_rhs.size());
    int rows2 = static_cast<int>(eq2_rhs.size());
    int nun = static_cast<int>(phis.size() + psis.size());
    fmat A(rows1 + rows2, nun);
    for (size_t u = 0; u < phis.size(); ++u) {
        std::vector<uint32_t> c1 =
            hom_coords(spec, hom_compose(spec, F, target.inc, phis[u]));
        for (int r = 0; r < rows1; ++r)
            A.at(r, static_cast<int>(u)) = F.neg(c1[r]);  // - inc' phi
    }
    for (size_t u = 0; u < psis.size(); ++u) {
        std::vector<uint32_t> c1 =
            hom_coords(spec, hom_compose(spec, F, psis[u], ue.inc));
        std::vector<uint32_t> c2 =
            hom_coords(spec, hom_compose(spec, F, target.prj, psis[u]));
        for (int r = 0; r < rows1; ++r)
            A.at(r, static_cast<int>(phis.size() + u)) = c1[r];
        for (int r = 0; r < rows2; ++r)
            A.at(rows1 + r, static_cast<int>(phis.size() + u)) = c2[r];
    }
    std::vector<uint32_t> rhs(rows1 + rows2, 0);
    for (int r = 0; r < rows2; ++r)
        rhs[rows1 + r] = eq2_rhs[r];
    std::vector<uint32_t> sol;
    if (!solve(F, A, rhs, sol)) {
        cert.diagnostic = "no commuting morphism pair exists";
        return cert;
    }
    hom_element phi = hom_zero(ue.sub, target.sub);
    for (size_t u = 0; u < phis.size(); ++u)
        if (sol[u])
            phi = hom_add(F, phi, hom_scale(F, sol[u], phis[u]));
    hom_element psi = hom_zero(ue.mid, target.mid);
    for (size_t u = 0; u < psis.size(); ++u)
        if (sol[phis.size() + u])
            psi = hom_add(F, psi, hom_scale(F, sol[phis.size() + u], psis[u]));

    // the pushout square certificate: sub >-> sub' + mid ->> mid' exact
    block_index blk = make_block({&target.sub, &ue.mid});
    ses four;
    four.sub = ue.sub;
    four.mid = blk.obj;
    four.quot = target.mid;
    four.inc = hom_element(four.sub, four.mid);
    for (size_t j = 0; j < ue.sub.summands.size(); ++j) {
        for (size_t i = 0; i < target.sub.summands.size(); ++i)
            for (const hom_term& t : phi.entry(static_cast<int>(i), static_cast<int>(j)))
                four.inc.add_term(F, blk.slot[0][i], static_cast<int>(j), t.k, t.c);
        for (size_t i = 0; i < ue.mid.summands.size(); ++i)
            for (const hom_term& t : ue.inc.entry(static_cast<int>(i), static_cast<int>(j)))
                four.inc.add_term(F, blk.slot[1][i], static_cast<int>(j), t.k, t.c);
    }
    four.prj = hom_element(four.mid, four.quot);
    for (size_t i = 0; i < target.mid.summands.size(); ++i) {
        for (size_t j = 0; j < target.sub.summands.size(); ++j)
            for (const hom_term& t : target.inc.entry(static_cast<int>(i), static_cast<int>(j)))
                four.prj.add_term(F, static_cast<int>(i), blk.slot[0][j], t.k, t.c);
        for (size_t j = 0; j < ue.mid.summands.size(); ++j)
            for (const hom_term& t : psi.entry(static_cast<int>(i), static_cast<int>(j)))
                four.prj.add_term(F, static_cast<int>(i), blk.slot[1][j], t.k,
                                  F.neg(t.c));
    }
    exact_certificate ec = certify_exact(spec, F, four);
    if (!ec.ok) {
        cert.diagnostic = "pushout sequence failed exactness: " + ec.diagnostic;
        return cert;
    }
    cert.ok = true;
    cert.diagnostic = "pushout square certified";
    return cert;
}

}  // namespace torq
