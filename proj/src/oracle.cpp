#include "torq/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace torq {

int vindex(const category_spec& spec, int vertex_label) {
    return spec.norm(vertex_label) - spec.min_socle();
}

int arrow_count(const category_spec& spec) {
    return spec.kind == cat_kind::linear_a ? spec.n - 1 : spec.rank;
}

int arrow_source_vidx(const category_spec& spec, int ai) {
    return spec.kind == cat_kind::linear_a ? ai + 1 : ai;
}

int arrow_target_vidx(const category_spec& spec, int ai) {
    return spec.kind == cat_kind::linear_a ? ai : (ai + spec.rank - 1) % spec.rank;
}

rep_layout layout_of(const category_spec& spec, const formal_object& x) {
    rep_layout L;
    L.spec = spec;
    L.obj = x;
    L.vdim.assign(spec.vertex_count(), 0);
    for (const indec& m : x.summands) {
        require_indec(spec, m);
        std::vector<int> p(m.len);
        for (int t = 0; t < m.len; ++t)
            p[t] = L.vdim[vindex(spec, m.socle + t)]++;
        L.pos.push_back(std::move(p));
    }
    return L;
}

matrix_rep rep_of(const rep_layout& L) {
    const category_spec& spec = L.spec;
    matrix_rep R;
    R.spec = spec;
    R.vdim = L.vdim;
    R.arrow.resize(arrow_count(spec));
    for (int ai = 0; ai < arrow_count(spec); ++ai)
        R.arrow[ai] = fmat(R.vdim[arrow_target_vidx(spec, ai)],
                           R.vdim[arrow_source_vidx(spec, ai)]);
    for (size_t si = 0; si < L.obj.summands.size(); ++si) {
        const indec& m = L.obj.summands[si];
        for (int t = 1; t < m.len; ++t) {
            int v = vindex(spec, m.socle + t);
            int ai = spec.kind == cat_kind::linear_a ? v - 1 : v;
            R.arrow[ai].at(L.pos[si][t - 1], L.pos[si][t]) = 1;
        }
    }
    return R;
}

matrix_rep realize(const category_spec& spec, const formal_object& x) {
    return rep_of(layout_of(spec, x));
}

vertex_maps hom_to_mats(const category_spec& spec, const fp_field& F,
                        const hom_element& f, const rep_layout& LX,
                        const rep_layout& LY) {
    if (!(f.src == LX.obj) || !(f.dst == LY.obj))
        throw std::logic_error("hom_to_mats: layout mismatch");
    vertex_maps out(spec.vertex_count());
    for (int v = 0; v < spec.vertex_count(); ++v)
        out[v] = fmat(LY.vdim[v], LX.vdim[v]);
    for (size_t j = 0; j < f.src.summands.size(); ++j)
        for (size_t i = 0; i < f.dst.summands.size(); ++i) {
            const indec& sm = f.src.summands[j];
            for (const hom_term& t : f.entry(static_cast<int>(i), static_cast<int>(j)))
                for (int off = t.k; off < sm.len; ++off) {
                    int v = vindex(spec, sm.socle + off);
                    out[v].at(LY.pos[i][off - t.k], LX.pos[j][off]) =
                        F.add(out[v].at(LY.pos[i][off - t.k], LX.pos[j][off]), t.c);
                }
        }
    return out;
}

hom_element mats_to_hom(const category_spec& spec, const fp_field& F,
                        const vertex_maps& f, const rep_layout& LX,
                        const rep_layout& LY) {
    hom_element h(LX.obj, LY.obj);
    for (size_t j = 0; j < LX.obj.summands.size(); ++j)
        for (size_t i = 0; i < LY.obj.summands.size(); ++i) {
            const indec& sm = LX.obj.summands[j];
            const indec& tm = LY.obj.summands[i];
            std::vector<int> ks = basis_hom_ks(spec, sm, tm);
            std::vector<uint32_t> coef(sm.len, 0);
            std::vector<bool> kvalid(sm.len, false);
            for (int k : ks)
                kvalid[k] = true;
            // read coefficients off the block, verifying consistency
            for (int u = 0; u < tm.len; ++u)
                for (int t = 0; t < sm.len; ++t) {
                    if (!spec.socle_eq(sm.socle + t, tm.socle + u))
                        continue;
                    int v = vindex(spec, sm.socle + t);
                    uint32_t c = f[v].at(LY.pos[i][u], LX.pos[j][t]);
                    int k = t - u;
                    if (k < 0 || k >= sm.len || !kvalid[k]) {
                        if (c)
                            throw std::logic_error(
                                "mats_to_hom: matrices are not a module map");
                        continue;
                    }
                    if (u == 0)
                        coef[k] = c;
                    else if (coef[k] != c)
                        throw std::logic_error(
                            "mats_to_hom: matrices are not a module map");
                }
            for (int k : ks)
                h.add_term(F, static_cast<int>(i), static_cast<int>(j), k, coef[k]);
        }
    // round-trip guard against blocks read in the wrong order
    vertex_maps back = hom_to_mats(spec, F, h, LX, LY);
    for (int v = 0; v < spec.vertex_count(); ++v)
        if (!(mat_sub(F, back[v], f[v]).is_zero()))
            throw std::logic_error("mats_to_hom: matrices are not a module map");
    return h;
}

/* vectorization order for map tuples: vertices ascending, row-major blocks */
static int tuple_size(const std::vector<int>& rows, const std::vector<int>& cols) {
    int s = 0;
    for (size_t v = 0; v < rows.size(); ++v)
        s += rows[v] * cols[v];
    return s;
}

static std::vector<uint32_t> vectorize(const vertex_maps& f) {
    std::vector<uint32_t> out;
    for (const fmat& m : f)
        out.insert(out.end(), m.a.begin(), m.a.end());
    return out;
}

std::vector<vertex_maps> intertwiners(const fp_field& F, const matrix_rep& A,
                                      const matrix_rep& B) {
    const category_spec& spec = A.spec;
    int nv = spec.vertex_count();
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v)
        offset[v + 1] = offset[v] + B.vdim[v] * A.vdim[v];
    int unknowns = offset[nv];
    int eqs = 0;
    for (int ai = 0; ai < arrow_count(spec); ++ai)
        eqs += B.vdim[arrow_target_vidx(spec, ai)] * A.vdim[arrow_source_vidx(spec, ai)];
    fmat M(eqs, unknowns);
    int row = 0;
    for (int ai = 0; ai < arrow_count(spec); ++ai) {
        int s = arrow_source_vidx(spec, ai);
        int t = arrow_target_vidx(spec, ai);
        // f_t A_ai - B_ai f_s = 0, entry (r, c) with r < B.vdim[t], c < A.vdim[s]
        for (int r = 0; r < B.vdim[t]; ++r)
            for (int c = 0; c < A.vdim[s]; ++c) {
                for (int q = 0; q < A.vdim[t]; ++q) {
                    uint32_t coeff = A.arrow[ai].at(q, c);
                    if (coeff)
                        M.at(row, offset[t] + r * A.vdim[t] + q) =
                            F.add(M.at(row, offset[t] + r * A.vdim[t] + q), coeff);
                }
                for (int q = 0; q < B.vdim[s]; ++q) {
                    uint32_t coeff = B.arrow[ai].at(r, q);
                    if (coeff)
                        M.at(row, offset[s] + q * A.vdim[s] + c) = F.sub(
                            M.at(row, offset[s] + q * A.vdim[s] + c), coeff);
                }
                ++row;
            }
    }
    fmat K = kernel_basis(F, M);
    std::vector<vertex_maps> out;
    for (int i = 0; i < K.rows; ++i) {
        vertex_maps f(nv);
        for (int v = 0; v < nv; ++v) {
            f[v] = fmat(B.vdim[v], A.vdim[v]);
            for (int r = 0; r < B.vdim[v]; ++r)
                for (int c = 0; c < A.vdim[v]; ++c)
                    f[v].at(r, c) = K.at(i, offset[v] + r * A.vdim[v] + c);
        }
        out.push_back(std::move(f));
    }
    return out;
}

int intertwiner_dim(const fp_field& F, const matrix_rep& A, const matrix_rep& B) {
    return static_cast<int>(intertwiners(F, A, B).size());
}

int ext_complex_dim(const fp_field& F, const matrix_rep& A, const matrix_rep& B) {
    const category_spec& spec = A.spec;
    int nv = spec.vertex_count();
    std::vector<int> voff(nv + 1, 0);
    for (int v = 0; v < nv; ++v)
        voff[v + 1] = voff[v] + B.vdim[v] * A.vdim[v];
    int na = arrow_count(spec);
    std::vector<int> aoff(na + 1, 0);
    for (int ai = 0; ai < na; ++ai)
        aoff[ai + 1] = aoff[ai] + B.vdim[arrow_target_vidx(spec, ai)] *
                                      A.vdim[arrow_source_vidx(spec, ai)];
    int wdim = aoff[na];
    // coboundary of (f_v : A_v -> B_v): C_ai = B_ai f_src - f_tgt A_ai
    fmat D(wdim, voff[nv]);
    for (int ai = 0; ai < na; ++ai) {
        int s = arrow_source_vidx(spec, ai);
        int t = arrow_target_vidx(spec, ai);
        for (int r = 0; r < B.vdim[t]; ++r)
            for (int c = 0; c < A.vdim[s]; ++c) {
                int row = aoff[ai] + r * A.vdim[s] + c;
                for (int q = 0; q < B.vdim[s]; ++q)
                    D.at(row, voff[s] + q * A.vdim[s] + c) =
                        F.add(D.at(row, voff[s] + q * A.vdim[s] + c),
                              B.arrow[ai].at(r, q));
                for (int q = 0; q < A.vdim[t]; ++q)
                    D.at(row, voff[t] + r * A.vdim[t] + q) =
                        F.sub(D.at(row, voff[t] + r * A.vdim[t] + q),
                              A.arrow[ai].at(q, c));
            }
    }
    return wdim - rank(F, D);
}

exact_certificate certify_exact(const category_spec& spec, const fp_field& F,
                                const ses& e) {
    exact_certificate cert;
    rep_layout LS = layout_of(spec, e.sub);
    rep_layout LM = layout_of(spec, e.mid);
    rep_layout LQ = layout_of(spec, e.quot);
    for (int v = 0; v < spec.vertex_count(); ++v)
        if (LS.vdim[v] + LQ.vdim[v] != LM.vdim[v]) {
            cert.diagnostic = "dimension vectors do not add up at vertex index " +
                              std::to_string(v);
            return cert;
        }
    vertex_maps inc = hom_to_mats(spec, F, e.inc, LS, LM);
    vertex_maps prj = hom_to_mats(spec, F, e.prj, LM, LQ);
    for (int v = 0; v < spec.vertex_count(); ++v) {
        if (!mat_mul(F, prj[v], inc[v]).is_zero()) {
            cert.diagnostic = "composite is nonzero at vertex index " + std::to_string(v);
            return cert;
        }
        if (rank(F, inc[v]) != LS.vdim[v]) {
            cert.diagnostic = "inclusion not injective at vertex index " + std::to_string(v);
            return cert;
        }
        if (rank(F, prj[v]) != LQ.vdim[v]) {
            cert.diagnostic = "projection not surjective at vertex index " +
                              std::to_string(v);
            return cert;
        }
        // zero composite + full ranks forces image = kernel in the middle
    }
    cert.ok = true;
    cert.diagnostic = "exact";
    return cert;
}

int factoring_dim(const category_spec& spec, const fp_field& F, const formal_object& x,
                  const formal_object& y, const std::vector<indec>& through) {
    if (x.is_zero() || y.is_zero() || through.empty())
        return 0;
    rep_layout LX = layout_of(spec, x);
    rep_layout LY = layout_of(spec, y);
    int cols = tuple_size(LY.vdim, LX.vdim);
    row_space span(F, cols);
    for (const indec& t : through) {
        formal_object T = formal_object::of(t);
        rep_layout LT = layout_of(spec, T);
        std::vector<hom_element> in = hom_basis(spec, x, T);
        std::vector<hom_element> out = hom_basis(spec, T, y);
        if (in.empty() || out.empty())
            continue;
        std::vector<vertex_maps> in_m, out_m;
        for (const hom_element& f : in)
            in_m.push_back(hom_to_mats(spec, F, f, LX, LT));
        for (const hom_element& g : out)
            out_m.push_back(hom_to_mats(spec, F, g, LT, LY));
        for (const vertex_maps& gm : out_m)
            for (const vertex_maps& fm : in_m) {
                vertex_maps comp(spec.vertex_count());
                for (int v = 0; v < spec.vertex_count(); ++v)
                    comp[v] = mat_mul(F, gm[v], fm[v]);
                span.add(vectorize(comp));
            }
    }
    return span.dim();
}

ext_space make_ext_space(const category_spec& spec, const fp_field& F,
                         const matrix_rep& Q, const matrix_rep& S) {
    ext_space es(F);
    int nv = spec.vertex_count();
    int na = arrow_count(spec);
    std::vector<int> aoff(na + 1, 0);
    for (int ai = 0; ai < na; ++ai)
        aoff[ai + 1] = aoff[ai] + S.vdim[arrow_target_vidx(spec, ai)] *
                                      Q.vdim[arrow_source_vidx(spec, ai)];
    es.wdim = aoff[na];
    es.cobound = row_space(F, es.wdim);
    // add the coboundary of every elementary vertex map Q_v -> S_v
    for (int v = 0; v < nv; ++v)
        for (int r = 0; r < S.vdim[v]; ++r)
            for (int c = 0; c < Q.vdim[v]; ++c) {
                std::vector<uint32_t> w(es.wdim, 0);
                for (int ai = 0; ai < na; ++ai) {
                    int s = arrow_source_vidx(spec, ai);
                    int t = arrow_target_vidx(spec, ai);
                    if (s == v)  // S_arrow f at column block
                        for (int rr = 0; rr < S.vdim[t]; ++rr) {
                            uint32_t coeff = S.arrow[ai].at(rr, r);
                            if (coeff)
                                w[aoff[ai] + rr * Q.vdim[s] + c] =
                                    F.add(w[aoff[ai] + rr * Q.vdim[s] + c], coeff);
                        }
                    if (t == v)  // - f Q_arrow
                        for (int cc = 0; cc < Q.vdim[s]; ++cc) {
                            uint32_t coeff = Q.arrow[ai].at(c, cc);
                            if (coeff)
                                w[aoff[ai] + r * Q.vdim[s] + cc] =
                                    F.sub(w[aoff[ai] + r * Q.vdim[s] + cc], coeff);
                        }
                }
                es.cobound.add(std::move(w));
            }
    std::vector<bool> is_piv(es.wdim, false);
    for (int p : es.cobound.pivots)
        is_piv[p] = true;
    for (int c = 0; c < es.wdim; ++c)
        if (!is_piv[c])
            es.free_cols.push_back(c);
    return es;
}

std::vector<uint32_t> ext_space::coords(const category_spec& spec, const matrix_rep& Q,
                                        const matrix_rep& S, const cocycle& c) const {
    (void)spec;
    (void)Q;
    (void)S;
    std::vector<uint32_t> w;
    for (const fmat& m : c)
        w.insert(w.end(), m.a.begin(), m.a.end());
    if (static_cast<int>(w.size()) != wdim)
        throw std::logic_error("ext_space::coords: cocycle shape mismatch");
    std::vector<uint32_t> red = cobound.reduce(std::move(w));
    std::vector<uint32_t> out;
    out.reserve(free_cols.size());
    for (int fc : free_cols)
        out.push_back(red[fc]);
    return out;
}

cocycle cocycle_of(const category_spec& spec, const fp_field& F, const ses& e) {
    rep_layout LS = layout_of(spec, e.sub);
    rep_layout LM = layout_of(spec, e.mid);
    rep_layout LQ = layout_of(spec, e.quot);
    matrix_rep RM = rep_of(LM);
    vertex_maps inc = hom_to_mats(spec, F, e.inc, LS, LM);
    vertex_maps prj = hom_to_mats(spec, F, e.prj, LM, LQ);
    int nv = spec.vertex_count();
    vertex_maps sec(nv), retr(nv);
    for (int v = 0; v < nv; ++v) {
        // section of the projection and retraction onto the sub along it
        fmat s;
        if (!solve_mat(F, prj[v], fmat::identity(LQ.vdim[v]), s))
            throw std::logic_error("cocycle_of: projection not surjective");
        sec[v] = s;
        fmat glue = mat_hstack(inc[v], s);
        fmat inv = mat_inverse(F, glue);
        retr[v] = fmat(LS.vdim[v], LM.vdim[v]);
        for (int r = 0; r < LS.vdim[v]; ++r)
            for (int c = 0; c < LM.vdim[v]; ++c)
                retr[v].at(r, c) = inv.at(r, c);
    }
    cocycle C(arrow_count(spec));
    for (int ai = 0; ai < arrow_count(spec); ++ai) {
        int s = arrow_source_vidx(spec, ai);
        int t = arrow_target_vidx(spec, ai);
        C[ai] = mat_mul(F, retr[t], mat_mul(F, RM.arrow[ai], sec[s]));
    }
    return C;
}

matrix_rep extension_rep(const category_spec& spec, const fp_field& F,
                         const rep_layout& LX, const rep_layout& LY,
                         const cocycle& C) {
    (void)F;
    matrix_rep RX = rep_of(LX);
    matrix_rep RY = rep_of(LY);
    matrix_rep R;
    R.spec = spec;
    R.vdim.resize(spec.vertex_count());
    for (int v = 0; v < spec.vertex_count(); ++v)
        R.vdim[v] = LX.vdim[v] + LY.vdim[v];
    R.arrow.resize(arrow_count(spec));
    for (int ai = 0; ai < arrow_count(spec); ++ai) {
        int s = arrow_source_vidx(spec, ai);
        int t = arrow_target_vidx(spec, ai);
        fmat M(R.vdim[t], R.vdim[s]);
        for (int r = 0; r < LX.vdim[t]; ++r)
            for (int c = 0; c < LX.vdim[s]; ++c)
                M.at(r, c) = RX.arrow[ai].at(r, c);
        for (int r = 0; r < LX.vdim[t]; ++r)
            for (int c = 0; c < LY.vdim[s]; ++c)
                M.at(r, LX.vdim[s] + c) = C[ai].at(r, c);
        for (int r = 0; r < LY.vdim[t]; ++r)
            for (int c = 0; c < LY.vdim[s]; ++c)
                M.at(LX.vdim[t] + r, LX.vdim[s] + c) = RY.arrow[ai].at(r, c);
        R.arrow[ai] = std::move(M);
    }
    return R;
}

/* ---- graded Jordan decomposition ---- */

namespace {

struct chain {
    int top_vidx;
    int len;
    std::vector<std::vector<uint32_t>> vecs;  // vecs[t] = S^t w at vertex prev^t(top)
};

int prev_vidx(const category_spec& spec, int v, int steps) {
    if (spec.kind == cat_kind::linear_a)
        return v - steps;  // may go negative: off the quiver
    int r = spec.rank;
    return ((v - steps) % r + r) % r;
}

/* arrow index whose source vertex index is v (linear: v >= 1) */
int arrow_from_vidx(const category_spec& spec, int v) {
    return spec.kind == cat_kind::linear_a ? v - 1 : v;
}

}  // namespace

decomposition decompose(const category_spec& spec, const fp_field& F,
                        const matrix_rep& M) {
    int nv = spec.vertex_count();
    int total = std::accumulate(M.vdim.begin(), M.vdim.end(), 0);

    // powers of the shift: pw[j][v] = S^j restricted to vertex v
    std::vector<std::vector<fmat>> pw;
    pw.push_back(std::vector<fmat>(nv));
    for (int v = 0; v < nv; ++v)
        pw[0][v] = fmat::identity(M.vdim[v]);
    int maxlen = total == 0 ? 1 : 0;
    for (int j = 1; j <= total && maxlen == 0; ++j) {
        std::vector<fmat> cur(nv);
        bool all_zero = true;
        for (int v = 0; v < nv; ++v) {
            int pv = prev_vidx(spec, v, j - 1);
            if (spec.kind == cat_kind::linear_a && pv < 1) {
                cur[v] = fmat(0, M.vdim[v]);
                continue;
            }
            cur[v] = mat_mul(F, M.arrow[arrow_from_vidx(spec, pv)], pw[j - 1][v]);
            if (!cur[v].is_zero())
                all_zero = false;
        }
        pw.push_back(std::move(cur));
        if (all_zero)
            maxlen = j;
    }
    if (maxlen == 0)
        throw std::logic_error("decompose: representation is not nilpotent");

    // kernel bases per (power, vertex); K[j][v] rows span ker S^j on M_v
    auto kernel_at = [&](int j, int v) -> fmat {
        if (j >= static_cast<int>(pw.size()))
            return fmat::identity(M.vdim[v]);
        return kernel_basis(F, pw[j][v]);
    };

    std::vector<chain> chains;
    for (int j = maxlen; j >= 1; --j) {
        for (int v = 0; v < nv; ++v) {
            if (M.vdim[v] == 0)
                continue;
            row_space used(F, M.vdim[v]);
            fmat Kprev = kernel_at(j - 1, v);
            for (int r = 0; r < Kprev.rows; ++r)
                used.add(std::vector<uint32_t>(Kprev.a.begin() + r * Kprev.cols,
                                               Kprev.a.begin() + (r + 1) * Kprev.cols));
            for (const chain& ch : chains) {
                int drop = ch.len - j;
                if (drop <= 0)
                    continue;
                if (prev_vidx(spec, ch.top_vidx, drop) != v)
                    continue;
                used.add(ch.vecs[drop]);
            }
            fmat Kj = kernel_at(j, v);
            for (int r = 0; r < Kj.rows; ++r) {
                std::vector<uint32_t> w(Kj.a.begin() + r * Kj.cols,
                                        Kj.a.begin() + (r + 1) * Kj.cols);
                if (!used.add(w))
                    continue;
                chain ch;
                ch.top_vidx = v;
                ch.len = j;
                ch.vecs.push_back(w);
                for (int t = 1; t < j; ++t) {
                    int pv = prev_vidx(spec, v, t - 1);
                    int ai = arrow_from_vidx(spec, pv);
                    const fmat& A = M.arrow[ai];
                    const std::vector<uint32_t>& prev = ch.vecs[t - 1];
                    std::vector<uint32_t> nxt(A.rows, 0);
                    for (int rr = 0; rr < A.rows; ++rr) {
                        uint32_t acc = 0;
                        for (int cc = 0; cc < A.cols; ++cc)
                            acc = F.add(acc, F.mul(A.at(rr, cc), prev[cc]));
                        nxt[rr] = acc;
                    }
                    ch.vecs.push_back(std::move(nxt));
                }
                chains.push_back(std::move(ch));
            }
        }
    }

    int got = 0;
    for (const chain& ch : chains)
        got += ch.len;
    if (got != total)
        throw std::logic_error("decompose: chain basis does not span");

    // assemble the formal object and the change of basis
    std::vector<std::pair<indec, int>> tagged;  // (interval, chain index)
    for (size_t ci = 0; ci < chains.size(); ++ci) {
        const chain& ch = chains[ci];
        int socle_label = spec.kind == cat_kind::linear_a
                              ? ch.top_vidx + 1 - (ch.len - 1)
                              : spec.norm(ch.top_vidx - (ch.len - 1));
        tagged.push_back({indec{socle_label, ch.len}, static_cast<int>(ci)});
    }
    std::stable_sort(tagged.begin(), tagged.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    decomposition D;
    std::vector<indec> parts;
    for (const auto& [m, ci] : tagged)
        parts.push_back(m);
    D.obj.summands = parts;  // already sorted canonically
    rep_layout L = layout_of(spec, D.obj);
    D.iso.resize(nv);
    for (int v = 0; v < nv; ++v)
        D.iso[v] = fmat(M.vdim[v], L.vdim[v]);
    for (size_t si = 0; si < tagged.size(); ++si) {
        const chain& ch = chains[tagged[si].second];
        const indec& m = tagged[si].first;
        for (int t = 0; t < m.len; ++t) {
            // cover point socle + t corresponds to S^{len-1-t} w
            int v = vindex(spec, m.socle + t);
            const std::vector<uint32_t>& vec = ch.vecs[m.len - 1 - t];
            for (size_t r = 0; r < vec.size(); ++r)
                D.iso[v].at(static_cast<int>(r), L.pos[si][t]) = vec[r];
        }
    }
    for (int v = 0; v < nv; ++v)
        if (L.vdim[v] != M.vdim[v] || (L.vdim[v] > 0 && rank(F, D.iso[v]) != L.vdim[v]))
            throw std::logic_error("decompose: change of basis is singular");
    return D;
}

formal_object decompose_multiset(const category_spec& spec, const fp_field& F,
                                 const matrix_rep& M) {
    return decompose(spec, F, M).obj;
}

coker_result cokernel(const category_spec& spec, const fp_field& F,
                      const matrix_rep& src, const matrix_rep& dst,
                      const vertex_maps& g) {
    (void)src;
    int nv = spec.vertex_count();
    coker_result out;
    out.rep.spec = spec;
    out.rep.vdim.resize(nv);
    out.proj.resize(nv);
    std::vector<fmat> section(nv);  // unit columns spanning a complement of im g
    for (int v = 0; v < nv; ++v) {
        int d = dst.vdim[v];
        row_space im(F, d);
        for (int c = 0; c < g[v].cols; ++c) {
            std::vector<uint32_t> col(d);
            for (int r = 0; r < d; ++r)
                col[r] = g[v].at(r, c);
            im.add(std::move(col));
        }
        std::vector<int> comp_units;
        row_space full = im;
        for (int u = 0; u < d; ++u) {
            std::vector<uint32_t> e(d, 0);
            e[u] = 1;
            if (full.add(e))
                comp_units.push_back(u);
        }
        int q = static_cast<int>(comp_units.size());
        out.rep.vdim[v] = q;
        // glue = [im basis columns | complement units]; quotient coordinates are
        // the unit components of the expansion
        int rk = im.dim();
        fmat glue(d, rk + q);
        for (int i = 0; i < rk; ++i)
            for (int r = 0; r < d; ++r)
                glue.at(r, i) = im.rows[i][r];
        for (int i = 0; i < q; ++i)
            glue.at(comp_units[i], rk + i) = 1;
        fmat inv = mat_inverse(F, glue);
        out.proj[v] = fmat(q, d);
        for (int r = 0; r < q; ++r)
            for (int c = 0; c < d; ++c)
                out.proj[v].at(r, c) = inv.at(rk + r, c);
        section[v] = fmat(d, q);
        for (int i = 0; i < q; ++i)
            section[v].at(comp_units[i], i) = 1;
    }
    out.rep.arrow.resize(arrow_count(spec));
    for (int ai = 0; ai < arrow_count(spec); ++ai) {
        int s = arrow_source_vidx(spec, ai);
        int t = arrow_target_vidx(spec, ai);
        out.rep.arrow[ai] =
            mat_mul(F, out.proj[t], mat_mul(F, dst.arrow[ai], section[s]));
    }
    return out;
}

formal_object trace_submodule(const category_spec& spec, const fp_field& F,
                              const formal_object& x, const std::vector<indec>& gens) {
    rep_layout LX = layout_of(spec, x);
    matrix_rep RX = rep_of(LX);
    int nv = spec.vertex_count();
    std::vector<row_space> span;
    for (int v = 0; v < nv; ++v)
        span.emplace_back(F, LX.vdim[v]);
    for (const indec& t : gens) {
        formal_object T = formal_object::of(t);
        rep_layout LT = layout_of(spec, T);
        for (const hom_element& f : hom_basis(spec, T, x)) {
            vertex_maps fm = hom_to_mats(spec, F, f, LT, LX);
            for (int v = 0; v < nv; ++v)
                for (int c = 0; c < fm[v].cols; ++c) {
                    std::vector<uint32_t> col(fm[v].rows);
                    for (int r = 0; r < fm[v].rows; ++r)
                        col[r] = fm[v].at(r, c);
                    span[v].add(std::move(col));
                }
        }
    }
    // restrict arrows to the spanned subrepresentation
    matrix_rep sub;
    sub.spec = spec;
    sub.vdim.resize(nv);
    std::vector<fmat> basis(nv);
    for (int v = 0; v < nv; ++v) {
        sub.vdim[v] = span[v].dim();
        basis[v] = fmat(LX.vdim[v], sub.vdim[v]);
        for (int i = 0; i < sub.vdim[v]; ++i)
            for (int r = 0; r < LX.vdim[v]; ++r)
                basis[v].at(r, i) = span[v].rows[i][r];
    }
    sub.arrow.resize(arrow_count(spec));
    for (int ai = 0; ai < arrow_count(spec); ++ai) {
        int s = arrow_source_vidx(spec, ai);
        int t = arrow_target_vidx(spec, ai);
        fmat img = mat_mul(F, RX.arrow[ai], basis[s]);
        fmat coords;
        if (!solve_mat(F, basis[t], img, coords))
            throw std::logic_error("trace_submodule: span is not a subrepresentation");
        sub.arrow[ai] = coords;
    }
    return decompose_multiset(spec, F, sub);
}

}  // namespace torq
