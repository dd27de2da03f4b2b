#include "torq/torsion.hpp"

#include <algorithm>
#include <set>

namespace torq {

namespace {

bool list_has(const std::vector<indec>& v, const indec& m) {
    return std::binary_search(v.begin(), v.end(), m);
}

void sort_unique(std::vector<indec>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/* wing membership: shift the socle into [lo, lo+rank) and test the top */
bool in_wing(const category_spec& spec, const wing_pair& w, const indec& m) {
    if (spec.kind == cat_kind::linear_a)
        return m.socle >= w.lo && m.top() <= w.hi;
    int s = w.lo + spec.norm(m.socle - w.lo);
    return s + m.len - 1 <= w.hi;
}

void validate_wing_members(const category_spec& spec, const wing_pair& w) {
    for (const std::vector<indec>* lst : {&w.torsion, &w.free})
        for (const indec& m : *lst) {
            require_indec(spec, m);
            if (!in_wing(spec, w, m))
                throw std::invalid_argument("wing member " + display(m) +
                                            " lies outside the wing [" +
                                            std::to_string(w.lo) + "," +
                                            std::to_string(w.hi) + "]");
        }
    for (const indec& m : w.torsion)
        if (list_has(w.free, m))
            throw std::invalid_argument("wing member " + display(m) +
                                        " declared both torsion and free");
}

}  // namespace

torsion_pair torsion_pair::explicit_lists(const category_spec& spec,
                                          std::vector<indec> torsion,
                                          std::vector<indec> free) {
    torsion_pair p;
    p.spec = spec;
    p.k = kind::explicit_pair;
    for (const indec& m : torsion)
        require_indec(spec, m);
    for (const indec& m : free)
        require_indec(spec, m);
    p.torsion_list = std::move(torsion);
    p.free_list = std::move(free);
    sort_unique(p.torsion_list);
    sort_unique(p.free_list);
    for (const indec& m : p.torsion_list)
        if (list_has(p.free_list, m))
            throw std::invalid_argument("member " + display(m) +
                                        " declared both torsion and free");
    return p;
}

static void validate_indices(const category_spec& spec, const std::vector<int>& idx) {
    if (spec.kind != cat_kind::tube)
        throw std::invalid_argument("classification families require a tube");
    if (idx.empty())
        throw std::invalid_argument("at least one index required");
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= spec.rank)
            throw std::invalid_argument("index out of range");
        if (i > 0 && idx[i] <= idx[i - 1])
            throw std::invalid_argument("indices must be strictly increasing");
    }
}

torsion_pair torsion_pair::tube_case1(const category_spec& spec,
                                      std::vector<int> ray_indices,
                                      std::vector<wing_pair> wings) {
    validate_indices(spec, ray_indices);
    if (wings.size() != ray_indices.size())
        throw std::invalid_argument("one wing pair per ray index expected");
    torsion_pair p;
    p.spec = spec;
    p.k = kind::tube_rays;
    p.indices = std::move(ray_indices);
    p.wings = std::move(wings);
    size_t kcount = p.indices.size();
    for (size_t a = 0; a < kcount; ++a) {
        int lo = p.indices[a];
        int hi = (a + 1 < kcount ? p.indices[a + 1] : p.indices[0] + spec.rank) - 1;
        wing_pair& w = p.wings[a];
        w.lo = lo;
        w.hi = hi;
        sort_unique(w.torsion);
        sort_unique(w.free);
        validate_wing_members(spec, w);
        int width = hi - lo + 1;
        for (int len = 1; len <= width; ++len) {
            indec proj{spec.norm(lo), len};  // Ext-projectives of the wing
            if (!list_has(w.free, proj))
                throw std::invalid_argument("wing Ext-projective " + display(proj) +
                                            " must be torsion-free");
            indec inj{spec.norm(hi - len + 1), len};  // Ext-injectives
            if (len < width && !list_has(w.torsion, inj))
                throw std::invalid_argument("wing Ext-injective " + display(inj) +
                                            " must be torsion");
        }
    }
    return p;
}

torsion_pair torsion_pair::tube_case2(const category_spec& spec,
                                      std::vector<int> coray_indices,
                                      std::vector<wing_pair> wings) {
    validate_indices(spec, coray_indices);
    if (wings.size() != coray_indices.size())
        throw std::invalid_argument("one wing pair per coray index expected");
    torsion_pair p;
    p.spec = spec;
    p.k = kind::tube_corays;
    p.indices = std::move(coray_indices);
    p.wings = std::move(wings);
    size_t kcount = p.indices.size();
    for (size_t a = 0; a < kcount; ++a) {
        int lo = p.indices[a] + 1;
        int hi = a + 1 < kcount ? p.indices[a + 1] : p.indices[0] + spec.rank;
        wing_pair& w = p.wings[a];
        w.lo = lo;
        w.hi = hi;
        sort_unique(w.torsion);
        sort_unique(w.free);
        validate_wing_members(spec, w);
        int width = hi - lo + 1;
        for (int len = 1; len <= width; ++len) {
            indec inj{spec.norm(hi - len + 1), len};  // Ext-injectives of the wing
            if (!list_has(w.torsion, inj))
                throw std::invalid_argument("wing Ext-injective " + display(inj) +
                                            " must be torsion");
            indec proj{spec.norm(lo), len};  // remaining Ext-projectives
            if (len < width && !list_has(w.free, proj))
                throw std::invalid_argument("wing Ext-projective " + display(proj) +
                                            " must be torsion-free");
        }
    }
    return p;
}

side torsion_pair::membership(const indec& m) const {
    // Length beyond the tube cap is tolerated here: the classification
    // predicates are intensional and closure checks probe long middle terms.
    if (spec.kind == cat_kind::linear_a)
        require_indec(spec, m);
    else if (m.len < 1 || m.socle < 0 || m.socle >= spec.rank)
        throw std::invalid_argument("indecomposable " + display(m) + " is not in " +
                                    spec.describe());
    switch (k) {
        case kind::explicit_pair: {
            if (list_has(torsion_list, m))
                return side::torsion;
            if (list_has(free_list, m))
                return side::free_part;
            return side::neither;
        }
        case kind::tube_rays: {
            for (const wing_pair& w : wings)
                if (in_wing(spec, w, m)) {
                    if (list_has(w.torsion, m))
                        return side::torsion;
                    if (list_has(w.free, m))
                        return side::free_part;
                    return side::neither;
                }
            for (int i : indices)
                if (spec.socle_eq(m.socle, i))
                    return side::free_part;  // ray member beyond its wing
            return side::neither;
        }
        case kind::tube_corays: {
            for (const wing_pair& w : wings)
                if (in_wing(spec, w, m)) {
                    if (list_has(w.torsion, m))
                        return side::torsion;
                    if (list_has(w.free, m))
                        return side::free_part;
                    return side::neither;
                }
            for (int i : indices)
                if (spec.socle_eq(m.top(), i))
                    return side::torsion;  // coray member beyond its wing
            return side::neither;
        }
    }
    return side::neither;
}

std::vector<indec> torsion_pair::torsion_members(int max_len) const {
    std::vector<indec> out;
    max_len = std::min(max_len, spec.max_len());
    switch (k) {
        case kind::explicit_pair:
            for (const indec& m : torsion_list)
                if (m.len <= max_len)
                    out.push_back(m);
            break;
        case kind::tube_rays:
            for (const wing_pair& w : wings)
                for (const indec& m : w.torsion)
                    if (m.len <= max_len)
                        out.push_back(m);
            break;
        case kind::tube_corays: {
            for (const wing_pair& w : wings)
                for (const indec& m : w.torsion)
                    if (m.len <= max_len)
                        out.push_back(m);
            for (int i : indices)
                for (int len = 1; len <= max_len; ++len)
                    out.push_back(indec{spec.norm(i - len + 1), len});
            break;
        }
    }
    sort_unique(out);
    return out;
}

std::vector<indec> torsion_pair::free_members(int max_len) const {
    std::vector<indec> out;
    max_len = std::min(max_len, spec.max_len());
    switch (k) {
        case kind::explicit_pair:
            for (const indec& m : free_list)
                if (m.len <= max_len)
                    out.push_back(m);
            break;
        case kind::tube_rays: {
            for (const wing_pair& w : wings)
                for (const indec& m : w.free)
                    if (m.len <= max_len)
                        out.push_back(m);
            for (int i : indices)
                for (int len = 1; len <= max_len; ++len)
                    out.push_back(indec{spec.norm(i), len});
            break;
        }
        case kind::tube_corays:
            for (const wing_pair& w : wings)
                for (const indec& m : w.free)
                    if (m.len <= max_len)
                        out.push_back(m);
            break;
    }
    sort_unique(out);
    return out;
}

std::vector<int> torsion_pair::intensional_coray_tops() const {
    return k == kind::tube_corays ? indices : std::vector<int>{};
}

bool torsion_pair::ext_to_coray_nonzero(const indec& m, int top_residue) const {
    /* Ext^1(M, coray member of length l) is dual to Hom of the member into
     * tau M; since members exist in every length, some member has a nonzero
     * hom iff the residue gap from socle(tau M) to the coray top fits inside
     * tau M. */
    if (spec.kind != cat_kind::tube)
        return false;
    int gap = spec.norm(top_residue - (m.socle - 1));
    return gap <= m.len - 1;
}

bool torsion_pair::in_perp_ext(const indec& m, int probe_len) const {
    for (const indec& g : torsion_members(probe_len))
        if (ext_dim(spec, m, g) > 0)
            return false;
    for (int t : intensional_coray_tops())
        if (ext_to_coray_nonzero(m, t))
            return false;
    return true;
}

formal_object torsion_part(const torsion_pair& pair, const formal_object& x) {
    std::vector<indec> parts;
    for (const indec& m : x.summands) {
        int cut = 0;
        for (int l = m.len; l >= 1; --l)
            if (pair.membership(indec{m.socle, l}) == side::torsion) {
                cut = l;
                break;
            }
        if (cut > 0)
            parts.push_back(indec{m.socle, cut});
    }
    return formal_object(std::move(parts));
}

formal_object free_quotient(const torsion_pair& pair, const formal_object& x) {
    std::vector<indec> parts;
    for (const indec& m : x.summands) {
        int cut = 0;
        for (int l = m.len; l >= 1; --l)
            if (pair.membership(indec{m.socle, l}) == side::torsion) {
                cut = l;
                break;
            }
        if (cut < m.len)
            parts.push_back(indec{pair.spec.norm(m.socle + cut), m.len - cut});
    }
    return formal_object(std::move(parts));
}

ses torsion_sequence(const torsion_pair& pair, const formal_object& x, const fp_field& F) {
    const category_spec& spec = pair.spec;
    ses e;
    e.mid = x;
    e.sub = torsion_part(pair, x);
    e.quot = free_quotient(pair, x);
    e.inc = hom_element(e.sub, e.mid);
    e.prj = hom_element(e.mid, e.quot);
    // positions of the pieces inside the sorted sub/quot objects; duplicates
    // are matched in order of appearance
    std::vector<bool> sub_used(e.sub.summands.size(), false);
    std::vector<bool> quot_used(e.quot.summands.size(), false);
    for (size_t j = 0; j < x.summands.size(); ++j) {
        const indec& m = x.summands[j];
        int cut = 0;
        for (int l = m.len; l >= 1; --l)
            if (pair.membership(indec{m.socle, l}) == side::torsion) {
                cut = l;
                break;
            }
        if (cut > 0) {
            indec tpart{m.socle, cut};
            for (size_t i = 0; i < e.sub.summands.size(); ++i)
                if (!sub_used[i] && e.sub.summands[i] == tpart) {
                    sub_used[i] = true;
                    e.inc.add_term(F, static_cast<int>(j), static_cast<int>(i), 0, 1);
                    break;
                }
        }
        if (cut < m.len) {
            indec fpart{spec.norm(m.socle + cut), m.len - cut};
            for (size_t i = 0; i < e.quot.summands.size(); ++i)
                if (!quot_used[i] && e.quot.summands[i] == fpart) {
                    quot_used[i] = true;
                    e.prj.add_term(F, static_cast<int>(i), static_cast<int>(j), cut, 1);
                    break;
                }
        }
    }
    return e;
}

std::pair<hom_element, hom_element> torsion_functor_on_hom(const torsion_pair& pair,
                                                           const hom_element& f,
                                                           const fp_field& F) {
    const category_spec& spec = pair.spec;
    formal_object tx = torsion_part(pair, f.src);
    formal_object ty = torsion_part(pair, f.dst);
    formal_object fx = free_quotient(pair, f.src);
    formal_object fy = free_quotient(pair, f.dst);

    auto cut_of = [&](const indec& m) {
        for (int l = m.len; l >= 1; --l)
            if (pair.membership(indec{m.socle, l}) == side::torsion)
                return l;
        return 0;
    };

    // source/target summand -> index of its piece inside tx/ty/fx/fy
    auto piece_index = [](const formal_object& whole, const formal_object& pieces,
                          auto piece_of) {
        std::vector<int> map(whole.summands.size(), -1);
        std::vector<bool> used(pieces.summands.size(), false);
        for (size_t j = 0; j < whole.summands.size(); ++j) {
            std::optional<indec> p = piece_of(whole.summands[j]);
            if (!p)
                continue;
            for (size_t i = 0; i < pieces.summands.size(); ++i)
                if (!used[i] && pieces.summands[i] == *p) {
                    used[i] = true;
                    map[j] = static_cast<int>(i);
                    break;
                }
        }
        return map;
    };
    auto tpiece = [&](const indec& m) -> std::optional<indec> {
        int c = cut_of(m);
        return c > 0 ? std::optional<indec>(indec{m.socle, c}) : std::nullopt;
    };
    auto fpiece = [&](const indec& m) -> std::optional<indec> {
        int c = cut_of(m);
        return c < m.len
                   ? std::optional<indec>(indec{spec.norm(m.socle + c), m.len - c})
                   : std::nullopt;
    };
    std::vector<int> tsrc = piece_index(f.src, tx, tpiece);
    std::vector<int> tdst = piece_index(f.dst, ty, tpiece);
    std::vector<int> fsrc = piece_index(f.src, fx, fpiece);
    std::vector<int> fdst = piece_index(f.dst, fy, fpiece);

    hom_element tf(tx, ty);
    hom_element ff(fx, fy);
    for (size_t j = 0; j < f.src.summands.size(); ++j)
        for (size_t i = 0; i < f.dst.summands.size(); ++i) {
            const indec& sm = f.src.summands[j];
            const indec& dm = f.dst.summands[i];
            int cs = cut_of(sm);
            int cd = cut_of(dm);
            for (const hom_term& t : f.entry(static_cast<int>(i), static_cast<int>(j))) {
                // restriction to torsion parts
                if (cs > 0 && t.k < cs) {
                    if (cs - t.k > cd)
                        throw std::domain_error(
                            "morphism does not preserve torsion subobjects; "
                            "input is not a torsion pair");
                    tf.add_term(F, tdst[i], tsrc[j], t.k, t.c);
                }
                // induced map on the torsion-free quotients
                if (cs < sm.len) {
                    int kq = t.k + cd - cs;
                    if (kq < 0)
                        throw std::domain_error(
                            "morphism does not preserve torsion subobjects; "
                            "input is not a torsion pair");
                    if (kq < sm.len - cs && cd < dm.len)
                        ff.add_term(F, fdst[i], fsrc[j], kq, t.c);
                }
            }
        }
    return {tf, ff};
}

check_result verify_torsion_pair(const torsion_pair& pair, int cap, const fp_field& F) {
    (void)F;
    const category_spec& spec = pair.spec;
    check_result res{"torsion-pair", true, {}};
    int lim = std::min(cap, spec.max_len());
    std::vector<indec> universe;
    for (const indec& m : list_indecomposables(spec))
        if (m.len <= lim)
            universe.push_back(m);

    std::vector<indec> tors, free;
    for (const indec& m : universe) {
        side s = pair.membership(m);
        if (s == side::torsion)
            tors.push_back(m);
        else if (s == side::free_part)
            free.push_back(m);
    }

    for (const indec& t : tors)
        for (const indec& f : free)
            if (hom_dim(spec, t, f) > 0)
                res.fail("hom-vanishing: nonzero morphism " + display(t) + " -> " +
                         display(f));

    for (const indec& x : universe) {
        formal_object fq = free_quotient(pair, formal_object::of(x));
        for (const indec& q : fq.summands)
            if (pair.membership(q) != side::free_part)
                res.fail("torsion-sequence: quotient " + display(q) + " of " + display(x) +
                         " is not torsion-free");
    }

    for (const indec& t : tors) {
        auto [subs, quots] = subquotient_lattice(spec, t);
        (void)subs;
        for (const indec& q : quots)
            if (pair.membership(q) != side::torsion)
                res.fail("quotient-closure: " + display(q) + " is a quotient of " +
                         display(t) + " but not torsion");
    }

    for (const indec& q : tors)
        for (const indec& s : tors) {
            std::optional<indec> tq = tau(spec, q);
            if (!tq)
                continue;
            for (int kk : basis_hom_ks(spec, s, *tq))
                for (const indec& mid : ext_middle_summands(q, s, kk)) {
                    indec nm{spec.norm(mid.socle), mid.len};
                    if (pair.membership(nm) != side::torsion)
                        res.fail("extension-closure: middle summand " + display(nm) +
                                 " of an extension of " + display(q) + " by " +
                                 display(s) + " is not torsion");
                }
        }
    return res;
}

std::vector<torsion_pair> enumerate_torsion_pairs(const category_spec& spec) {
    if (spec.kind != cat_kind::linear_a)
        throw std::invalid_argument("enumeration is implemented for linear_a only");
    if (spec.n > 6)
        throw std::invalid_argument(
            "enumeration guarded to n <= 6; larger ranks blow up combinatorially");
    std::vector<indec> inds = list_indecomposables(spec);
    int N = static_cast<int>(inds.size());
    std::vector<uint32_t> quot_mask(N, 0), hom_from_mask(N, 0);
    std::vector<std::vector<uint32_t>> ext_mask(N, std::vector<uint32_t>(N, 0));
    auto idx_of = [&](const indec& m) {
        for (int i = 0; i < N; ++i)
            if (inds[i] == m)
                return i;
        throw std::logic_error("indec lookup failed");
    };
    for (int i = 0; i < N; ++i) {
        for (const indec& q : subquotient_lattice(spec, inds[i]).second)
            quot_mask[i] |= 1u << idx_of(q);
        for (int j = 0; j < N; ++j)
            if (hom_dim(spec, inds[j], inds[i]) > 0)
                hom_from_mask[i] |= 1u << j;  // all T with Hom(T, inds[i]) != 0
    }
    for (int qi = 0; qi < N; ++qi) {
        std::optional<indec> tq = tau(spec, inds[qi]);
        if (!tq)
            continue;
        for (int si = 0; si < N; ++si)
            for (int kk : basis_hom_ks(spec, inds[si], *tq))
                for (const indec& mid : ext_middle_summands(inds[qi], inds[si], kk))
                    ext_mask[qi][si] |= 1u << idx_of(mid);
    }

    std::vector<uint32_t> classes;
    for (uint32_t mask = 0; mask < (1u << N); ++mask) {
        bool ok = true;
        for (int i = 0; ok && i < N; ++i) {
            if (!(mask >> i & 1))
                continue;
            if ((quot_mask[i] & ~mask) != 0)
                ok = false;
            for (int j = 0; ok && j < N; ++j)
                if ((mask >> j & 1) && (ext_mask[i][j] & ~mask) != 0)
                    ok = false;
        }
        if (ok)
            classes.push_back(mask);
    }
    std::sort(classes.begin(), classes.end(), [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<torsion_pair> out;
    for (uint32_t mask : classes) {
        std::vector<indec> tlist, flist;
        for (int i = 0; i < N; ++i) {
            if (mask >> i & 1)
                tlist.push_back(inds[i]);
            else if ((hom_from_mask[i] & mask) == 0)
                flist.push_back(inds[i]);
        }
        out.push_back(torsion_pair::explicit_lists(spec, tlist, flist));
    }
    return out;
}

ff_decision is_functorially_finite(const torsion_pair& pair) {
    if (pair.spec.kind == cat_kind::linear_a)
        return {true, "module category of finite type"};
    return {false, "non-functorially-finite ambient pair"};
}

}  // namespace torq
