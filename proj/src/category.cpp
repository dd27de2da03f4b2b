#include "torq/category.hpp"

#include <algorithm>
#include <numeric>

namespace torq {

category_spec category_spec::linear(int n) {
    if (n < 1)
        throw std::invalid_argument("linear_a needs n >= 1");
    category_spec s;
    s.kind = cat_kind::linear_a;
    s.n = n;
    return s;
}

category_spec category_spec::tube(int rank, int length_cap) {
    if (rank < 2)
        throw std::invalid_argument("tube rank must be >= 2 (homogeneous tubes excluded)");
    if (length_cap < 1)
        throw std::invalid_argument("tube length_cap must be positive");
    category_spec s;
    s.kind = cat_kind::tube;
    s.rank = rank;
    s.length_cap = length_cap;
    return s;
}

std::string category_spec::describe() const {
    if (kind == cat_kind::linear_a)
        return "linear_a(" + std::to_string(n) + ")";
    return "tube(rank " + std::to_string(rank) + ", cap " + std::to_string(length_cap) + ")";
}

bool valid_indec(const category_spec& spec, const indec& m) {
    if (m.len < 1)
        return false;
    if (spec.kind == cat_kind::linear_a)
        return m.socle >= 1 && m.top() <= spec.n;
    return m.socle >= 0 && m.socle < spec.rank && m.len <= spec.length_cap;
}

void require_indec(const category_spec& spec, const indec& m) {
    if (!valid_indec(spec, m)) {
        if (spec.kind == cat_kind::tube && m.len > spec.length_cap && m.len >= 1)
            throw cap_error(m.len);
        throw std::invalid_argument("indecomposable " + display(m) + " is not in " +
                                    spec.describe());
    }
}

std::string display(const indec& m) {
    return "[" + std::to_string(m.socle) + "," + std::to_string(m.top()) + "]";
}

std::optional<indec> parse_indec(const category_spec& spec, const std::string& text) {
    size_t lb = text.find('[');
    size_t comma = text.find(',');
    size_t rb = text.find(']');
    if (lb == std::string::npos || comma == std::string::npos || rb == std::string::npos ||
        !(lb < comma && comma < rb))
        return std::nullopt;
    int a = 0, b = 0;
    try {
        a = std::stoi(text.substr(lb + 1, comma - lb - 1));
        b = std::stoi(text.substr(comma + 1, rb - comma - 1));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (b < a)
        return std::nullopt;
    indec m{spec.kind == cat_kind::tube ? spec.norm(a) : a, b - a + 1};
    if (!valid_indec(spec, m))
        return std::nullopt;
    return m;
}

formal_object::formal_object(std::vector<indec> parts) : summands(std::move(parts)) {
    std::sort(summands.begin(), summands.end());
}

int formal_object::total_dim() const {
    int d = 0;
    for (const indec& m : summands)
        d += m.len;
    return d;
}

std::vector<int> formal_object::dim_vector(const category_spec& spec) const {
    std::vector<int> dv(spec.vertex_count(), 0);
    int off = spec.min_socle();
    for (const indec& m : summands)
        for (int t = 0; t < m.len; ++t)
            ++dv[spec.norm(m.socle + t) - off];
    return dv;
}

std::string display(const formal_object& x) {
    if (x.is_zero())
        return "0";
    std::string s;
    for (size_t i = 0; i < x.summands.size(); ++i) {
        if (i)
            s += " + ";
        s += display(x.summands[i]);
    }
    return s;
}

std::vector<indec> list_indecomposables(const category_spec& spec) {
    std::vector<indec> out;
    if (spec.kind == cat_kind::linear_a) {
        for (int a = 1; a <= spec.n; ++a)
            for (int b = a; b <= spec.n; ++b)
                out.push_back(indec{a, b - a + 1});
    } else {
        for (int len = 1; len <= spec.length_cap; ++len)
            for (int s = 0; s < spec.rank; ++s)
                out.push_back(indec{s, len});
    }
    return out;
}

std::vector<int> basis_hom_ks(const category_spec& spec, const indec& m, const indec& n) {
    std::vector<int> ks;
    for (int k = 0; k < m.len; ++k) {
        if (!spec.socle_eq(m.socle + k, n.socle))
            continue;
        if (m.len - k > n.len)
            continue;
        ks.push_back(k);
    }
    return ks;
}

int hom_dim(const category_spec& spec, const indec& m, const indec& n) {
    require_indec(spec, m);
    require_indec(spec, n);
    return static_cast<int>(basis_hom_ks(spec, m, n).size());
}

std::optional<indec> tau(const category_spec& spec, const indec& m) {
    require_indec(spec, m);
    if (spec.kind == cat_kind::linear_a) {
        if (m.socle == 1)
            return std::nullopt;  // projective
        return indec{m.socle - 1, m.len};
    }
    return indec{spec.norm(m.socle - 1), m.len};
}

std::optional<indec> tau_inv(const category_spec& spec, const indec& m) {
    require_indec(spec, m);
    if (spec.kind == cat_kind::linear_a) {
        if (m.top() == spec.n)
            return std::nullopt;  // injective
        return indec{m.socle + 1, m.len};
    }
    return indec{spec.norm(m.socle + 1), m.len};
}

int ext_dim(const category_spec& spec, const indec& m, const indec& n) {
    std::optional<indec> tm = tau(spec, m);
    if (!tm)
        return 0;
    return hom_dim(spec, n, *tm);
}

std::pair<std::vector<indec>, std::vector<indec>> subquotient_lattice(
    const category_spec& spec, const indec& m) {
    require_indec(spec, m);
    std::vector<indec> subs, quots;
    for (int l = 1; l <= m.len; ++l)
        subs.push_back(indec{m.socle, l});
    for (int k = 0; k < m.len; ++k)
        quots.push_back(indec{spec.norm(m.socle + k), m.len - k});
    return {subs, quots};
}

hom_element::hom_element(formal_object s, formal_object d)
    : src(std::move(s)), dst(std::move(d)) {
    entries.resize(src.summands.size() * dst.summands.size());
}

std::vector<hom_term>& hom_element::entry(int i, int j) {
    return entries[static_cast<size_t>(i) * src.summands.size() + j];
}
const std::vector<hom_term>& hom_element::entry(int i, int j) const {
    return entries[static_cast<size_t>(i) * src.summands.size() + j];
}

void hom_element::add_term(const fp_field& F, int i, int j, int k, uint32_t c) {
    c %= F.p;
    if (!c)
        return;
    auto& e = entry(i, j);
    for (auto it = e.begin(); it != e.end(); ++it) {
        if (it->k == k) {
            it->c = F.add(it->c, c);
            if (!it->c)
                e.erase(it);
            return;
        }
        if (it->k > k) {
            e.insert(it, hom_term{k, c});
            return;
        }
    }
    e.push_back(hom_term{k, c});
}

bool hom_element::is_zero() const {
    for (const auto& e : entries)
        if (!e.empty())
            return false;
    return true;
}

hom_element hom_identity(const formal_object& x) {
    hom_element f(x, x);
    for (size_t i = 0; i < x.summands.size(); ++i)
        f.entry(static_cast<int>(i), static_cast<int>(i)).push_back(hom_term{0, 1});
    return f;
}

hom_element hom_zero(const formal_object& src, const formal_object& dst) {
    return hom_element(src, dst);
}

hom_element hom_compose(const category_spec& spec, const fp_field& F,
                        const hom_element& g, const hom_element& f) {
    (void)spec;  // composition is pure kernel-dimension arithmetic
    if (!(f.dst == g.src))
        throw std::logic_error("hom_compose: middle objects differ");
    hom_element h(f.src, g.dst);
    int ns = static_cast<int>(f.src.summands.size());
    int nm = static_cast<int>(f.dst.summands.size());
    int nd = static_cast<int>(g.dst.summands.size());
    for (int i = 0; i < nd; ++i)
        for (int j = 0; j < ns; ++j) {
            int len_src = f.src.summands[j].len;
            for (int m = 0; m < nm; ++m) {
                const auto& fe = f.entry(m, j);
                const auto& ge = g.entry(i, m);
                for (const hom_term& tf : fe)
                    for (const hom_term& tg : ge) {
                        int k = tf.k + tg.k;
                        if (k >= len_src)
                            continue;  // composite vanishes
                        h.add_term(F, i, j, k, F.mul(tf.c, tg.c));
                    }
            }
        }
    return h;
}

hom_element hom_add(const fp_field& F, const hom_element& f, const hom_element& g) {
    if (!(f.src == g.src) || !(f.dst == g.dst))
        throw std::logic_error("hom_add: shape mismatch");
    hom_element h = f;
    int ns = static_cast<int>(f.src.summands.size());
    int nd = static_cast<int>(f.dst.summands.size());
    for (int i = 0; i < nd; ++i)
        for (int j = 0; j < ns; ++j)
            for (const hom_term& t : g.entry(i, j))
                h.add_term(F, i, j, t.k, t.c);
    return h;
}

hom_element hom_scale(const fp_field& F, uint32_t c, const hom_element& f) {
    hom_element h(f.src, f.dst);
    int ns = static_cast<int>(f.src.summands.size());
    int nd = static_cast<int>(f.dst.summands.size());
    for (int i = 0; i < nd; ++i)
        for (int j = 0; j < ns; ++j)
            for (const hom_term& t : f.entry(i, j))
                h.add_term(F, i, j, t.k, F.mul(t.c, c));
    return h;
}

bool hom_equal(const hom_element& f, const hom_element& g) {
    if (!(f.src == g.src) || !(f.dst == g.dst))
        return false;
    for (size_t e = 0; e < f.entries.size(); ++e) {
        const auto& a = f.entries[e];
        const auto& b = g.entries[e];
        if (a.size() != b.size())
            return false;
        for (size_t t = 0; t < a.size(); ++t)
            if (a[t].k != b[t].k || a[t].c != b[t].c)
                return false;
    }
    return true;
}

std::vector<hom_element> hom_basis(const category_spec& spec, const formal_object& x,
                                   const formal_object& y) {
    std::vector<hom_element> out;
    for (size_t j = 0; j < x.summands.size(); ++j)
        for (size_t i = 0; i < y.summands.size(); ++i)
            for (int k : basis_hom_ks(spec, x.summands[j], y.summands[i])) {
                hom_element f(x, y);
                f.entry(static_cast<int>(i), static_cast<int>(j)).push_back(hom_term{k, 1});
                out.push_back(std::move(f));
            }
    return out;
}

int hom_dim(const category_spec& spec, const formal_object& x, const formal_object& y) {
    int d = 0;
    for (const indec& m : x.summands)
        for (const indec& n : y.summands)
            d += hom_dim(spec, m, n);
    return d;
}

std::vector<uint32_t> hom_coords(const category_spec& spec, const hom_element& f) {
    std::vector<uint32_t> out;
    for (size_t j = 0; j < f.src.summands.size(); ++j)
        for (size_t i = 0; i < f.dst.summands.size(); ++i)
            for (int k : basis_hom_ks(spec, f.src.summands[j], f.dst.summands[i])) {
                uint32_t c = 0;
                for (const hom_term& t : f.entry(static_cast<int>(i), static_cast<int>(j)))
                    if (t.k == k)
                        c = t.c;
                out.push_back(c);
            }
    return out;
}

block_index make_block(const std::vector<const formal_object*>& pieces) {
    struct tagged {
        indec m;
        int piece;
        int idx;
    };
    std::vector<tagged> all;
    for (size_t p = 0; p < pieces.size(); ++p)
        for (size_t i = 0; i < pieces[p]->summands.size(); ++i)
            all.push_back({pieces[p]->summands[i], static_cast<int>(p), static_cast<int>(i)});
    std::stable_sort(all.begin(), all.end(),
                     [](const tagged& a, const tagged& b) { return a.m < b.m; });
    block_index out;
    out.slot.resize(pieces.size());
    for (size_t p = 0; p < pieces.size(); ++p)
        out.slot[p].resize(pieces[p]->summands.size(), -1);
    for (size_t q = 0; q < all.size(); ++q) {
        out.obj.summands.push_back(all[q].m);
        out.slot[all[q].piece][all[q].idx] = static_cast<int>(q);
    }
    return out;
}

std::vector<indec> ext_middle_summands(const indec& quot_m, const indec& sub_s, int k) {
    std::vector<indec> mids;
    mids.push_back(indec{sub_s.socle, k + quot_m.len + 1});
    if (k < sub_s.len - 1)
        mids.push_back(indec{sub_s.socle + k + 1, sub_s.len - k - 1});
    return mids;
}

std::vector<ses> ext_basis(const category_spec& spec, const indec& quot_m,
                           const indec& sub_s, const fp_field& F) {
    require_indec(spec, quot_m);
    require_indec(spec, sub_s);
    std::vector<ses> out;
    std::optional<indec> tq = tau(spec, quot_m);
    if (!tq)
        return out;
    for (int k : basis_hom_ks(spec, sub_s, *tq)) {
        indec long_mid{sub_s.socle, k + quot_m.len + 1};
        if (spec.kind == cat_kind::tube && long_mid.len > spec.length_cap)
            throw cap_error(long_mid.len);
        bool glued = (k == sub_s.len - 1);
        indec short_mid{spec.norm(sub_s.socle + k + 1), sub_s.len - k - 1};

        ses e;
        e.sub = formal_object::of(sub_s);
        e.quot = formal_object::of(quot_m);
        e.mid = glued ? formal_object({long_mid})
                      : formal_object({long_mid, short_mid});
        // short_mid is strictly shorter than long_mid, so in canonical order
        // it sits first when present.
        int idx_long = glued ? 0 : 1;
        e.inc = hom_element(e.sub, e.mid);
        e.inc.add_term(F, idx_long, 0, 0, 1);  // socle-preserving inclusion
        if (!glued)
            e.inc.add_term(F, 0, 0, k + 1, 1);  // quotient onto the short summand
        e.prj = hom_element(e.mid, e.quot);
        e.prj.add_term(F, 0, idx_long, k + 1, 1);
        if (!glued)
            e.prj.add_term(F, 0, 0, 0, F.neg(1));  // inclusion, sign for exactness
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<ses> ar_sequence(const category_spec& spec, const indec& m,
                               const fp_field& F) {
    std::optional<indec> tm = tau(spec, m);
    if (!tm)
        return std::nullopt;
    // The almost split sequence is the k = 0 basis extension of M by tau M:
    // [s-1, t-1] >-> [s-1, t] + [s, t-1] ->> [s, t], second summand dropped
    // when len < 2.
    std::vector<ses> basis = ext_basis(spec, m, *tm, F);
    if (basis.empty())
        throw std::logic_error("ar_sequence: tau-translate exists but no extension found");
    return basis.front();  // k = 0 sorts first
}

}  // namespace torq
