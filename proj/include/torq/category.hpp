#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torq/field.hpp"

namespace torq {

/* Raised when a construction needs uniserials longer than the tube's
 * length cap. Carries the cap that would suffice. */
struct cap_error : std::runtime_error {
    int needed;
    explicit cap_error(int needed_cap)
        : std::runtime_error("length cap exceeded; raise length_cap to at least " +
                             std::to_string(needed_cap)),
          needed(needed_cap) {}
};

/* Raised when a truncated computation over an infinite family fails the
 * stabilization discipline. */
struct not_stabilized_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class cat_kind { linear_a, tube };

/* Ambient category: representations of the linearly oriented A_n quiver
 * (arrows n -> n-1 -> ... -> 1) or nilpotent representations of the cyclic
 * quiver with `rank` vertices (arrows v -> v-1 mod rank). Both are serial:
 * every indecomposable is uniserial. */
struct category_spec {
    cat_kind kind;
    int n = 0;           // linear_a only
    int rank = 0;        // tube only
    int length_cap = 0;  // tube only

    static category_spec linear(int n);
    static category_spec tube(int rank, int length_cap);

    int vertex_count() const { return kind == cat_kind::linear_a ? n : rank; }
    int max_len() const { return kind == cat_kind::linear_a ? n : length_cap; }
    int min_socle() const { return kind == cat_kind::linear_a ? 1 : 0; }

    /* residue normalization; identity for linear_a */
    int norm(int x) const {
        if (kind == cat_kind::linear_a)
            return x;
        int r = x % rank;
        return r < 0 ? r + rank : r;
    }
    bool socle_eq(int a, int b) const {
        return kind == cat_kind::linear_a ? a == b : norm(a - b) == 0;
    }
    std::string describe() const;

    bool operator==(const category_spec&) const = default;
};

/* One indecomposable: the uniserial with the given socle and length,
 * written [socle, socle+len-1]. In a tube the socle is a residue mod rank
 * and the top may be displayed beyond rank-1. */
struct indec {
    int socle = 0;
    int len = 0;

    int top() const { return socle + len - 1; }

    bool operator==(const indec&) const = default;
    /* canonical order: length, then socle; fixes all tie-breaking */
    bool operator<(const indec& o) const {
        return len != o.len ? len < o.len : socle < o.socle;
    }
};

bool valid_indec(const category_spec& spec, const indec& m);
void require_indec(const category_spec& spec, const indec& m);
std::string display(const indec& m);
std::optional<indec> parse_indec(const category_spec& spec, const std::string& text);

/* A finite direct sum of indecomposables, kept sorted in canonical order.
 * The empty sum is the zero object. */
struct formal_object {
    std::vector<indec> summands;

    formal_object() = default;
    explicit formal_object(std::vector<indec> parts);
    static formal_object zero() { return formal_object(); }
    static formal_object of(const indec& m) { return formal_object({m}); }

    bool is_zero() const { return summands.empty(); }
    int total_dim() const;
    std::vector<int> dim_vector(const category_spec& spec) const;

    bool operator==(const formal_object&) const = default;
};

std::string display(const formal_object& x);

/* ---- operations on indecomposables ---- */

std::vector<indec> list_indecomposables(const category_spec& spec);

/* A basis morphism M -> N is determined by the dimension k of its kernel:
 * it kills the bottom k composition factors of M and maps the remaining
 * len(M)-k onto the bottom of N. Valid iff socle(M)+k matches socle(N) and
 * len(M)-k <= len(N). Composition adds kernel dimensions. */
struct basis_hom {
    indec source, target;
    int k = 0;

    indec image() const { return indec{target.socle, source.len - k}; }
};

std::vector<int> basis_hom_ks(const category_spec& spec, const indec& m, const indec& n);
int hom_dim(const category_spec& spec, const indec& m, const indec& n);

std::optional<indec> tau(const category_spec& spec, const indec& m);
std::optional<indec> tau_inv(const category_spec& spec, const indec& m);

/* dim Ext^1(M, N): extensions with quotient M and sub N. */
int ext_dim(const category_spec& spec, const indec& m, const indec& n);

/* submodules share the socle, quotients share the top */
std::pair<std::vector<indec>, std::vector<indec>> subquotient_lattice(
    const category_spec& spec, const indec& m);

/* ---- morphisms between formal objects ---- */

struct hom_term {
    int k;
    uint32_t c;
};

/* f : src -> dst. entry(i, j) is the component src.summands[j] ->
 * dst.summands[i], stored as a coefficient combination of basis morphisms
 * (indexed by kernel dimension k). */
struct hom_element {
    formal_object src, dst;
    std::vector<std::vector<hom_term>> entries;  // [i * nsrc + j]

    hom_element() = default;
    hom_element(formal_object s, formal_object d);

    std::vector<hom_term>& entry(int i, int j);
    const std::vector<hom_term>& entry(int i, int j) const;
    void add_term(const fp_field& F, int i, int j, int k, uint32_t c);
    bool is_zero() const;
};

hom_element hom_identity(const formal_object& x);
hom_element hom_zero(const formal_object& src, const formal_object& dst);
/* g after f */
hom_element hom_compose(const category_spec& spec, const fp_field& F,
                        const hom_element& g, const hom_element& f);
hom_element hom_add(const fp_field& F, const hom_element& f, const hom_element& g);
hom_element hom_scale(const fp_field& F, uint32_t c, const hom_element& f);
bool hom_equal(const hom_element& f, const hom_element& g);

/* basis of Hom(X, Y): one element per basis morphism between summand pairs */
std::vector<hom_element> hom_basis(const category_spec& spec, const formal_object& x,
                                   const formal_object& y);
int hom_dim(const category_spec& spec, const formal_object& x, const formal_object& y);

/* coordinates of f in the hom_basis order of its (src, dst) pair */
std::vector<uint32_t> hom_coords(const category_spec& spec, const hom_element& f);

/* direct sum of formal objects with slot maps into the sorted result:
 * slot[p][i] = index of piece p's summand i inside obj. */
struct block_index {
    formal_object obj;
    std::vector<std::vector<int>> slot;
};
block_index make_block(const std::vector<const formal_object*>& pieces);

/* ---- short exact sequences ---- */

struct ses {
    formal_object sub, mid, quot;
    hom_element inc;  // sub -> mid
    hom_element prj;  // mid -> quot
};

/* Representatives of a basis of Ext^1(quot_m, sub_s): for each admissible
 * kernel parameter k the middle is [a, a+k+len(Q)] + [a+k+1, top(S)], the
 * second summand dropped when k = len(S)-1 (the glued uniserial case). */
std::vector<ses> ext_basis(const category_spec& spec, const indec& quot_m,
                           const indec& sub_s, const fp_field& F);

/* Middle-term summands of the k-th basis extension without building maps;
 * used by closure checks that may exceed the tube cap. */
std::vector<indec> ext_middle_summands(const indec& quot_m, const indec& sub_s, int k);

std::optional<ses> ar_sequence(const category_spec& spec, const indec& m,
                               const fp_field& F);

}  // namespace torq
