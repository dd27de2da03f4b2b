#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torq/category.hpp"
#include "torq/report.hpp"

namespace torq {

enum class side { torsion, free_part, neither };

/* A wing W[lo, hi] (cover coordinates) carrying an explicit torsion pair on
 * its members. Member lists are kept sorted with normalized socles. */
struct wing_pair {
    int lo = 0;
    int hi = 0;
    std::vector<indec> torsion;
    std::vector<indec> free;
};

/* A torsion pair presented either by explicit member lists or by one of the
 * two tube classification families:
 *  - tube_rays: rays at the given indices are torsion-free, with torsion
 *    pairs in the wings below them (torsion part of finite type);
 *  - tube_corays: corays at the given indices are torsion, with torsion
 *    pairs in the wings below them (torsion part of infinite type).
 * Construction validates structural invariants; the torsion-pair axioms are
 * the job of verify_torsion_pair. */
struct torsion_pair {
    enum class kind { explicit_pair, tube_rays, tube_corays };

    category_spec spec;
    kind k = kind::explicit_pair;
    std::vector<indec> torsion_list;  // explicit_pair only
    std::vector<indec> free_list;     // explicit_pair only
    std::vector<int> indices;         // ray/coray socle resp. top residues
    std::vector<wing_pair> wings;

    static torsion_pair explicit_lists(const category_spec& spec,
                                       std::vector<indec> torsion,
                                       std::vector<indec> free);
    static torsion_pair tube_case1(const category_spec& spec, std::vector<int> ray_indices,
                                   std::vector<wing_pair> wings);
    static torsion_pair tube_case2(const category_spec& spec,
                                   std::vector<int> coray_indices,
                                   std::vector<wing_pair> wings);

    side membership(const indec& m) const;
    bool in_torsion(const indec& m) const { return membership(m) == side::torsion; }
    bool in_free(const indec& m) const { return membership(m) == side::free_part; }

    /* all torsion (resp. free) indecomposables of length <= max_len */
    std::vector<indec> torsion_members(int max_len) const;
    std::vector<indec> free_members(int max_len) const;

    /* coray residues contributing torsion objects of unbounded length */
    std::vector<int> intensional_coray_tops() const;

    /* Ext^1(m, -) against the full coray at residue `top_residue` (members of
     * every length); closed-form residue test. */
    bool ext_to_coray_nonzero(const indec& m, int top_residue) const;

    /* true when Ext^1(m, T) = 0 for the whole torsion part, the intensional
     * corays included */
    bool in_perp_ext(const indec& m, int probe_len) const;
};

/* canonical torsion sequence t(x) >-> x ->> f(x), computed summand-wise */
ses torsion_sequence(const torsion_pair& pair, const formal_object& x, const fp_field& F);

formal_object torsion_part(const torsion_pair& pair, const formal_object& x);
formal_object free_quotient(const torsion_pair& pair, const formal_object& x);

/* induced maps on the torsion subobjects and torsion-free quotients */
std::pair<hom_element, hom_element> torsion_functor_on_hom(const torsion_pair& pair,
                                                           const hom_element& f,
                                                           const fp_field& F);

/* torsion-pair axioms up to the cap: hom-vanishing, torsion sequences,
 * closure of the torsion part under quotients and extension middle terms */
check_result verify_torsion_pair(const torsion_pair& pair, int cap, const fp_field& F);

/* all torsion pairs of linear_a(n), n <= 6; explicit presentations ordered
 * by torsion class size then member lists */
std::vector<torsion_pair> enumerate_torsion_pairs(const category_spec& spec);

struct ff_decision {
    bool value;
    std::string reason;
};
ff_decision is_functorially_finite(const torsion_pair& pair);

}  // namespace torq
