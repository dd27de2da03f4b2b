#pragma once

#include "torq/extensions.hpp"

namespace torq {

enum class slice_intent { perp_ext, script_e, perp_cap_torsion };

/* All indecomposables of length <= cap in a distinguished subcategory. */
struct subcategory_slice {
    category_spec spec;
    int cap = 0;
    slice_intent intent = slice_intent::perp_ext;
    std::vector<indec> members;

    bool has(const indec& m) const;
};

/* the Ext-orthogonal complement of the torsion part, intensional corays
 * resolved by the closed-form residue test */
subcategory_slice perp_ext_slice(const torsion_pair& pair, int cap, const fp_field& F);

/* torsion-free objects admitting a universal extension to the torsion part */
subcategory_slice script_e_slice(const torsion_pair& pair, int cap, const fp_field& F);

enum class ideal_kind { bracket_t, bracket_perp_cap_t };

struct quotient_hom_result {
    int total_dim = 0;
    int ideal_dim = 0;
    int quotient_dim = 0;
};

/* Hom(x, y) together with the dimension of the ideal of morphisms factoring
 * through the torsion part (or through perp-cap-torsion). Factoring through
 * the infinite coray families goes through truncations that must stabilize
 * over three consecutive caps. */
quotient_hom_result quotient_hom(const torsion_pair& pair, const formal_object& x,
                                 const formal_object& y, ideal_kind kind, int cap,
                                 const fp_field& F);

/* the torsion-free functor on objects and morphisms */
formal_object functor_f_obj(const torsion_pair& pair, const formal_object& x);
hom_element functor_f_hom(const torsion_pair& pair, const hom_element& f,
                          const fp_field& F);

/* the universal-extension functor on objects (middle terms, summand-wise) and
 * morphisms (a lift through the extensions, well defined modulo the ideal) */
formal_object functor_c_obj(const torsion_pair& pair, const formal_object& x,
                            const fp_field& F);
hom_element functor_c_hom(const torsion_pair& pair, const hom_element& f,
                          const fp_field& F);

/* equality of morphisms modulo the ideal of maps factoring through torsion */
bool hom_equal_mod_torsion(const torsion_pair& pair, const hom_element& f,
                           const hom_element& g, int cap, const fp_field& F);

/* the main equivalence, verified as: object round trips both ways, a
 * dimension equality between quotient hom spaces and their images, and a
 * bijection on torsion-summand-free iso classes */
check_result verify_equivalence(const torsion_pair& pair, int cap, const fp_field& F);

/* the functorially-finite specialization: the script-E slice exhausts the
 * torsion-free part and both ideals give the same quotients */
check_result verify_ff_corollary(const torsion_pair& pair, int cap, const fp_field& F);

/* ideal identity alone: factoring through torsion equals factoring through
 * perp-cap-torsion on the perp slice */
check_result verify_ideal_identity(const torsion_pair& pair, int cap, const fp_field& F);

/* left-weak cotorsion-torsion conditions for the pair (perp, torsion):
 * Ext-vanishing, right approximations from minimal universal extensions, and
 * left torsion approximations with cokernel in perp */
check_result verify_lwc_triple(const torsion_pair& pair, int cap, const fp_field& F);

/* wakamatsu_check batched over the script-E slice */
check_result wakamatsu_suite(const torsion_pair& pair, int cap, const fp_field& F);

}  // namespace torq
