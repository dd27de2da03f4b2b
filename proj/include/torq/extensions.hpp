#pragma once

#include <optional>

#include "torq/oracle.hpp"
#include "torq/report.hpp"
#include "torq/torsion.hpp"

namespace torq {

/* A universal extension T >-> E ->> Y to the torsion part: the connecting map
 * Hom(T, -) -> Ext^1(Y, -) is onto the torsion subcategory. Minimal when the
 * epi is right minimal. */
struct universal_extension {
    ses seq;
    bool minimal = false;
};

/* torsion indecomposables with a nonzero extension space against y */
std::vector<indec> relevant_generators(const torsion_pair& pair, const indec& y);

/* Bongartz construction: one basis extension per extension dimension, summed
 * and pulled back along the diagonal (realized as the extension with the
 * stacked cocycle class, then decomposed). Oracle-certified exact. */
universal_extension bongartz_extension(const torsion_pair& pair, const indec& y,
                                       const std::vector<indec>& generators,
                                       const fp_field& F);

/* Right-minimalizes the epi and splits off the matching trivial factors,
 * processing summands in canonical order. Idempotent. */
universal_extension minimalize(const universal_extension& ue, const torsion_pair& pair,
                               const fp_field& F);

struct universality_verdict {
    bool ok = true;
    std::string witness;
};

/* surjectivity of the connecting map onto Ext^1(quot, G) for every torsion G
 * up to the cap, by oracle rank checks */
universality_verdict is_universal_extension(const ses& e, const torsion_pair& pair,
                                            int cap, const fp_field& F);

struct admit_decision {
    bool admits = false;
    std::string certificate;
    std::optional<universal_extension> witness;
};

/* Existence decision with certificate: constructive for linear_a, tube case 1
 * and finite explicit pairs; for tube case 2 the inner-wing criterion decides,
 * cross-checked against the unbounded coray obstruction. */
admit_decision admits_universal_extension(const torsion_pair& pair, const indec& f,
                                          int cap, const fp_field& F);

/* Bongartz + minimalize over the relevant generators. */
universal_extension minimal_universal_extension(const torsion_pair& pair, const indec& y,
                                                const fp_field& F);

/* Wakamatsu-type properties of a minimal universal extension: the middle is
 * Ext-orthogonal to the torsion part and the epi is a right approximation
 * from the Ext-orthogonal complement. */
check_result wakamatsu_check(const universal_extension& ue, const torsion_pair& pair,
                             int cap, const fp_field& F);

struct pushout_certificate {
    bool ok = false;
    std::string diagnostic;
};

/* Finds morphisms exhibiting `target` as a pushout of `ue` (same quotient)
 * and certifies the induced four-term sequence exact. */
pushout_certificate realize_as_pushout(const category_spec& spec, const fp_field& F,
                                       const ses& ue, const ses& target);

}  // namespace torq
