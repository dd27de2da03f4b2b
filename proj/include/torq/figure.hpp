#pragma once

#include "torq/scenario.hpp"

namespace torq {

/* ASCII picture of the AR-quiver slice with membership marks, followed by
 * two overlays computed from the equivalence machinery: the Ext-orthogonal
 * complement minus the torsion part, and the torsion-free objects admitting
 * universal extensions. Byte-deterministic for a fixed scenario. */
std::string render_figure(const scenario& sc, int cap, const fp_field& F);

}  // namespace torq
