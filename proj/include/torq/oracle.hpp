#pragma once

#include <string>
#include <vector>

#include "torq/category.hpp"
#include "torq/field.hpp"

namespace torq {

/* Vertex/arrow bookkeeping shared by both quivers. Vertices are indexed
 * 0..vertex_count-1 (linear_a vertex v has index v-1). Every arrow points
 * from its source vertex to the previous one: linear_a has n-1 arrows with
 * sources 2..n, the cyclic quiver has one arrow per vertex. */
int vindex(const category_spec& spec, int vertex_label);
int arrow_count(const category_spec& spec);
int arrow_source_vidx(const category_spec& spec, int ai);
int arrow_target_vidx(const category_spec& spec, int ai);

/* Positions of the standard basis of a formal object inside the per-vertex
 * blocks: pos[si][t] is the index of cover point socle+t of summand si. */
struct rep_layout {
    category_spec spec;
    formal_object obj;
    std::vector<int> vdim;
    std::vector<std::vector<int>> pos;
};

rep_layout layout_of(const category_spec& spec, const formal_object& x);

/* Explicit representation: per-vertex dimensions and one matrix per arrow
 * (target-dim x source-dim). Tube representations are nilpotent around the
 * cycle by construction. */
struct matrix_rep {
    category_spec spec;
    std::vector<int> vdim;
    std::vector<fmat> arrow;
};

matrix_rep rep_of(const rep_layout& L);
matrix_rep realize(const category_spec& spec, const formal_object& x);

/* per-vertex matrices of a morphism (target block x source block) */
using vertex_maps = std::vector<fmat>;

vertex_maps hom_to_mats(const category_spec& spec, const fp_field& F,
                        const hom_element& f, const rep_layout& LX,
                        const rep_layout& LY);

/* Reads a tuple of vertex maps between two canonical layouts back into the
 * basis-morphism calculus; throws when the matrices are not a module map
 * respecting the layouts. */
hom_element mats_to_hom(const category_spec& spec, const fp_field& F,
                        const vertex_maps& f, const rep_layout& LX,
                        const rep_layout& LY);

/* basis of all morphisms A -> B, solving f_tgt A_arrow = B_arrow f_src */
std::vector<vertex_maps> intertwiners(const fp_field& F, const matrix_rep& A,
                                      const matrix_rep& B);
int intertwiner_dim(const fp_field& F, const matrix_rep& A, const matrix_rep& B);

/* dim Ext^1(A, B) as the cokernel of the vertex-to-arrow map of the standard
 * two-term complex for hereditary path algebras. */
int ext_complex_dim(const fp_field& F, const matrix_rep& A, const matrix_rep& B);

struct exact_certificate {
    bool ok = false;
    std::string diagnostic;
};

exact_certificate certify_exact(const category_spec& spec, const fp_field& F,
                                const ses& e);

/* Dimension of the span of all composites X -> T -> Y with T in add(through). */
int factoring_dim(const category_spec& spec, const fp_field& F, const formal_object& x,
                  const formal_object& y, const std::vector<indec>& through);

/* ---- extension classes as cocycles ---- */

/* A cocycle for Ext^1(Q, S) is a tuple C[ai] : Q_src -> S_tgt per arrow.
 * The class space is the quotient by coboundaries of vertex maps Q_v -> S_v. */
using cocycle = std::vector<fmat>;

struct ext_space {
    const fp_field* F = nullptr;
    int wdim = 0;
    row_space cobound;
    std::vector<int> free_cols;

    ext_space(const fp_field& field) : F(&field), cobound(field, 0) {}
    int dim() const { return static_cast<int>(free_cols.size()); }
    std::vector<uint32_t> coords(const category_spec& spec, const matrix_rep& Q,
                                 const matrix_rep& S, const cocycle& c) const;
};

ext_space make_ext_space(const category_spec& spec, const fp_field& F,
                         const matrix_rep& Q, const matrix_rep& S);

/* Extracts the cocycle of a short exact sequence via vertex-wise splittings. */
cocycle cocycle_of(const category_spec& spec, const fp_field& F, const ses& e);

/* Block representation of the extension of rep_of(LY) by rep_of(LX) with the
 * given cocycle: vertex blocks X + Y, arrows [[Ax, C], [0, Ay]]. */
matrix_rep extension_rep(const category_spec& spec, const fp_field& F,
                         const rep_layout& LX, const rep_layout& LY,
                         const cocycle& C);

/* ---- Krull-Schmidt decomposition ---- */

struct decomposition {
    formal_object obj;
    /* iso[v] maps canonical coordinates of realize(obj) into the coordinates
     * of the decomposed representation (columns = images). */
    std::vector<fmat> iso;
};

/* Graded Jordan-chain decomposition of a representation into uniserials.
 * Works for both quivers; tube inputs must be nilpotent. */
decomposition decompose(const category_spec& spec, const fp_field& F,
                        const matrix_rep& M);

/* Multiset-only variant (no change of basis needed). */
formal_object decompose_multiset(const category_spec& spec, const fp_field& F,
                                 const matrix_rep& M);

/* Cokernel of a morphism given by vertex maps, with the quotient projection. */
struct coker_result {
    matrix_rep rep;
    vertex_maps proj;  // T' -> coker
};
coker_result cokernel(const category_spec& spec, const fp_field& F,
                      const matrix_rep& src, const matrix_rep& dst,
                      const vertex_maps& g);

/* Submodule of X generated by the images of all morphisms from `gens`;
 * returns its decomposition (the trace of add(gens) in X). */
formal_object trace_submodule(const category_spec& spec, const fp_field& F,
                              const formal_object& x, const std::vector<indec>& gens);

}  // namespace torq
