#include <doctest.h>

#include "torq/oracle.hpp"

using namespace torq;

TEST_CASE("realize dimension vectors") {
    fp_field F(101);
    category_spec t5 = category_spec::tube(5, 8);
    formal_object x = formal_object::of(indec{0, 3});
    rep_layout L = layout_of(t5, x);
    CHECK(L.vdim == std::vector<int>{1, 1, 1, 0, 0});
    matrix_rep R = rep_of(L);
    int nonzero_arrows = 0;
    for (const fmat& a : R.arrow)
        if (!a.is_zero())
            ++nonzero_arrows;
    CHECK(nonzero_arrows == 2);

    category_spec a3 = category_spec::linear(3);
    CHECK(realize(a3, formal_object::of(indec{1, 3})).vdim == std::vector<int>{1, 1, 1});
    CHECK(realize(a3, formal_object::zero()).vdim == std::vector<int>{0, 0, 0});
}

TEST_CASE("intertwiner space vs combinatorial hom") {
    fp_field F(101);
    for (category_spec spec :
         {category_spec::tube(3, 7), category_spec::tube(5, 6), category_spec::linear(4)}) {
        auto inds = list_indecomposables(spec);
        for (const indec& m : inds)
            for (const indec& n : inds) {
                matrix_rep A = realize(spec, formal_object::of(m));
                matrix_rep B = realize(spec, formal_object::of(n));
                CHECK(intertwiner_dim(F, A, B) == hom_dim(spec, m, n));
            }
    }
}

TEST_CASE("intertwiner space contains the identity") {
    fp_field F(97);
    category_spec t4 = category_spec::tube(4, 9);
    formal_object x({indec{0, 5}, indec{2, 3}});
    matrix_rep R = realize(t4, x);
    auto basis = intertwiners(F, R, R);
    // identity must be a combination of the basis: check dims and that the
    // identity satisfies the intertwiner equations directly
    bool found_combination = false;
    row_space rs(F, 0);
    int cols = 0;
    for (int v = 0; v < 4; ++v)
        cols += R.vdim[v] * R.vdim[v];
    row_space span(F, cols);
    for (const auto& f : basis) {
        std::vector<uint32_t> vec;
        for (const fmat& m : f)
            vec.insert(vec.end(), m.a.begin(), m.a.end());
        span.add(std::move(vec));
    }
    std::vector<uint32_t> idvec;
    for (int v = 0; v < 4; ++v) {
        fmat id = fmat::identity(R.vdim[v]);
        idvec.insert(idvec.end(), id.a.begin(), id.a.end());
    }
    found_combination = span.contains(idvec);
    CHECK(found_combination);
    (void)rs;
}

TEST_CASE("ext complex dimension vs combinatorial ext") {
    fp_field F(101);
    fp_field F2(97);
    for (category_spec spec : {category_spec::tube(2, 6), category_spec::tube(5, 6),
                               category_spec::linear(3), category_spec::linear(5)}) {
        auto inds = list_indecomposables(spec);
        for (const indec& m : inds)
            for (const indec& n : inds) {
                matrix_rep A = realize(spec, formal_object::of(m));
                matrix_rep B = realize(spec, formal_object::of(n));
                int expected = ext_dim(spec, m, n);
                CHECK(ext_complex_dim(F, A, B) == expected);
                CHECK(ext_complex_dim(F2, A, B) == expected);
            }
    }
}

TEST_CASE("certify_exact accepts constructed sequences") {
    fp_field F(101);
    category_spec t5 = category_spec::tube(5, 25);
    for (const indec& m : list_indecomposables(category_spec::tube(5, 6))) {
        auto e = ar_sequence(t5, m, F);
        REQUIRE(e.has_value());
        CHECK(certify_exact(t5, F, *e).ok);
    }
    auto basis = ext_basis(t5, indec{0, 10}, indec{0, 10}, F);
    for (const ses& e : basis)
        CHECK(certify_exact(t5, F, e).ok);

    category_spec a4 = category_spec::linear(4);
    for (const indec& q : list_indecomposables(a4))
        for (const indec& s : list_indecomposables(a4))
            for (const ses& e : ext_basis(a4, q, s, F))
                CHECK(certify_exact(a4, F, e).ok);
}

TEST_CASE("certify_exact on split and broken sequences") {
    fp_field F(101);
    category_spec a3 = category_spec::linear(3);
    indec a{1, 2}, b{2, 2};
    ses split;
    split.sub = formal_object::of(a);
    split.quot = formal_object::of(b);
    split.mid = formal_object({a, b});
    split.inc = hom_element(split.sub, split.mid);
    split.prj = hom_element(split.mid, split.quot);
    int ia = split.mid.summands[0] == a ? 0 : 1;
    split.inc.add_term(F, ia, 0, 0, 1);
    split.prj.add_term(F, 0, 1 - ia, 0, 1);
    CHECK(certify_exact(a3, F, split).ok);

    ses broken = split;
    broken.prj = hom_element(split.mid, split.quot);  // zero projection
    CHECK_FALSE(certify_exact(a3, F, broken).ok);
}

TEST_CASE("ext_basis classes are linearly independent") {
    fp_field F(101);
    category_spec t5 = category_spec::tube(5, 25);
    indec q{0, 10}, s{0, 10};
    auto basis = ext_basis(t5, q, s, F);
    REQUIRE(basis.size() == 2);
    matrix_rep Q = realize(t5, formal_object::of(q));
    matrix_rep S = realize(t5, formal_object::of(s));
    ext_space es = make_ext_space(t5, F, Q, S);
    CHECK(es.dim() == 2);
    row_space classes(F, es.dim());
    for (const ses& e : basis)
        CHECK(classes.add(es.coords(t5, Q, S, cocycle_of(t5, F, e))));
    CHECK(classes.dim() == 2);
}

TEST_CASE("factoring_dim is bounded by hom and monotone in the through-set") {
    fp_field F(101);
    category_spec t4 = category_spec::tube(4, 8);
    auto inds = list_indecomposables(category_spec::tube(4, 4));
    std::vector<indec> small = {indec{0, 2}, indec{1, 1}};
    std::vector<indec> large = {indec{0, 2}, indec{1, 1}, indec{2, 3}, indec{3, 2}};
    for (const indec& x : inds)
        for (const indec& y : inds) {
            formal_object xo = formal_object::of(x);
            formal_object yo = formal_object::of(y);
            int ds = factoring_dim(t4, F, xo, yo, small);
            int dl = factoring_dim(t4, F, xo, yo, large);
            CHECK(ds <= dl);
            CHECK(dl <= hom_dim(t4, x, y));
        }
}

TEST_CASE("factoring_dim examples") {
    fp_field F(101);
    category_spec a3 = category_spec::linear(3);
    formal_object i2 = formal_object::of(indec{2, 2});
    CHECK(factoring_dim(a3, F, i2, i2, {}) == 0);
    CHECK(factoring_dim(a3, F, i2, i2, {indec{2, 1}}) == 0);
    formal_object p2 = formal_object::of(indec{1, 2});
    // the only morphism P_2 -> I_2 has image S_2, so it factors through S_2
    CHECK(factoring_dim(a3, F, p2, i2, {indec{2, 1}}) == 1);
    // monotone in the through-set and bounded by hom
    CHECK(factoring_dim(a3, F, p2, i2, {indec{2, 1}, indec{1, 1}}) == 1);
    CHECK(factoring_dim(a3, F, p2, i2, {indec{1, 1}}) == 0);
}

TEST_CASE("extension_rep + decompose reproduce middles") {
    fp_field F(101);
    category_spec t5 = category_spec::tube(5, 25);
    indec q{1, 3}, s{0, 3};
    auto basis = ext_basis(t5, q, s, F);
    REQUIRE(basis.size() == 1);
    cocycle C = cocycle_of(t5, F, basis[0]);
    rep_layout LS = layout_of(t5, basis[0].sub);
    rep_layout LQ = layout_of(t5, basis[0].quot);
    matrix_rep E = extension_rep(t5, F, LS, LQ, C);
    CHECK(decompose_multiset(t5, F, E) == basis[0].mid);

    // zero cocycle gives the split middle
    cocycle Z;
    for (const fmat& m : C)
        Z.push_back(fmat(m.rows, m.cols));
    matrix_rep E0 = extension_rep(t5, F, LS, LQ, Z);
    CHECK(decompose_multiset(t5, F, E0) == formal_object({q, s}));
}

TEST_CASE("decompose recovers shuffled objects with explicit iso") {
    fp_field F(101);
    category_spec t3 = category_spec::tube(3, 9);
    formal_object x({indec{0, 4}, indec{1, 4}, indec{2, 1}, indec{0, 1}});
    matrix_rep R = realize(t3, x);
    decomposition D = decompose(t3, F, R);
    CHECK(D.obj == x);
    // iso columns must intertwine the arrows: A_input * iso_src = iso_tgt * A_canon
    matrix_rep canon = rep_of(layout_of(t3, D.obj));
    for (int ai = 0; ai < arrow_count(t3); ++ai) {
        int sidx = arrow_source_vidx(t3, ai);
        int tidx = arrow_target_vidx(t3, ai);
        fmat lhs = mat_mul(F, R.arrow[ai], D.iso[sidx]);
        fmat rhs = mat_mul(F, D.iso[tidx], canon.arrow[ai]);
        CHECK(mat_sub(F, lhs, rhs).is_zero());
    }
}

TEST_CASE("mats_to_hom round trip") {
    fp_field F(101);
    category_spec t5 = category_spec::tube(5, 12);
    formal_object x({indec{0, 7}, indec{2, 2}});
    formal_object y({indec{0, 7}, indec{1, 4}});
    rep_layout LX = layout_of(t5, x);
    rep_layout LY = layout_of(t5, y);
    for (const hom_element& f : hom_basis(t5, x, y)) {
        vertex_maps m = hom_to_mats(t5, F, f, LX, LY);
        hom_element back = mats_to_hom(t5, F, m, LX, LY);
        CHECK(hom_equal(back, f));
    }
}

TEST_CASE("cokernel of a basis morphism") {
    fp_field F(101);
    category_spec a3 = category_spec::linear(3);
    // P_2 -> I_2 has image S_2; cokernel is S_3
    formal_object p2 = formal_object::of(indec{1, 2});
    formal_object i2 = formal_object::of(indec{2, 2});
    rep_layout LP = layout_of(a3, p2);
    rep_layout LI = layout_of(a3, i2);
    auto basis = hom_basis(a3, p2, i2);
    REQUIRE(basis.size() == 1);
    vertex_maps g = hom_to_mats(a3, F, basis[0], LP, LI);
    coker_result ck = cokernel(a3, F, rep_of(LP), rep_of(LI), g);
    CHECK(decompose_multiset(a3, F, ck.rep) == formal_object::of(indec{3, 1}));
}

TEST_CASE("trace submodule") {
    fp_field F(101);
    category_spec a3 = category_spec::linear(3);
    // trace of add(S_2) in I_2 is S_2
    CHECK(trace_submodule(a3, F, formal_object::of(indec{2, 2}), {indec{2, 1}}) ==
          formal_object::of(indec{2, 1}));
    // trace of add(S_2) in P_3 is zero (S_2 is not a submodule of P_3)
    CHECK(trace_submodule(a3, F, formal_object::of(indec{1, 3}), {indec{2, 1}}) ==
          formal_object::zero());
}
