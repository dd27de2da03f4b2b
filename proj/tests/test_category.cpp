#include <doctest.h>

#include "torq/category.hpp"

using namespace torq;

static const fp_field F101(101);

TEST_CASE("list_indecomposables counts and order") {
    auto a3 = list_indecomposables(category_spec::linear(3));
    CHECK(a3.size() == 6);
    CHECK(a3[0] == indec{1, 1});
    CHECK(a3[1] == indec{1, 2});  // lexicographic [1,1],[1,2],[1,3],[2,2],...
    CHECK(a3[2] == indec{1, 3});
    CHECK(a3[3] == indec{2, 1});

    auto t53 = list_indecomposables(category_spec::tube(5, 3));
    CHECK(t53.size() == 15);
    CHECK(t53[0] == indec{0, 1});  // ordered by (length, socle)
    CHECK(t53[5] == indec{0, 2});

    CHECK(list_indecomposables(category_spec::linear(1)).size() == 1);
}

TEST_CASE("hom_dim basics") {
    category_spec t5 = category_spec::tube(5, 12);
    CHECK(hom_dim(t5, indec{0, 1}, indec{0, 1}) == 1);
    CHECK(hom_dim(t5, indec{1, 1}, indec{0, 1}) == 0);
    CHECK(hom_dim(t5, indec{0, 10}, indec{0, 10}) == 2);

    category_spec a3 = category_spec::linear(3);
    CHECK(hom_dim(a3, indec{1, 3}, indec{2, 2}) == 1);  // P_3 -> I_2
    CHECK(hom_dim(a3, indec{2, 1}, indec{1, 2}) == 0);  // S_2 -> P_2
    CHECK(hom_dim(a3, indec{1, 2}, indec{2, 2}) == 1);  // P_2 -> I_2
}

TEST_CASE("tau and ext_dim") {
    category_spec t5 = category_spec::tube(5, 10);
    CHECK(*tau(t5, indec{0, 1}) == indec{4, 1});
    CHECK(ext_dim(t5, indec{1, 1}, indec{0, 1}) == 1);

    category_spec a3 = category_spec::linear(3);
    CHECK_FALSE(tau(a3, indec{1, 3}).has_value());  // P_3 projective
    CHECK(*tau(a3, indec{3, 1}) == indec{2, 1});
    CHECK(ext_dim(a3, indec{3, 1}, indec{2, 1}) == 1);   // Ext(S_3, S_2)
    CHECK(ext_dim(a3, indec{1, 2}, indec{2, 1}) == 0);   // P_2 projective
    CHECK(ext_dim(a3, indec{1, 2}, indec{3, 1}) == 0);
}

TEST_CASE("tau is a bijection of order dividing rank on tube simples") {
    category_spec t4 = category_spec::tube(4, 8);
    for (int len = 1; len <= 8; ++len) {
        std::vector<bool> hit(4, false);
        for (int s = 0; s < 4; ++s) {
            indec img = *tau(t4, indec{s, len});
            CHECK(img.len == len);
            CHECK_FALSE(hit[img.socle]);
            hit[img.socle] = true;
        }
    }
    indec s0{0, 1};
    indec cur = s0;
    for (int i = 0; i < 4; ++i)
        cur = *tau(t4, cur);
    CHECK(cur == s0);
}

TEST_CASE("subquotient lattice") {
    category_spec t5 = category_spec::tube(5, 8);
    auto [subs, quots] = subquotient_lattice(t5, indec{2, 3});
    CHECK(subs == std::vector<indec>{{2, 1}, {2, 2}, {2, 3}});
    CHECK(quots == std::vector<indec>{{2, 3}, {3, 2}, {4, 1}});

    category_spec a3 = category_spec::linear(3);
    auto [ps, pq] = subquotient_lattice(a3, indec{1, 3});
    CHECK(ps == std::vector<indec>{{1, 1}, {1, 2}, {1, 3}});
    auto [ss, sq] = subquotient_lattice(a3, indec{2, 1});
    CHECK(ss == sq);
}

TEST_CASE("ar_sequence shapes") {
    category_spec t5 = category_spec::tube(5, 10);
    fp_field F = F101;
    auto e = ar_sequence(t5, indec{1, 3}, F);
    REQUIRE(e.has_value());
    CHECK(e->sub == formal_object::of(indec{0, 3}));
    CHECK(e->quot == formal_object::of(indec{1, 3}));
    CHECK(e->mid == formal_object({indec{0, 4}, indec{1, 2}}));

    auto s = ar_sequence(t5, indec{1, 1}, F);
    REQUIRE(s.has_value());
    CHECK(s->mid == formal_object::of(indec{0, 2}));

    category_spec a3 = category_spec::linear(3);
    CHECK_FALSE(ar_sequence(a3, indec{1, 3}, F).has_value());
    auto q = ar_sequence(a3, indec{3, 1}, F);
    REQUIRE(q.has_value());
    CHECK(q->sub == formal_object::of(indec{2, 1}));
    CHECK(q->mid == formal_object::of(indec{2, 2}));
}

TEST_CASE("hom_basis sizes and composition algebra") {
    category_spec a3 = category_spec::linear(3);
    formal_object zero;
    CHECK(hom_basis(a3, zero, formal_object::of(indec{1, 2})).empty());
    CHECK(hom_basis(a3, formal_object::of(indec{1, 3}), formal_object::of(indec{2, 2}))
              .size() == 1);

    category_spec t5 = category_spec::tube(5, 8);
    formal_object two({indec{0, 5}, indec{0, 5}});
    CHECK(hom_basis(t5, two, formal_object::of(indec{0, 5})).size() == 2);

    // associativity and identity on a mixed hom space
    fp_field F = F101;
    formal_object x({indec{0, 2}, indec{1, 1}});
    formal_object y({indec{0, 3}, indec{1, 2}});
    formal_object z({indec{0, 4}});
    auto fx = hom_basis(t5, x, y);
    auto gy = hom_basis(t5, y, z);
    hom_element idx = hom_identity(x);
    for (const auto& f : fx) {
        CHECK(hom_equal(hom_compose(t5, F, f, idx), f));
        for (const auto& g : gy) {
            hom_element a = hom_compose(t5, F, g, f);
            // (g f) id == g (f id)
            CHECK(hom_equal(hom_compose(t5, F, a, idx),
                            hom_compose(t5, F, g, hom_compose(t5, F, f, idx))));
        }
    }
}

TEST_CASE("ext_basis representatives") {
    fp_field F = F101;
    category_spec t5 = category_spec::tube(5, 25);
    auto almost = ext_basis(t5, indec{1, 1}, indec{0, 1}, F);
    REQUIRE(almost.size() == 1);
    CHECK(almost[0].mid == formal_object::of(indec{0, 2}));

    // two-dimensional case: both middles of the derived shape
    auto two = ext_basis(t5, indec{0, 10}, indec{0, 10}, F);
    REQUIRE(two.size() == 2);
    CHECK(two[0].mid == formal_object({indec{0, 15}, indec{0, 5}}));
    CHECK(two[1].mid == formal_object::of(indec{0, 20}));

    category_spec a3 = category_spec::linear(3);
    auto e = ext_basis(a3, indec{3, 1}, indec{2, 1}, F);
    REQUIRE(e.size() == 1);
    CHECK(e[0].mid == formal_object::of(indec{2, 2}));  // S_2 >-> I_2 ->> S_3
    CHECK(ext_basis(a3, indec{1, 2}, indec{2, 1}, F).empty());
}

TEST_CASE("ext_basis cap overflow") {
    fp_field F = F101;
    category_spec t5 = category_spec::tube(5, 6);
    CHECK_THROWS_AS(ext_basis(t5, indec{1, 6}, indec{0, 1}, F), cap_error);
    CHECK_THROWS_AS(ar_sequence(category_spec::tube(5, 3), indec{1, 3}, F), cap_error);
}

TEST_CASE("composition is bilinear") {
    fp_field F = F101;
    category_spec t5 = category_spec::tube(5, 10);
    formal_object x = formal_object::of(indec{0, 4});
    formal_object y({indec{0, 6}, indec{1, 3}});
    formal_object z = formal_object::of(indec{1, 5});
    auto fs = hom_basis(t5, x, y);
    auto gs = hom_basis(t5, y, z);
    REQUIRE(fs.size() >= 2);
    REQUIRE(!gs.empty());
    hom_element sum = hom_add(F, fs[0], hom_scale(F, 7, fs[1]));
    hom_element lhs = hom_compose(t5, F, gs[0], sum);
    hom_element rhs = hom_add(F, hom_compose(t5, F, gs[0], fs[0]),
                              hom_scale(F, 7, hom_compose(t5, F, gs[0], fs[1])));
    CHECK(hom_equal(lhs, rhs));
}

TEST_CASE("indec parse and display") {
    category_spec t5 = category_spec::tube(5, 10);
    auto m = parse_indec(t5, "[4,6]");
    REQUIRE(m.has_value());
    CHECK(*m == indec{4, 3});
    CHECK(display(*m) == "[4,6]");
    auto w = parse_indec(t5, "[5,5]");
    REQUIRE(w.has_value());
    CHECK(*w == indec{0, 1});
    CHECK_FALSE(parse_indec(t5, "[3,1]").has_value());

    category_spec a3 = category_spec::linear(3);
    CHECK_FALSE(parse_indec(a3, "[0,1]").has_value());
    CHECK(parse_indec(a3, "[2,3]")->len == 2);
}
