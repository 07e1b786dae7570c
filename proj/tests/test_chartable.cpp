#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "realchar/chartable.hpp"

using namespace realchar;

namespace {

GroupPtr grp(const char* name, int degree, std::vector<std::vector<int>> gens) {
    return Group::create(enumerate_group(GroupSpec::permutation(name, degree, std::move(gens))));
}

GroupPtr make_s3() { return grp("S3", 3, {{2, 3, 1}, {2, 1, 3}}); }
GroupPtr make_c2() { return grp("C2", 2, {{2, 1}}); }
GroupPtr make_c3() { return grp("C3", 3, {{2, 3, 1}}); }
GroupPtr make_q8() {
    return grp("Q8", 8, {{2, 3, 4, 1, 8, 5, 6, 7}, {5, 6, 7, 8, 3, 4, 1, 2}});
}

std::vector<long> degs(const GroupPtr& g) { return g->character_table().degrees; }

void check_orthogonality(const GroupPtr& g) {
    const auto& tab = g->character_table();
    int c = g->classes().num();
    REQUIRE((int)tab.irr.size() == c);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) {
            Cyclotomic ip = inner_product(tab.irr[i], tab.irr[j]);
            CHECK(ip == Cyclotomic(i == j ? 1 : 0));
        }
    // column orthogonality
    for (int k = 0; k < c; ++k)
        for (int l = 0; l < c; ++l) {
            Cyclotomic s;
            for (auto& chi : tab.irr) s += chi.values[k] * chi.values[l].conjugate();
            CHECK(s == Cyclotomic(Rational(k == l ? g->classes().centralizer_orders[k] : 0)));
        }
    long sum_sq = 0;
    for (long d : tab.degrees) sum_sq += d * d;
    CHECK(sum_sq == g->order());
}

}  // namespace

TEST_CASE("tiny tables") {
    auto c2 = make_c2();
    auto tab = c2->character_table();
    REQUIRE(tab.irr.size() == 2);
    CHECK(tab.irr[0].values == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1)});
    CHECK(tab.irr[1].values == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(-1)});

    auto triv = grp("1", 2, {{1, 2}});
    CHECK(degs(triv) == std::vector<long>{1});
}

TEST_CASE("degrees of the small catalog groups") {
    CHECK(degs(make_s3()) == std::vector<long>{1, 1, 2});
    CHECK(degs(make_q8()) == std::vector<long>{1, 1, 1, 1, 2});
    auto a4 = grp("A4", 4, {{2, 3, 1, 4}, {2, 1, 4, 3}});
    CHECK(degs(a4) == std::vector<long>{1, 1, 1, 3});
    auto s4 = grp("S4", 4, {{2, 3, 4, 1}, {2, 1, 3, 4}});
    CHECK(degs(s4) == std::vector<long>{1, 1, 2, 3, 3});
    auto a5 = grp("A5", 5, {{2, 3, 4, 5, 1}, {2, 3, 1, 4, 5}});
    CHECK(degs(a5) == std::vector<long>{1, 3, 3, 4, 5});
}

TEST_CASE("orthogonality holds exactly") {
    for (auto& g : {make_s3(), make_q8(), make_c3(),
                    grp("S4", 4, {{2, 3, 4, 1}, {2, 1, 3, 4}}),
                    grp("D12", 6, {{2, 3, 4, 5, 6, 1}, {1, 6, 5, 4, 3, 2}})})
        check_orthogonality(g);
}

TEST_CASE("restriction and induction") {
    auto s3 = make_s3();
    auto c3sub = subgroup_from_words(s3->table(), {{1}});
    auto c3 = s3->subgroup(c3sub);

    // trivial character restricts to trivial
    auto triv_s3 = s3->character_table().irr[0];
    auto res = restrict_to(triv_s3, c3);
    for (auto& v : res.values) CHECK(v == Cyclotomic(1));

    // restriction to the whole group is the identity operation
    Subgroup whole = subgroup_from_words(s3->table(), {{1}, {2}});
    auto self = s3->subgroup(whole);
    auto chi2 = s3->character_table().irr[2];
    auto res_self = restrict_to(chi2, self);
    CHECK(res_self.values == chi2.values);

    // a nontrivial linear character of C3 induces the degree-2 irreducible of S3
    auto theta = c3->character_table().irr[1];
    auto ind = induce_from(theta);
    CHECK(ind == chi2);

    // induction of the trivial character of the trivial subgroup = regular character
    auto trivsub = s3->subgroup(subgroup_from_words(s3->table(), {}));
    auto ind_reg = induce_from(trivsub->character_table().irr[0]);
    CHECK(ind_reg.values[0] == Cyclotomic(6));
    for (size_t k = 1; k < ind_reg.values.size(); ++k) CHECK(ind_reg.values[k].is_zero());
    CHECK(inner_product(ind_reg, s3->character_table().irr[0]) == Cyclotomic(1));
}

TEST_CASE("q8 central character induction") {
    auto q8 = make_q8();
    auto zsub = subgroup_from_words(q8->table(), {{1, 1}});
    auto zg = q8->subgroup(zsub);
    REQUIRE(zg->order() == 2);
    auto zeta = zg->character_table().irr[1];  // nontrivial linear character
    CHECK(zeta.values[1] == Cyclotomic(-1));

    auto ind = induce_from(zeta);
    auto chi2 = q8->character_table().irr[4];  // the degree-2 irreducible
    CHECK(chi2.degree() == Cyclotomic(2));
    CHECK(inner_product(ind, chi2) == Cyclotomic(2));  // zeta^G = 2 chi
    CHECK(ind == scale(Cyclotomic(2), chi2));

    // restriction of chi to the center is 2 * zeta
    auto back = restrict_to(chi2, zg);
    CHECK(back == scale(Cyclotomic(2), zeta));

    // induce-then-restrict for invariant theta on normal H: |G:H| * theta
    auto res_ind = restrict_to(ind, zg);
    CHECK(res_ind == scale(Cyclotomic(4), zeta));
}

TEST_CASE("frobenius reciprocity") {
    auto s3 = make_s3();
    auto c3 = s3->subgroup(subgroup_from_words(s3->table(), {{1}}));
    for (auto& theta : c3->character_table().irr)
        for (auto& chi : s3->character_table().irr)
            CHECK(inner_product(induce_from(theta), chi) ==
                  inner_product(theta, restrict_to(chi, c3)));

    auto q8 = make_q8();
    auto zg = q8->subgroup(subgroup_from_words(q8->table(), {{1, 1}}));
    for (auto& theta : zg->character_table().irr)
        for (auto& chi : q8->character_table().irr)
            CHECK(inner_product(induce_from(theta), chi) ==
                  inner_product(theta, restrict_to(chi, zg)));
}

TEST_CASE("frobenius-schur indicators") {
    auto s3 = make_s3();
    CHECK(fs_indicator(s3->character_table().irr[0]) == Cyclotomic(1));
    CHECK(fs_indicator(s3->character_table().irr[2]) == Cyclotomic(1));

    auto q8 = make_q8();
    CHECK(fs_indicator(q8->character_table().irr[4]) == Cyclotomic(-1));

    auto c3 = make_c3();
    CHECK(fs_indicator(c3->character_table().irr[1]) == Cyclotomic(0));

    // indicator is 0 iff the character is non-real, and +-1 otherwise;
    // sum of eps(chi) chi(1) counts the solutions of g^2 = 1
    for (auto& g : {make_s3(), make_q8(), make_c3(),
                    grp("A4", 4, {{2, 3, 1, 4}, {2, 1, 4, 3}})}) {
        Cyclotomic total;
        for (auto& chi : g->character_table().irr) {
            Cyclotomic eps = fs_indicator(chi);
            bool real = conjugate(chi) == chi;
            if (real)
                CHECK((eps == Cyclotomic(1) || eps == Cyclotomic(-1)));
            else
                CHECK(eps.is_zero());
            total += eps * chi.degree();
        }
        long invol = 0;
        for (int x = 0; x < g->order(); ++x)
            if (g->table().mul(x, x) == 0) ++invol;
        CHECK(total == Cyclotomic(Rational(invol)));
    }
}

TEST_CASE("central character values") {
    auto s3 = make_s3();
    auto chi2 = s3->character_table().irr[2];
    CHECK(central_character_value(chi2, 0) == Cyclotomic(1));
    // the transposition class (order 2, size 3): 3 * 0 / 2 = 0
    CHECK(central_character_value(chi2, 1) == Cyclotomic(0));

    auto q8 = make_q8();
    auto chi = q8->character_table().irr[4];
    // central class of the order-2 element: 1 * (-2) / 2 = -1
    CHECK(central_character_value(chi, 1) == Cyclotomic(-1));

    ClassFunction notirr = add(s3->character_table().irr[0], chi2);
    CHECK_THROWS_AS(central_character_value(notirr, 0), InputError);
}
