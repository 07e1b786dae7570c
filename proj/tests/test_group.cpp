#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "realchar/group.hpp"

using namespace realchar;

namespace {

GroupTable make_s3() {
    return enumerate_group(GroupSpec::permutation("S3", 3, {{2, 3, 1}, {2, 1, 3}}));
}

GroupTable make_q8() {
    return enumerate_group(GroupSpec::permutation(
        "Q8", 8, {{2, 3, 4, 1, 8, 5, 6, 7}, {5, 6, 7, 8, 3, 4, 1, 2}}));
}

GroupTable make_c3() {
    return enumerate_group(GroupSpec::permutation("C3", 3, {{2, 3, 1}}));
}

std::multiset<int> order_multiset(const GroupTable& g) {
    std::multiset<int> s;
    for (int i = 0; i < g.order(); ++i) s.insert(g.element_order(i));
    return s;
}

}  // namespace

TEST_CASE("enumeration basics") {
    auto triv = enumerate_group(GroupSpec::permutation("1", 3, {{1, 2, 3}}));
    CHECK(triv.order() == 1);

    auto c4 = enumerate_group(GroupSpec::permutation("C4", 4, {{2, 3, 4, 1}}));
    CHECK(c4.order() == 4);
    CHECK(order_multiset(c4) == std::multiset<int>{1, 2, 4, 4});

    auto q8 = make_q8();
    CHECK(q8.order() == 8);
    CHECK(order_multiset(q8) == std::multiset<int>{1, 2, 4, 4, 4, 4, 4, 4});

    for (int a = 0; a < q8.order(); ++a) {
        CHECK(q8.mul(0, a) == a);
        CHECK(q8.mul(a, 0) == a);
        CHECK(q8.mul(a, q8.inv(a)) == 0);
    }
}

TEST_CASE("enumeration rejects bad input") {
    CHECK_THROWS_AS(enumerate_group(GroupSpec::permutation("bad", 3, {{1, 1, 2}})),
                    InputError);
    CHECK_THROWS_AS(enumerate_group(GroupSpec::permutation("bad", 3, {{1, 2, 4}})),
                    InputError);
    auto spec = GroupSpec::permutation("S5", 5, {{2, 3, 4, 5, 1}, {2, 1, 3, 4, 5}}, 100);
    CHECK_THROWS_AS(enumerate_group(spec), InputError);  // order cap 100 < 120
    // cayley: broken identity row
    CHECK_THROWS_AS(enumerate_group(GroupSpec::cayley("bad", {{0, 1}, {0, 1}})), InputError);
    // cayley: fine (C2)
    auto c2 = enumerate_group(GroupSpec::cayley("C2", {{0, 1}, {1, 0}}));
    CHECK(c2.order() == 2);
    CHECK(c2.element_order(1) == 2);
}

TEST_CASE("conjugacy classes") {
    auto s3 = make_s3();
    auto cls = conjugacy_classes(s3);
    CHECK(cls.num() == 3);
    CHECK(cls.size(0) == 1);
    CHECK(cls.size(1) == 3);  // class order by element order: 1,2,3 -> sizes 1,3,2
    CHECK(cls.size(2) == 2);
    CHECK(cls.reps[0] == 0);

    auto q8 = make_q8();
    auto qcls = conjugacy_classes(q8);
    CHECK(qcls.num() == 5);
    std::multiset<long> sizes;
    for (int k = 0; k < qcls.num(); ++k) sizes.insert(qcls.size(k));
    CHECK(sizes == std::multiset<long>{1, 1, 2, 2, 2});

    // abelian: singletons
    auto c6 = enumerate_group(GroupSpec::permutation("C6", 6, {{2, 3, 4, 5, 6, 1}}));
    auto ccls = conjugacy_classes(c6);
    CHECK(ccls.num() == 6);

    // class equation and inverse-class involution, on a few groups
    for (auto& g : {s3, q8, c6}) {
        auto cc = conjugacy_classes(g);
        long total = 0;
        for (int k = 0; k < cc.num(); ++k) {
            total += cc.size(k);
            CHECK(cc.size(k) * cc.centralizer_orders[k] == g.order());
            CHECK(cc.inverse_class[cc.inverse_class[k]] == k);
        }
        CHECK(total == g.order());
    }
}

TEST_CASE("subgroups from words") {
    auto q8 = make_q8();
    auto triv = subgroup_from_words(q8, {});
    CHECK(triv.order() == 1);
    CHECK(triv.is_normal);

    auto whole = subgroup_from_words(q8, {{1}, {2}});
    CHECK(whole.order() == 8);
    CHECK(whole.is_normal);

    auto z = subgroup_from_words(q8, {{1, 1}});  // i^2 = -1
    CHECK(z.order() == 2);
    CHECK(z.is_normal);

    CHECK_THROWS_AS(subgroup_from_words(q8, {{3}}), InputError);
}

TEST_CASE("quotients") {
    auto q8 = make_q8();
    auto z = subgroup_from_words(q8, {{1, 1}});
    auto q = quotient(q8, z);
    CHECK(q.table.order() == 4);
    for (int t = 1; t < 4; ++t) CHECK(q.table.element_order(t) == 2);  // Klein group

    // projection is a homomorphism; section is a right inverse
    for (int a = 0; a < q8.order(); ++a)
        for (int b = 0; b < q8.order(); ++b)
            CHECK(q.projection[q8.mul(a, b)] ==
                  q.table.mul(q.projection[a], q.projection[b]));
    for (int t = 0; t < 4; ++t) CHECK(q.projection[q.section[t]] == t);

    auto triv = subgroup_from_words(q8, {});
    auto qt = quotient(q8, triv);
    CHECK(qt.table.order() == 8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) CHECK(qt.table.mul(a, b) == q8.mul(a, b));

    auto whole = subgroup_from_words(q8, {{1}, {2}});
    CHECK(quotient(q8, whole).table.order() == 1);

    auto s3 = make_s3();
    auto nonnormal = subgroup_closure(s3, {s3.generators()[1]});  // a transposition
    CHECK(!nonnormal.is_normal);
    CHECK_THROWS_AS(quotient(s3, nonnormal), InputError);
}

TEST_CASE("coset centralizers") {
    auto q8 = make_q8();
    auto z = subgroup_from_words(q8, {{1, 1}});
    for (int x = 0; x < 8; ++x)
        CHECK(coset_centralizer(q8, z, x).order() == 8);  // Q8/Z is abelian

    auto s3 = make_s3();
    auto triv = subgroup_from_words(s3, {});
    auto whole = subgroup_from_words(s3, {{1}, {2}});
    int rot = s3.generators()[0];
    // N trivial: ordinary centralizer of a 3-cycle in S3 has order 3
    CHECK(coset_centralizer(s3, triv, rot).order() == 3);
    CHECK(coset_centralizer(s3, whole, rot).order() == 6);
    // extended centralizer of a 3-cycle mod 1 is all of S3
    CHECK(extended_coset_centralizer(s3, triv, rot).order() == 6);

    // x^2 in N forces the two centralizers to agree; index is always 1 or 2,
    // and the plain one contains N and C_G(x)
    for (auto& pr : std::vector<std::pair<const GroupTable*, const Subgroup*>>{
             {&q8, &z}, {&s3, &triv}}) {
        const GroupTable& g = *pr.first;
        const Subgroup& n = *pr.second;
        for (int x = 0; x < g.order(); ++x) {
            auto c = coset_centralizer(g, n, x);
            auto e = extended_coset_centralizer(g, n, x);
            int idx = e.order() / c.order();
            CHECK(e.order() % c.order() == 0);
            CHECK((idx == 1 || idx == 2));
            if (n.contains(g.mul(x, x))) CHECK(c.members == e.members);
            for (int m : n.members) CHECK(c.contains(m));
            for (int y = 0; y < g.order(); ++y)
                if (g.mul(x, y) == g.mul(y, x)) CHECK(c.contains(y));
        }
    }
}

TEST_CASE("inverting sets") {
    auto s3 = make_s3();
    auto triv = subgroup_from_words(s3, {});
    int rot = s3.generators()[0];
    auto inv_set = inverting_set(s3, triv, rot);
    CHECK(inv_set.size() == 3);
    for (int y : inv_set) CHECK(s3.element_order(y) == 2);  // the transpositions

    auto c3 = make_c3();
    auto c3triv = subgroup_from_words(c3, {});
    CHECK(inverting_set(c3, c3triv, c3.generators()[0]).empty());

    auto whole = subgroup_from_words(s3, {{1}, {2}});
    CHECK(inverting_set(s3, whole, rot).size() == 6);  // x in N: everything inverts

    // when nonempty, the inverting set is a single left coset of the coset centralizer
    auto q8 = make_q8();
    auto z = subgroup_from_words(q8, {{1, 1}});
    for (auto& pr : std::vector<std::pair<const GroupTable*, const Subgroup*>>{
             {&s3, &triv}, {&q8, &z}}) {
        const GroupTable& g = *pr.first;
        const Subgroup& n = *pr.second;
        for (int x = 0; x < g.order(); ++x) {
            auto iset = inverting_set(g, n, x);
            auto cent = coset_centralizer(g, n, x);
            if (iset.empty()) continue;
            CHECK((long)iset.size() == cent.order());
            int e = iset[0];
            std::vector<int> coset;
            for (int c : cent.members) coset.push_back(g.mul(c, e));
            std::sort(coset.begin(), coset.end());
            CHECK(coset == iset);
        }
    }
}

TEST_CASE("involution cosets") {
    auto q8 = make_q8();
    auto z = subgroup_from_words(q8, {{1, 1}});
    auto invs = involution_cosets(q8, z);
    CHECK(invs.size() == 4);
    CHECK(invs[0] == 0);

    auto whole = subgroup_from_words(q8, {{1}, {2}});
    CHECK(involution_cosets(q8, whole) == std::vector<int>{0});

    auto s3 = make_s3();
    auto c3 = subgroup_from_words(s3, {{1}});
    CHECK(involution_cosets(s3, c3).size() == 2);
}

TEST_CASE("subgroup tables") {
    auto s3 = make_s3();
    auto c3 = subgroup_from_words(s3, {{1}});
    auto h = subgroup_table(s3, c3);
    CHECK(h.order() == 3);
    CHECK(h.element_order(1) == 3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK(h.to_parent()[h.mul(a, b)] == s3.mul(h.to_parent()[a], h.to_parent()[b]));
}

TEST_CASE("matrix-kind enumeration") {
    auto sl23 = enumerate_group(GroupSpec::matrix(
        "SL(2,3)", 3, 2, {{1, 1, 0, 1}, {0, 2, 1, 0}}));
    CHECK(sl23.order() == 24);
    CHECK(conjugacy_classes(sl23).num() == 7);
}

TEST_CASE("group exponent") {
    CHECK(group_exponent(make_s3()) == 6);
    CHECK(group_exponent(make_q8()) == 4);
}
