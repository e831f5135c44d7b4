#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include "sgharm/partition.hpp"
#include "sgharm/permutation.hpp"
#include "sgharm/young.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

using namespace sgh;

namespace {

Permutation perm(std::vector<int> images) { return Permutation(std::move(images)); }

}  // namespace

TEST_CASE("construction validates images") {
    CHECK_THROWS_AS(perm({}), std::invalid_argument);
    CHECK_THROWS_AS(perm({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(perm({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(perm({1, 3}), std::invalid_argument);
    CHECK(perm({2, 1, 3}).degree() == 3);
}

TEST_CASE("composition applies the right factor first") {
    const auto id3 = Permutation::identity(3);
    const auto cycle = perm({2, 3, 1});
    CHECK(compose(id3, cycle) == cycle);
    CHECK(compose(cycle, id3) == cycle);

    const auto t12 = Permutation::transposition(3, 1, 2);
    const auto t13 = Permutation::transposition(3, 1, 3);
    CHECK(compose(t13, t12) == perm({2, 3, 1}));
    CHECK(compose(t12, t13) == perm({3, 1, 2}));

    CHECK_THROWS_AS(compose(id3, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("inverse composes to the identity") {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto s = test::random_permutation(6, rng);
        CHECK(compose(s, s.inverse()) == Permutation::identity(6));
        CHECK(compose(s.inverse(), s) == Permutation::identity(6));
    }
}

TEST_CASE("signature of identity and transpositions") {
    CHECK(signature(Permutation::identity(4)) == 1);
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            CHECK(signature(Permutation::transposition(5, i, j)) == -1);
}

TEST_CASE("signature is multiplicative on all of S4") {
    const auto group = enumerate_group(4);
    for (const auto& a : group)
        for (const auto& b : group)
            CHECK(signature(compose(a, b)) == signature(a) * signature(b));
}

TEST_CASE("cycle decomposition partitions the ground set") {
    const auto singletons = cycle_decompose(Permutation::identity(4));
    CHECK(singletons.size() == 4);
    for (const auto& c : singletons) CHECK(c.size() == 1);

    const auto one_cycle = cycle_decompose(perm({2, 3, 1}));
    REQUIRE(one_cycle.size() == 1);
    CHECK(one_cycle[0] == std::vector<int>{1, 2, 3});

    for (int n = 2; n <= 5; ++n) {
        for (const auto& s : enumerate_group(n)) {
            std::set<int> seen;
            for (const auto& c : cycle_decompose(s))
                for (int v : c) CHECK(seen.insert(v).second);
            CHECK(static_cast<int>(seen.size()) == n);
        }
    }
}

TEST_CASE("cycle restrictions recompose in any order") {
    for (const auto& s : enumerate_group(5)) {
        const auto cycles = cycle_decompose(s);
        auto forward = Permutation::identity(5);
        for (const auto& c : cycles) forward = compose(forward, cycle_restriction(s, c));
        auto backward = Permutation::identity(5);
        for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
            backward = compose(backward, cycle_restriction(s, *it));
        CHECK(forward == s);
        CHECK(backward == s);
    }
}

TEST_CASE("cycle types are partitions and exhaust them") {
    CHECK(cycle_type(Permutation::identity(3)) == Partition({1, 1, 1}));
    CHECK(cycle_type(Permutation::transposition(4, 1, 2)) == Partition({2, 1, 1}));

    for (int n = 2; n <= 6; ++n) {
        std::set<Partition> seen;
        for (const auto& s : enumerate_group(n)) {
            const auto t = cycle_type(s);
            CHECK(t.weight() == n);
            seen.insert(t);
        }
        CHECK(seen.size() == partitions_of(n).size());
    }
}

TEST_CASE("embedding fixes the added points") {
    const auto t12 = Permutation::transposition(2, 1, 2);
    CHECK(embed(t12, 4) == perm({2, 1, 3, 4}));
    CHECK(embed(t12, 2) == t12);
    CHECK_THROWS_AS(embed(t12, 1), std::invalid_argument);
}

TEST_CASE("embedding is an injective homomorphism S4 to S6") {
    const auto group = enumerate_group(4);
    std::set<Permutation> images;
    for (const auto& s : group) CHECK(images.insert(embed(s, 6)).second);
    for (const auto& a : group)
        for (const auto& b : group)
            CHECK(embed(compose(a, b), 6) == compose(embed(a, 6), embed(b, 6)));
}

TEST_CASE("group enumeration is complete, distinct and ordered") {
    const auto trivial = enumerate_group(1);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0] == Permutation::identity(1));

    CHECK(enumerate_group(3).size() == 6);

    const auto g6 = enumerate_group(6);
    CHECK(g6.size() == 720);
    CHECK(std::is_sorted(g6.begin(), g6.end()));
    CHECK(std::set<Permutation>(g6.begin(), g6.end()).size() == 720);

    CHECK_THROWS_AS(enumerate_group(kEnumerationBound + 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_group(0), std::invalid_argument);
}

TEST_CASE("text form lists the images") {
    CHECK(to_string(perm({2, 3, 1})) == "2 3 1");
    CHECK(to_string(Permutation::identity(1)) == "1");
}
