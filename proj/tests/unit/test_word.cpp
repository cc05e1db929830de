// Braid words, permutations, exponent sums.

#include <doctest.h>

#include "braidcert/word.hpp"
#include "test_support.hpp"

using namespace braidcert;
using testsupport::Rng;
using testsupport::random_word;

TEST_CASE("parse_word") {
    BraidWord w = parse_word("1 -2 1", 3);
    CHECK(w.letters == std::vector<int>{1, -2, 1});
    CHECK(w.strand_count == 3);

    CHECK(parse_word("", 5).letters.empty());
    CHECK(parse_word("  \t ", 5).letters.empty());

    CHECK_THROWS_AS(parse_word("3", 3), error);         // sigma_{n-1} boundary
    CHECK_THROWS_AS(parse_word("0", 3), error);
    CHECK_THROWS_AS(parse_word("1 x", 3), error);
    CHECK_THROWS_AS(parse_word("1.5", 3), error);
    CHECK_THROWS_AS(parse_word("1", 0), error);
    CHECK_NOTHROW(parse_word("2 -2", 3));
}

TEST_CASE("compose keeps letters verbatim") {
    CHECK(to_string(compose(parse_word("1", 2), parse_word("-1", 2))) == "1 -1");
    CHECK(to_string(compose(parse_word("", 3), parse_word("1 2", 3))) == "1 2");
    CHECK(to_string(compose(parse_word("1 2", 3), parse_word("2 1", 3))) == "1 2 2 1");
    CHECK_THROWS_AS(compose(parse_word("1", 2), parse_word("1", 3)), error);
}

TEST_CASE("inverse") {
    CHECK(to_string(inverse(parse_word("1 -2", 3))) == "2 -1");
    CHECK(inverse(parse_word("", 3)).letters.empty());
    CHECK(to_string(inverse(parse_word("5 5", 6))) == "-5 -5");
}

TEST_CASE("free_reduce") {
    CHECK(free_reduce(parse_word("1 -1", 2)).letters.empty());
    CHECK(free_reduce(parse_word("1 2 -2 -1", 3)).letters.empty());
    CHECK(to_string(free_reduce(parse_word("1 2 1", 3))) == "1 2 1");
}

TEST_CASE("permutation_of") {
    CHECK(permutation_of(parse_word("1 1", 2)).is_identity());

    // s1 s2 s1 is the transposition (1 3)
    Permutation p = permutation_of(parse_word("1 2 1", 3));
    CHECK(p.image(0) == 2);
    CHECK(p.image(1) == 1);
    CHECK(p.image(2) == 0);

    // s1 s2 is a 3-cycle, so is s1 s2^{-1} on positions
    Permutation q = permutation_of(parse_word("1 -2", 3));
    CHECK_FALSE(q.is_identity());
    CHECK(compose(compose(q, q), q).is_identity());
}

TEST_CASE("exponent_sum") {
    CHECK(exponent_sum(parse_word("1 -2 1", 3)) == 1);
    CHECK(exponent_sum(parse_word("", 4)) == 0);
    CHECK(exponent_sum(parse_word("1 1 3 3 3 3", 4)) == 6);
}

TEST_CASE("is_pure") {
    CHECK(is_pure(parse_word("1 1", 2)));
    CHECK_FALSE(is_pure(parse_word("1", 2)));
    CHECK(is_pure(parse_word("2 1 1 -2", 3)));
}

TEST_CASE("word homomorphism properties on random words") {
    Rng rng(1001);
    for (int rep = 0; rep < 300; ++rep) {
        int n = rng.range(2, 8);
        BraidWord u = random_word(rng, n, rng.range(0, 64));
        BraidWord v = random_word(rng, n, rng.range(0, 64));

        CHECK(permutation_of(compose(u, v)) == compose(permutation_of(u), permutation_of(v)));
        CHECK(exponent_sum(compose(u, v)) == exponent_sum(u) + exponent_sum(v));
        CHECK(exponent_sum(inverse(u)) == -exponent_sum(u));

        BraidWord r = free_reduce(u);
        CHECK(permutation_of(r) == permutation_of(u));
        CHECK(exponent_sum(r) == exponent_sum(u));

        CHECK(free_reduce(compose(u, inverse(u))).letters.empty());
    }
}
