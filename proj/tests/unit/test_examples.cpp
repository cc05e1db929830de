// Example builders and the 3-strand trace/dilatation computation.

#include <doctest.h>

#include <cmath>

#include "braidcert/examples.hpp"
#include "braidcert/word_problem.hpp"
#include "test_support.hpp"

using namespace braidcert;

TEST_CASE("embed") {
    CHECK(to_string(embed(parse_word("1 -2", 3), 3, 6)) == "4 -5");
    BraidWord w = parse_word("2 1", 3);
    CHECK(embed(w, 0, 3).letters == w.letters);
    CHECK_THROWS_AS(embed(parse_word("2", 3), 5, 6), error);
    CHECK_THROWS_AS(embed(parse_word("1", 2), -1, 4), error);
}

TEST_CASE("build_twist_example") {
    ExampleInstance inst = build_twist_example(3, {1, 2, 3});
    CHECK(inst.structure.strand_count == 6);
    CHECK(inst.structure.sizes == std::vector<int>{2, 2, 2});
    CHECK(to_string(inst.beta) == "1 1 3 3 3 3 5 5 5 5 5 5");
    CHECK(blocks_preserved(inst.beta, inst.structure));

    CHECK(to_string(build_twist_example(1, {1}).beta) == "1 1");
    CHECK_THROWS_AS(build_twist_example(2, {1, 1}), error);
    CHECK_THROWS_AS(build_twist_example(2, {1, 0}), error);
    CHECK_THROWS_AS(build_twist_example(2, {1}), error);
}

TEST_CASE("twist beta equals the product of block twist powers") {
    ExampleInstance inst = build_twist_example(2, {2, 1});
    BraidWord prod{inst.structure.strand_count, {}};
    for (int i = 1; i <= 2; ++i)
        for (long long r = 0; r < inst.spec.params[static_cast<std::size_t>(i - 1)]; ++r)
            prod = compose(prod, block_twist(i, inst.structure));
    CHECK(equal(inst.beta, prod));
}

TEST_CASE("build_twist_example_odd") {
    ExampleInstance inst = build_twist_example_odd(2, {1, 2});
    CHECK(inst.structure.strand_count == 5);
    CHECK(inst.structure.sizes == std::vector<int>{2, 2, 1});
    CHECK(to_string(inst.beta) == "1 1 3 3 3 3");
    CHECK(blocks_preserved(inst.beta, inst.structure));

    CHECK(to_string(build_twist_example_odd(1, {2}).beta) == "1 1 1 1");
    CHECK(build_twist_example_odd(1, {2}).structure.strand_count == 3);
    CHECK_THROWS_AS(build_twist_example_odd(2, {2, 2}), error);
}

TEST_CASE("build_pa_example") {
    ExampleInstance inst = build_pa_example(2, {1, 2});
    CHECK(inst.structure.strand_count == 6);
    CHECK(inst.structure.sizes == std::vector<int>{3, 3});
    CHECK(to_string(inst.beta) == "1 -2 4 -5 4 -5");
    CHECK(blocks_preserved(inst.beta, inst.structure));

    CHECK(to_string(build_pa_example(1, {1}).beta) == "1 -2");
    CHECK_THROWS_AS(build_pa_example(2, {1, 1}), error);
}

TEST_CASE("factors on different blocks commute exactly") {
    ExampleInstance inst = build_pa_example(3, {1, 2, 3});
    BraidWord f1 = embed(parse_word("1 -2", 3), 0, 9);
    BraidWord f2 = embed(parse_word("1 -2 1 -2", 3), 3, 9);
    BraidWord f3 = embed(parse_word("1 -2 1 -2 1 -2", 3), 6, 9);
    CHECK(commutes(f1, f2));
    CHECK(commutes(f1, f3));
    CHECK(commutes(f2, f3));
    CHECK(equal(inst.beta, compose(compose(f1, f2), f3)));
}

TEST_CASE("pa trace and dilatation") {
    PaResult r = pa_trace_and_dilatation(parse_word("1 -2", 3));
    CHECK(r.trace == 3);
    CHECK(r.is_pa);
    CHECK(std::abs(r.dilatation - (3.0 + std::sqrt(5.0)) / 2.0) < 1e-12);

    CHECK(pa_trace_and_dilatation(parse_word("1 -2 1 -2", 3)).trace == 7);
    CHECK(pa_trace_and_dilatation(parse_word("1 -2 1 -2 1 -2", 3)).trace == 18);

    r = pa_trace_and_dilatation(parse_word("1 2 1", 3));
    CHECK(r.trace == 0);
    CHECK_FALSE(r.is_pa);

    CHECK_THROWS_AS(pa_trace_and_dilatation(parse_word("1", 2)), error);
}

TEST_CASE("matrix assignment respects the braid relation") {
    CHECK(pa_trace_and_dilatation(parse_word("1 2 1 -2 -1 -2", 3)).trace == 2);

    // {I, s1, s2, s1 s2} maps to a basis of the 2x2 matrices, and the trace
    // form is nondegenerate, so equal traces of M*X over these four probes
    // prove the images of "1 2 1" and "2 1 2" are equal matrices.
    for (const char* probe : {"", "1", "2", "1 2"}) {
        BraidWord x = parse_word(probe, 3);
        PaResult lhs = pa_trace_and_dilatation(compose(parse_word("1 2 1", 3), x));
        PaResult rhs = pa_trace_and_dilatation(compose(parse_word("2 1 2", 3), x));
        CHECK(lhs.trace == rhs.trace);
    }
}

TEST_CASE("trace recurrence t_{k+1} = 3 t_k - t_{k-1}") {
    mpz_class prev = 2, cur = 3;  // t_0 = tr(I) = 2, t_1 = 3
    BraidWord w{3, {}};
    for (int k = 1; k <= 12; ++k) {
        w.letters.push_back(1);
        w.letters.push_back(-2);
        PaResult r = pa_trace_and_dilatation(w);
        CHECK(r.trace == cur);
        CHECK(r.is_pa);
        mpz_class next = 3 * cur - prev;
        prev = cur;
        cur = next;
    }
}
