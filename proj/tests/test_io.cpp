#include <doctest.h>

#include <random>

#include "gcas/io.hpp"
#include "golden.hpp"

using namespace gcas;

namespace {

const char* kExample1Json = R"({
  "theorem": "t1", "q": 6, "b": 2, "m": 1, "n": 3, "N": 3, "k": 1,
  "partitions": [[4, 1, 2, 3]],
  "d": [[1, 1, 1]],
  "lambda0": 0
})";

}  // namespace

TEST_CASE("t1 params parse with defaults for omitted coefficients") {
    const ParamsDocument doc = parse_params(kExample1Json);
    REQUIRE(doc.is_t1());
    const auto& p = std::get<Theorem1Params>(doc.payload);
    CHECK(p.N == 3);
    CHECK(p.fn.q.q == 6);
    CHECK(p.fn.partitions == std::vector<std::vector<Int>>{{4, 1, 2, 3}});
    CHECK((p.fn.lambda == 0).all());
    CHECK(validate_t1(p).ok());
}

TEST_CASE("params documents round-trip") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Theorem1Function fn{Modulus(6)};
        fn.b = 2;
        fn.m = 1 + static_cast<Int>(rng() % 2);
        fn.n = 1 + static_cast<Int>(rng() % 2);
        const Int k = 1 + static_cast<Int>(rng() % (fn.m + fn.n));
        fn.partitions = golden::consecutive_chains(fn.m + fn.n, k, fn.m);
        for (const auto& chain : fn.partitions) fn.d.emplace_back(chain.size() - 1, Int{1});
        fn.lambda = IntArray::Zero(5, fn.m + fn.n);
        for (Eigen::Index r = 0; r < fn.lambda.rows(); ++r)
            for (Eigen::Index c = 0; c < fn.lambda.cols(); ++c)
                fn.lambda(r, c) = static_cast<Int>(rng() % 6);
        fn.lambda0 = static_cast<Int>(rng() % 6);
        const ParamsDocument doc{Theorem1Params(std::move(fn), 3)};

        const ParamsDocument back = parse_params(serialize_params(doc));
        REQUIRE(back.is_t1());
        const auto& a = std::get<Theorem1Params>(doc.payload);
        const auto& b = std::get<Theorem1Params>(back.payload);
        CHECK(a.N == b.N);
        CHECK(a.fn.partitions == b.fn.partitions);
        CHECK(a.fn.d == b.fn.d);
        CHECK((a.fn.lambda == b.fn.lambda).all());
        CHECK(a.fn.lambda0 == b.fn.lambda0);
        CHECK(serialize_params(doc) == serialize_params(back));
    }
}

TEST_CASE("t2 params round-trip keeps the strategy") {
    Theorem2Function fn{Modulus(6)};
    fn.b1 = 2;
    fn.b2 = 3;
    fn.m = 2;
    fn.n = 1;
    fn.x_partitions = {{1, 2}};
    fn.y_partitions = {{1}};
    fn.d = {{1}};
    fn.d_prime = {{}};
    fn.lambda = IntArray::Zero(5, 2);
    fn.nu = IntArray::Zero(5, 1);
    const ParamsDocument doc{
        Theorem2Params(std::move(fn), 2, 3, OffsetStrategy::AsPrintedScaled)};
    const ParamsDocument back = parse_params(serialize_params(doc));
    REQUIRE_FALSE(back.is_t1());
    CHECK(std::get<Theorem2Params>(back.payload).offset_strategy ==
          OffsetStrategy::AsPrintedScaled);
    CHECK(serialize_params(back) == serialize_params(doc));
}

TEST_CASE("declared k must match the partition count") {
    std::string text = kExample1Json;
    text.replace(text.find("\"k\": 1"), 6, "\"k\": 2");
    CHECK_THROWS_AS(parse_params(text), std::invalid_argument);
}

TEST_CASE("unknown theorem tag is rejected") {
    CHECK_THROWS_AS(parse_params(R"({"theorem": "t9"})"), std::invalid_argument);
}

TEST_CASE("array set documents round-trip") {
    const ArraySet set = build_t1_set(golden::example1_params());
    const ArraySet back = parse_array_set(serialize_array_set(set));
    REQUIRE(back.members.size() == set.members.size());
    for (std::size_t t = 0; t < set.members.size(); ++t)
        CHECK(back.members[t] == set.members[t]);
    CHECK(back.labels == set.labels);
    CHECK(serialize_array_set(back) == serialize_array_set(set));
}

TEST_CASE("array set parsing validates entries") {
    CHECK_THROWS(parse_array_set(R"({"q":4,"rows":1,"cols":2,"members":[[[0,7]]]})"));
    CHECK_THROWS(parse_array_set(R"({"q":4,"rows":1,"cols":2,"members":[[[0]]]})"));
    CHECK_THROWS(parse_array_set(R"({"q":4,"rows":1,"cols":2,"members":[]})"));
    CHECK_THROWS(parse_array_set("not json"));
}

TEST_CASE("csv export layout") {
    const ArraySet set = build_t1_set(golden::example1_params());
    const std::string csv = array_set_to_csv(set);
    CHECK(csv.rfind("q,rows,cols\n6,2,8\n", 0) == 0);
    // header pair plus one line per member
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2 + 9);
    CHECK(csv.find("0,0,0,3,0,0,0,3,0,3,0,0,3,0,3,3\n") != std::string::npos);
}

TEST_CASE("digit strings") {
    const ExponentArray a0 = golden::to_array(golden::example1_arrays()[0]);
    CHECK(row_digit_string(a0, 0) == "00030003");
    CHECK(row_digit_string(a0, 1) == "03003033");

    IntArray wide(1, 3);
    wide << 0, 11, 4;
    CHECK(row_digit_string(ExponentArray{Modulus(12), std::move(wide)}, 0) == "0,11,4");
}

TEST_CASE("strategy names map both ways") {
    for (OffsetStrategy s : {OffsetStrategy::AsPrintedUnscaled, OffsetStrategy::AsPrintedScaled,
                             OffsetStrategy::MirrorTheorem1})
        CHECK(strategy_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(strategy_from_string("bogus"), std::invalid_argument);
}
