#include "eigensteps/io.hpp"
#include "eigensteps/errors.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace eigensteps;

TEST_CASE("doubles format compactly and round-trip losslessly") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.0) == "-2");
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double v = unif(rng);
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("sequences serialize to JSON arrays") {
    CHECK(to_json(std::vector<double>{1.0, 0.5}) == "[1,0.5]");
    CHECK(to_json(std::vector<double>{}) == "[]");
}

TEST_CASE("sequence parsing accepts JSON arrays and plain lines") {
    CHECK(parse_sequence("[1, 0.5]") == std::vector<double>{1.0, 0.5});
    CHECK(parse_sequence("  [1]") == std::vector<double>{1.0});
    CHECK(parse_sequence("1\n0.5\n") == std::vector<double>{1.0, 0.5});
    CHECK(parse_sequence("1\n\n  0.5  \n") == std::vector<double>{1.0, 0.5});
    CHECK(parse_sequence("1e-3") == std::vector<double>{1e-3});
}

TEST_CASE("sequence parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_sequence(""), UsageError);
    CHECK_THROWS_AS(parse_sequence("   "), UsageError);
    CHECK_THROWS_AS(parse_sequence("[1, oops]"), UsageError);
    CHECK_THROWS_AS(parse_sequence("[1,"), UsageError);
    CHECK_THROWS_AS(parse_sequence("{\"a\":1}"), UsageError);
    CHECK_THROWS_AS(parse_sequence("1 2\n"), UsageError);
    CHECK_THROWS_AS(parse_sequence("abc\n"), UsageError);
}

TEST_CASE("inner tables round-trip bitwise through JSON") {
    const InnerEigenstepTable table = fixtures::five_in_three_table(1.0 / 3.0, 2.0 / 3.0);
    const std::string text = to_json(table);
    const InnerEigenstepTable back = parse_inner_table(text);
    REQUIRE(back.size() == table.size());
    CHECK(back.lam().values() == table.lam().values());
    CHECK(back.mu().values() == table.mu().values());
    for (int n = 1; n <= table.size(); ++n) CHECK(back.row(n) == table.row(n));
    // Serialization is deterministic.
    CHECK(to_json(back) == text);
}

TEST_CASE("outer tables round-trip bitwise through JSON") {
    const OuterEigenstepTable table =
        inner_to_outer(fixtures::five_in_three_table(0.0, 1.0 / 3.0), 3);
    const std::string text = to_json(table);
    const OuterEigenstepTable back = parse_outer_table(text);
    REQUIRE(back.dim() == 3);
    REQUIRE(back.size() == 5);
    for (int n = 0; n <= 5; ++n) CHECK(back.row(n) == table.row(n));
}

TEST_CASE("table parsing enforces the schema") {
    CHECK_THROWS_AS(parse_inner_table("[1,2]"), UsageError);
    CHECK_THROWS_AS(parse_inner_table("{\"N\":1}"), UsageError);
    CHECK_THROWS_AS(parse_inner_table(
                        R"({"N":2,"M":2,"lam":[1,0],"mu":[1,0],"rows":[[1]]})"),
                    UsageError);
    CHECK_THROWS_AS(parse_inner_table(
                        R"({"N":2,"M":2,"lam":[1,0],"mu":[1,0],"rows":[[1],[1,0,0]]})"),
                    UsageError);
    CHECK_THROWS_AS(parse_inner_table(
                        R"({"N":1.5,"M":2,"lam":[1],"mu":[1],"rows":[[1]]})"),
                    UsageError);
    // Unsorted data is rejected rather than silently reordered.
    CHECK_THROWS_AS(parse_inner_table(
                        R"({"N":2,"M":2,"lam":[0,1],"mu":[1,0],"rows":[[1],[1,0]]})"),
                    UsageError);
    CHECK_THROWS_AS(parse_outer_table(
                        R"({"N":2,"M":1,"lam":[1],"mu":[1,0],"rows":[[0],[1]]})"),
                    UsageError);
}

TEST_CASE("matrices round-trip through JSON and CSV") {
    Eigen::MatrixXd m(2, 3);
    m << 1.0, 0.5, -0.25,
         2.0, 1.0 / 3.0, 0.0;

    const std::string js = matrix_to_json(m);
    const Eigen::MatrixXd from_json = parse_matrix(js);
    REQUIRE(from_json.rows() == 2);
    REQUIRE(from_json.cols() == 3);
    CHECK((from_json - m).cwiseAbs().maxCoeff() == 0.0);

    const std::string csv = matrix_to_csv(m);
    const Eigen::MatrixXd from_csv = parse_matrix(csv);
    CHECK((from_csv - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("matrix serialization layouts are exact") {
    Eigen::MatrixXd m(2, 2);
    m << 1.0, 0.5,
         0.25, 2.0;
    CHECK(matrix_to_csv(m) == "1,0.5\n0.25,2\n");
    CHECK(matrix_to_json(m) == R"({"M":2,"N":2,"entries":[1,0.5,0.25,2]})");
}

TEST_CASE("matrix parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_matrix(""), UsageError);
    CHECK_THROWS_AS(parse_matrix("[1,2]"), UsageError);
    CHECK_THROWS_AS(parse_matrix("1,2\n3\n"), UsageError);
    CHECK_THROWS_AS(parse_matrix("1,x\n"), UsageError);
    CHECK_THROWS_AS(parse_matrix(R"({"M":2,"N":2,"entries":[1,2,3]})"), UsageError);
    CHECK_THROWS_AS(parse_matrix(R"({"M":0,"N":2,"entries":[]})"), UsageError);
}

TEST_CASE("reports serialize with holds flags") {
    VerificationReport rep;
    rep.add("spectrum", 0.5, 1.0);
    rep.add("trace", 2.0, 1.0);
    const std::string text = to_json(rep);
    CHECK(text ==
          R"({"holds":false,"checks":[{"name":"spectrum","residual":0.5,"threshold":1,)"
          R"("pass":true},{"name":"trace","residual":2,"threshold":1,"pass":false}]})");
}

TEST_CASE("files write and read back verbatim") {
    const std::string path = "io_test_scratch.txt";
    const std::string body = "1\n0.5\n";
    write_file(path, body);
    CHECK(read_file(path) == body);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file("definitely/not/a/file.txt"), UsageError);
    CHECK_THROWS_AS(write_file("no/such/directory/file.txt", "x"), UsageError);
}
