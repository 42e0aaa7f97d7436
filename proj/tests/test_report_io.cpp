#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lca/report_io.hpp"

using namespace lca;

TEST_CASE("check line report round trip") {
    std::vector<CheckLine> lines{
        {"alpha", CheckLine::Status::Pass, 0.0},
        {"beta [2,3]", CheckLine::Status::Fail, 0.4714045207910317},
        {"gamma", CheckLine::Status::Skipped, 0.0},
    };
    std::string js = lines_to_json(lines);
    CHECK(js.find("\"pass\": false") != std::string::npos);
    CHECK(lines_equal(lines, lines_from_json(js)));

    CHECK_THROWS_AS(lines_from_json("{\"nope\": 1}"), BadReportFile);
    CHECK_THROWS_AS(lines_from_json("not json"), BadReportFile);
}

TEST_CASE("decomposition report round trip") {
    DecompositionReport d;
    d.mult = {{1, 0, 0}, {0, 0, 3}};
    d.ranks = {{9, 0, 0}, {0, 0, 27}};
    d.residual = 1.25e-12;
    d.consistent = true;
    DecompositionReport back = decomposition_from_json(decomposition_to_json(d));
    CHECK(back.mult == d.mult);
    CHECK(back.ranks == d.ranks);
    CHECK(back.residual == d.residual);
    CHECK(back.consistent == d.consistent);
}

TEST_CASE("csv tables") {
    Op m(2, 2, Backend::Exact);
    m.at(0, 0) = Scalar::integer(1);
    m.at(0, 1) = Scalar::rational(Rat(-1, 2));
    m.at(1, 1) = Scalar::zeta(4);
    std::string csv = matrix_to_csv(m);
    CHECK(csv == "\"1\",\"-1/2\"\n\"0\",\"" + Scalar::zeta(4).str() + "\"\n");
    CHECK(mult_table_to_csv({{1, 2}, {3, 4}}) == "1,2\n3,4\n");
}

TEST_CASE("group table files") {
    GroupTable g = group_table_from_json("[[0,1],[1,0]]", "z2");
    CHECK(g.order() == 2);
    CHECK(g.is_abelian());
    CHECK_THROWS_AS(group_table_from_json("[[0,1],[1,1]]", "bad"),
                    InvalidGroupTable);
    CHECK_THROWS_AS(group_table_from_json("{}", "bad"), InvalidGroupTable);
}

TEST_CASE("modular tables serialize") {
    auto h = make_zq(3, Backend::Exact);
    std::string js = modular_tables_to_json(modular_data(h));
    CHECK(js.find("\"modular\": true") != std::string::npos);
    CHECK(js.find("\"fusion\"") != std::string::npos);
}
