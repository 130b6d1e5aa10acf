#include "doctest.h"

#include "json.hpp"
#include "series.hpp"

#include "qhc/cli/suites.hpp"
#include "qhc/coeff/lexer.hpp"
#include "qhc/daha/daha.hpp"
#include "qhc/rewrite/props.hpp"

#include <array>
#include <cstdio>
#include <random>

using namespace qhc;

namespace {

struct Run {
    int status;
    std::string out;
};

Run qhc_run(const std::string& args) {
    std::string cmd = std::string(QHC_BIN) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf;
    for (size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
    int st = pclose(p);
    return {WEXITSTATUS(st), out};
}

}  // namespace

TEST_CASE("registry") {
    CHECK(algebra_ids().size() == 7);
    for (auto& id : algebra_ids()) CHECK(algebra_by_id(id).id() == id);
    CHECK_THROWS_AS(algebra_by_id("gl3"), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
    CHECK(suite_names().size() == 13);
}

TEST_CASE("series tables agree with direct counting") {
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) {
            CHECK(series_spherical(m, n) == series::spherical(m, n));
            CHECK(series_invariant(m, n) == series::invariant(m, n));
        }
    CHECK(series_spherical(-1, 0) == 0);
}

TEST_CASE("parallel_map keeps order and rethrows") {
    auto v = parallel_map<int>(100, [](size_t i) { return int(i * i); }, 4);
    for (size_t i = 0; i < v.size(); ++i) CHECK(v[i] == int(i * i));
    CHECK(parallel_map<int>(0, [](size_t) { return 1; }, 4).empty());
    CHECK_THROWS_AS(parallel_map<int>(
                        10, [](size_t i) -> int { if (i == 7) throw std::runtime_error("x"); return 0; }, 3),
                    std::runtime_error);
}

TEST_CASE("parse examples") {
    const Algebra& H = daha();
    NcPoly tt = H.parse("T*T");
    REQUIRE(tt.terms().size() == 1);
    CHECK(tt.terms().begin()->first == H.spec().word("T*T"));
    CHECK(sdaha().parse("(q^-2 - 1)*R + Q1*P1").terms().size() == 2);
    try {
        H.parse("X3");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 1);
    }
}

TEST_CASE("property: print and parse round-trip in every algebra") {
    std::mt19937_64 g(91);
    for (auto& id : algebra_ids()) {
        const Algebra& a = algebra_by_id(id);
        for (int i = 0; i < 30; ++i) {
            NcPoly x = random_element(a, g, 3, 4);
            CHECK_MESSAGE(a.parse(x.str()) == x, id << ": " << x.str());
        }
    }
}

TEST_CASE("qhc normalize and errors") {
    Run r = qhc_run("normalize -a sdaha \"P1*R*Q1\"");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(sdaha().parse(j["result"]["expr"].get<std::string>()) == sdaha().nf("P1*R*Q1"));

    Run s = qhc_run("normalize --q 2 --t 3 -a sdaha \"(q^-2 - 1)*R + Q1*P1\"");
    CHECK(nlohmann::json::parse(s.out)["result"]["expr"] == "-3/4*R + Q1*P1");

    Run bad = qhc_run("normalize -a daha X3");
    CHECK(bad.status == 2);
    auto e = nlohmann::json::parse(bad.out);
    CHECK(e["error"]["kind"] == "parse");
    CHECK(e["error"]["col"] == 1);

    CHECK(qhc_run("normalize -a gl3 T").status == 2);
    CHECK(qhc_run("--q 1 --t 2 normalize -a daha T").status == 2);
    CHECK(qhc_run("act -a sdaha -g E R").status == 2);
    CHECK(qhc_run("verify -s nope").status == 2);
}

TEST_CASE("qhc reports") {
    Run d = qhc_run("diamonds -a sdaha");
    CHECK(d.status == 0);
    auto j = nlohmann::json::parse(d.out);
    CHECK(j["count"] == 15);
    CHECK(j["reports"][0].contains("left_first"));

    Run h = qhc_run("hilbert -a sdaha --max 2 2");
    auto hj = nlohmann::json::parse(h.out);
    CHECK(hj["max"] == nlohmann::json::array({2, 2}));
    CHECK(hj["dims"][4] == nlohmann::json::array({1, 1, 2}));

    Run rk = qhc_run("rank -a sdaha R \"2*R\" \"Q1*P1\"");
    CHECK(nlohmann::json::parse(rk.out)["rank"] == 2);

    Run act = qhc_run("act -a oq -g E l11");
    CHECK(nlohmann::json::parse(act.out)["result"]["expr"] == "l12");

    Run v1 = qhc_run("verify -s inv-diamonds"), v2 = qhc_run("verify -s inv-diamonds");
    CHECK(v1.status == 0);
    CHECK(v1.out == v2.out);
    CHECK(nlohmann::json::parse(v1.out)["reports"][0]["count"] == 28);

    Run hc = qhc_run("hc-check");
    CHECK(hc.status == 0);
    CHECK(nlohmann::json::parse(hc.out)["relations"].size() == 11);
}

TEST_CASE("every suite passes") {
    for (auto& n : suite_names()) {
        SuiteReport r = run_suite(n);
        CHECK_MESSAGE(r.ok(), n);
        for (auto& i : r.items) CHECK_MESSAGE(i.pass, n << ": " << i.name << " " << i.detail);
    }
}
