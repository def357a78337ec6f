#include "fermat/json_io.hpp"

#include "generators.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace fermat;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + FERMAT_HV_BIN + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST_CASE("CycNum JSON round trip") {
    for (int n : {4, 5, 6, 12})
        for (int trial = 0; trial < 10; ++trial) {
            const auto c = gen::cyc(n, 1000, 97);
            CHECK(cycnum_from_json(json::parse(to_json(c, n).dump())) == c);
        }
    const CycNum huge = CycNum(Rational(BigInt("123456789012345678901234567890"))) * CycNum::zeta(6, 1);
    const auto j = to_json(huge, 6);
    CHECK(j["coeffs"][1][0].is_string());
    CHECK(cycnum_from_json(j) == huge);
}

TEST_CASE("intersection matrix output") {
    const auto r = run("intersection --n 6 --matrix");
    CHECK(r.status == 0);
    const auto m = json::parse(r.out);
    REQUIRE(m.size() == 20);
    for (std::size_t a = 0; a < 20; ++a) {
        REQUIRE(m[a].size() == 20);
        for (std::size_t c = 0; c < 20; ++c) CHECK(m[a][c].get<int>() == -m[c][a].get<int>());
    }
}

TEST_CASE("x with both methods") {
    const auto r = run("x --n 6 --forms 1,2,1,3 --method both --tol 1e-9");
    CHECK(r.status == 0);
    const auto j = json::parse(r.out);
    CHECK(j["method"] == "both");
    const double s = j["series"]["mid"], q = j["quadrature"]["mid"];
    CHECK(std::abs(s - q) <= j["series"]["rad"].get<double>() + j["quadrature"]["rad"].get<double>());
    CHECK(j.contains("err"));
    CHECK(j.contains("terms_or_nodes"));
}

TEST_CASE("itint and pdual schemas") {
    const auto it = json::parse(run("itint --n 6 --loop gamma --i 1 --j 2 --forms 1,2,1,3").out);
    CHECK(it["x_index"] == json::array({1, 2, 1, 3}));
    CHECK(cycnum_from_json(it["A"]).n() == 6);
    const auto pd = json::parse(run("pdual --n 6 --form 1,1").out);
    CHECK(pd.size() == 20);
    CHECK(pd[0]["loop"] == json::array({0, 0}));
    const auto per = json::parse(run("periods --n 6 --form 1,1").out);
    CHECK(cycnum_from_json(per[0]["period"]) == (CycNum(1) - CycNum::zeta(6, 1)) * (CycNum(1) - CycNum::zeta(6, 1)));
}

TEST_CASE("volume report and check exit codes") {
    const auto v = run("volume --n 6 --tensor 1,2:1,3:1,1 --tol 1e-6");
    CHECK(v.status == 0);
    const auto j = json::parse(v.out);
    for (const char* key : {"n", "tensor", "exact_expr", "x", "value", "two_re_mod_1", "lattice_dist", "verdict"})
        CHECK(j.contains(key));
    CHECK(j["value"].contains("rad"));
    CHECK(run("check --n 6 --tensor 1,2:1,3:1,1").status == 2);
    CHECK(run("check --n 6 --tensor 1,2:2,2:3,2").status == 0);
    const auto text = run("volume --n 4 --tensor 1,1:1,2:2,1 --output text");
    CHECK(text.out.find("verdict: nontrivial") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    const auto bad = run("volume --n 6 --tensor 1,2:4,2:1,1");
    CHECK(bad.status == 1);
    CHECK(bad.out.find("r,s >= 1 and r+s <= N-1") != std::string::npos);
    CHECK(run("frobnicate").status == 1);
    CHECK(run("x --n 6 --forms 1,2,1,3 --bogus").status == 1);
    CHECK(run("sweep --n 5").status == 1);
}

TEST_CASE("tolerance from the environment") {
    const auto loose = json::parse(run("x --n 6 --forms 1,1,1,2 --method quadrature", "FERMAT_HV_TOL=1e-3").out);
    const auto tight = json::parse(run("x --n 6 --forms 1,1,1,2 --method quadrature", "FERMAT_HV_TOL=1e-12").out);
    CHECK(loose["terms_or_nodes"].get<int>() <= tight["terms_or_nodes"].get<int>());
    CHECK(run("x --n 6 --forms 1,1,1,2", "FERMAT_HV_TOL=-1").status == 1);
}

TEST_CASE("sweep streams one report per line") {
    const auto r = run("sweep --n 4 --tol 1e-6");
    CHECK(r.status == 0);
    std::size_t lines = 0, pos = 0;
    json last;
    while (pos < r.out.size()) {
        const auto nl = r.out.find('\n', pos);
        last = json::parse(r.out.substr(pos, nl - pos));
        ++lines;
        pos = nl + 1;
    }
    CHECK(lines == 19);
    CHECK(last["summary"]["nontrivial"] == 3);
}
