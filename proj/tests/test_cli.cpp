#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* env = std::getenv("MELANGE_CLI");
    REQUIRE_MESSAGE(env != nullptr, "MELANGE_CLI must point at the binary");
    return env;
}

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("product command") {
    auto r = run("product --law stuffle \"y1\" \"y1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2 y1.y1 + 1 y2\n");

    r = run("product --law shuffle \"a.b\" \"c\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 a.b.c + 1 a.c.b + 1 c.a.b\n");

    r = run("product --law stuffle \"\" \"y1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 y1\n");

    r = run("product --law \"qshuffle:q=1/2\" \"y1\" \"y2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 y1.y2 + 1 y2.y1 + 1/2 y3\n");
}

TEST_CASE("exit codes: parse vs semantic errors") {
    CHECK(run("product --law stuffle \"y0\" \"y1\"").exit_code == 2);
    CHECK(run("product --law stuffle \"y1.\" \"y1\"").exit_code == 2);
    CHECK(run("product --law stuffle \"a\" \"y1\"").exit_code == 2);
    CHECK(run("product --law huffle \"y1\" \"y1\"").exit_code == 2);
    CHECK(run("product --law nosuchlaw \"y1\" \"y1\"").exit_code == 3);
    CHECK(run("product --law qshuffle \"y1\" \"y1\"").exit_code == 3);
    // huffle words under an explicit huffle signature parse fine
    CHECK(run("product --law huffle \"(y1,z[0])\" \"(y1,z[1/2])\"").exit_code ==
          0);
}

TEST_CASE("machine mode emits one term per line") {
    auto r = run("product --machine --law stuffle \"y1\" \"y1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\ty1.y1\n1\ty2\n");
}

TEST_CASE("deterministic output") {
    std::string args = "product --law \"qinfiltration:q=1/3\" \"a.b.a\" \"b.a\"";
    auto first = run(args);
    auto second = run(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("lyndon command") {
    auto r = run("lyndon --alphabet \"a<b\" --max 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "a aab ab abb b\n");

    r = run("lyndon --alphabet \"y1<y2\" --max 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "y1 y1.y2 y2\n");

    // declared order must match the letter order
    CHECK(run("lyndon --alphabet \"y2<y1\" --max 2").exit_code == 3);
}

TEST_CASE("decompose command") {
    auto r = run("decompose --law stuffle --window \"y1,y2\" \"1 y1.y1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-1/2 (y2)^1 + 1/2 (y1)^2\n");

    r = run("decompose --machine --law stuffle --window \"y1,y2\" \"y1.y1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-1/2\t(y2)^1\n1/2\t(y1)^2\n");

    // not representable over the window
    CHECK(run("decompose --law stuffle --window \"y1,y2\" \"y2.y2\"")
              .exit_code == 3);
}

TEST_CASE("lawcheck command") {
    auto r = run("lawcheck --law stuffle --window \"y1,y2,y3\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("commutative: yes") != std::string::npos);
    CHECK(r.out.find("associative: yes") != std::string::npos);
    CHECK(r.out.find("analytic=yes") != std::string::npos);
    CHECK(r.out.find("exceeds-threshold") == std::string::npos);

    r = run("lawcheck --law muffle --window \"x[1/2],x[2],x[1]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("commutative: yes") != std::string::npos);
    CHECK(r.out.find("associative: yes") != std::string::npos);
    CHECK(r.out.find("analytic=no") != std::string::npos);
    CHECK(r.out.find("exceeds-threshold") != std::string::npos);
    CHECK(r.out.find("(x[1/2],x[2])") != std::string::npos);
}

TEST_CASE("coproduct command") {
    auto r = run("coproduct --kind conc \"a.b\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "a.b (x) 1 + a (x) b + 1 (x) a.b\n");

    r = run("coproduct --kind phi --law stuffle --window \"y1\" \"y2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "y1 (x) y1 + y2 (x) 1 + 1 (x) y2\n");

    // refusal for the non-dualizable law
    CHECK(run("coproduct --kind phi --law huffle --window \"(y1,z[0])\" "
              "\"(y1,z[0])\"")
              .exit_code == 3);
}

TEST_CASE("zetacheck command") {
    auto r = run("zetacheck --law stuffle -N 2 --left \"y1\" --right \"y1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "OK lhs=rhs=9/4\n");

    r = run("zetacheck --law huffle -N 10 --left \"(y2,z[0])\" --right "
            "\"(y3,z[1/2])\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 3) == "OK ");
}

TEST_CASE("custom law from a table file") {
    std::string table = "/tmp/melange_test_phi.tbl";
    {
        std::ofstream out(table);
        out << "# phi(a,b) = a, phi(b,a) = b: a non-commutative table\n";
        out << "a b -> 1 a\n";
        out << "b a -> 1 b\n";
        out << "a a -> 0\n";
    }
    auto r = run("product --law \"custom:file=" + table + "\" \"a\" \"b\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 a.b + 1 b.a + 1 a\n");

    r = run("lawcheck --law \"custom:file=" + table + "\" --window \"a,b\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("commutative: no witness (a, b)") != std::string::npos);
}

TEST_CASE("semigroup law from a table file") {
    std::string table = "/tmp/melange_test_sg.tbl";
    {
        std::ofstream out(table);
        out << "symbols: a b\n";
        out << "a a -> b\n";
    }
    auto r = run("product --law \"semigroup:table=" + table + "\" \"a\" \"a\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2 a.a + 1 b\n");
}
