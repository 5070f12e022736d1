#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tanalg/cli.hpp"

using namespace tanalg;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("tanalg_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
    fs::path write(const std::string& name, const std::string& content) const {
        fs::path p = path / name;
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }
};

const char* kCuspSession =
    "ring x y\n"
    "ideal CUSP: y^2 - x^3\n";

const char* kConeSession =
    "ring x y z\n"
    "ideal CONE: x^2 + y^2 + z^2\n";

} // namespace

TEST_CASE("tangent verb on the cusp") {
    TempDir tmp;
    auto p = tmp.write("cusp.session", kCuspSession);
    CliRun r = cli({"tangent", p.string(), "CUSP"});
    CHECK(r.code == 0);
    // monic reduced basis of <2x dx + 3y dy, 2y dx + 3x^2 dy>
    CHECK(r.out.find("generators: [2/3*y, x^2]; [x, 3/2*y]") != std::string::npos);
    CHECK(r.out.find("provenance: order=grevlex d=4 k=2") != std::string::npos);

    // byte-identical reports across runs
    CliRun again = cli({"tangent", p.string(), "CUSP"});
    CHECK(r.out == again.out);
}

TEST_CASE("recover verb on the cone") {
    TempDir tmp;
    auto p = tmp.write("cone.session", kConeSession);
    CliRun r = cli({"recover", p.string(), "CONE"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: equal") != std::string::npos);
}

TEST_CASE("json format carries the report schema") {
    TempDir tmp;
    auto p = tmp.write("cusp.session", kCuspSession);
    CliRun r = cli({"gb", p.string(), "CUSP", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"task\": \"gb\"") != std::string::npos);
    CHECK(r.out.find("\"result\"") != std::string::npos);
    CHECK(r.out.find("\"provenance\"") != std::string::npos);
    CHECK(r.out.find("\"order\": \"grevlex\"") != std::string::npos);
}

TEST_CASE("certificate json carries witness and bounds") {
    TempDir tmp;
    auto p = tmp.write("s.session", "ring x y\nideal LINE: x\nmodule D: tangent LINE\n");
    CliRun r = cli({"balanced", p.string(), "D", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"certificate\"") != std::string::npos);
    CHECK(r.out.find("\"verdict\": \"pass\"") != std::string::npos);
    CHECK(r.out.find("\"witness\": \"[x^3, 0]\"") != std::string::npos);
    CHECK(r.out.find("\"degree-bound\": 4") != std::string::npos);
    CHECK(r.out.find("\"depth\": 2") != std::string::npos);
    CHECK(r.out.find("\"probes\": 30") != std::string::npos);
}

TEST_CASE("worker limit env is honored") {
    TempDir tmp;
    tmp.write("a.session", "ring x y\nideal I: x\ntask gb I\n");
    tmp.write("b.session", "ring x y\nideal J: y\ntask gb J\n");
    REQUIRE(cli({"corpus", "--dir", tmp.path.string(), "--seed-corpus"}).code == 0);
    ::setenv("TANALG_WORKERS", "1", 1);
    CliRun serial = cli({"corpus", "--dir", tmp.path.string()});
    ::unsetenv("TANALG_WORKERS");
    CHECK(serial.code == 0);
    // rows stay in corpus order
    CHECK(serial.out.find("PASS  a") < serial.out.find("PASS  b"));
}

TEST_CASE("verdict false still exits zero") {
    TempDir tmp;
    auto p = tmp.write("s.session", "ring x y\nideal I: x*y\n");
    CliRun r = cli({"member", p.string(), "x", "I"});
    CHECK(r.code == 0);
    CHECK(r.out.find("member: false") != std::string::npos);
}

TEST_CASE("malformed session exits 2 with a position") {
    TempDir tmp;
    auto p = tmp.write("bad.session", "ring x y\nideal I: x +\n");
    CliRun r = cli({"gb", p.string(), "I"});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("missing session file exits 2") {
    CliRun r = cli({"gb", "/nonexistent/nowhere.session", "I"});
    CHECK(r.code == 2);
}

TEST_CASE("unknown name exits 2, precondition exits 3") {
    TempDir tmp;
    auto p = tmp.write("s.session", "ring x y\nideal LINE: x\n");
    CHECK(cli({"tangent", p.string(), "NOPE"}).code == 2);
    // stability of a smooth germ violates the precondition
    CHECK(cli({"stability", p.string(), "LINE"}).code == 3);
    // conjugation without the ideal correspondence
    auto q = tmp.write("t.session",
                       "ring x y\nideal PARAB: y - x^2\nideal LINE: y\n"
                       "auto SCALE: x -> 2*x, y -> y\n");
    CHECK(cli({"conjugate", q.string(), "SCALE", "PARAB", "LINE"}).code == 3);
}

TEST_CASE("run executes embedded task directives") {
    TempDir tmp;
    auto p = tmp.write("s.session",
                       "ring x y\n"
                       "ideal LINE: x\n"
                       "module DX: tangent LINE\n"
                       "task gb LINE\n"
                       "task closure DX\n");
    CliRun r = cli({"run", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("task gb LINE") != std::string::npos);
    CHECK(r.out.find("basis: x") != std::string::npos);
    CHECK(r.out.find("closed: true") != std::string::npos);
    // one blank line between reports
    CHECK(r.out.find("\n\ntask closure DX") != std::string::npos);
}

TEST_CASE("corpus seeding, passing, and corruption") {
    TempDir tmp;
    tmp.write("one.session", "ring x y\nideal I: x\ntask gb I\n");
    tmp.write("two.session", "ring x y\nideal J: x*y\ntask recover J\n");

    CliRun seed = cli({"corpus", "--dir", tmp.path.string(), "--seed-corpus"});
    CHECK(seed.code == 0);
    CHECK(seed.out.find("SEED  one") != std::string::npos);
    REQUIRE(fs::exists(tmp.path / "one.golden"));

    CliRun pass = cli({"corpus", "--dir", tmp.path.string()});
    CHECK(pass.code == 0);
    CHECK(pass.out.find("PASS  one") != std::string::npos);
    CHECK(pass.out.find("2 items, 2 passed, 0 failed") != std::string::npos);

    // corrupt a golden: that item fails and the exit code is 1
    std::ofstream(tmp.path / "one.golden", std::ios::binary) << "corrupted\n";
    CliRun fail = cli({"corpus", "--dir", tmp.path.string()});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("FAIL  one") != std::string::npos);
    CHECK(fail.out.find("PASS  two") != std::string::npos);

    // an empty filter result is not an error
    CliRun none = cli({"corpus", "--dir", tmp.path.string(), "--filter", "zzz"});
    CHECK(none.code == 0);
    CHECK(none.out.find("0 items") != std::string::npos);

    CliRun nodir = cli({"corpus", "--dir", (tmp.path / "missing").string()});
    CHECK(nodir.code == 2);
}

TEST_CASE("order flag switches the monomial order") {
    TempDir tmp;
    auto p = tmp.write("s.session", "ring x y\nideal I: x^2 + y^2 - 1; x*y - 1\n");
    CliRun grevlex = cli({"gb", p.string(), "I"});
    CliRun lex = cli({"gb", p.string(), "I", "--order", "lex"});
    CHECK(grevlex.code == 0);
    CHECK(lex.code == 0);
    CHECK(grevlex.out.find("y^3 + x - y") != std::string::npos);
    CHECK(lex.out.find("y^4 - y^2 + 1") != std::string::npos);
}

TEST_CASE("bundled corpus passes") {
    // run against the repository corpus when invoked from the source tree
    if (!fs::is_directory("corpus")) return;
    bool any = false;
    for (const auto& e : fs::directory_iterator("corpus"))
        any = any || e.path().extension() == ".session";
    if (!any) return;
    CliRun r = cli({"corpus", "--dir", "corpus"});
    CHECK(r.code == 0);
    CHECK(r.out.find(" 0 failed") != std::string::npos);
}
