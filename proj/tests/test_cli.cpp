#include "ckq/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ckq::cli::run_args(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check verb on the middle contraction") {
    auto r = run({"check", "--n", "5", "--sigma", "1,2,3,4,5", "--j", "1,i,i,1", "--J", "auto"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "allowed: true"));
    CHECK(contains(r.out, "J=ι2·ι3"));
}

TEST_CASE("check verb rejects the Galilei pattern") {
    auto r = run({"check", "--n", "5", "--sigma", "1,2,5,3,4", "--j", "i,i,1,1", "--J", "auto"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "allowed: false"));

    auto r1 = run({"check", "--n", "5", "--sigma", "1,2,5,3,4", "--j", "i,i,1,1", "--J", "1"});
    CHECK(r1.code == 0);
    CHECK(contains(r1.out, "allowed: false"));
}

TEST_CASE("check verb json output") {
    auto r = run({"check", "--n", "4", "--sigma", "1,2,3,4", "--j", "i,i,i", "--J", "auto",
                  "--json", "--rtt"});
    CHECK(r.code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["verdict"]["allowed"] == true);
    CHECK(parsed["verdict"]["rtt_defined"] == true);
    CHECK(parsed["spec"]["J"] == "i1i2i3");
    CHECK(parsed["labels"].size() == 2);
}

TEST_CASE("verify-theorems exits zero on match") {
    auto r = run({"verify-theorems", "--n", "3", "--theorems", "1,3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "theorem 1"));
    CHECK(contains(r.out, "MATCH"));
    CHECK_FALSE(contains(r.out, "MISMATCH"));
}

TEST_CASE("enumerate output is deterministic and thread-independent") {
    auto a = run({"enumerate", "--n", "4", "--threads", "1"});
    auto b = run({"enumerate", "--n", "4", "--threads", "4"});
    auto c = run({"enumerate", "--n", "4", "--threads", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
    CHECK(contains(a.out, "maximal families"));
}

TEST_CASE("enumerate json schema") {
    auto r = run({"enumerate", "--n", "3", "--json"});
    CHECK(r.code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["n"] == 3);
    for (const auto& row : parsed["rows"]) {
        CHECK(row.contains("spec"));
        CHECK(row.contains("verdict"));
        CHECK(row.contains("family"));
        CHECK(row.contains("labels"));
        CHECK(row["verdict"]["allowed"] == true);
    }
}

TEST_CASE("j-max-nilpotents caps the scan") {
    auto r = run({"enumerate", "--n", "4", "--j-max-nilpotents", "1", "--json"});
    CHECK(r.code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    for (const auto& row : parsed["rows"]) {
        int nilp = 0;
        for (const auto& tok : row["spec"]["j"])
            if (tok != "1") ++nilp;
        CHECK(nilp <= 1);
    }
}

TEST_CASE("dump-classical renders the paper's third SO(3) display") {
    auto r = run({"dump-classical", "--n", "3", "--sigma", "1,3,2", "--j", "i,1"});
    CHECK(r.code == 0);
    // with j_1 nilpotent and j_2 = 1 the corner factor is iota_1 and the
    // middle column keeps a bare b~12
    CHECK(contains(r.out, "b11 + i·ι1·b̃11"));
    CHECK(contains(r.out, "ι1·b12 - i·b̃12"));
}

TEST_CASE("dump-relations formats") {
    auto text = run({"dump-relations", "--n", "2", "--sigma", "1,2", "--j", "1", "--J", "1",
                     "--kind", "orthogonality"});
    CHECK(text.code == 0);
    CHECK(contains(text.out, "TCTt[1,2]"));

    auto js = run({"dump-relations", "--n", "3", "--sigma", "1,2,3", "--j", "i,i", "--J", "auto",
                   "--kind", "both", "--format", "json"});
    CHECK(js.code == 0);
    auto parsed = nlohmann::json::parse(js.out);
    CHECK(parsed.is_array());
    CHECK(parsed.size() > 0);

    auto tex = run({"dump-relations", "--n", "2", "--sigma", "1,2", "--j", "i", "--J", "1",
                    "--kind", "orthogonality", "--format", "latex"});
    CHECK(tex.code == 0);
    CHECK(contains(tex.out, "\\iota_{1}"));
    CHECK(contains(tex.out, "t_{11}"));
}

TEST_CASE("degenerate verb") {
    auto r = run({"degenerate", "--n", "3", "--json"});
    CHECK(r.code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["free_generators"] == 1);
    CHECK(parsed["contradiction"] == false);
}

TEST_CASE("invalid input reports a parse error") {
    auto r = run({"check", "--n", "5", "--sigma", "1,2,3", "--j", "1,i,1,1"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "error"));

    auto r2 = run({"check", "--n", "5", "--sigma", "1,2,3,4,5", "--j", "1,x,1,1"});
    CHECK(r2.code == 2);

    auto r3 = run({"nonsense"});
    CHECK(r3.code == 2);
}

TEST_CASE("help exits cleanly") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "enumerate"));
}
