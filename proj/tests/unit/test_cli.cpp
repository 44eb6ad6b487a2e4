#include <gtest/gtest.h>

#include "commands.hpp"
#include "fixtures.hpp"
#include "simphil/builders.hpp"
#include "simphil/error.hpp"
#include "spec_parser.hpp"

using namespace simphil;
using nlohmann::json;

namespace {

bool same(const SimplicialSet& a, const SimplicialSet& b) {
    if (a.cutoff() != b.cutoff()) return false;
    for (int n = 0; n <= a.cutoff(); ++n)
        if (a.labels(n) != b.labels(n)) return false;
    return a.faces() == b.faces() && a.degeneracies() == b.degeneracies();
}

std::string pointer_of(const json& doc) {
    try {
        cli::parse_spec(doc);
    } catch (const cli::SpecError& e) {
        return e.pointer();
    }
    return "<none>";
}

}  // namespace

TEST(SpecParser, NerveGroupMatchesBuilder) {
    const auto x = cli::parse_spec(json::parse(R"({"kind":"nerve_group","group":{"order":2},"truncation":3})"));
    EXPECT_TRUE(same(x, fixtures::nerve_cyclic(2, 3)));
    const auto t = cli::parse_spec(json::parse(R"({"kind":"nerve_group","group":{"table":[[0,1],[1,0]]},"truncation":3})"));
    EXPECT_TRUE(same(t, fixtures::nerve_cyclic(2, 3)));
}

TEST(SpecParser, DiscretePoint) {
    const auto x = cli::parse_spec(json::parse(R"({"kind":"discrete","set_size":1,"truncation":2})"));
    EXPECT_TRUE(same(x, fixtures::point(2)));
}

TEST(SpecParser, ComplexChainAndTorus) {
    EXPECT_TRUE(same(cli::parse_spec(json::parse(R"({"kind":"ordered_complex","complex":{"simplex_boundary":3},"truncation":3})")),
                     fixtures::sphere2(3)));
    EXPECT_TRUE(same(cli::parse_spec(json::parse(R"({"kind":"nerve_category","category":{"chain":3},"truncation":3})")),
                     fixtures::nerve_chain(3, 3)));
    const auto torus = cli::parse_spec(json::parse(R"({"kind":"explicit","name":"torus","truncation":3,"cells":[
        [{"name":"v"}],
        [{"name":"a","faces":["v","v"]},{"name":"b","faces":["v","v"]},{"name":"c","faces":["v","v"]}],
        [{"name":"U","faces":["b","c","a"]},{"name":"L","faces":["a","c","b"]}]]})"));
    EXPECT_TRUE(same(torus, fixtures::torus(3)));
}

TEST(SpecParser, ProductUnionAndSkeleton) {
    const auto u = cli::parse_spec(json::parse(R"({"kind":"disjoint_union","truncation":2,"operands":[
        {"kind":"nerve_group","group":{"order":2}},{"kind":"discrete","set_size":1}]})"));
    EXPECT_TRUE(same(u, disjoint_union(fixtures::nerve_cyclic(2, 2), fixtures::point(2))));
    const auto s = cli::parse_spec(json::parse(R"({"kind":"ordered_complex","complex":{"full_simplex":1},"truncation":1,"skeleton_extend":3})"));
    EXPECT_EQ(s.cutoff(), 3);
    EXPECT_EQ(s.size(3), 5u);
}

TEST(SpecParser, ErrorsCarryPointers) {
    EXPECT_EQ(pointer_of(json::parse(R"({"kind":"nerve_group","truncation":2})")), "/group");
    EXPECT_EQ(pointer_of(json::parse(R"({"kind":"nerve_group","group":{"order":0},"truncation":2})")), "/group/order");
    EXPECT_EQ(pointer_of(json::parse(R"({"kind":"nerve_group","group":{"table":[[0,1],[1,1]]},"truncation":2})")), "/group/table");
    EXPECT_EQ(pointer_of(json::parse(R"({"kind":"torus","truncation":2})")), "/kind");
    EXPECT_EQ(pointer_of(json::parse(R"({"kind":"product","truncation":2,"operands":[{"kind":"discrete","set_size":1},
        {"kind":"discrete","set_size":"two"}]})")), "/operands/1/set_size");
    EXPECT_EQ(pointer_of(json::parse(R"({"kind":"discrete","set_size":1,"truncation":2,"extra":1})")), "/extra");
}

TEST(SpecParser, BrokenComposeTableNamesTheLaw) {
    const auto doc = json::parse(R"({"kind":"nerve_category","truncation":2,"category":{"objects":["a"],
        "morphisms":[{"name":"1","source":"a","target":"a"},{"name":"f","source":"a","target":"a"}],
        "identities":["1"],"compose":[["1","1","1"],["1","f","f"],["f","1","1"],["f","f","f"]]}})");
    try {
        cli::parse_spec(doc);
        FAIL() << "expected a spec error";
    } catch (const cli::SpecError& e) {
        EXPECT_EQ(e.pointer(), "/category/compose");
        EXPECT_NE(std::string(e.what()).find("unit"), std::string::npos) << e.what();
    }
}

TEST(SpecParser, InvalidSetRefused) {
    const auto doc = json::parse(R"({"kind":"explicit","truncation":2,"cells":[[{"name":"v"},{"name":"w"}],
        [{"name":"a","faces":["v","w"]}],[{"name":"t","faces":["a","a","a"]}]]})");
    EXPECT_NO_THROW(cli::build_spec(doc));
    try {
        cli::parse_spec(doc);
        FAIL() << "expected invalid-input";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_input);
        EXPECT_NE(std::string(e.what()).find("face-face"), std::string::npos);
    }
}

TEST(Run, BettiReportAndDeterminism) {
    cli::Options opt;
    opt.command = "betti";
    opt.methods = {"exact", "hodge", "normalized"};
    const std::string spec = R"({"kind":"ordered_complex","complex":{"simplex_boundary":3},"truncation":3})";
    const auto out = cli::run(opt, spec, nullptr);
    EXPECT_EQ(out.exit_code, cli::exit_ok);
    EXPECT_EQ(out.report["results"]["degrees"][2]["values"][0]["value"], 1);
    opt.command = "qsim";
    opt.qsim_mode = "qpe";
    opt.seed = 42;
    opt.shots = 500;
    EXPECT_EQ(cli::run(opt, spec, nullptr).report.dump(), cli::run(opt, spec, nullptr).report.dump());
}

TEST(Run, DigestIsSha256) {
    EXPECT_EQ(cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
