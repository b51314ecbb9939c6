#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "bbsyz/cli.hpp"
#include "fixtures.hpp"

using namespace bbsyz;
using cli::Json;

namespace {

std::string job(const std::string &n, const std::string &ideal, const std::string &extra = "")
{
    return R"({"n": )" + n + R"(, "order_ideal": )" + ideal + extra + "}";
}

const std::string triangle_job = job("2", "[[0,0],[1,0],[0,1]]");
const std::string line_job = job("3", "[[0,0,0],[1,0,0]]");
const std::string corner_job = job("3", "[[0,0,0],[1,0,0],[0,1,0],[0,0,1]]");

cli::Outcome run(const std::string &text, const std::string &command, const std::string &params = "",
                 cli::Format format = cli::Format::Structured)
{
    return cli::execute(text, command, params.empty() ? std::nullopt : std::optional<std::string>(params), format,
                        VerifyLevel::Quick);
}

Json report(const std::string &text, const std::string &command, const std::string &params = "")
{
    const cli::Outcome o = run(text, command, params);
    EXPECT_EQ(o.exit_code, 0) << o.err;
    return Json::parse(o.out);
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Cli, RhosOnLineInThreeSpace)
{
    const Json r = report(line_job, "rhos");
    EXPECT_EQ(r.at("omega"), 12);
    const RhoTable t(fixture::line3());
    std::size_t nontrivial = 0;
    for (const Json &e : r.at("rhos")) {
        nontrivial += e.at("trivially_zero").get<bool>() ? 0 : 1;
    }
    EXPECT_EQ(nontrivial, 12u);
    EXPECT_EQ(r.at("rhos").at(0).at("rho"), "rho[1,2;1,1]");
    EXPECT_EQ(r.at("rhos").at(0).at("poly"), "c[1,3]*c[2,1] - c[1,4]");
    EXPECT_EQ(r.at("rhos").at(2).at("poly"), "c[2,1]*c[2,3] + c[1,1] - c[2,4]");
    EXPECT_EQ(r.at("matrices").at(0).at("rows"), Json::parse(R"([["0", "c[1,3]"], ["1", "c[2,3]"]])"));
}

TEST(Cli, ReportsReparseToEqualValues)
{
    const RhoTable t(fixture::line3());
    for (const Json &e : report(line_job, "rhos").at("rhos")) {
        const auto rel = parse_relation(e.at("rho").get<std::string>() + " = 0");
        ASSERT_EQ(rel.size(), 1u);
        EXPECT_EQ(parse_poly(e.at("poly").get<std::string>()), t.poly(rel.begin()->first));
    }
    for (const Json &s : report(line_job, "jacobi", "1 2 3").at("syzygies")) {
        const Syzygy j = jacobi_syzygy(t, 1, 2, 3, s.at("p"), s.at("q"));
        EXPECT_EQ(parse_relation(s.at("relation").get<std::string>()), j.coeffs);
        for (const Json &sp : s.at("spine")) {
            const auto id = parse_relation(sp.at("rho").get<std::string>() + " = 0").begin()->first;
            EXPECT_EQ(Integer(sp.at("coefficient").get<std::string>()), spine_of(j).at(id));
        }
    }
    const RhoTable tri(fixture::triangle());
    for (const Json &w : report(triangle_job, "planar").at("rewritings")) {
        const auto id = parse_relation(w.at("rho").get<std::string>() + " = 0").begin()->first;
        Poly lhs = tri.poly(id);
        for (const auto &[g, c] : parse_relation(w.at("equals").get<std::string>() + " = 0")) {
            lhs -= c * tri.poly(g);
        }
        EXPECT_TRUE(lhs.is_zero()) << w.dump();
    }
}

TEST(Cli, TraceReport)
{
    const Json r = report(triangle_job, "trace", "<1,2> 1");
    EXPECT_EQ(r.at("relation"), "rho[1,2;2,2] + rho[1,2;3,3] = 0");
    EXPECT_EQ(r.at("spine_matches_prediction"), true);
    const Json c = report(corner_job, "trace", "<1,2,3> 1");
    EXPECT_EQ(c.at("spine"), Json::parse(R"([{"rho": "rho[1,2;1,4]", "coefficient": "1"},
                                             {"rho": "rho[1,3;1,3]", "coefficient": "1"}])"));
}

TEST(Cli, PlanarReport)
{
    const Json r = report(triangle_job, "planar");
    EXPECT_EQ(r.at("minimal_generators"), Json::parse(R"(["rho[1,2;2,2]", "rho[1,2;2,3]", "rho[1,2;3,2]"])"));
    EXPECT_EQ(r.at("rewritings").size(), 3u);
    EXPECT_EQ(r.at("complete_intersection_count").at("generators"), 3);
    EXPECT_EQ(r.at("complete_intersection_count").at("expected"), 3);
    EXPECT_EQ(r.at("rewritings").at(0).at("equals"), "-rho[1,2;2,2]");
}

TEST(Cli, SpinalAndAnalyze)
{
    const Json s = report(line_job, "spinal");
    EXPECT_EQ(s.at("count"), 6);
    const Json a = report(line_job, "analyze");
    EXPECT_EQ(a.at("mu"), 2);
    EXPECT_EQ(a.at("nu"), 5);
    std::vector<std::string> border;
    for (const Json &b : a.at("border")) {
        border.push_back(b.at("monomial"));
    }
    EXPECT_EQ(border, (std::vector<std::string>{"x2", "x3", "x1^2", "x1*x2", "x1*x3"}));
    EXPECT_EQ(a.at("target_monomials").size(), 6u);
}

TEST(Cli, VerifyPasses)
{
    const cli::Outcome o = run(triangle_job, "verify");
    ASSERT_EQ(o.exit_code, 0) << o.out;
    const Json r = Json::parse(o.out);
    EXPECT_EQ(r.at("passed"), true);
    for (const Json &p : r.at("properties")) {
        EXPECT_EQ(p.at("passed"), true) << p.dump();
    }
}

TEST(Cli, OutputIsDeterministic)
{
    for (const auto &[cmd, params] : std::vector<std::pair<std::string, std::string>>{
             {"analyze", ""}, {"rhos", ""}, {"jacobi", "1 2 3"}, {"trace", "<1,2,3> 2"}, {"spinal", ""}, {"verify", ""}}) {
        for (auto fmt : {cli::Format::Text, cli::Format::Structured}) {
            const cli::Outcome a = run(line_job, cmd, params, fmt);
            const cli::Outcome b = run(line_job, cmd, params, fmt);
            EXPECT_EQ(a.exit_code, 0) << cmd << a.err;
            EXPECT_EQ(a.out, b.out) << cmd;
            EXPECT_FALSE(a.out.empty());
        }
    }
}

TEST(Cli, TextFormat)
{
    const cli::Outcome o = run(triangle_job, "planar", "", cli::Format::Text);
    ASSERT_EQ(o.exit_code, 0);
    EXPECT_NE(o.out.find("command: planar"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("rho[1,2;2,2]"), std::string::npos);
    EXPECT_EQ(o.out.find('{'), std::string::npos);
}

TEST(Cli, ParseErrors)
{
    const cli::Outcome bad = run("{\n  \"n\": 2,\n  \"order_ideal\": [[0,0]\n", "analyze");
    EXPECT_EQ(bad.exit_code, 2);
    EXPECT_NE(bad.err.find("line"), std::string::npos) << bad.err;
    for (const std::string &text :
         {std::string(R"({"order_ideal": [[0,0]]})"), std::string(R"({"n": 2})"), job("2", "[[0,0]]", R"(, "colour": 1)"),
          job("2", "[[0,-1]]"), job("2", "[[0,0.5]]"), job("\"two\"", "[[0,0]]"), job("2", "[[0,0]]", R"(, "border_order": 3)"),
          std::string("[]")}) {
        const cli::Outcome o = run(text, "analyze");
        EXPECT_EQ(o.exit_code, 2) << text << " -> " << o.err;
        EXPECT_FALSE(o.err.empty());
    }
    EXPECT_EQ(run(triangle_job, "frobnicate").exit_code, 2);
    EXPECT_EQ(run(line_job, "jacobi", "1 2").exit_code, 2);
    EXPECT_EQ(run(line_job, "jacobi", "1 two 3").exit_code, 2);
    EXPECT_EQ(run(line_job, "trace", "1,2 1").exit_code, 2);
    EXPECT_EQ(run(line_job, "rhos", "1 2 3").exit_code, 2);
    EXPECT_EQ(cli::execute(line_job, std::nullopt, std::nullopt, cli::Format::Text, VerifyLevel::Quick).exit_code, 2);
}

TEST(Cli, FieldNamedInDiagnostics)
{
    const cli::Outcome o = run(job("2", "[[0,-1]]"), "analyze");
    EXPECT_NE(o.err.find("order_ideal"), std::string::npos) << o.err;
}

TEST(Cli, DomainErrors)
{
    const cli::Outcome closed = run(job("2", "[[1,0]]"), "analyze");
    EXPECT_EQ(closed.exit_code, 1);
    EXPECT_NE(closed.err.find("NotDivisorClosed"), std::string::npos) << closed.err;
    const Json err = Json::parse(closed.out);
    EXPECT_EQ(err.at("error").at("name"), "NotDivisorClosed");
    EXPECT_EQ(run(job("2", "[[0,0],[0,0]]"), "analyze").exit_code, 1);
    EXPECT_EQ(run(triangle_job, "jacobi", "1 2 3").exit_code, 1);
    EXPECT_EQ(run(line_job, "planar").exit_code, 1);
    EXPECT_EQ(run(line_job, "trace", "<1,1> 1").exit_code, 1);
    EXPECT_EQ(run(line_job, "trace", "<1,2> 3").exit_code, 1);
    EXPECT_EQ(run(line_job, "trace", "<1,4> 1").exit_code, 1);
    EXPECT_EQ(run(job("2", "[[0,0]]", R"(, "border_order": [[1,0]])"), "analyze").exit_code, 1);
}

TEST(Cli, ExitCodeMapping)
{
    EXPECT_EQ(cli::exit_code_for(Error(ErrorCode::VerificationFailed, "x")), 3);
    EXPECT_EQ(cli::exit_code_for(Error(ErrorCode::ClosedFormMismatch, "x")), 3);
    EXPECT_EQ(cli::exit_code_for(Error(ErrorCode::LemmaViolation, "x")), 3);
    EXPECT_EQ(cli::exit_code_for(Error(ErrorCode::NotPlanar, "x")), 1);
    EXPECT_EQ(cli::exit_code_for(ParseError("x")), 2);
}

TEST(Cli, CommandLineOverridesJobFields)
{
    const std::string text = job("3", "[[0,0,0],[1,0,0]]", R"(, "command": "trace", "params": "<1,2> 1")");
    const cli::Outcome own = cli::execute(text, std::nullopt, std::nullopt, cli::Format::Structured, VerifyLevel::Quick);
    EXPECT_EQ(Json::parse(own.out).at("relation"), "rho[1,2;1,1] + rho[1,2;2,2] = 0");
    const cli::Outcome over = run(text, "trace", "<1,3> 1");
    EXPECT_EQ(Json::parse(over.out).at("relation"), "rho[1,3;1,1] + rho[1,3;2,2] = 0");
    const cli::Outcome other = cli::execute(text, "spinal", std::nullopt, cli::Format::Structured, VerifyLevel::Quick);
    EXPECT_EQ(other.exit_code, 0) << other.err;
    const cli::Outcome same = cli::execute(text, "trace", std::nullopt, cli::Format::Structured, VerifyLevel::Quick);
    EXPECT_EQ(Json::parse(same.out).at("relation"), "rho[1,2;1,1] + rho[1,2;2,2] = 0");
}

TEST(Cli, ExampleJobsRun)
{
    std::size_t seen = 0;
    for (const auto &entry : std::filesystem::directory_iterator(std::filesystem::path(BBSYZ_EXAMPLES_DIR) / "jobs")) {
        if (entry.path().extension() != ".json") {
            continue;
        }
        ++seen;
        const cli::Outcome o =
            cli::execute(slurp(entry.path()), std::nullopt, std::nullopt, cli::Format::Structured, VerifyLevel::Quick);
        EXPECT_EQ(o.exit_code, 0) << entry.path() << o.err;
    }
    EXPECT_GE(seen, 5u);
}
