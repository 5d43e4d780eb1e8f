#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "spectre/serialize.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "spectre");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    int code = spectre::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, SpectrumOfBrieskorn)
{
    Result r = run({"spectrum", "--polygon", "[[2,3,1]]"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"mu\":2,\"spectrum\":[{\"alpha\":\"-1/6\",\"mult\":1},{\"alpha\":\"1/6\",\"mult\":1}]}\n");
}

TEST(Cli, HertlingStrict)
{
    Result r = run({"hertling", "--polygon", "[[1,2,2],[2,1,2]]"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = spectre::json::parse(r.out);
    EXPECT_EQ(j["variance"], "19/234");
    EXPECT_EQ(j["bound"], "1/12");
    EXPECT_EQ(j["verdict"], "strict");
}

TEST(Cli, ByteStable)
{
    Result a = run({"pairs", "--chain", "(1,2)[1,1]-(3,1)[1]"});
    Result b = run({"pairs", "--chain", "(1,2)[1,1]-(3,1)[1]"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, MilnorFourWays)
{
    Result r = run({"milnor", "--polygon", "[[1,2,2],[2,1,2]]"});
    ASSERT_EQ(r.code, 0);
    auto j = spectre::json::parse(r.out);
    EXPECT_EQ(j["mu"], 13);
    EXPECT_EQ(j["euler"], 13);
    EXPECT_EQ(j["polygon"], 13);
    EXPECT_EQ(j["kouchnirenko"], 13);
}

TEST(Cli, ConvertRoundTrip)
{
    Result d = run({"convert", "--polygon", "[[1,2,2],[3,1,1]]"});
    ASSERT_EQ(d.code, 0);
    auto j = spectre::json::parse(d.out);
    Result back = run({"convert", "--polygon", j["diagram"].dump()});
    ASSERT_EQ(back.code, 0) << back.err;
    EXPECT_EQ(spectre::json::parse(back.out)["faces"].dump(), "[[1,2,2],[3,1,1]]");
}

TEST(Cli, OracleBrieskorn)
{
    Result r = run({"oracle", "--brieskorn", "2", "5"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(spectre::json::parse(r.out)["mu"], 4);
}

TEST(Cli, ValidationErrorsExitOne)
{
    EXPECT_EQ(run({"spectrum", "--polygon", "[[2,4,1]]"}).code, 1);
    EXPECT_EQ(run({"spectrum", "--polygon", "[[2,3"}).code, 1);
    EXPECT_EQ(run({"nosuchcommand"}).code, 1);
    Result r = run({"spectrum", "--polygon", "{\"faces\":[[1,2]]}"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("faces"), std::string::npos);
}

TEST(Cli, TextFormat)
{
    Result r = run({"spectrum", "--polygon", "[[2,3,1]]", "--format", "text", "--decimal", "3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("-0.167"), std::string::npos);
    EXPECT_NE(r.out.find("mu"), std::string::npos);
}

TEST(Cli, VerifySmall)
{
    Result r = run({"verify", "--seed", "3", "--count", "10", "--depth", "2"});
    EXPECT_EQ(r.code, 0) << r.out;
    auto j = spectre::json::parse(r.out);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(j["families"]["polygon-spectrum"]["pass"], 10);
}
