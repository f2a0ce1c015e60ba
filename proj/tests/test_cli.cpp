#include "staircase/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace staircase;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "staircase");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

const std::vector<std::string> kRates{"--alpha", "1/2", "--beta", "1/3", "--gamma", "1/5",
                                      "--delta", "1/7", "--q",    "1/11", "--u",    "1"};

std::vector<std::string> with_rates(std::vector<std::string> head)
{
    head.insert(head.end(), kRates.begin(), kRates.end());
    return head;
}

std::filesystem::path scratch(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("staircase_cli_" + name);
}

} // namespace

TEST_CASE("count, gf, enumerate")
{
    Run r = run({"count", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "384\n");

    r = run({"gf", "1"});
    CHECK(r.out == "a + b + g + d\n");

    r = run({"gf", "2", "--type", "11"});
    CHECK(r.out == "a^2 d + a^2 u + a b d + a g d + a d^2 + a d q + a d u + d^2 q\n");

    r = run({"gf", "2", "--type", "11", "--set-u-one"});
    CHECK(r.out.find('u') == std::string::npos);

    r = run({"enumerate", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("weight d") != std::string::npos);

    r = run({"--format", "json", "count", "2"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 32);
    CHECK(j["verified"] == true);
}

TEST_CASE("stationary and physical")
{
    Run r = run(with_rates({"stationary", "2"}));
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("11 200730/622549\n") != std::string::npos);
    CHECK(r.out.find("verdict equal") != std::string::npos);

    r = run(with_rates({"physical", "1"}));
    CHECK(r.out.find("current 29/247") != std::string::npos);

    r = run(with_rates({"--format", "json", "physical", "3", "--points", "1,3"}));
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "equal");
    CHECK(j["m_point"].get<std::string>().find('/') != std::string::npos);
    CHECK(j["bonds"].size() == 2);
}

TEST_CASE("verify, moments, biject")
{
    Run r = run({"verify", "--families", "I,II,III", "--max-len", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.ends_with("ok\n"));

    r = run({"moments", "--K", "6", "--a", "1/2", "--b", "1/3", "--c", "-1/5", "--d", "-1/7", "--q", "1/11"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.ends_with("equal\n"));

    r = run({"moments", "--K", "2", "--a", "1/2", "--b", "1/3", "--c", "-1/5", "--d", "-1/7", "--q", "1/11", "--u",
             "1/2"});
    CHECK(r.code == kExitUsage);

    r = run({"biject", "--from", "staircase", "--to", "perm"}, "7\n.b..a.a\n..a..a\n....b\n.b.a\n..b\n.b\na\n");
    CHECK(r.code == kExitOk);
    CHECK(r.out == "VVVHVHHV\n100\n001\n111\n01\n\n");

    r = run({"biject", "--from", "perm", "--to", "alt"}, r.out);
    CHECK(r.out == "VVHVHHV\n<.^\n.^.\n<.\n\n");

    r = run({"--format", "json", "biject", "--from", "staircase", "--to", "alt"}, "{\"size\":1,\"rows\":[\"a\"]}");
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["border"] == "V");
}

TEST_CASE("exit codes")
{
    CHECK(run({"count", "99"}).code == kExitCapacity);
    CHECK(run({"count", "x"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"gf", "2", "--type", "1"}).code != kExitOk);
    CHECK(run({"stationary", "2", "--alpha", "3/2"}).code == kExitCapacity);
    CHECK(run({"biject", "--from", "staircase", "--to", "perm"}, "1\ng\n").code == kExitCapacity);
    CHECK(run({"biject", "--from", "perm", "--to", "alt"}, "VH\n0\n").code == kExitUsage);
    const Run bad = run({"count", "99"});
    CHECK_FALSE(bad.err.empty());
    CHECK(bad.out.empty());
}

TEST_CASE("config file and output path")
{
    const auto cfg = scratch("config.json");
    const auto out = scratch("out.txt");
    {
        std::ofstream f(cfg);
        f << R"({"command": "physical", "n": 1, "params": {"alpha": "1/2", "beta": "1/3", "gamma": "1/5", "delta": "1/7", "q": "1/11"}})";
    }
    Run r = run({"--config", cfg.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("current 29/247") != std::string::npos);

    // the command line wins over the file
    r = run({"--config", cfg.string(), "physical", "1", "--gamma", "0", "--delta", "0"});
    CHECK(r.out.find("current 29/247") == std::string::npos);

    r = run({"--output", out.string(), "count", "2"});
    CHECK(r.out.empty());
    std::ifstream back(out);
    std::string line;
    std::getline(back, line);
    CHECK(line == "32");

    {
        std::ofstream f(cfg);
        f << R"({"bogus": 1})";
    }
    CHECK(run({"--config", cfg.string(), "count", "1"}).code == kExitUsage);
    std::filesystem::remove(cfg);
    std::filesystem::remove(out);
}

TEST_CASE("identical invocations give identical bytes")
{
    for (const auto& args : {std::vector<std::string>{"--format", "json", "gf", "3"},
                             with_rates({"--format", "json", "stationary", "3"}),
                             std::vector<std::string>{"verify", "--max-len", "2", "--threads", "2"}}) {
        const Run a = run(args), b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
