/*
   Copyright 2026 The perpetuants authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace
{
struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = perpetuants::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}
} // namespace

TEST_CASE("verify prints a certificate")
{
    Result r = run({"verify", "4", "6", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["g"] == 6);
    CHECK(j["ok"] == true);
}

TEST_CASE("verify over a range streams json lines in order")
{
    Result serial = run({"verify", "3", "--gmax", "9", "--format", "json"});
    Result parallel = run({"verify", "3", "--gmax", "9", "--format", "json", "--jobs", "4"});
    CHECK(serial.code == 0);
    CHECK(serial.out == parallel.out);
    std::istringstream lines(serial.out);
    std::string line;
    int g = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["g"] == g++);
    }
    CHECK(g == 10);
}

TEST_CASE("stroh table")
{
    Result r = run({"stroh", "3", "--gmax", "9", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["coefficients"] == nlohmann::json::parse("[1,0,1,1,1,1,2]"));
}

TEST_CASE("bases")
{
    Result r = run({"basis", "3", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("U(0,1) = 3*a0^2*a3 - 3*a0*a1*a2 + a1^3") != std::string::npos);
    r = run({"basis", "1", "1", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).empty());
    r = run({"basis", "2", "2", "--primitive"});
    CHECK(r.out.find("2*a0*a2 - a1^2") != std::string::npos);
    r = run({"perpetuants", "4", "7", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).size() == 1);
}

TEST_CASE("other subcommands")
{
    CHECK(run({"dims", "4", "--gmax", "6"}).code == 0);
    Result q = run({"qn", "4"});
    CHECK(q.code == 0);
    CHECK(q.out.find("(4,2,1)") != std::string::npos);
    Result rel = run({"relations"});
    CHECK(rel.code == 0);
    CHECK(rel.out.find("FAIL") == std::string::npos);
    Result o = run({"oracle", "3", "6", "--format", "json"});
    CHECK(o.code == 0);
}

TEST_CASE("usage errors")
{
    Result r = run({"perpetuants", "2", "4"});
    CHECK(r.code == 2);
    CHECK(r.err.find("n >= 3") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"basis", "x", "3"}).code == 2);
    CHECK(run({"basis", "3"}).code == 2);
    CHECK(run({"qn", "2"}).code == 2);
    CHECK(run({"verify", "3", "4", "--format", "yaml"}).code == 2);
}

TEST_CASE("output is deterministic")
{
    CHECK(run({"basis", "4", "8"}).out == run({"basis", "4", "8"}).out);
    CHECK(run({"verify", "4", "--gmax", "10", "--jobs", "1"}).out ==
          run({"verify", "4", "--gmax", "10", "--jobs", "3"}).out);
}
