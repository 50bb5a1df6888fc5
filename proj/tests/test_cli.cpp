#include <doctest.h>

#include <cstdlib>

#include "pairlat/cache.hpp"
#include "pairlat/jsonio.hpp"

using namespace pairlat;

TEST_CASE("rational serialization") {
    CHECK(rat(5, 8).str() == "5/8");
    CHECK(rat(-10, 4).str() == "-5/2");
    CHECK(Rat(7).str() == "7");
    CHECK(*Rat::parse("13/7") == rat(13, 7));
    CHECK(*Rat::parse("-3") == Rat(-3));
    CHECK(!Rat::parse("1/0"));
    CHECK(!Rat::parse("x"));
}

TEST_CASE("configuration json round trip") {
    Configuration cfg = make_configuration(5, {{2, 0, 3}, {0, 5, 0}}, {0});
    json j = to_json(cfg);
    Configuration back = configuration_from_json(j);
    CHECK(back.d == cfg.d);
    CHECK(back.curve == cfg.curve);
    CHECK(back.line == cfg.line);
    CHECK(j.dump() == to_json(back).dump());
}

TEST_CASE("pair json") {
    json j;
    j["d"] = 5;
    j["curve"] = json::array({json::array({2, 0, 3}), json::array({0, 5, 0})});
    j["line"] = "x0";
    PairInput p = pair_from_json(j);
    CHECK(p.line == 0);
    CHECK(p.curve.size() == 2);
    CHECK(diagonal_interval(p.d, p.curve, p.line) ==
          StabilityInterval::closed(rat(5, 8), rat(5, 8)));
}

TEST_CASE("gram json") {
    json j = json::parse("[[0,1],[1,0]]");
    GramLattice L = gram_from_json(j);
    CHECK(L.det() == -1);
    CHECK_THROWS(gram_from_json(json::parse("[[0,1],[2,0]]")));
}

TEST_CASE("wall report json is byte identical across runs") {
    auto a = to_json(candidate_walls(3)).dump(2);
    auto b = to_json(candidate_walls(3)).dump(2);
    CHECK(a == b);
}

TEST_CASE("cache stores and replays payloads") {
    setenv("PAIRLAT_CACHE_DIR", "/tmp/pairlat-test-cache", 1);
    Cache cache(true);
    REQUIRE(cache.enabled());
    std::string key = "unit-test-key";
    cache.put(key, "{\"x\": 1}");
    auto hit = cache.get(key);
    REQUIRE(hit);
    CHECK(*hit == "{\"x\": 1}");
    Cache disabled(false);
    CHECK(!disabled.get(key));
    unsetenv("PAIRLAT_CACHE_DIR");
}

TEST_CASE("fingerprint is stable") {
    CHECK(Cache::fingerprint("walls:v1:d=5") == Cache::fingerprint("walls:v1:d=5"));
    CHECK(Cache::fingerprint("a") != Cache::fingerprint("b"));
}

TEST_CASE("cache transparency of the walls command") {
    const char* bin = std::getenv("PAIRTOOL_BIN");
    if (!bin) return;  // standalone run without the tool available
    auto capture = [&](const std::string& args) {
        std::string cmd = std::string(bin) + " " + args;
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe);
        std::string out;
        char buf[4096];
        while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
        pclose(pipe);
        return out;
    };
    setenv("PAIRLAT_CACHE_DIR", "/tmp/pairlat-test-cache-walls", 1);
    std::string cold = capture("walls --degree 3 --json --no-cache");
    std::string warm1 = capture("walls --degree 3 --json");
    std::string warm2 = capture("walls --degree 3 --json");
    CHECK(cold == warm1);
    CHECK(warm1 == warm2);
    unsetenv("PAIRLAT_CACHE_DIR");
}
