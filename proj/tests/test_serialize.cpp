#include "cli.hpp"

#include "mfc/replay.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace mfc;

TEST_CASE("json round trips") {
    CycNum x = CycNum::zeta(12, 5).scaled(qq(-3, 7)) + CycNum(2);
    CHECK(cyc_from_json(to_json(x)) == x);
    IntPoly g = IntPoly::parse("[1,-98,1029,-2401]");
    CHECK(to_json(g) == "[1,-98,1029,-2401]");
    CHECK(poly_from_json(to_json(g)) == g);
    ModularDatum md = sl2_condensation_A0(7);
    ModularDatum back = datum_from_json(to_json(md));
    CHECK(back.S == md.S);
    CHECK(back.twists == md.twists);
    CHECK(back.metadata == md.metadata);
    FusionRing fr = verlinde(md);
    CHECK(ring_from_json(to_json(fr)) == fr);
    SearchCertificate c = codegree_search(7, 3, 4);
    CHECK(to_json(certificate_from_json(to_json(c))) == to_json(c));
}

TEST_CASE("replay table") {
    std::set<std::string> ids;
    for (auto& r : replay_table()) {
        CHECK_FALSE(r.argument.empty());
        ids.insert(r.id);
    }
    CHECK(ids.size() == replay_table().size());
    CHECK_THROWS_AS(run_replay("nope"), std::invalid_argument);
    CHECK(run_replay("condensation-p5").verdict);
}

namespace {

int run(std::vector<std::string> args, std::string& out) {
    std::ostringstream o, e;
    int code = cli::run(args, o, e);
    out = o.str();
    return code;
}

}  // namespace

TEST_CASE("cli exit codes") {
    std::string out;
    CHECK(run({"verlinde", "--category", "sl2-a0:5"}, out) == cli::Ok);
    Json j = Json::parse(out);
    CHECK(ring_from_json(j["fusion_ring"]).rank == 4);
    CHECK(run({"check", "galois-symmetry", "--category", "sl2-a0:11"}, out) == cli::Ok);
    CHECK(run({"check", "d-number", "--poly", "[1,-3,4]"}, out) == cli::VerdictFalse);
    CHECK(run({"check", "cyclotomic", "--poly", "[1,-49,686,-2401]", "--p", "7"}, out) == cli::Ok);
    CHECK(run({"construct", "--category", "bogus"}, out) == cli::UsageError);
    CHECK(run({"frobnicate"}, out) == cli::UsageError);
    CHECK(run({"check", "sl2z"}, out) == cli::UsageError);
    CHECK(run({"search", "--p", "9", "--degree", "1", "--norm-exp", "1"}, out) == cli::UsageError);
    CHECK(run({"replay", "--lemma", "nope"}, out) == cli::UsageError);
    CHECK(run({"replay", "--list"}, out) == cli::Ok);
}

TEST_CASE("cli output is deterministic") {
    std::string a, b;
    run({"search", "--p", "7", "--degree", "3", "--norm-exp", "4"}, a);
    run({"search", "--p", "7", "--degree", "3", "--norm-exp", "4", "--threads", "2"}, b);
    CHECK(a == b);
    run({"codegrees", "--category", "sl2-a0:7", "--format", "text"}, a);
    run({"codegrees", "--category", "sl2-a0:7", "--format", "text"}, b);
    CHECK(a == b);
    CHECK(a.find("class_equation: true") != std::string::npos);
}
