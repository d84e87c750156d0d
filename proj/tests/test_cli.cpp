#include <sstream>

#include "doctest.h"
#include "hallkit/cli.hpp"
#include "hallkit/json_io.hpp"
#include "support.hpp"

using namespace hallkit;

namespace {

RatPoly poly(std::vector<Rational> c) { return RatPoly(std::move(c)); }

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    args.insert(args.begin(), "--quiet");
    const int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> json_lines(const std::string& s) {
    std::vector<Json> out;
    std::istringstream ss(s);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) out.push_back(Json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("json round trips") {
    auto f4 = make_field(2, 2);
    auto f3 = make_field(3, 1);
    CHECK(*field_from_json(field_to_json(*f4)) == *f4);
    for (int a = 0; a < 4; ++a) CHECK(fel_from_json(*f4, fel_to_json(*f4, static_cast<Fel>(a))) == a);
    CHECK(fel_from_json(*f3, Json(2)) == 2);
    CHECK_THROWS_AS(fel_from_json(*f4, Json(1)), InputError);
    CHECK_THROWS_AS(fel_from_json(*f3, Json(3)), InputError);

    for (const auto& q : {Quiver::jordan(), Quiver::kronecker(), Quiver::cyclic(3), Quiver(3, {{0, 1}, {2, 1}})})
        CHECK(quiver_from_json(quiver_to_json(q)) == q);

    auto reps = {kronecker_preset(KroneckerKind::Preprojective, 1, f4), jordan_module(f3, {2, 1}, FPoly{{1, 1}}),
                 Rep::zero(share(Quiver::linear(3)), f3, {0, 2, 1})};
    for (const auto& m : reps) {
        const Rep back = rep_from_json(parse_json(rep_to_json(m).dump(), "rep"));
        CHECK(back == m);
    }

    const RatPoly p(std::vector<Rational>{Rational(1, 2), 0, Rational(-3, 4)});
    CHECK(ratpoly_from_json(ratpoly_to_json(p)) == p);
    CHECK(ratpoly_from_json(ratpoly_to_json(p)["coeffs"]) == p);
    CHECK(ratpoly_from_json(ratpoly_to_json(RatPoly{})).is_zero());

    const SegreSymbol s = make_segre({{{2, 1}, 1}, {{1}, 3}, {{2, 1}, 1}});
    CHECK(segre_from_json(segre_to_json(s)) == s);
    const DecompSymbol d = make_decomp({0, 2}, {1}, s);
    CHECK(decomp_from_json(decomp_to_json(d)) == d);
    const DiscreteClass c{"cyclic2", {{0, 2}, {1, 1}}};
    const DiscreteClass cb = discrete_from_json(discrete_to_json(c));
    CHECK(cb.preset == c.preset);
    CHECK(cb.labels == c.labels);

    const CheckReport r = make_report("green", "q=2 x", Rational(3, 2), Rational(3, 2));
    const CheckReport rb = report_from_json(report_to_json(r));
    CHECK(rb.identity == r.identity);
    CHECK(rb.instance == r.instance);
    CHECK(rb.lhs == r.lhs);
    CHECK(rb.pass);
}

TEST_CASE("json readers reject malformed input") {
    CHECK_THROWS_AS(parse_json("{", "x"), InputError);
    CHECK_THROWS_AS(field_from_json(Json{{"p", 4}}), InputError);
    CHECK_THROWS_AS(quiver_from_json(Json{{"vertices", 2}, {"arrows", {{0, 5}}}}), InputError);
    CHECK_THROWS_AS(segre_from_json(Json::parse("[[[1], 0]]")), InputError);
    CHECK_THROWS_AS(segre_from_json(Json::parse("[[1, 1]]")), InputError);
    CHECK_THROWS_AS(partition_from_json(Json::parse("[1, -1]")), InputError);
    Json rep = rep_to_json(kronecker_preset(KroneckerKind::Preprojective, 0, make_field(2, 1)));
    rep["mats"][0] = Json::parse("[[1, 1]]");
    CHECK_THROWS_AS(rep_from_json(rep), InputError);
    Json bad_report = report_to_json(make_report("x", "y", 1, 2));
    bad_report["pass"] = true;
    CHECK_THROWS_AS(report_from_json(bad_report), InputError);
}

TEST_CASE("cli classify emits a table that reads back") {
    auto r = call({"classify", "--quiver", "kronecker", "--q", "2", "--dims", "[1,1]"});
    REQUIRE(r.code == 0);
    Json t = Json::parse(r.out);
    CHECK(t["classes"].size() == 4);
    for (const auto& c : t["classes"]) CHECK_NOTHROW(rep_from_json(c["rep"]));
    CHECK(t["group_order"] == "1");
    auto again = call({"classify", "--quiver", "kronecker", "--q", "2", "--dims", "[1,1]"});
    CHECK(again.out == r.out);
}

TEST_CASE("cli hall and grassmannian") {
    auto f2 = make_field(2, 1);
    const std::string i0 = rep_to_json(kronecker_preset(KroneckerKind::Preinjective, 0, f2)).dump();
    const std::string p0 = rep_to_json(kronecker_preset(KroneckerKind::Preprojective, 0, f2)).dump();
    const Rep reg = kronecker_regular({1}, KPoint{true, {}}, f2);
    const std::string rj = rep_to_json(reg).dump();
    auto r = call({"hall", i0, p0, "-"}, rj);
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["F"] == "1");
    CHECK(j["a_X"] == "1");
    CHECK(j["P"] == "1");

    const std::string p2 = rep_to_json(kronecker_preset(KroneckerKind::Preprojective, 2, f2)).dump();
    auto g = call({"grassmannian", p2, "[0,1]"});
    REQUIRE(g.code == 0);
    CHECK(Json::parse(g.out)["count"] == "7");

    CHECK(call({"hall", i0, p0, "-", "extra"}).code == 2);
    CHECK(call({"hall", i0, p0, "{\"quiver\":"}).code == 2);
    const std::string j0 = rep_to_json(jordan_module(f2, {1}, FPoly{{0, 1}})).dump();
    CHECK(call({"hall", i0, p0, j0}).code == 2);
}

TEST_CASE("cli polynomials") {
    auto r = call({"hallpoly", "--classical", "[1,1]", "[1]", "[1,1,1]"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["poly"]["human"] == "T^2+T+1");
    CHECK(ratpoly_from_json(j["poly"]) == poly({1, 1, 1}));
    CHECK(j["integer"] == true);

    auto d = call({"hallpoly", "--discrete", R"({"quiver":"a2","labels":[[1,0]]})", R"({"quiver":"a2","labels":[[0,1]]})",
                   R"({"quiver":"a2","labels":[[1,1]]})"});
    REQUIRE(d.code == 0);
    CHECK(Json::parse(d.out)["poly"]["human"] == "1");

    auto s = call({"segre", "[[[1,1],1],[[1,1,1],1],[[2,1],1]]", "[[[1],1],[[1],1]]",
                   "[[[1,1,1],1],[[2,1,1],1],[[2,1],1]]"});
    REQUIRE(s.code == 0);
    Json sj = Json::parse(s.out);
    CHECK(sj["F"]["human"] == "2T^2+2T+1");
    CHECK(ratpoly_from_json(sj["n"]["sigma"]) == poly({0, Rational(-1, 2), Rational(1, 2)}));

    auto c = call({"segre", "[[[1],1]]", "[[[1],1]]", "[[[2],1]]", "--check", "--q", "2", "--q", "3"});
    REQUIRE(c.code == 0);
    Json cj = Json::parse(c.out);
    CHECK(cj["failures"] == 0);
    CHECK(!cj["reports"].empty());

    auto k = call({"decomp", R"({"regular":[[[1],1],[[1],1]]})", R"({"P":[0]})", R"({"P":[2]})"});
    REQUIRE(k.code == 0);
    Json kj = Json::parse(k.out);
    CHECK(ratpoly_from_json(kj["poly"]) == poly({0, Rational(1, 2), Rational(1, 2)}));
    CHECK(kj["integer"] == false);

    CHECK(call({"hallpoly", "[1]", "[1]", "[2]"}).code == 2);
    CHECK(call({"hallpoly", "--classical", "[1]", "[1]", "[0]"}).code == 2);
}

TEST_CASE("cli verify and example") {
    auto g = call({"verify", "--identity", "green", "--quiver", "jordan", "--q", "2", "--max-dim", "2"});
    REQUIRE(g.code == 0);
    auto lines = json_lines(g.out);
    REQUIRE(lines.size() > 1);
    CHECK(lines.back()["failures"] == 0);
    CHECK(lines.back()["instances"] == lines.size() - 1);
    for (size_t i = 0; i + 1 < lines.size(); ++i) CHECK(report_from_json(lines[i]).pass);

    auto again = call({"verify", "--identity", "green", "--quiver", "jordan", "--q", "2", "--max-dim", "2"});
    CHECK(again.out == g.out);

    for (const std::string id : {"assoc", "riedtmann", "tables"})
        CHECK(call({"verify", "--identity", id, "--quiver", "a2", "--dims", "[1,1]"}).code == 0);
    CHECK(call({"verify", "--identity", "defect", "--quiver", "kronecker", "--max-dim", "1"}).code == 0);
    CHECK(call({"verify", "--identity", "euler", "--quiver", "kronecker", "--trials", "5"}).code == 0);
    CHECK(call({"verify", "--identity", "torsion", "--q", "2"}).code == 0);
    CHECK(call({"verify", "--identity", "kronecker-regular", "--q", "2"}).code == 0);

    auto e = call({"example", "--q", "3", "--failures-only"});
    REQUIRE(e.code == 0);
    auto el = json_lines(e.out);
    REQUIRE(el.size() == 2);
    CHECK(el[0]["failures"] == 0);
    CHECK(el[1]["sum_over_R_S"] == "25/1");
    CHECK(el[1]["sum_over_S_T"] == "25/1");
    CHECK(el[1]["sum_over_R_T"] == "50/1");
}

TEST_CASE("cli exit codes") {
    CHECK(call({}).code == 2);
    CHECK(call({"nonsense"}).code == 2);
    CHECK(call({"verify", "--identity", "nonsense"}).code == 2);
    CHECK(call({"verify", "--identity", "green", "--q", "6"}).code == 2);
    CHECK(call({"verify", "--identity", "green", "--quiver", "bogus"}).code == 2);
    CHECK(call({"example", "--q", "2"}).code == 2);
    auto b = call({"--max-subspaces", "3", "verify", "--identity", "green", "--quiver", "jordan", "--max-dim", "3"});
    CHECK(b.code == 2);
    CHECK(b.err.find("budget") != std::string::npos);
    auto h = call({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("verify") != std::string::npos);
}
