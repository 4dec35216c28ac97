#include <catch_amalgamated.hpp>

#include <sstream>

#include "dehnlab/error.hpp"
#include "dehnlab/paperlab.hpp"
#include "dehnlab/parse.hpp"

using namespace dehnlab;

namespace {
  PaperRegistry const& registry() {
    static PaperRegistry reg;
    return reg;
  }

  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
  }
}  // namespace

TEST_CASE("registry") {
  auto const& reg = registry();
  CHECK(reg.group_names()
        == std::vector<std::string>{"free2", "k2", "k2xz", "k3", "surface2",
                                    "surface2_pow3", "z2", "z2w"});
  CHECK(kind_of([&] { reg.group("k4"); }) == ErrorKind::InvalidArgument);
  for (auto const& name : reg.group_names()) {
    auto const& e = reg.group(name);
    for (auto const& g : e.gens.elements) {
      CHECK(g.element.size() == e.ctx.factor_count());
      if (e.member) {
        CHECK(e.member(g.element));
      }
    }
  }
  auto const& p3 = reg.group("surface2_pow3");
  CHECK(p3.gens.elements.size() == 12);
  CHECK(p3.gens.elements[5].label == "b1_2");
}

TEST_CASE("tuples") {
  auto const&  k2 = registry().group("k2");
  TupleElement g  = parse_tuple("[a1,b2] | e", k2);
  CHECK(g == build_h_m(registry().surface(), 1, 2));
  CHECK(format_tuple(g, k2.alphabet) == "(a1 b2 a1^-1 b2^-1 | e)");
  CHECK(kind_of([&] { parse_tuple("a1", k2); }) == ErrorKind::FactorCountMismatch);
  CHECK(kind_of([&] { parse_tuple("a1 | x", k2); }) == ErrorKind::UnknownGenerator);
  CHECK(format_tuple(TupleElement{Word{}}, k2.alphabet) == "e");
}

TEST_CASE("w_m evaluates to h_m") {
  auto const& reg    = registry();
  auto const& d      = reg.amalgam();
  auto const& ctx    = reg.k3().ctx;
  Alphabet    labels = label_alphabet(d.all);
  CHECK(to_string(build_w_m(labels, 1), labels) == "ga gb ga^-1 gb^-1");
  for (std::int64_t m = 1; m <= 5; ++m) {
    CHECK(build_w_m(labels, m).size() == std::size_t(4 * m));
    CHECK(build_test_word(labels, m).size() == std::size_t(12 * m));
    CHECK(ctx.equal(evaluate(ctx, d.all, build_w_m(labels, m)),
                    build_h_m(reg.surface(), m, 3)));
  }
  CHECK(kind_of([&] { build_h_m(reg.surface(), 0, 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("u_i commute with h_m") {
  auto const& reg = registry();
  auto const& d   = reg.amalgam();
  auto const& ctx = reg.k3().ctx;
  for (std::int64_t m = 1; m <= 3; ++m) {
    TupleElement h = build_h_m(reg.surface(), m, 3);
    for (auto const& u : {d.u1, d.u2}) {
      CHECK(ctx.equal(ctx.multiply(u, h), ctx.multiply(h, u)));
    }
  }
}

TEST_CASE("retraction subgroup") {
  auto const& s = registry().surface();
  CHECK(in_retraction_subgroup(s, parse_word("a1 b2^3 a1^-2", s.alphabet)));
  CHECK(in_retraction_subgroup(s, parse_word("a1 [a1,b1][a2,b2] b2", s.alphabet)));
  CHECK_FALSE(in_retraction_subgroup(s, parse_word("a1 b1", s.alphabet)));
}

// Counted by hand: the identity, 8 words like a1 a2^-1 in either coordinate,
// and 16 letter pairs (x | y) with phi(x) = -phi(y). theta kills only
// even-length words, so radius 3 adds nothing.
TEST_CASE("kernel members of small ambient balls") {
  auto const& s  = registry().surface();
  auto const& k2 = registry().k2();
  Ball const  b  = ball(k2.ctx, standard_generators(s.alphabet, 2), 3);
  std::size_t at2 = 0, at3 = 0;
  for (std::uint32_t id = 0; id < b.table.size(); ++id) {
    if (k2.contains(b.table.element(id))) {
      ++at3;
      at2 += b.length[id] <= 2;
    }
  }
  CHECK(at2 == 33);
  CHECK(at3 == 33);
}

TEST_CASE("suite rows") {
  auto const&  reg = registry();
  SuiteProfile profile;
  for (int id : {4, 5, 7, 8, 11}) {
    auto row = run_criterion(reg, id, profile);
    INFO(row.measured);
    CHECK(row.status == "PASS");
  }
  CHECK(kind_of([&] { run_criterion(reg, 13, profile); }) == ErrorKind::InvalidArgument);

  profile.only = {11, 4};
  auto report  = verify_paper_suite(reg, profile);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].id == 4);
  CHECK(report.passed());
  CHECK_FALSE(report.any_inconclusive());
  CHECK(report.rows[1].values.at("exponent") == 6);

  std::ostringstream csv;
  write_report_csv(csv, report);
  CHECK(csv.str().rfind("id,description,expected,measured,status,seconds\n4,", 0) == 0);

  report.rows[0].status = "FAIL";
  CHECK_FALSE(report.passed());
}

TEST_CASE("randomized rows depend only on the seed") {
  auto const&  reg = registry();
  SuiteProfile profile;
  profile.seed = 7;
  std::map<std::string, std::string> a, b;
  auto r1 = run_criterion(reg, 2, profile, &a);
  auto r2 = run_criterion(reg, 2, profile, &b);
  CHECK(r1.status == "PASS");
  CHECK(r1.measured == r2.measured);
  CHECK(a == b);
}
