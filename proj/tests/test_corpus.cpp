#include <doctest.h>

#include <fstream>

#include "multisecant/io.hpp"

using namespace msec;

namespace {

const std::string kData = MSEC_DATA_DIR;

Json load(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  return Json::parse(in);
}

bool same_ideal(const Ideal<Fp>& a, const std::vector<PolyP>& gens) {
  Ideal<Fp> b(a.ring(), gens);
  for (auto& g : gens)
    if (!contains(a, g)) return false;
  for (auto& g : a.generators())
    if (!contains(b, g)) return false;
  return true;
}

}  // namespace

TEST_CASE("every entry builds deterministically with its invariants") {
  for (auto& name : corpus_names()) {
    for (std::uint64_t seed : {1, 2, 3}) {
      auto e = build_entry(name, seed);
      CAPTURE(name);
      CAPTURE(seed);
      CHECK(e.seed >= seed);
      CHECK(e.variety.dimension() == e.expected.dimension);
      for (auto& g : e.variety.generators()) CHECK(g.total_degree() <= 3);
      for (auto& l : e.known_lines) CHECK(secant_length(e.variety, l) == kInfinite);
      CHECK(same_ideal(e.variety.ideal(), e.augmented));
      auto again = build_entry(name, seed);
      CHECK(again.seed == e.seed);
      CHECK(again.variety.generators() == e.variety.generators());
    }
  }
  CHECK_THROWS_AS(build_entry("no-such-variety", 1), DomainError);
}

TEST_CASE("graded pieces of known ideals") {
  // h_X(d) of the twisted cubic is 3d + 1 and of P1 x P2 is (d + 1)(d + 2)(d + 1)/2
  auto C = build_entry("twisted-cubic-curve", 1).variety;
  CHECK(graded_part_dimension(C.ideal(), 1) == 0);
  CHECK(graded_part_dimension(C.ideal(), 2) == 10 - 7);
  CHECK(graded_part_dimension(C.ideal(), 3) == 20 - 10);
  auto S = build_entry("segre-p1p2", 1).variety;
  CHECK(graded_part_dimension(S.ideal(), 2) == 21 - 18);
  CHECK(graded_part_dimension(S.ideal(), 3) == 56 - 40);
  auto B = build_entry("bordiga", 1).variety;
  CHECK(graded_part_dimension(B.ideal(), 2) == 0);
  CHECK(graded_part_dimension(B.ideal(), 3) == 4);
}

TEST_CASE("shipped expectations match the built-in table") {
  CHECK(load(kData + "/expectations.json") == expectations_table());
}

TEST_CASE("shipped variety files match the builders") {
  for (auto& name : corpus_names()) {
    auto doc = read_variety_file(kData + "/varieties/" + name + ".json", kDefaultPrime);
    auto e = build_entry(name, 1);
    CAPTURE(name);
    CHECK(doc.variety.ambient() == e.variety.ambient());
    CHECK(doc.variety.generators() == e.variety.generators());
    CHECK(doc.lines.size() == e.known_lines.size());
  }
}

TEST_CASE("variety documents round trip") {
  for (auto* name : {"segre-p1p2", "twisted-cubic-curve", "ci-2-3"}) {
    auto e = build_entry(name, 1);
    auto doc = read_variety(variety_json(e.variety, e.known_lines), kDefaultPrime);
    CHECK(doc.variety.generators() == e.variety.generators());
    REQUIRE(doc.lines.size() == e.known_lines.size());
    for (std::size_t i = 0; i < doc.lines.size(); ++i) CHECK(doc.lines[i] == e.known_lines[i]);
  }
}

TEST_CASE("entries meet their expectations") {
  // ci-3-3 takes about half a minute and runs in the acceptance suite
  for (auto& name : corpus_names()) {
    if (name == "ci-3-3") continue;
    auto r = check_entry(build_entry(name, 1));
    CAPTURE(name);
    CHECK(r.complete);
    for (auto& item : r.items) CHECK_MESSAGE(item.pass, item.what, ": expected ", item.expected, ", measured ", item.measured);
    CHECK(r.pass);
  }
}

TEST_CASE("a missing expectation is reported as a failure") {
  auto e = build_entry("quadric-3fold", 1);
  e.expected.fano_dimension = 2;
  auto r = check_entry(e, {{1}, false});
  CHECK_FALSE(r.pass);
}
