#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "uprod/errors.hpp"
#include "uprod/examples.hpp"
#include "uprod/io.hpp"

using namespace uprod;
using namespace uprod::io;
namespace fs = std::filesystem;

namespace {

const Field Q = Field::rationals();
const fs::path kData = UPROD_TEST_DATA_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string roundtrip(const std::string& text) { return serialize(parse(text)); }

/// Files produced by the serializer; everything else is hand-written.
bool written_by_serializer(const fs::path& p) {
  const std::string name = p.filename().string();
  return name.rfind("malformed_", 0) != 0 && name != "sweedler.json";
}

std::string trivial_datum_text() { return slurp(kData / "fixtures" / "trivial_datum.json"); }

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST(Golden, TrivialCoalgebra) {
  const std::string golden = slurp(kData / "golden" / "trivial_coalgebra.json");
  EXPECT_EQ(serialize(example("trivial-coalgebra")), golden);
  // Independent reading of the frozen file.
  const nlohmann::json j = nlohmann::json::parse(golden);
  EXPECT_EQ(j["kind"], "coalgebra");
  EXPECT_EQ(j["field"], "rational");
  EXPECT_EQ(j["payload"]["delta"]["entries"], nlohmann::json::parse(R"([[0,0,0,"1","1"]])"));
  EXPECT_EQ(j["payload"]["counit"]["entries"], nlohmann::json::parse(R"([[0,"1","1"]])"));
}

TEST(Golden, GroupAlgebraOfS3) {
  const std::string golden = slurp(kData / "golden" / "k_s3.json");
  EXPECT_EQ(serialize(example("k-s3")), golden);
  const Document doc = parse(golden);
  const Hopf& h = doc.as<Hopf>();
  const oracle::Table s3 = oracle::permutation_group({{1, 0, 2}, {1, 2, 0}});
  const Hopf expected = oracle::group_hopf(Q, s3);
  EXPECT_EQ(oracle::dense(h.bialgebra.algebra.mult), oracle::dense(expected.bialgebra.algebra.mult));
  EXPECT_EQ(oracle::dense(h.antipode), oracle::dense(expected.antipode));
  EXPECT_EQ(h.bialgebra.space().labels(), (std::vector<std::string>{"e", "(1 2)", "(0 1)", "(0 1 2)", "(0 2 1)", "(0 2)"}));
}

TEST(RoundTrip, EveryFixtureIsIdempotentAndCanonicalFilesAreExact) {
  std::size_t checked = 0;
  for (const char* dir : {"fixtures", "golden"})
    for (const auto& entry : fs::directory_iterator(kData / dir)) {
      if (entry.path().extension() != ".json") continue;
      const std::string name = entry.path().filename().string();
      if (name.rfind("malformed_", 0) == 0) continue;
      SCOPED_TRACE(name);
      const std::string text = slurp(entry.path());
      const std::string once = roundtrip(text);
      EXPECT_EQ(roundtrip(once), once);
      if (written_by_serializer(entry.path())) EXPECT_EQ(once, text);
      ++checked;
    }
  EXPECT_GE(checked, 15u);
}

TEST(RoundTrip, EveryExample) {
  for (const auto& name : example_names()) {
    if (name == "a6-group-level") continue;
    SCOPED_TRACE(name);
    const std::string text = serialize(example(name));
    EXPECT_EQ(roundtrip(text), text);
    EXPECT_EQ(parse(text).kind(), example(name).kind());
  }
}

TEST(RoundTrip, LargeGroupTable) {
  const std::string text = serialize(example("a6-group-level"));
  const Document doc = parse(text);
  EXPECT_EQ(doc.as<GroupTable>().order(), 360u);
  EXPECT_EQ(serialize(doc), text);
}

TEST(RoundTrip, FractionsNegativesAndPrimeFields) {
  const BasedSpace v({"a", "b"});
  LinMap f(Q, v, v, {{{0, Q.from_fraction(-3, 6)}, {1, Q.from_fraction(10, 4)}}, {{1, Q.from_int(-7)}}});
  const std::string text = serialize(Document{Q, f});
  EXPECT_NE(text.find(R"([0,0,"-1","2"])"), std::string::npos) << text;
  EXPECT_NE(text.find(R"([0,1,"5","2"])"), std::string::npos);
  EXPECT_NE(text.find(R"([1,1,"-7","1"])"), std::string::npos);
  EXPECT_EQ(oracle::dense(parse(text).as<LinMap>()), oracle::dense(f));
  EXPECT_EQ(roundtrip(text), text);

  const Field f7 = Field::prime(7);
  LinMap g(f7, v, v, {{{0, f7.from_int(-1)}}, {{0, f7.from_fraction(1, 2)}}});
  const std::string t7 = serialize(Document{f7, g});
  EXPECT_NE(t7.find(R"("field": "mod 7")"), std::string::npos);
  EXPECT_NE(t7.find(R"([0,0,"6","1"])"), std::string::npos);
  EXPECT_NE(t7.find(R"([1,0,"4","1"])"), std::string::npos);
  EXPECT_EQ(roundtrip(t7), t7);
  EXPECT_THROW(parse(replace_once(t7, R"([0,0,"6","1"])", R"([0,0,"9","1"])")), FormatError);
  EXPECT_THROW(parse(replace_once(t7, R"([0,0,"6","1"])", R"([0,0,"6","5"])")), FormatError);
}

TEST(RoundTrip, ReportsKeepWitnessesAndDetails) {
  Report r("conditions");
  r.add(CheckResult{"one", true, {}, ""});
  r.add(CheckResult{"two", false, {3, 1, 4}, "sides differ"});
  const std::string text = serialize(Document{Q, r});
  const Report back = parse(text).as<Report>();
  EXPECT_EQ(back.subject(), "conditions");
  ASSERT_EQ(back.checks().size(), 2u);
  EXPECT_EQ(back.checks()[1].witness, (std::vector<std::uint32_t>{3, 1, 4}));
  EXPECT_EQ(back.checks()[1].detail, "sides differ");
  EXPECT_EQ(roundtrip(text), text);
  // The summary flag follows the checks and must agree with them.
  std::string lying = text;
  const auto pos = lying.rfind(R"("passed": false)");
  ASSERT_NE(pos, std::string::npos);
  lying.replace(pos, 15, R"("passed": true )");
  EXPECT_THROW(parse(lying), FormatError);
}

TEST(RoundTrip, OptionalAntipodesStayAbsent) {
  Document doc = example("s3-bicrossed");
  MatchedPair mp = doc.as<MatchedPair>();
  mp.h_antipode.reset();
  const std::string text = serialize(Document{Q, mp});
  const MatchedPair back = parse(text).as<MatchedPair>();
  EXPECT_TRUE(back.a_antipode.has_value());
  EXPECT_FALSE(back.h_antipode.has_value());
  EXPECT_EQ(roundtrip(text), text);
}

TEST(RoundTrip, ParsedDatumMatchesOriginal) {
  const Document doc = example("a4-unified");
  const ExtendingDatum& d = doc.as<ExtendingDatum>();
  const ExtendingDatum back = parse(serialize(doc)).as<ExtendingDatum>();
  for (auto m : {&ExtendingDatum::dot, &ExtendingDatum::ract, &ExtendingDatum::lact, &ExtendingDatum::cocycle})
    EXPECT_EQ(oracle::dense(back.*m), oracle::dense(d.*m));
  EXPECT_EQ(back.unit_h, d.unit_h);
  EXPECT_EQ(back.a.space().labels(), d.a.space().labels());
  EXPECT_EQ(back.h.space.labels(), d.h.space.labels());
}

TEST(Parse, MalformedFixturesAreRejected) {
  std::size_t n = 0;
  for (const auto& entry : fs::directory_iterator(kData / "fixtures")) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("malformed_", 0) != 0) continue;
    SCOPED_TRACE(name);
    EXPECT_THROW(read_file(entry.path()), FormatError);
    ++n;
  }
  EXPECT_EQ(n, 6u);
}

TEST(Parse, RejectsStructuralProblems) {
  const std::string t = trivial_datum_text();
  ASSERT_NO_THROW(parse(t));
  // Zero coefficient, duplicate entry, extra key, dim mismatch, duplicate labels.
  EXPECT_THROW(parse(replace_once(t, R"([0,0,0,"1","1"])", R"([0,0,0,"0","1"])")), FormatError);
  EXPECT_THROW(parse(replace_once(t, R"([0,0,0,"1","1"])", R"([0,0,0,"1","1"],[0,0,0,"1","1"])")), FormatError);
  EXPECT_THROW(parse(replace_once(t, R"("kind":)", R"("extra": 1, "kind":)")), FormatError);
  EXPECT_THROW(parse(replace_once(t, R"("dim": 1)", R"("dim": 2)")), FormatError);
  EXPECT_THROW(parse(replace_once(t, R"([0,0,0,"1","1"])", R"([0,0,-1,"1","1"])")), FormatError);
  EXPECT_THROW(parse(replace_once(t, R"([0,0,0,"1","1"])", R"([0,0,0,"1","-1"])")), FormatError);
  EXPECT_THROW(parse(replace_once(t, R"([0,0,0,"1","1"])", R"([0,0,0,"1.5","1"])")), FormatError);
  EXPECT_THROW(parse(replace_once(t, R"([0,0,0,"1","1"])", R"([0,0,0,1,1])")), FormatError);
  EXPECT_THROW(parse(replace_once(t, R"("field": "rational")", R"("field": "mod 4")")), FormatError);
  const std::string g = serialize(Document{Q, GroupTable::cyclic(3)});
  EXPECT_THROW(parse(replace_once(g, "[0,1,2]", "[0,2,1]")), FormatError);
  const std::string c = slurp(kData / "fixtures" / "cocycle_c2_x.json");
  EXPECT_THROW(parse(replace_once(c, R"("H": ["0","1"])", R"("H": ["0","0"])")), FormatError);
}

TEST(Parse, ExpectKind) {
  const Document d = parse(trivial_datum_text());
  EXPECT_NO_THROW(expect_kind(d, {Kind::extending_datum}, "x"));
  EXPECT_THROW(expect_kind(d, {Kind::hopf, Kind::bialgebra}, "x"), FormatError);
  EXPECT_EQ(parse_kind("crossed-datum"), Kind::crossed_datum);
  EXPECT_THROW(parse_kind("monoid"), FormatError);
}
