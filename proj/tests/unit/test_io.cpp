#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "kmforms/errors.hpp"
#include "kmforms/io.hpp"
#include "kmforms/theta.hpp"

using namespace kmforms;
namespace fs = std::filesystem;

namespace {

SiegelCoefficientTable small_table() {
  SiegelCoefficientTable t;
  t.form = "sample";
  t.unit = kUnitPiI;
  t.truncation = {TruncationKind::kTrace, 6};
  t.set({1, 1, 1}, 64);
  t.set({1, -1, 1}, -64);
  t.set({3, 1, 1}, Rational(-1, 252));
  return t;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("kmforms_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST(Io, JsonLayout) {
  const std::string text = serialize(small_table(), Format::kJson);
  EXPECT_NE(text.find("[1,-1,1,\"-64\"]"), std::string::npos);
  EXPECT_NE(text.find("[3,1,1,\"-1/252\"]"), std::string::npos);
  EXPECT_NE(text.find("\"unit\": \"" + kUnitPiI.name() + "\""), std::string::npos);
  // rows sorted by (n, l, m)
  EXPECT_LT(text.find("[1,-1,1"), text.find("[1,1,1"));
}

TEST(Io, CsvLayout) {
  const std::string text = serialize(small_table(), Format::kCsv);
  EXPECT_EQ(text.rfind("# form=sample\n", 0), 0u);
  EXPECT_NE(text.find("# truncation=trace:6\nn,l,m,c\n"), std::string::npos);
  EXPECT_NE(text.find("1,1,1,64\n"), std::string::npos);
}

TEST(Io, RoundTripIsBitExact) {
  const auto t = delta5(10);
  for (auto f : {Format::kJson, Format::kCsv}) {
    const std::string a = serialize(t, f);
    const auto back = parse_table(a, f);
    EXPECT_EQ(back.entries, t.entries);
    EXPECT_EQ(back.unit, t.unit);
    EXPECT_EQ(back.truncation, t.truncation);
    EXPECT_EQ(serialize(back, f), a);
  }
}

TEST(Io, ParseErrorsCarryLines) {
  try {
    parse_table("# form=x\n# unit=" + kUnitPiI.name() + "\n# truncation=trace:2\nn,l,m,c\n1,1,1,64\n1,1,x,2\n",
                Format::kCsv);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 6);
    EXPECT_EQ(e.offset(), 4);
  }
  try {
    parse_table("{\"form\": \"x\",\n \"unit\": }", Format::kJson);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_table("{\"form\": \"x\"}", Format::kJson), ParseError);
  EXPECT_THROW(parse_table("1,1,1,2\n", Format::kCsv), ParseError);
}

TEST(Io, FormatSelection) {
  EXPECT_EQ(format_for_path("a/b.csv"), Format::kCsv);
  EXPECT_EQ(format_for_path("t.json"), Format::kJson);
  EXPECT_THROW(format_for_path("t.txt"), DomainError);
  EXPECT_THROW(parse_format("xml"), DomainError);
}

TEST(Io, SaveLoadAndUnit) {
  TempDir d;
  const auto t = small_table();
  save_table(t, d.path / "t.csv", Format::kCsv);
  EXPECT_EQ(load_table(d.path / "t.csv").entries, t.entries);
  EXPECT_NO_THROW(require_unit(t, kUnitPiI));
  EXPECT_THROW(require_unit(t, kUnitOrthogonal), ConfigurationError);
}

TEST(Io, CacheServesSmallerBoundsAndKeepsLarger) {
  TempDir d;
  const TableCache cache(d.path);
  int calls = 0;
  auto compute = [&](const Truncation& t) {
    ++calls;
    return delta5(t);
  };
  const Truncation big{TruncationKind::kTrace, 12}, small{TruncationKind::kTrace, 8};
  const auto a = cache.get_or_compute("delta5", kUnitPiI, big, compute);
  const auto b = cache.get_or_compute("delta5", kUnitPiI, small, compute);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(b.truncation, small);
  EXPECT_EQ(b.entries, delta5(8).entries);
  cache.store(delta5(6));
  EXPECT_TRUE(cache.lookup("delta5", kUnitPiI, big).has_value());
  EXPECT_FALSE(cache.lookup("delta5", kUnitPiI, Truncation{TruncationKind::kTrace, 14}).has_value());
  EXPECT_FALSE(cache.lookup("delta5", kUnitPiI, Truncation{TruncationKind::kLambda, 2}).has_value());
  const auto key = cache.key_path("delta5", kUnitPiI, TruncationKind::kTrace).filename().string();
  EXPECT_NE(key.find(std::string("v") + library_version()), std::string::npos);
  EXPECT_EQ(a.entries, delta5(12).entries);
}

TEST(Io, CorruptCacheFileIsAMiss) {
  TempDir d;
  const TableCache cache(d.path);
  std::ofstream(cache.key_path("delta5", kUnitPiI, TruncationKind::kTrace)) << "garbage";
  const Truncation t{TruncationKind::kTrace, 4};
  EXPECT_FALSE(cache.lookup("delta5", kUnitPiI, t).has_value());
  cache.get_or_compute("delta5", kUnitPiI, t, [](const Truncation& x) { return delta5(x); });
  EXPECT_TRUE(cache.lookup("delta5", kUnitPiI, t).has_value());
}

TEST(Io, DefaultDirHonoursEnvironment) {
  ::setenv("KMFORMS_CACHE", "/tmp/kmforms-env-test", 1);
  EXPECT_EQ(TableCache::default_dir(), fs::path("/tmp/kmforms-env-test"));
  ::unsetenv("KMFORMS_CACHE");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  EXPECT_EQ(TableCache::default_dir(), fs::path("/tmp/xdg/kmforms"));
}
