#include <gtest/gtest.h>

#include <string>

#include <nlohmann/json.hpp>
#include <tia/serialize.hpp>

using namespace tia;
using nlohmann::json;

namespace {

// Runs the parser and returns the error text, failing if it succeeds.
template <typename F>
std::string capture_parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  ADD_FAILURE() << "expected ParseError";
  return {};
}

}  // namespace

TEST(Serialize, ChainRoundTrip) {
  Chain c{Lattice1D{rat(1, 2), std::nullopt}};
  c.add(Gen1D::point(-3, {1, 0}), rat(-1, 6));
  c.add(Gen1D::interval(0, 2, {2, 5}), rat(7));
  c.add(Gen1D::infinitesimal(4), rat(3, 4));
  EXPECT_EQ(chain_from_json(to_json(c)), c);
}

TEST(Serialize, PeriodicChainRoundTrip) {
  Chain c{Lattice1D{rat(1), 8}};
  c.add(Gen1D::interval(6, 9, {0, 1}), rat(2, 3));  // wraps: canonical a=6, b=9
  const json j = to_json(c);
  EXPECT_EQ(j["lattice"]["period"], 8);
  EXPECT_EQ(chain_from_json(j), c);
}

TEST(Serialize, EmptyChainRoundTrip) {
  const Chain c{Lattice1D{}};
  const json j = to_json(c);
  EXPECT_TRUE(j["terms"].is_array());
  EXPECT_TRUE(j["terms"].empty());
  EXPECT_EQ(chain_from_json(j), c);
}

TEST(Serialize, TensorChainRoundTrip) {
  const LatticeD lat{rat(1), {3L, std::nullopt, 3L}};
  ChainD c{lat};
  c.add(GenD{{Gen1D::point(1), Gen1D::interval(-2, 0, {1, 1}), Gen1D::infinitesimal(2)}},
        rat(-1, 6));
  const json j = to_json(c);
  ASSERT_TRUE(j["lattice"].contains("periods"));
  EXPECT_TRUE(j["lattice"]["periods"][1].is_null());
  EXPECT_EQ(chain_d_from_json(j), c);
}

TEST(Serialize, VariantDetectsDimension) {
  Chain c1{Lattice1D{}};
  c1.add(Gen1D::point(0), rat(1));
  const auto v1 = any_chain_from_json(to_json(c1));
  EXPECT_TRUE(std::holds_alternative<Chain>(v1));

  ChainD cd{LatticeD{rat(1), {std::nullopt, std::nullopt}}};
  cd.add(GenD{{Gen1D::point(0), Gen1D::point(1)}}, rat(1));
  const auto v2 = any_chain_from_json(to_json(cd));
  EXPECT_TRUE(std::holds_alternative<ChainD>(v2));
}

TEST(SerializeErrors, NameTheOffendingField) {
  json j = to_json([] {
    Chain c{Lattice1D{}};
    c.add(Gen1D::interval(0, 1), rat(1));
    return c;
  }());

  {
    json bad = j;
    bad["terms"][0]["gen"].erase("b");
    const auto msg =
        capture_parse_error([&] { chain_from_json(bad); });
    EXPECT_NE(msg.find("terms[0].gen.b"), std::string::npos) << msg;
  }
  {
    json bad = j;
    bad["terms"][0]["gen"]["kind"] = "segment";
    const auto msg = capture_parse_error([&] { chain_from_json(bad); });
    EXPECT_NE(msg.find("kind"), std::string::npos) << msg;
  }
  {
    json bad = j;
    bad["terms"][0]["gen"]["m"] = -1;
    const auto msg = capture_parse_error([&] { chain_from_json(bad); });
    EXPECT_NE(msg.find("terms[0].gen.m"), std::string::npos) << msg;
  }
  {
    json bad = j;
    bad["terms"][0]["coeff"] = "1/0";
    const auto msg = capture_parse_error([&] { chain_from_json(bad); });
    EXPECT_NE(msg.find("terms[0].coeff"), std::string::npos) << msg;
  }
  {
    json bad = j;
    bad["terms"][0]["coeff"] = 0.5;  // numbers are not exact; the format wants strings
    const auto msg = capture_parse_error([&] { chain_from_json(bad); });
    EXPECT_NE(msg.find("coeff"), std::string::npos) << msg;
  }
  {
    json bad = j;
    bad["lattice"]["period"] = 2;
    const auto msg = capture_parse_error([&] { chain_from_json(bad); });
    EXPECT_NE(msg.find("lattice"), std::string::npos) << msg;
  }
  {
    json bad = j;
    bad.erase("lattice");
    const auto msg = capture_parse_error([&] { chain_from_json(bad); });
    EXPECT_NE(msg.find("lattice"), std::string::npos) << msg;
  }
}

TEST(SerializeErrors, TensorFactorCountMustMatchAxes) {
  const LatticeD lat{rat(1), {std::nullopt, std::nullopt}};
  ChainD c{lat};
  c.add(GenD{{Gen1D::point(0), Gen1D::point(0)}}, rat(1));
  json bad = to_json(c);
  bad["terms"][0]["factors"].erase(1);
  const auto msg = capture_parse_error([&] { chain_d_from_json(bad); });
  EXPECT_NE(msg.find("factors"), std::string::npos) << msg;
}

TEST(SerializeErrors, IllegalGeometryIsAParseError) {
  json j = to_json([] {
    Chain c{Lattice1D{}};
    c.add(Gen1D::interval(0, 1), rat(1));
    return c;
  }());
  j["terms"][0]["gen"]["b"] = 0;  // interval needs a < b
  EXPECT_THROW(chain_from_json(j), ParseError);
}
