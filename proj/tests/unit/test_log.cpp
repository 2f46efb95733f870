#include "doctest.h"
#include "fmlog/errors.hpp"
#include "fmlog/log_calculus.hpp"
#include "fmlog/log_verify.hpp"

using namespace fmlog;

namespace {
BundleId b(int factor, Mask key) { return BundleId{factor, key}; }

// Expected rows of gamma_log for q = (1,1,2), written out from the pullback
// lemmas: outer factor 0 (T_2), inner factors 1 (T_2) and 2 (T_1).
std::map<Mask, std::pair<std::vector<Entry>, Section>> hand_rows_112() {
  return {
      {0b011, {{{b(0, 0b01), 1}, {b(1, 0b11), 1}}, Section::Zero}},  // fiber {1,2}
      {0b101, {{}, Section::Unit}},                                  // not nested
      {0b110, {{}, Section::Unit}},
      {0b111, {{{b(0, 0b11), 1}}, Section::Zero}},  // whole
      {0b001, {{{b(1, 0b01), 1}}, Section::Zero}},  // singleton in a fiber of size 2
      {0b010, {{{b(1, 0b10), 1}}, Section::Zero}},
      {0b100, {{{b(0, 0b10), 1}, {b(2, 0b1), 1}}, Section::Zero}},  // singleton fiber
  };
}
}  // namespace

TEST_SUITE("log") {
  TEST_CASE("structures") {
    const DFStructure t1 = structure_T(1);
    REQUIRE(t1.size() == 1u);
    CHECK(t1.bundles()[0].cls.empty());
    CHECK(t1.bundles()[0].section == Section::Zero);

    const DFStructure t2 = structure_T(2);
    REQUIRE(t2.size() == 3u);
    CHECK(t2.bundles()[0].id.key == 0b11);
    CHECK(t2.bundle(b(0, 0b01)).cls == LatticeVector{{b(0, 0b11), -1}});
    CHECK(t2.bundle(b(0, 0b10)).cls == LatticeVector{{b(0, 0b11), -1}});

    const DFStructure k3 = structure_K(3);
    REQUIRE(k3.size() == 4u);
    int divisors = 0, zeros = 0;
    for (const auto& x : k3.bundles()) (x.section == Section::Divisor ? divisors : zeros)++;
    CHECK(divisors == 3);
    CHECK(zeros == 1);
    CHECK(structure_K(1).size() == 0u);
  }

  TEST_CASE("universal classes") {
    CHECK(universal_class(3, 0b111) == LatticeVector{{b(0, 0b111), -1}});
    CHECK(universal_class(3, 0b011) == LatticeVector{{b(0, 0b011), -1}, {b(0, 0b111), -1}});
  }

  TEST_CASE("pullback classes for q = 1,1,2") {
    const Surjection q({1, 1, 2}, 2);
    CHECK(classify(q, 0b101) == PullbackCase::NotNested);
    CHECK(pullback_class(q, 0b101, Variant::Log).empty());
    CHECK(pullback_class(q, 0b111, Variant::Log) == LatticeVector{{b(0, 0b11), 1}});
    CHECK(pullback_class(q, 0b011, Variant::Log) == LatticeVector{{b(0, 0b11), -1}, {b(1, 0b11), 1}});
  }

  TEST_CASE("gamma_log rows against the hand oracle") {
    const Surjection q({1, 1, 2}, 2);
    const LogMorphism g = gamma_log(q);
    const auto hand = hand_rows_112();
    REQUIRE(g.rows().size() == hand.size());
    for (const auto& [key, expected] : hand) {
      CAPTURE(key);
      const LogRow& row = g.row(b(0, key));
      CHECK(row.entries == expected.first);
      CHECK(row.pulled == expected.second);
      CHECK(row_class(g, row) == pullback_class(q, key, Variant::Log));
    }
    CHECK(legality_df(g).ok);
  }

  TEST_CASE("gamma_vlog on the hard fiber row") {
    const Surjection q({1, 1, 2}, 2);
    const LogMorphism g = gamma_vlog(q);
    CHECK(g.row(b(0, 0b011)).entries == std::vector<Entry>{{b(0, 0b11), -1}, {b(1, 0b11), 1}});
    CHECK(legality_virtual(g).ok);
    const Legality df = legality_df(g);
    CHECK_FALSE(df.ok);
    REQUIRE(df.witness.has_value());
    CHECK(df.witness->row == b(0, 0b011));
  }

  TEST_CASE("identity and permutation morphisms") {
    for (Variant v : {Variant::Log, Variant::VLog}) {
      const LogMorphism g = gamma(Surjection::identity(3), v);
      // one exponent 1 on the outer factor; anything else sits on trivial T_1 bundles
      for (const auto& row : g.rows()) {
        long outer = 0;
        for (const auto& e : row.entries) {
          if (e.col.factor == 0) {
            outer += 1;
            CHECK(e.exp == 1);
          } else {
            CHECK(g.source().bundle(e.col).cls.empty());
          }
        }
        CHECK(outer == 1);
      }
      CHECK(legality_virtual(g).ok);
    }
    const DFStructure t3 = structure_T(3);
    const LogMorphism id = identity(t3);
    CHECK(legality_df(id).ok);
    CHECK(legality_virtual(id).ok);
    CHECK(sigma_log(Permutation::identity(3), t3) == id);
    const LogMorphism g = gamma_log(Surjection({1, 1, 2}, 2));
    CHECK(compose_morphisms(identity(g.target()), g) == g);
    CHECK(compose_morphisms(g, identity(g.source())) == g);
    CHECK_THROWS_AS(compose_morphisms(g, g), InvalidInput);
  }

  TEST_CASE("virtual unit") {
    const LogMorphism u = unit_vlog(Variant::Log);
    CHECK_FALSE(legality_df(u).ok);
    CHECK(legality_virtual(u).ok);
    CHECK(unit_vlog(Variant::VLog).target().size() == 0u);
  }

  TEST_CASE("exhaustive checks at small arity") {
    for (Variant v : {Variant::Log, Variant::VLog}) {
      LogVerifyOptions o;
      o.max_arity = 4;
      o.variant = v;
      for (const auto& c : verify_log_calculus(o).checks) CHECK_MESSAGE(c.ok, c.name << ": " << c.detail);
    }
  }

  TEST_CASE("strict unit search") {
    const StrictUnitSearch s = search_strict_unit(3);
    CHECK(s.candidates > 0);
    CHECK(s.df_legal_solutions == 0);
    CHECK(s.unit_solutions == s.virtual_legal_solutions);
  }
}
