#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "frobsyz/errors.hpp"
#include "frobsyz/syzygy_search.hpp"

namespace frobsyz {
namespace {

using testing::cyclic;
using testing::poly;
using testing::residue_field;

template <typename F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;  // sentinel: no throw
}

const SyzygyRecord& at(const CheckResult& r, int index) {
  for (const auto& s : r.syzygies) {
    if (s.index == index) return s;
  }
  throw std::out_of_range("no record");
}

TEST(IndependentDimension, AgreesWithEngine) {
  for (const auto& r : {testing::e1_ring(), testing::z_ring(), testing::node_ring()}) {
    for (int i = 1; i <= 3; ++i) {
      const auto syz = syzygy_module(cyclic(r, {"y"}), i);
      EXPECT_EQ(independent_dimension(syz), syz.dimension());
    }
  }
}

TEST(Parameters, ChoosesYOverE1) {
  const auto r = testing::e1_ring();
  const auto choice = choose_parameters(r, 1);
  ASSERT_EQ(choice.elements.size(), 1u);
  EXPECT_EQ(choice.elements[0], poly(r->ambient(), "y"));
  EXPECT_TRUE(choice.certified());
  const auto x = certify_parameters(r, {poly(r->ambient(), "x")});
  EXPECT_FALSE(x.system_of_parameters);
  EXPECT_FALSE(x.annihilator_is_h0[0]);
}

TEST(Parameters, RegularRingAcceptsAnyRegularSequence) {
  const auto r = testing::plane();
  const auto choice = choose_parameters(r, 2);
  EXPECT_TRUE(choice.certified());
  EXPECT_EQ(choice.degrees, (std::vector<std::uint64_t>{2, 2}));
}

TEST(Parameters, PostConditionsHoldOnZRing) {
  const auto r = testing::z_ring();
  for (unsigned n = 1; n <= 3; ++n) {
    const auto choice = choose_parameters(r, n, 64, n);
    ASSERT_EQ(choice.elements.size(), 2u);
    EXPECT_EQ(krull_dimension(r->extend(choice.elements)), 0);
    for (const auto& x : choice.elements) EXPECT_EQ(annihilator_of(*r, x), r->torsion_ideal());
  }
}

TEST(Parameters, ExhaustedSearch) {
  // Both variables are zerodivisors on F_2[x,y]/(xy); with no random tries
  // nothing else is offered.
  const auto r = testing::quotient(2, {"x", "y"}, {"x*y"});
  EXPECT_EQ(error_kind([&] { choose_parameters(r, 1, 0); }), ErrorKind::SearchExhausted);
}

TEST(GoodColength, E1SecondSyzygy) {
  const auto r = testing::e1_ring();
  const auto m = cyclic(r, {"y"});
  const auto good = find_good_colength_ideal(m, 1, 8);
  EXPECT_LE(good.n, 4u);
  EXPECT_EQ(good.syzygy_length, 1u);
  EXPECT_EQ(good.sigma, 1);
  EXPECT_EQ(good.sigma_next, 1);
  EXPECT_EQ(good.tor_next, 0u);
  const auto tor = tor_table(m, testing::maximal_power_quotient(r, good.n), 2);
  EXPECT_EQ(tor.lengths[2], 0u);
}

TEST(GoodColength, Guards) {
  const auto r = testing::e1_ring();
  EXPECT_EQ(error_kind([&] { find_good_colength_ideal(cyclic(r, {"y"}), 2); }),
            ErrorKind::HypothesisFails);
  EXPECT_EQ(error_kind([&] { find_good_colength_ideal(cyclic(r, {"y"}), 1, 0); }),
            ErrorKind::CapExceeded);
}

TEST(BigSocle, DimensionTwo) {
  const auto r = check_big_socle(residue_field(testing::z_ring()), 1, 5);
  EXPECT_EQ(r.hypothesis, HypothesisStatus::Satisfied);
  EXPECT_EQ(r.conclusion, ConclusionStatus::Verified);
  ASSERT_EQ(r.syzygies.size(), 5u);
  for (const auto& s : r.syzygies) EXPECT_GE(s.dimension, 1) << s.index;
  EXPECT_EQ(at(r, 3).role, "informational");
  EXPECT_EQ(at(r, 4).role, "asserted");
  EXPECT_EQ(r.witnesses.at("l"), "1");
  EXPECT_EQ(r.witnesses.at("t"), "0");
}

TEST(BigSocle, DimensionOneInformationalBand) {
  const auto r = check_big_socle(cyclic(testing::e1_ring(), {"y"}), 1, 5);
  EXPECT_EQ(r.conclusion, ConclusionStatus::Verified);
  EXPECT_EQ(at(r, 2).role, "informational");
  EXPECT_EQ(at(r, 2).dimension, 0);
  EXPECT_EQ(at(r, 2).length, std::optional<std::uint64_t>(1));
  for (int i = 3; i <= 5; ++i) {
    EXPECT_EQ(at(r, i).role, "asserted");
    EXPECT_GE(at(r, i).dimension, 1);
  }
}

TEST(BigSocle, Guards) {
  EXPECT_EQ(error_kind([] { check_big_socle(residue_field(testing::node_ring())); }),
            ErrorKind::HypothesisFails);
  // (x^3, xy) has l = 1 = t in d = 1, so the strict inequality fails.
  const auto r = testing::quotient(2, {"x", "y"}, {"x^3", "x*y"});
  EXPECT_EQ(error_kind([&] { check_big_socle(residue_field(r)); }), ErrorKind::HypothesisFails);
}

TEST(Dim2Syzygies, ZRing) {
  const auto z = testing::z_ring();
  for (const auto& m : {residue_field(z), testing::maximal_power_quotient(z, 2)}) {
    const auto r = check_dim2_syzygies(m);
    EXPECT_EQ(r.conclusion, ConclusionStatus::Verified);
    for (const auto& s : r.syzygies) EXPECT_GE(s.dimension, 1);
  }
}

TEST(Dim2Syzygies, FiniteResolutionOverPlane) {
  const auto r = check_dim2_syzygies(cyclic(testing::plane(), {"x^2", "y^2"}));
  EXPECT_EQ(at(r, 3).role, "vacuous");
  EXPECT_EQ(at(r, 3).dimension, -1);
  EXPECT_EQ(r.conclusion, ConclusionStatus::Verified);
  EXPECT_EQ(error_kind([] { check_dim2_syzygies(residue_field(testing::e1_ring())); }),
            ErrorKind::HypothesisFails);
}

TEST(BadToGood, E1SyzygyOfH0IsVacuous) {
  const auto r = check_bad_to_good(cyclic(testing::e1_ring(), {"y"}), BadToGoodMode::SyzygyOfH0, 4);
  EXPECT_EQ(r.hypothesis, HypothesisStatus::Vacuous);
  EXPECT_EQ(r.conclusion, ConclusionStatus::NotApplicable);
  EXPECT_GE(at(r, 2).dimension, 1);
}

TEST(BadToGood, ZRingQuotientMode) {
  const auto z = testing::z_ring();
  const auto j = HomogeneousIdeal::maximal_power(z->ambient(), 3).basis();
  const auto r = check_bad_to_good(residue_field(z), BadToGoodMode::SyzygyOfQuotient, 3, j);
  EXPECT_NE(r.hypothesis, HypothesisStatus::Failed);
  EXPECT_NE(r.conclusion, ConclusionStatus::Refuted);
  EXPECT_EQ(at(r, 3).role, "hypothesis");
}

TEST(BadToGood, Guards) {
  const auto r3 = testing::quotient(2, {"x", "y", "z", "w"}, {"w^2", "w*x", "w*y", "w*z"});
  EXPECT_EQ(error_kind([&] { check_bad_to_good(residue_field(r3), BadToGoodMode::SyzygyOfH0, 4); }),
            ErrorKind::HypothesisFails);
  const auto e1 = testing::e1_ring();
  EXPECT_EQ(error_kind([&] { check_bad_to_good(residue_field(e1), BadToGoodMode::SyzygyOfH0, 3); }),
            ErrorKind::HypothesisFails);
}

TEST(EvenIndex, E1WithY) {
  const auto r = testing::e1_ring();
  const auto res = check_even_index(cyclic(r, {"y"}), poly(r->ambient(), "y"), 6);
  EXPECT_EQ(res.conclusion, ConclusionStatus::Verified);
  EXPECT_EQ(at(res, 3).role, "asserted");
  EXPECT_GE(at(res, 3).dimension, 1);
  EXPECT_EQ(at(res, 2).role, "informational");
  EXPECT_EQ(at(res, 2).length, std::optional<std::uint64_t>(1));
  EXPECT_EQ(error_kind([&] { check_even_index(cyclic(r, {"y"}), poly(r->ambient(), "x")); }),
            ErrorKind::HypothesisFails);
}

TEST(Syz5Parameter, DimensionOneAndTwo) {
  const auto e1 = testing::e1_ring();
  const auto a = check_syz5_parameter(e1, {poly(e1->ambient(), "y")});
  EXPECT_EQ(a.conclusion, ConclusionStatus::Verified);
  EXPECT_GE(at(a, 5).dimension, 1);

  const auto z = testing::z_ring();
  const auto b = check_syz5_parameter(z, {poly(z->ambient(), "x"), poly(z->ambient(), "y")});
  EXPECT_EQ(b.conclusion, ConclusionStatus::Verified);
  EXPECT_EQ(b.witnesses.at("annihilator_is_h0_1"), "true");
  EXPECT_EQ(b.witnesses.at("annihilator_is_h0_2"), "true");
  EXPECT_EQ(b.witnesses.at("quotient_by_h0_cohen_macaulay"), "true");

  EXPECT_EQ(error_kind([&] { check_syz5_parameter(z, {poly(z->ambient(), "x")}); }),
            ErrorKind::HypothesisFails);
}

TEST(DivideIdentity, NotInstantiatedOnCorpus) {
  const auto e1 = testing::e1_ring();
  for (int i = 2; i <= 4; ++i) {
    const auto r = check_divide_identity(cyclic(e1, {"y"}), i);
    EXPECT_EQ(r.hypothesis, HypothesisStatus::Vacuous);
  }
  const auto z = testing::z_ring();
  EXPECT_EQ(check_divide_identity(residue_field(z), 2).hypothesis, HypothesisStatus::Vacuous);
  EXPECT_EQ(check_dim2_sigma(residue_field(z), 2).hypothesis, HypothesisStatus::Vacuous);
}

TEST(Search, EmptyFamily) {
  FamilySpec f;
  f.max_generators = 0;
  EXPECT_TRUE(search_finite_syzygies(f, {}).entries.empty());
}

TEST(Search, DimensionOneFamilyFlagsE1) {
  const auto catalog = search_finite_syzygies(FamilySpec::builtin_dim1(), SearchBounds{3});
  bool found = false;
  for (const auto& e : catalog.entries) {
    EXPECT_FALSE(e.error.has_value()) << *e.error;
    if (e.ring == testing::e1_ring()->to_string() && e.module == "R/(y)") {
      ASSERT_EQ(e.flagged, (std::vector<int>{2}));
      EXPECT_EQ(e.syzygies[1].length, std::optional<std::uint64_t>(1));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Search, DimensionTwoFamilyHasNoFiniteThirdSyzygy) {
  const auto family = FamilySpec::builtin_dim2();
  const auto catalog = search_finite_syzygies(family, SearchBounds{3});
  EXPECT_GE(catalog.rings, 20u);
  for (const auto& e : catalog.entries) {
    EXPECT_FALSE(e.error.has_value());
    EXPECT_EQ(e.d, 2);
    EXPECT_TRUE(e.depth_zero);
    for (const auto& s : e.syzygies) EXPECT_GE(s.dimension, 1) << e.ring << " " << e.module;
  }
  EXPECT_EQ(catalog.flagged_entries(), 0u);
}

TEST(Search, Deterministic) {
  const auto family = FamilySpec::builtin_dim1();
  const auto a = search_finite_syzygies(family, SearchBounds{3});
  const auto b = search_finite_syzygies(family, SearchBounds{3});
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    EXPECT_EQ(a.entries[k].ring, b.entries[k].ring);
    EXPECT_EQ(a.entries[k].module, b.entries[k].module);
    EXPECT_EQ(a.entries[k].flagged, b.entries[k].flagged);
  }
}

TEST(Search, FamilyIsUpToPermutation) {
  FamilySpec f;
  f.num_variables = 2;
  f.min_degree = 2;
  f.max_degree = 2;
  f.max_generators = 1;
  f.dimension.reset();
  f.depth_zero_only = false;
  // x^2 ~ y^2 and xy: two classes.
  EXPECT_EQ(enumerate_family(f).size(), 2u);
}

}  // namespace
}  // namespace frobsyz
