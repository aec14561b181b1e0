#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "slc/cyclotomic.hpp"
#include "slc/error.hpp"
#include "slc/fan.hpp"
#include "slc/invariants.hpp"
#include "slc/tautological.hpp"

namespace {

using slc::Cyclotomic6;
using slc::StackyFan;
using slc::Vec2;

template <class F>
slc::ErrorCode code_of(F f) {
  try {
    f();
  } catch (const slc::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no slc::Error thrown";
  return slc::ErrorCode::InvalidArgument;
}

std::set<Vec2> ray_set(const StackyFan& f) { return {f.rays().begin(), f.rays().end()}; }

// ---- Q(zeta6) ---------------------------------------------------------------

TEST(Cyclotomic6, PowersAndRelations) {
  const Cyclotomic6 z = Cyclotomic6::zeta_pow(1);
  EXPECT_EQ(z * z, z - Cyclotomic6(1));
  Cyclotomic6 p(1);
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(p, Cyclotomic6::zeta_pow(k));
    EXPECT_EQ(Cyclotomic6::zeta_pow(-k), Cyclotomic6::zeta_pow(6 - k));
    p *= z;
  }
  EXPECT_EQ(p, Cyclotomic6(1));
  EXPECT_EQ(z.conj(), Cyclotomic6::zeta_pow(5));
  EXPECT_EQ(z.norm(), 1);
}

TEST(Cyclotomic6, Inverse) {
  oracle::Gen gen(3);
  for (int i = 0; i < 200; ++i) {
    const Cyclotomic6 x(mpq_class(gen.uniform(-20, 20), gen.uniform(1, 9)),
                        mpq_class(gen.uniform(-20, 20), gen.uniform(1, 9)));
    if (x.is_zero()) continue;
    EXPECT_EQ(x * x.inverse(), Cyclotomic6(1));
  }
  EXPECT_THROW(Cyclotomic6().inverse(), slc::Error);
}

// ---- fans -------------------------------------------------------------------

TEST(Fan, Initial) {
  const auto f = slc::initial_git_fan();
  EXPECT_EQ(ray_set(f), (std::set<Vec2>{{2, 0}, {0, 1}, {-2, -1}}));
  EXPECT_EQ(f.cones().size(), 3u);
  EXPECT_TRUE(f.is_complete());
}

TEST(Fan, InsertionsSplitTheStatedCones) {
  const auto f0 = slc::initial_git_fan();
  const auto iii = *f0.find_cone({-2, -1}, {2, 0});
  const auto c1 = slc::cone_coordinates(f0, iii, {4, -1});
  EXPECT_EQ(c1.along_first, 1);   // (-2,-1)
  EXPECT_EQ(c1.along_second, 3);  // (2,0)

  const auto f1 = slc::insert_ray(f0, {4, -1}, "III", "IV'");
  EXPECT_EQ(f1.cones().size(), 4u);
  EXPECT_TRUE(f1.find_cone({-2, -1}, {4, -1}).has_value());
  EXPECT_TRUE(f1.find_cone({4, -1}, {2, 0}).has_value());
  EXPECT_FALSE(f1.find_cone({-2, -1}, {2, 0}).has_value());
  EXPECT_TRUE(f1.find_cone({0, 1}, {-2, -1}).has_value());  // untouched

  const auto ii = *f1.find_cone({2, 0}, {0, 1});
  const auto c2 = slc::cone_coordinates(f1, ii, {2, 1});
  EXPECT_EQ(c2.along_first, 1);
  EXPECT_EQ(c2.along_second, 1);
  const auto f2 = slc::insert_ray(f1, {2, 1}, "IV''", "II");
  EXPECT_TRUE(f2.find_cone({2, 0}, {2, 1}).has_value());
  EXPECT_TRUE(f2.find_cone({2, 1}, {0, 1}).has_value());
  EXPECT_TRUE(f2.is_complete());
}

TEST(Fan, InsertionErrors) {
  const auto f = slc::initial_git_fan();
  EXPECT_EQ(code_of([&] { slc::insert_ray(f, {2, 0}); }), slc::ErrorCode::RayOnExistingRay);
  EXPECT_EQ(code_of([&] { slc::insert_ray(f, {4, 0}); }), slc::ErrorCode::RayOnExistingRay);
  // Incomplete fan: a ray in the uncovered region.
  const StackyFan half({{1, 0}, {0, 1}}, {{0, 1, "Q"}});
  EXPECT_EQ(code_of([&] { slc::insert_ray(half, {-1, -1}); }), slc::ErrorCode::RayOutsideSupport);
}

TEST(Fan, CollapseErrors) {
  const auto f = slc::initial_git_fan();
  EXPECT_EQ(code_of([&] { slc::collapse_ray(f, {0, 1}); }), slc::ErrorCode::MergeNotConvex);
  EXPECT_EQ(code_of([&] { slc::collapse_ray(f, {5, 5}); }), slc::ErrorCode::RayNotFound);
}

TEST(Fan, Ksba) {
  const auto f = slc::ksba_fan();
  EXPECT_EQ(ray_set(f), (std::set<Vec2>{{0, 1}, {-2, -1}, {4, -1}, {2, 1}}));
  EXPECT_EQ(f.cones().size(), 4u);
  EXPECT_TRUE(f.is_complete());
  EXPECT_EQ(f.find_cone("IV"), f.find_cone({4, -1}, {2, 1}));
  EXPECT_EQ(f.find_cone("O"), f.find_cone({0, 1}, {-2, -1}));
  EXPECT_EQ(f.find_cone("III"), f.find_cone({-2, -1}, {4, -1}));
  EXPECT_EQ(f.find_cone("II"), f.find_cone({2, 1}, {0, 1}));
  std::set<std::string> labels;
  for (const auto& c : f.cones()) labels.insert(c.label);
  EXPECT_EQ(labels, (std::set<std::string>{"O", "II", "III", "IV"}));
}

TEST(Fan, ValidationRejectsOverlap) {
  EXPECT_THROW(StackyFan({{1, 0}, {0, 1}, {-1, 0}}, {{0, 2, "wide"}}), slc::Error);
  EXPECT_THROW(StackyFan({{1, 0}, {0, 1}}, {{0, 1, "a"}, {0, 1, "b"}}), slc::Error);
  EXPECT_THROW(StackyFan({{0, 0}, {0, 1}}, {}), slc::Error);
}

// ---- group and invariants ---------------------------------------------------

TEST(Group, OrderAndComposition) {
  const auto gens = slc::sextic_group_generators();
  const auto group = slc::generate_group(gens);
  EXPECT_EQ(group.size(), 72u);
  // act(g*h) = act(g) after act(h) on a generic polynomial
  slc::Polynomial p{{{3, 1, 2, 0}, Cyclotomic6(1)}, {{0, 1, 1, 4}, Cyclotomic6(2, 1)}};
  for (const auto& g : group)
    for (const auto& h : gens) ASSERT_EQ(slc::act(g * h, p), slc::act(g, slc::act(h, p)));
  EXPECT_EQ(slc::generate_group({gens[0], gens[1]}).size(), 36u);
}

TEST(Invariants, MonomialCount) { EXPECT_EQ(slc::monomials(6).size(), 84u); }

TEST(Invariants, SexticBasis) {
  const auto b = slc::invariant_sextic_basis();
  EXPECT_EQ(b.dimension, 4u);
  EXPECT_EQ(b.names, (std::vector<std::string>{"x1^6+x2^6", "y1^6+y2^6", "Q+^3", "Q+*Q-^2"}));
  EXPECT_EQ(mpq_class(static_cast<long>(b.dimension)), oracle::averaged_invariant_dimension(6));
  const auto gens = slc::sextic_group_generators();
  EXPECT_FALSE(slc::is_invariant(gens, {{{6, 0, 0, 0}, Cyclotomic6(1)}}));
  for (const auto& p : b.basis) EXPECT_TRUE(slc::is_invariant(gens, p));
  EXPECT_EQ(slc::to_string(b.basis[0]), "x1^6+x2^6");
}

TEST(Invariants, CharacterAveragingOtherDegrees) {
  const auto group = slc::generate_group(slc::sextic_group_generators());
  for (int d = 0; d <= 8; ++d) {
    std::vector<slc::Polynomial> images;
    for (const auto& m : slc::monomials(d)) {
      auto r = slc::reynolds(group, {{m, Cyclotomic6(1)}});
      if (!r.empty()) images.push_back(std::move(r));
    }
    EXPECT_EQ(mpq_class(static_cast<long>(slc::rank(images))), oracle::averaged_invariant_dimension(d))
        << "degree " << d;
  }
}

TEST(Invariants, ReynoldsIsProjection) {
  const auto group = slc::generate_group(slc::sextic_group_generators());
  for (const auto& m : slc::monomials(6)) {
    const auto r = slc::reynolds(group, {{m, Cyclotomic6(1)}});
    ASSERT_EQ(slc::reynolds(group, r), r);
  }
}

TEST(TwoForms, FullGroup) {
  const auto w = slc::invariant_two_forms();
  EXPECT_EQ(w.dimension, 1u);
  const slc::TwoForm expected{{{0, 1}, Cyclotomic6(1)}, {{2, 3}, Cyclotomic6(1)}};
  ASSERT_EQ(w.basis.size(), 1u);
  EXPECT_EQ(w.basis[0], expected);
  EXPECT_EQ(slc::to_string(w.basis[0]), "e1^e2 + e3^e4");
  const auto group = slc::generate_group(slc::sextic_group_generators());
  std::vector<oracle::MonomialMatrix> ref;
  for (const auto& g : group) ref.push_back({g.perm, g.twist});
  EXPECT_EQ(oracle::averaged_two_form_dimension(ref), 1);
  EXPECT_EQ(oracle::averaged_two_form_dimension(oracle::sextic_group_elements()), 1);
}

TEST(TwoForms, DiagonalSubgroup) {
  const auto gens = slc::sextic_group_generators();
  const auto diagonal = slc::generate_group({gens[0], gens[1]});
  const auto w = slc::invariant_two_forms(diagonal);
  EXPECT_EQ(w.dimension, 2u);
  std::vector<oracle::MonomialMatrix> ref;
  for (const auto& g : diagonal) ref.push_back({g.perm, g.twist});
  EXPECT_EQ(oracle::averaged_two_form_dimension(ref), 2);
  // trivial group: all of Lambda^2
  EXPECT_EQ(slc::invariant_two_forms({slc::GroupElement{}}).dimension, 6u);
}

// ---- tautological arithmetic ------------------------------------------------

TEST(Tautological, Defaults) {
  const auto r = slc::tautological_invariant(slc::kDefaultObPairing, slc::kDefaultL2Pairing,
                                             slc::kDefaultL2Square);
  EXPECT_EQ(r.ratio, mpq_class(1, 48));
  EXPECT_EQ(r.pair_l2_vir, 6);
  EXPECT_EQ(r.i_cm, 12);
}

TEST(Tautological, Examples) {
  const auto zero = slc::tautological_invariant(0, 12, 288);
  EXPECT_EQ(zero.ratio, 0);
  EXPECT_EQ(zero.pair_l2_vir, 0);
  EXPECT_EQ(zero.i_cm, 0);
  const auto half = slc::tautological_invariant(mpq_class(-1, 2), 12, 288);
  EXPECT_EQ(half.ratio, mpq_class(1, 24));
  EXPECT_EQ(half.pair_l2_vir, 12);
  EXPECT_EQ(half.i_cm, 24);
  EXPECT_EQ(code_of([] { slc::tautological_invariant(1, 0, 1); }), slc::ErrorCode::ZeroPairing);
}

TEST(Tautological, HomogeneousInObstruction) {
  oracle::Gen gen(48);
  for (int i = 0; i < 100; ++i) {
    mpq_class ob(gen.uniform(-40, 40), gen.uniform(1, 12));
    mpq_class s(gen.uniform(-9, 9), gen.uniform(1, 5));
    ob.canonicalize();
    s.canonicalize();
    const auto base = slc::tautological_invariant(ob, 12, 288);
    const auto scaled = slc::tautological_invariant(s * ob, 12, 288);
    EXPECT_EQ(scaled.i_cm, s * base.i_cm);
    EXPECT_EQ(scaled.ratio, s * base.ratio);
  }
}

TEST(CmExponents, Examples) {
  EXPECT_EQ(slc::cm_exponents(-1), std::make_pair(mpq_class(4), mpq_class(-6)));
  EXPECT_EQ(slc::cm_exponents(0), std::make_pair(mpq_class(6), mpq_class(-6)));
  EXPECT_EQ(slc::cm_exponents(3), std::make_pair(mpq_class(12), mpq_class(-6)));
}

TEST(EquivariantVd, TwoMinusOne) {
  const auto v = slc::equivariant_vd();
  EXPECT_EQ(v.h1, 2);
  EXPECT_EQ(v.h2, static_cast<long>(slc::invariant_two_forms().dimension));
  EXPECT_EQ(v.vd, 1);
}

}  // namespace
