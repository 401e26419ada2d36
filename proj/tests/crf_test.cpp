#include <gtest/gtest.h>

#include "polnum/checks.hpp"
#include "polnum/crf.hpp"
#include "polnum/random.hpp"
#include "support.hpp"

using namespace polnum;
using polnum::test::Q;
using polnum::test::T;

namespace {

// h^0 of an ample class at a/b > 0 by pulling back along multiplication by
// b: h^0(a b l) / b^{2g} with h^0(a b l) = (a b)^g χ(l).
ExactRational h0_by_pullback(const PolarizationType &t, const ExactRational &x) {
  const Integer a = x.numerator(), b = x.denominator();
  return ExactRational::reduce(ipow(a * b, t.g()) * chi(t), ipow(b, 2 * t.g()));
}

// An arbitrary nonnegative non-polynomial evaluator standing in for an
// uncomputable rank function.
RankFunction formal(const FractionalPolarization &pol, int degree, Side side,
                    Interval domain = Interval::whole()) {
  return RankFunction(
      [](const ExactRational &x) {
        const auto ax = x.abs();
        return ax * ax + ExactRational(1) / (ExactRational(1) + ax) +
               (x.sign() > 0 ? ExactRational(3) : ExactRational(0));
      },
      degree, side, pol, std::move(domain));
}

} // namespace

TEST(ModelStructureSheaf, Values) {
  const auto h = model_structure_sheaf(T("1,2"));
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h[0](1), 2);
  EXPECT_EQ(h[0](Q("1/2")), Q("1/2"));
  EXPECT_EQ(h[0](Q("1/2")), h0_by_pullback(T("1,2"), Q("1/2")));
  EXPECT_EQ(h[2](-1), 2);
  EXPECT_EQ(h[1](Q("5/3")), 0);
  EXPECT_EQ(h[0](-1), 0);
  EXPECT_EQ(h[2](1), 0);
  EXPECT_EQ(h[0](0), 0);
  EXPECT_EQ(h[2].degree(), 2);
}

TEST(ModelStructureSheaf, AgreesWithPullbackNormalization) {
  polnum::random::Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    const auto t = polnum::random::type(rng, 5, 12);
    const auto x = polnum::random::positive_rational(rng, 20, 20);
    EXPECT_EQ(model_structure_sheaf(t)[0](x), h0_by_pullback(t, x));
  }
}

TEST(TensorSemihom, Examples) {
  const auto t = T("1,2");
  const auto h0 = model_structure_sheaf(t)[0];
  const auto c = make_class(t, Q("1/2"));
  ASSERT_EQ(c.rank, 2);
  const auto g = tensor_semihom(h0, c);
  EXPECT_EQ(g(0), 1);
  EXPECT_EQ(g(0), ExactRational(c.euler));
  EXPECT_EQ(g(-c.slope), ExactRational(c.rank) * h0(0));

  const auto k = make_class(t, 3);
  const auto shifted = tensor_semihom(h0, k);
  for (auto x : {Q("-5/2"), Q("-3"), Q("1/7"), Q("4")})
    EXPECT_EQ(shifted(x), h0(ExactRational(3) + x));
}

TEST(TensorSemihom, BaseMismatch) {
  const auto h0 = model_structure_sheaf(T("1,2"))[0];
  EXPECT_THROW(tensor_semihom(h0, make_class(T("1,4"), 1)), DomainError);
  EXPECT_THROW(tensor_semihom(h0, make_class(T("1,2"), 1, Side::dual)), DomainError);
  EXPECT_THROW(tensor_semihom(scale_polarization(h0, 2), make_class(T("1,2"), 1)),
               DomainError);
}

TEST(TensorSemihom, DomainShifts) {
  const auto f = formal(FractionalPolarization(T("1,2"), 1), 0, Side::primal,
                        Interval::positive());
  const auto g = tensor_semihom(f, make_class(T("1,2"), 2));
  EXPECT_NO_THROW(g(Q("-3/2")));
  EXPECT_THROW(g(-2), DomainError);
}

TEST(ScalePolarization, Substitutes) {
  const auto h = model_structure_sheaf(T("1,2"))[0];
  const auto id = scale_polarization(h, 1);
  for (auto x : {Q("1/3"), Q("2"), Q("-1")})
    EXPECT_EQ(id(x), h(x));
  const auto twice = scale_polarization(h, 2);
  EXPECT_EQ(twice(Q("1/2")), 2);
  EXPECT_EQ(twice.pol().scale(), 2);
  EXPECT_EQ(scale_polarization(model_structure_sheaf(T("1,1"))[0], Q("1/3"))(3), 1);
  EXPECT_THROW(scale_polarization(h, 0), DomainError);
}

TEST(IsogenyPullback, Multiplies) {
  const auto h = model_structure_sheaf(T("1,2"))[0];
  EXPECT_EQ(isogeny_pullback(h, 1)(Q("3/2")), h(Q("3/2")));
  // multiplication by 2 on a curve has degree 2^{2g} = 4
  const auto e = model_structure_sheaf(T("5"))[0];
  EXPECT_EQ(isogeny_pullback(e, 4)(Q("1/3")), ExactRational(4) * e(Q("1/3")));
  // φ_l on (1,2) has degree χ^2 = 4
  EXPECT_EQ(isogeny_pullback(h, ipow(chi(T("1,2")), 2))(1), 8);
  EXPECT_THROW(isogeny_pullback(h, 0), DomainError);
}

TEST(FmTransform, PrincipalIdentityScaling) {
  const auto t = T("1,1,1");
  const auto fhat = model_structure_sheaf(dual_type(t), Side::dual)[0];
  const auto h = fm_transform(fhat, t, FmSign::pos);
  EXPECT_EQ(h(1), fhat(1));
  EXPECT_EQ(h.degree(), 3);
  EXPECT_EQ(h.side(), Side::primal);
}

TEST(FmTransform, ReproducesSemihomModelsExactly) {
  polnum::random::Rng rng(31);
  for (int k = 0; k < 40; ++k) {
    const auto t = polnum::random::type(rng, 4, 12);
    const auto slope = polnum::random::nonzero_rational(rng, 10, 10);
    EXPECT_TRUE(checks::fm_identities_hold(rng, t, slope, 25))
        << t.to_string() << " slope " << slope;
  }
}

TEST(FmTransform, PositiveBranchAgainstTensorModel) {
  // The h^0 of E_{λ0} equals the POS transform of the class dual to the
  // FM image (slope +1/(d1 dg λ0), rank χ(E)).
  polnum::random::Rng rng(32);
  for (int k = 0; k < 30; ++k) {
    const auto t = polnum::random::type(rng, 4, 10);
    const auto lam0 = polnum::random::positive_rational(rng, 8, 8);
    const auto c = make_class(t, lam0);
    const auto lhs = tensor_semihom(model_structure_sheaf(t)[0], c);
    const auto img = fm_image_class(t, lam0);
    const auto flipped = make_class(img.base, -img.slope, Side::dual);
    ASSERT_EQ(flipped.rank, img.rank);
    const auto fhat = tensor_semihom(model_structure_sheaf(img.base, Side::dual)[0], flipped);
    const auto rhs = fm_transform(fhat.with_degree(static_cast<int>(t.g())), t, FmSign::pos);
    for (int p = 0; p < 100; ++p) {
      const auto x = polnum::random::positive_rational(rng, 50, 30);
      ASSERT_EQ(lhs(x), rhs(x)) << t.to_string() << " λ0=" << lam0 << " x=" << x;
    }
    EXPECT_EQ(rhs.degree(), 0);
  }
}

TEST(FmTransform, MatchesPullbackForm) {
  // ((-λ)^g / χ) φ_l^* (rescaled transform)(-1/λ) equals the NEG branch.
  polnum::random::Rng rng(33);
  for (int k = 0; k < 30; ++k) {
    const auto t = polnum::random::type(rng, 4, 10);
    const auto slope = polnum::random::nonzero_rational(rng, 8, 8);
    const auto image = fm_transform_model(t, slope);
    const ExactRational c(t.d1dg()), x(chi(t));
    for (unsigned i = 0; i <= t.g(); ++i) {
      const auto neg = fm_transform(image[i], t, FmSign::neg);
      const auto pulled = isogeny_pullback(scale_polarization(image[i], c.reciprocal()),
                                           ipow(chi(t), 2));
      for (int p = 0; p < 10; ++p) {
        const auto lam = -polnum::random::positive_rational(rng, 30, 20);
        EXPECT_EQ(neg(lam), (-lam).pow(t.g()) / x * pulled(-lam.reciprocal()));
      }
    }
  }
}

TEST(FmTransform, FractionalPolarizationComposite) {
  // h_{F, ν l}(λ) = χ(ν l) (-λ)^g h_{Φ(F), ν l̂}(-1/((ν d1)(ν dg) λ)) for λ < 0.
  polnum::random::Rng rng(34);
  for (int k = 0; k < 30; ++k) {
    const auto t = polnum::random::type(rng, 4, 10);
    const auto slope = polnum::random::nonzero_rational(rng, 8, 8);
    const auto nu = polnum::random::positive_rational(rng, 6, 6);
    const auto source = model_semihom(make_class(t, slope));
    const auto image = fm_transform_model(t, slope);
    for (unsigned i = 0; i <= t.g(); ++i) {
      const auto lhs = scale_polarization(source[i], nu);
      const auto rhs = fm_transform(scale_polarization(image[i], nu), t, FmSign::neg);
      EXPECT_EQ(rhs.pol(), lhs.pol());
      for (int p = 0; p < 10; ++p) {
        const auto lam = -polnum::random::positive_rational(rng, 30, 20);
        EXPECT_EQ(lhs(lam), rhs(lam));
      }
    }
  }
}

TEST(FmTransform, DomainAndBaseChecks) {
  const auto t = T("1,2");
  const auto image = fm_transform_model(t, Q("1/2"));
  const auto neg = fm_transform(image[0], t, FmSign::neg);
  EXPECT_THROW(neg(0), DomainError);
  EXPECT_THROW(neg(1), DomainError);
  const auto pos = fm_transform(image[0], t, FmSign::pos);
  EXPECT_THROW(pos(0), DomainError);
  EXPECT_EQ(neg.degree(), 0);
  EXPECT_EQ(pos.degree(), 2);
  EXPECT_THROW(fm_transform(image[0], T("1,4"), FmSign::neg), DomainError);
}

TEST(IdealDuality, Examples) {
  const auto t = T("1,4");
  const auto f = formal(FractionalPolarization(dual_type(t), 1), 0, Side::dual);
  const auto g = ideal_duality(f, t, 1);
  EXPECT_EQ(g.degree(), 1);
  EXPECT_EQ(g.side(), Side::primal);
  EXPECT_EQ(g(Q("1/2")), f(Q("1/2")));
  EXPECT_EQ(g(Q("1/8")), f(2));
  EXPECT_THROW(g(0), DomainError);
  EXPECT_THROW(g(-1), DomainError);

  const auto p = T("1,1");
  const auto fp = formal(FractionalPolarization(p, 1), 1, Side::dual);
  EXPECT_EQ(ideal_duality(fp, p, 0)(1), fp(1));

  EXPECT_THROW(ideal_duality(f, t, 0), DomainError); // degree mismatch
  EXPECT_THROW(ideal_duality(f, t, 2), DomainError);
  EXPECT_THROW(ideal_duality(f, T("1,2"), 1), DomainError);
}

TEST(IdealDuality, Involution) {
  polnum::random::Rng rng(41);
  for (int k = 0; k < 50; ++k) {
    const auto t = polnum::random::type(rng, 6, 30);
    const int i = static_cast<int>(polnum::random::uniform(rng, 0, 1));
    const auto f = formal(FractionalPolarization(dual_type(t), 1), 1 - i, Side::dual);
    const auto once = ideal_duality(f, t, i);
    const auto twice = ideal_duality(once, dual_type(t), 1 - i);
    EXPECT_EQ(twice.degree(), f.degree());
    EXPECT_EQ(twice.side(), f.side());
    for (int p = 0; p < 20; ++p) {
      const auto x = polnum::random::positive_rational(rng, 40, 40);
      EXPECT_EQ(twice(x), f(x));
    }
  }
}

TEST(EvComplexRelation, RoundTripAndHalfPoint) {
  polnum::random::Rng rng(51);
  for (int k = 0; k < 20; ++k) {
    const auto t = polnum::random::type(rng, 5, 12);
    const auto nu = polnum::random::positive_rational(rng, 6, 6);
    const FractionalPolarization pol(t, nu);
    const auto f = formal(pol, 1, Side::primal, Interval::open(0, 1));
    const auto big_g = ev_complex_relation(f, nu, t, EvDirection::inverse);
    const auto back = ev_complex_relation(big_g, nu, t, EvDirection::forward);
    for (int p = 0; p < 100; ++p) {
      const auto x = polnum::random::unit_interval(rng, 60);
      ASSERT_EQ(back(x), f(x));
    }
    const ExactRational weight = pol.formal_chi() * ExactRational(make_class(t, nu).rank);
    EXPECT_EQ(back(Q("1/2")), Q("1/2").pow(t.g()) / weight * big_g(1));
  }
}

TEST(EvComplexRelation, BoundaryBehaviour) {
  const auto t = T("1,2");
  const ExactRational nu = 1;
  const FractionalPolarization pol(t, nu);
  const RankFunction f([](const ExactRational &x) { return x; }, 0, Side::primal,
                       pol, Interval::open(0, 1));
  const auto big_g = ev_complex_relation(f, nu, t, EvDirection::inverse);
  // χ(l) r(1) (1+y)^2 y/(1+y) = 2 y (1+y)
  const auto y = Q("1/1000");
  EXPECT_EQ(big_g(y), ExactRational(2) * y * (ExactRational(1) + y));
  EXPECT_LT(big_g(y), Q("1/400"));
  EXPECT_LT(big_g(Q("1/100000")), big_g(y));
}

TEST(EvComplexRelation, DomainChecks) {
  const auto t = T("1,2");
  const FractionalPolarization pol(t, Q("1/2"));
  const auto f = formal(pol, 0, Side::primal);
  const auto fwd = ev_complex_relation(f, Q("1/2"), t, EvDirection::forward);
  EXPECT_THROW(fwd(1), DomainError);
  EXPECT_THROW(fwd(0), DomainError);
  EXPECT_THROW(fwd(Q("3/2")), DomainError);
  const auto inv = ev_complex_relation(f, Q("1/2"), t, EvDirection::inverse);
  EXPECT_THROW(inv(0), DomainError);
  EXPECT_THROW(ev_complex_relation(f, 1, t, EvDirection::forward), DomainError);
}

TEST(EvComplexRelation, ComposedWithIdealDuality) {
  // With G the evaluation-complex function of the dual at ν = 1, the
  // composite ideal_duality(forward(G)) at λ equals
  // ((c λ - 1)/(c λ))^g / χ(dual) G(1/(c λ - 1)).
  polnum::random::Rng rng(61);
  for (int k = 0; k < 20; ++k) {
    const auto t = polnum::random::type(rng, 4, 12);
    const auto d = dual_type(t);
    const ExactRational c(t.d1dg());
    const auto big_g = formal(FractionalPolarization(d, 1), 0, Side::dual,
                              Interval::positive());
    const auto ideal_dual = ev_complex_relation(big_g, 1, d, EvDirection::forward);
    const auto composite = ideal_duality(ideal_dual, t, 1);
    for (int p = 0; p < 20; ++p) {
      const auto lam = c.reciprocal() + polnum::random::positive_rational(rng, 20, 20);
      const auto cl = c * lam;
      const auto expected = ((cl - 1) / cl).pow(t.g()) / ExactRational(chi(d)) *
                            big_g((cl - 1).reciprocal());
      EXPECT_EQ(composite(lam), expected);
    }
  }
}

TEST(RankFunction, NegativeValueIsAnInvariantViolation) {
  const RankFunction bad([](const ExactRational &) { return ExactRational(-1); }, 0,
                         Side::primal, FractionalPolarization(T("1"), 1));
  EXPECT_THROW(bad(0), InvariantViolation);
}
