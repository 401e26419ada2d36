#pragma once

// Randomized property suites over exact rationals, shared by the `check`
// command and the test binaries.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polnum/bounds.hpp"
#include "polnum/crf.hpp"
#include "polnum/oracles.hpp"
#include "polnum/polarization.hpp"
#include "polnum/random.hpp"
#include "polnum/semihom.hpp"
#include "polnum/thresholds.hpp"

namespace polnum::checks {

struct SuiteReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t passed = 0;
  std::vector<std::string> failures; // first few only

  bool ok() const { return passed == cases; }

  void record(bool pass, const std::string &what) {
    ++cases;
    if (pass)
      ++passed;
    else if (failures.size() < 5)
      failures.push_back(what);
  }
};

inline SuiteReport duality_suite(random::Rng &rng, std::uint64_t cases) {
  SuiteReport rep{"duality", 0, 0, {}};
  for (std::uint64_t k = 0; k < cases; ++k) {
    const auto t = random::type(rng, 8, 60);
    const auto d = dual_type(t);
    const auto nu = random::positive_rational(rng, 20, 20);
    const FractionalPolarization frac(t, nu);
    const auto fd = frac.dual();
    const bool pass =
        dual_type(d) == t && chi(t) * chi(d) == ipow(t.d1dg(), t.g()) &&
        d.first() == t.first() && d.last() == t.last() &&
        frac.formal_chi() * fd.formal_chi() == frac.formal_d1dg().pow(t.g());
    rep.record(pass, "type " + t.to_string());
  }
  return rep;
}

inline SuiteReport u_oracle_suite(random::Rng &rng, std::uint64_t cases) {
  SuiteReport rep{"u-oracle", 0, 0, {}};
  while (rep.cases < cases) {
    const auto t = random::type(rng, 5, 12);
    const Integer a = random::uniform(rng, 1, 6) * (random::uniform(rng, 0, 1) ? 1 : -1);
    const Integer b = random::uniform(rng, 1, 8);
    if (gcd(a, b) != 1 || !oracles::within_guard(t, a))
      continue;
    const Integer u = u_invariant(t, a, b);
    const bool pass = oracles::brute_u(t, a, b) == u &&
                      oracles::brute_u(t, -a, b) == u &&
                      ipow(b, t.g()) % u == 0 &&
                      (ipow(a, t.g()) * chi(t)) % u == 0;
    rep.record(pass, "type " + t.to_string() + " a=" + a.str() + " b=" + b.str());
  }
  return rep;
}

/// Fourier-Mukai identities between the closed-form models of E of slope λ0
/// on t and of its transform on the dual, at `points` random arguments.
inline bool fm_identities_hold(random::Rng &rng, const PolarizationType &t,
                               const ExactRational &slope, int points) {
  const unsigned g = t.g();
  const RankFamily source = model_semihom(make_class(t, slope));
  const RankFamily image = fm_transform_model(t, slope);
  const RankFamily image_of_dual = fm_transform_model(t, -slope);
  for (int p = 0; p < points; ++p) {
    const auto lam = random::positive_rational(rng, 40, 24);
    for (unsigned i = 0; i <= g; ++i) {
      const auto neg = fm_transform(image[i], t, FmSign::neg);
      const auto pos = fm_transform(image_of_dual[g - i], t, FmSign::pos);
      if (neg.degree() != static_cast<int>(i) || pos.degree() != static_cast<int>(i))
        return false;
      if (source[i](-lam) != neg(-lam) || source[i](lam) != pos(lam))
        return false;
    }
  }
  return true;
}

inline SuiteReport fm_suite(random::Rng &rng, std::uint64_t cases) {
  SuiteReport rep{"fm", 0, 0, {}};
  for (std::uint64_t k = 0; k < cases; ++k) {
    const auto t = random::type(rng, 4, 12);
    const auto slope = random::nonzero_rational(rng, 12, 12);
    const auto src = make_class(t, slope);
    const auto img = fm_image_class(t, slope);
    const auto back = fm_image_class(img.base, img.slope, img.side);
    const bool pass = img.rank == abs(src.euler) &&
                      abs(img.euler) == src.rank && back.slope == slope &&
                      back.rank == src.rank && back.base == t &&
                      fm_identities_hold(rng, t, slope, 10);
    rep.record(pass, "type " + t.to_string() + " slope " + slope.to_string());
  }
  return rep;
}

inline SuiteReport thresholds_suite(random::Rng &rng, std::uint64_t cases) {
  SuiteReport rep{"thresholds", 0, 0, {}};
  for (std::uint64_t k = 0; k < cases; ++k) {
    const auto t = random::type(rng, 6, 30);
    const auto nu = random::positive_rational(rng, 30, 12);
    const auto mu = random::positive_rational(rng, 30, 12);
    const auto beta = random::positive_rational(rng, 30, 30);
    bool pass = true;

    const auto s = s_from_beta(beta, nu);
    if (beta < nu) {
      const auto back = beta_from_s(s, nu);
      pass = pass && back.exact && back.value == beta;
    } else {
      pass = pass && s.is_infinite() && !beta_from_s(s, nu).exact;
    }

    const auto dual = dual_beta(beta, 1, t);
    pass = pass && dual_beta(dual, 0, dual_type(t)) == beta;

    const auto s_nu = random::positive_rational(rng, 30, 30);
    const auto s_mu = cross_nu(s_nu, nu, mu);
    const auto b_nu = beta_from_s(s_nu, nu);
    if (s_mu.is_finite())
      pass = pass && beta_from_s(s_mu, mu).value == b_nu.value;
    else
      pass = pass && b_nu.value >= mu;

    const auto composite = beta1_from_dual_s0(s_nu, nu, t);
    pass = pass && composite.exact &&
           composite.value == dual_beta(b_nu.value, 0, t);
    rep.record(pass, "type " + t.to_string() + " beta " + beta.to_string() +
                         " nu " + nu.to_string());
  }
  return rep;
}

inline bool same_result(const std::optional<BoundResult> &x,
                        const std::optional<BoundResult> &y) {
  if (!x || !y)
    return x.has_value() == y.has_value();
  return x->best_nu == y->best_nu && x->bound == y->bound &&
         x->ge_half == y->ge_half && x->ge_one == y->ge_one;
}

inline SuiteReport bounds_suite(random::Rng &rng, std::uint64_t cases) {
  SuiteReport rep{"bounds", 0, 0, {}};
  for (std::uint64_t k = 0; k < cases; ++k) {
    const auto t = random::type(rng, 4, 10);
    const auto n = static_cast<std::uint64_t>(random::uniform(rng, 1, 30));
    const auto fast = maximize(t, n);
    const auto slow = oracles::brute_max(t, n);
    bool pass = same_result(fast, slow);
    if (fast) {
      const auto r = make_class(dual_type(t), fast->best_nu, Side::dual).rank;
      pass = pass &&
             fast->bound <= beta1_from_dual_s0(ExactRational(r), fast->best_nu, t).value;
    }
    rep.record(pass, "type " + t.to_string() + " N=" + std::to_string(n));
  }
  return rep;
}

using SuiteFn = SuiteReport (*)(random::Rng &, std::uint64_t);

struct SuiteEntry {
  const char *name;
  SuiteFn fn;
};

inline const std::vector<SuiteEntry> &all_suites() {
  static const std::vector<SuiteEntry> suites = {
      {"duality", duality_suite},     {"u-oracle", u_oracle_suite},
      {"fm", fm_suite},               {"thresholds", thresholds_suite},
      {"bounds", bounds_suite},
  };
  return suites;
}

} // namespace polnum::checks
