#include "hyposign/suites.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hyposign/errors.hpp"
#include "hyposign/poly.hpp"
#include "hyposign/witness.hpp"

namespace hyposign {

bool SuiteResult::pass() const { return failed() == 0; }

int SuiteResult::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return c.pass; }));
}

int SuiteResult::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::vector<SignPattern> enumerate_patterns(int degree) {
  std::vector<SignPattern> out;
  out.reserve(1u << degree);
  for (std::uint32_t mask = 0; mask < (1u << degree); ++mask) {
    std::vector<Sign> signs{Sign::Plus};
    for (int k = 0; k < degree; ++k) {
      signs.push_back((mask >> k) & 1u ? Sign::Minus : Sign::Plus);
    }
    out.push_back(SignPattern::from_signs(std::move(signs)));
  }
  return out;
}

SuiteResult suite_cluster_family(int lmax) {
  SuiteResult result{"lemma1", {}};
  for (int ell = 2; ell <= lmax; ++ell) {
    CheckResult check{"ell=" + std::to_string(ell), true, ""};
    const RationalPoly conv = cluster_family(ell);
    const RationalPoly bin = cluster_family_binomial(ell);
    if (!(conv == bin)) {
      check.pass = false;
      check.detail = "convolution and binomial expansions differ";
    } else {
      const CoeffPattern actual = sign_pattern_of(conv);
      const CoeffPattern predicted = cluster_family_pattern(ell);
      if (!(actual == predicted)) {
        check.pass = false;
        check.detail = "pattern " + coeff_pattern_text(actual) + " != predicted " +
                       coeff_pattern_text(predicted);
      } else {
        check.detail = coeff_pattern_text(actual);
      }
    }
    result.checks.push_back(std::move(check));
  }
  return result;
}

SuiteResult suite_three_block(const ThreeBlockPlan& plan) {
  std::ostringstream name;
  name << "theorem3 r=" << plan.r << " delta=" << plan.delta << " tau=(" << plan.tau1 << ","
       << plan.tau2 << ") side=" << to_string(plan.side);
  SuiteResult result{name.str(), {}};
  for (const OrderWord& word : admissible_three_block_words(plan)) {
    CheckResult check{word.text(), true, ""};
    try {
      const Witness w = realize_three_block(plan, word);
      const VerifyReport report = verify_witness(w);
      if (!report.ok) {
        check.pass = false;
        check.detail = "witness failed verification: " + report.issues.front().what;
      } else if (!(w.pattern == plan.pattern()) || !(w.word == word)) {
        check.pass = false;
        check.detail = "wrong pattern or order word";
      } else {
        check.detail = "degree " + std::to_string(w.poly.degree());
      }
    } catch (const Error& e) {
      check.pass = false;
      check.detail = e.what();
    }
    result.checks.push_back(std::move(check));
  }
  return result;
}

namespace {

// Accumulates one CheckResult per law; keeps the first failure's description.
class LawTracker {
 public:
  explicit LawTracker(std::string name) : check_{std::move(name), true, ""} {}

  void require(bool condition, const std::string& context) {
    ++cases_;
    if (!condition && check_.pass) {
      check_.pass = false;
      check_.detail = "first failure: " + context;
    }
  }

  CheckResult finish() {
    if (check_.pass) check_.detail = std::to_string(cases_) + " cases";
    return std::move(check_);
  }

 private:
  CheckResult check_;
  long cases_ = 0;
};

Rational random_nonzero_rational(std::mt19937_64& rng) {
  const long num = 1 + static_cast<long>(rng() % 60);
  const long den = 1 + static_cast<long>(rng() % 60);
  Rational value(num, den);
  value.canonicalize();
  return (rng() & 1) ? value : Rational(-value);
}

Witness random_witness(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    const int d = 1 + static_cast<int>(rng() % 8);
    RootMultiset roots;
    for (int i = 0; i < d; ++i) roots.roots.push_back(random_nonzero_rational(rng));
    try {
      return make_witness(std::move(roots), {"random", 0, {}});
    } catch (const Error&) {
      // tied moduli or vanished coefficient; draw again
    }
  }
  throw Error("could not draw a random witness");
}

}  // namespace

SuiteResult suite_involutions(int maxlen, int witness_cases, std::uint64_t seed) {
  SuiteResult result{"involutions", {}};

  LawTracker round_trip("representation round-trips");
  LawTracker bijection("cp-word bijection");
  LawTracker count_law("sign changes + preservations = d");
  LawTracker involution("iota_m, iota_r are commuting involutions");
  LawTracker order_transforms("canonical order under iota_r / iota_m");
  LawTracker type_inclusion("type 1 implies type 2");
  LawTracker type_invariance("type 1 / type 2 invariant under the involutions");
  LawTracker orbit_law("orbit cardinality is 2 or 4");
  LawTracker verdict_law("classify_static is orbit-constant and consistent");
  std::vector<int> type2_only_per_degree(static_cast<std::size_t>(maxlen), 0);

  for (int d = 1; d <= maxlen - 1; ++d) {
    for (const SignPattern& sp : enumerate_patterns(d)) {
      const std::string ctx = sp.first_rep();

      round_trip.require(SignPattern::parse(sp.first_rep(), SpRep::First) == sp, ctx);
      round_trip.require(SignPattern::parse(sp.second_rep(), SpRep::Second) == sp, ctx);
      round_trip.require(SignPattern::parse(sp.third_rep(), SpRep::Third) == sp, ctx);
      round_trip.require(SignPattern::parse(sp.third_rep()) == sp, ctx);

      bijection.require(cpp_of(sp).to_sign_pattern() == sp, ctx);

      const Counts cnt = counts(sp);
      count_law.require(cnt.changes + cnt.preservations == d, ctx);
      count_law.require(cnt.changes == static_cast<int>(sp.components().size()) - 1, ctx);

      const SignPattern m = iota_m(sp);
      const SignPattern r = iota_r(sp);
      involution.require(iota_m(m) == sp, ctx);
      involution.require(iota_r(r) == sp, ctx);
      involution.require(iota_m(r) == iota_r(m), ctx);
      involution.require(iota_mr(sp) == iota_m(r), ctx);
      involution.require(!(m == sp), ctx);

      order_transforms.require(canonical_order(r) == canonical_order(sp).reversed(), ctx);
      order_transforms.require(canonical_order(m) == canonical_order(sp).pn_swapped(), ctx);

      const bool t1 = is_type1(sp);
      const bool t2 = is_type2(sp);
      type_inclusion.require(!t1 || t2, ctx);
      if (t2 && !t1) ++type2_only_per_degree[static_cast<std::size_t>(d)];
      type_invariance.require(is_type1(m) == t1 && is_type1(r) == t1, ctx);
      type_invariance.require(is_type2(m) == t2 && is_type2(r) == t2, ctx);

      const std::vector<SignPattern> members = orbit(sp);
      orbit_law.require(members.size() == 2 || members.size() == 4, ctx);

      const CanonicityStatus status = classify_static(sp).status;
      for (const SignPattern& member : members) {
        verdict_law.require(classify_static(member).status == status, ctx);
      }
      if (status == CanonicityStatus::CertifiedCanonical) {
        verdict_law.require(t2, ctx);  // canonical families never violate type 2
      }
      if (!t2) {
        verdict_law.require(status == CanonicityStatus::CertifiedNonCanonical, ctx);
      }
    }
  }

  LawTracker coverage("type 2 strictly exceeds type 1 for every degree >= 6");
  for (int d = 6; d <= maxlen - 1; ++d) {
    coverage.require(type2_only_per_degree[static_cast<std::size_t>(d)] > 0,
                     "degree " + std::to_string(d));
  }

  LawTracker transforms("transform_witness matches the pattern/word involutions");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < witness_cases; ++i) {
    const Witness w = random_witness(rng);
    const std::string ctx = w.pattern.first_rep() + " / " + w.word.text();

    const Witness wm = transform_witness(w, Involution::M);
    transforms.require(wm.pattern == iota_m(w.pattern), ctx);
    transforms.require(wm.word == w.word.pn_swapped(), ctx);
    transforms.require(verify_witness(wm).ok, ctx);

    const Witness wr = transform_witness(w, Involution::R);
    transforms.require(wr.pattern == iota_r(w.pattern), ctx);
    transforms.require(wr.word == w.word.reversed(), ctx);

    const Witness wmr = transform_witness(w, Involution::MR);
    transforms.require(wmr.pattern == iota_mr(w.pattern), ctx);
    transforms.require(wmr.word == w.word.reversed().pn_swapped(), ctx);
    transforms.require(transform_witness(wmr, Involution::MR).roots.roots == w.roots.roots, ctx);
  }

  result.checks.push_back(round_trip.finish());
  result.checks.push_back(bijection.finish());
  result.checks.push_back(count_law.finish());
  result.checks.push_back(involution.finish());
  result.checks.push_back(order_transforms.finish());
  result.checks.push_back(type_inclusion.finish());
  result.checks.push_back(type_invariance.finish());
  result.checks.push_back(orbit_law.finish());
  result.checks.push_back(verdict_law.finish());
  result.checks.push_back(coverage.finish());
  result.checks.push_back(transforms.finish());
  return result;
}

SuiteResult suite_canonical_builder(int maxd) {
  SuiteResult result{"canonical-builder", {}};
  for (int d = 1; d <= maxd; ++d) {
    CheckResult check{"degree " + std::to_string(d), true, ""};
    int built = 0;
    for (const SignPattern& sp : enumerate_patterns(d)) {
      try {
        const Witness w = build_canonical(sp);
        if (!verify_witness(w).ok || !(w.word == canonical_order(sp)) || !(w.pattern == sp)) {
          check.pass = false;
          check.detail = "bad witness for " + sp.first_rep();
          break;
        }
        ++built;
      } catch (const Error& e) {
        check.pass = false;
        check.detail = std::string("exception for ") + sp.first_rep() + ": " + e.what();
        break;
      }
    }
    if (check.pass) check.detail = std::to_string(built) + " patterns";
    result.checks.push_back(std::move(check));
  }
  return result;
}

}  // namespace hyposign
