#include "hyposign/construct.hpp"

#include <algorithm>

#include "hyposign/errors.hpp"

namespace hyposign {

namespace {

constexpr int kShrinkCap = 64;

Rational min_modulus(const Witness& w) {
  Rational best = abs(w.roots.roots.front());
  for (const Rational& root : w.roots.roots) {
    Rational mod = abs(root);
    if (mod < best) best = mod;
  }
  return best;
}

Rational max_modulus(const Witness& w) {
  Rational best = abs(w.roots.roots.front());
  for (const Rational& root : w.roots.roots) {
    Rational mod = abs(root);
    if (mod > best) best = mod;
  }
  return best;
}

ConcatKind kind_of(CpLetter letter) {
  return letter == CpLetter::Preserve ? ConcatKind::Preserve : ConcatKind::Change;
}

RootSign word_letter(ConcatKind kind) {
  return kind == ConcatKind::Preserve ? RootSign::N : RootSign::P;
}

}  // namespace

EpsilonChain::EpsilonChain(Rational shrink) : shrink_(std::move(shrink)) {
  if (!(shrink_ > 0 && shrink_ < 1)) throw Error("shrink factor must lie in (0,1)");
}

Rational EpsilonChain::select(Rational start, const std::function<bool(const Rational&)>& ok) {
  if (!(start > 0)) throw Error("epsilon start must be positive");
  if (!values_.empty() && start >= values_.back()) {
    start = values_.back() * shrink_;
  }
  Rational candidate = start;
  for (int k = 0; k <= kShrinkCap; ++k) {
    if (ok(candidate)) {
      values_.push_back(candidate);
      return candidate;
    }
    candidate *= shrink_;
  }
  throw DeformationBudgetExhausted("no admissible scale after 64 shrinks");
}

Witness concat_back(const Witness& w, ConcatKind kind, EpsilonChain* chain) {
  std::vector<Sign> signs = w.pattern.signs();
  signs.push_back(kind == ConcatKind::Preserve ? signs.back() : flipped(signs.back()));
  const SignPattern expected_pattern = SignPattern::from_signs(std::move(signs));

  std::vector<RootSign> letters{word_letter(kind)};
  letters.insert(letters.end(), w.word.letters().begin(), w.word.letters().end());
  const OrderWord expected_word = OrderWord::from_letters(std::move(letters));

  const Rational lower = min_modulus(w);
  const Rational start = std::min(Rational(1), lower) / 4;

  EpsilonChain local;
  EpsilonChain& chain_ref = chain ? *chain : local;
  std::optional<Witness> accepted;
  chain_ref.select(start, [&](const Rational& eps) {
    if (!(eps < lower)) return false;
    RootMultiset roots = w.roots;
    roots.roots.push_back(kind == ConcatKind::Preserve ? -eps : eps);
    try {
      Witness candidate = make_witness(std::move(roots), w.meta);
      if (candidate.pattern == expected_pattern && candidate.word == expected_word) {
        accepted = std::move(candidate);
        return true;
      }
    } catch (const Error&) {
      // zero coefficient or tied modulus at this eps; shrink further
    }
    return false;
  });
  return *std::move(accepted);
}

Witness concat_front(const Witness& w, ConcatKind kind, EpsilonChain* chain) {
  std::vector<CpLetter> letters{to_letter(kind)};
  const CpPattern old_word = cpp_of(w.pattern);
  letters.insert(letters.end(), old_word.letters().begin(), old_word.letters().end());
  const SignPattern expected_pattern = CpPattern::from_letters(std::move(letters)).to_sign_pattern();

  std::vector<RootSign> word_letters = w.word.letters();
  word_letters.push_back(word_letter(kind));
  const OrderWord expected_word = OrderWord::from_letters(std::move(word_letters));

  const Rational upper = max_modulus(w);
  const Rational inverse_upper = Rational(1) / upper;
  const Rational start = std::min(Rational(1), inverse_upper) / 4;

  EpsilonChain local;
  EpsilonChain& chain_ref = chain ? *chain : local;
  std::optional<Witness> accepted;
  chain_ref.select(start, [&](const Rational& eps) {
    const Rational new_mod = 1 / eps;
    if (!(new_mod > upper)) return false;
    RootMultiset roots = w.roots;
    roots.roots.push_back(kind == ConcatKind::Preserve ? -new_mod : new_mod);
    try {
      Witness candidate = make_witness(std::move(roots), w.meta);
      if (candidate.pattern == expected_pattern && candidate.word == expected_word) {
        accepted = std::move(candidate);
        return true;
      }
    } catch (const Error&) {
    }
    return false;
  });
  return *std::move(accepted);
}

Witness build_canonical(const SignPattern& sp) {
  const CpPattern word = cpp_of(sp);
  WitnessMeta meta;
  meta.method = "canonical-builder";
  RootMultiset base;
  base.roots.push_back(word.at(0) == CpLetter::Change ? Rational(1) : Rational(-1));
  Witness w = make_witness(std::move(base), std::move(meta));
  EpsilonChain chain;
  for (int k = 1; k < word.length(); ++k) {
    w = concat_back(w, kind_of(word.at(k)), &chain);
  }
  if (!(w.pattern == sp) || !(w.word == canonical_order(sp))) {
    throw Error("canonical builder postcondition failed for " + sp.second_rep());
  }
  return w;
}

std::vector<Witness> example_cubics() {
  auto cubic = [](const Rational& b, const Rational& c) {
    WitnessMeta meta;
    meta.method = "example-cubic";
    RootMultiset roots;
    roots.roots = {Rational(-1), b, c};
    return make_witness(std::move(roots), std::move(meta));
  };
  return {
      cubic(Rational(3, 2), Rational(8, 5)),  // word NPP
      cubic(Rational(3, 2), Rational(3, 5)),  // word PNP
      cubic(Rational(1, 2), Rational(3, 5)),  // word PPN
  };
}

std::pair<Witness, Witness> example_cubic_pair() {
  std::vector<Witness> all = example_cubics();
  return {std::move(all[0]), std::move(all[1])};
}

std::pair<Witness, Witness> build_noncanonical_pair(const SignPattern& sp,
                                                    const SeedFinder& finder) {
  if (is_type2(sp)) {
    throw NotApplicable("pattern " + sp.second_rep() + " is type 2");
  }
  const std::vector<int> comps = sp.components();
  const int s = static_cast<int>(comps.size());

  // Locate the violating slice: the first pair of adjacent blocks both > 1,
  // else the first interior block equal to 2 (whose neighbours are then units).
  int slice_start = -1;
  int slice_len = 0;
  std::optional<std::pair<Witness, Witness>> seeds;
  int offset = 0;
  for (int i = 0; i + 1 < s; ++i) {
    if (comps[static_cast<std::size_t>(i)] > 1 && comps[static_cast<std::size_t>(i + 1)] > 1) {
      slice_start = offset;
      slice_len = comps[static_cast<std::size_t>(i)] + comps[static_cast<std::size_t>(i + 1)];
      const SignPattern seed_pattern = SignPattern::from_components(
          {comps[static_cast<std::size_t>(i)], comps[static_cast<std::size_t>(i + 1)]});
      if (!finder) {
        throw SeedUnavailable("no seed finder for " + seed_pattern.second_rep());
      }
      seeds = finder(seed_pattern);
      if (!seeds) {
        throw SeedUnavailable("seed search failed for " + seed_pattern.second_rep());
      }
      break;
    }
    offset += comps[static_cast<std::size_t>(i)];
  }
  if (slice_start < 0) {
    offset = comps[0];
    for (int i = 1; i + 1 < s; ++i) {
      if (comps[static_cast<std::size_t>(i)] == 2) {
        slice_start = offset - comps[static_cast<std::size_t>(i - 1)];
        slice_len = 4;
        seeds = example_cubic_pair();
        break;
      }
      offset += comps[static_cast<std::size_t>(i)];
    }
  }
  if (!seeds) throw Error("type-2 violation not located in " + sp.second_rep());

  if (seeds->first.pattern == seeds->second.pattern && seeds->first.word == seeds->second.word) {
    throw SeedUnavailable("seed pair does not have distinct order words");
  }

  const CpPattern word = cpp_of(sp);
  const int d = sp.degree();
  const int slice_end = slice_start + slice_len - 1;
  auto extend = [&](Witness w) {
    EpsilonChain back_chain, front_chain;
    for (int k = slice_end; k < d; ++k) {
      w = concat_back(w, kind_of(word.at(k)), &back_chain);
    }
    for (int k = slice_start - 1; k >= 0; --k) {
      w = concat_front(w, kind_of(word.at(k)), &front_chain);
    }
    if (!(w.pattern == sp)) {
      throw Error("pair construction produced wrong pattern for " + sp.second_rep());
    }
    return w;
  };
  Witness first = extend(seeds->first);
  Witness second = extend(seeds->second);
  if (first.word == second.word) {
    throw Error("pair construction collapsed the order words for " + sp.second_rep());
  }
  return {std::move(first), std::move(second)};
}

std::string_view to_string(Side side) {
  switch (side) {
    case Side::None:
      return "none";
    case Side::Left:
      return "left";
    case Side::Right:
      return "right";
  }
  return "?";
}

Side side_from_string(std::string_view text) {
  if (text == "none") return Side::None;
  if (text == "left") return Side::Left;
  if (text == "right") return Side::Right;
  throw ParseError("bad side '" + std::string(text) + "'");
}

ThreeBlockPlan ThreeBlockPlan::make(int r, int delta, int tau1, int tau2, Side side) {
  if (r < 2) throw HypothesisViolation("r must be >= 2");
  if (delta < r * r || delta >= (r + 1) * (r + 1)) {
    throw HypothesisViolation("delta must satisfy r^2 <= delta < (r+1)^2");
  }
  if (tau1 < 0 || tau2 < 0) throw HypothesisViolation("tau1, tau2 must be >= 0");
  if (delta == r * r && side == Side::None) {
    throw HypothesisViolation("delta = r^2 requires a side");
  }
  if (delta != r * r && side != Side::None) {
    throw HypothesisViolation("side only applies when delta = r^2");
  }
  return ThreeBlockPlan{r, delta, tau1, tau2, side};
}

int ThreeBlockPlan::part() const {
  if (delta == r * r) return 3;
  return (delta - r) % 2 != 0 ? 1 : 2;
}

SignPattern ThreeBlockPlan::pattern() const {
  switch (part()) {
    case 1: {
      const int wing = (delta - r + 1) / 2;
      return SignPattern::from_components({tau1 + wing, r, tau2 + wing});
    }
    case 2: {
      const int wing = (delta - r) / 2;
      return SignPattern::from_components({tau1 + wing, r + 1, tau2 + wing});
    }
    default: {
      const int wing = r * (r - 1) / 2;
      if (side == Side::Left) {
        return SignPattern::from_components({tau1 + wing + 1, r, tau2 + wing});
      }
      return SignPattern::from_components({tau1 + wing, r, tau2 + wing + 1});
    }
  }
}

namespace {

std::vector<OrderWord> two_positive_words(int length) {
  std::vector<RootSign> letters(static_cast<std::size_t>(length), RootSign::N);
  letters[static_cast<std::size_t>(length) - 2] = RootSign::P;
  letters[static_cast<std::size_t>(length) - 1] = RootSign::P;
  std::sort(letters.begin(), letters.end());
  std::vector<OrderWord> words;
  do {
    words.push_back(OrderWord::from_letters(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return words;
}

// Arithmetic-progression moduli 1 + (2k - (count-1)) * h/2, k = 0..count-1.
std::vector<Rational> progression_moduli(int count, const Rational& h) {
  std::vector<Rational> moduli;
  moduli.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    moduli.push_back(1 + Rational(2 * k - (count - 1)) * h / 2);
  }
  return moduli;
}

RootMultiset signed_roots(const std::vector<Rational>& moduli,
                          const std::vector<RootSign>& letters) {
  RootMultiset roots;
  roots.roots.reserve(moduli.size());
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    roots.roots.push_back(letters[k] == RootSign::P ? moduli[k] : -moduli[k]);
  }
  return roots;
}

// Parts 1-2: deform the double root 1 and the (delta-2)-fold root -1 of
// (x-1)^2 (x+1)^(delta-2) into distinct moduli clustered around 1 and ordered
// per core_word. Shrinking the cluster width recovers the undeformed
// coefficient signs, which have no zero here.
Witness bulk_core(const ThreeBlockPlan& plan, const OrderWord& core_word) {
  const ThreeBlockPlan base = ThreeBlockPlan::make(plan.r, plan.delta, 0, 0, plan.side);
  const SignPattern expected = base.pattern();
  const int count = plan.delta;
  EpsilonChain widths;
  std::optional<Witness> accepted;
  widths.select(Rational(1, 2 * (count - 1)), [&](const Rational& h) {
    try {
      Witness candidate =
          make_witness(signed_roots(progression_moduli(count, h), core_word.letters()));
      if (candidate.pattern == expected && candidate.word == core_word) {
        accepted = std::move(candidate);
        return true;
      }
    } catch (const Error&) {
    }
    return false;
  });
  return *std::move(accepted);
}

// Part 3: pick eps so that (x + 1 +- eps) * (x-1)^2 (x+1)^(r^2-3) realizes the
// expected pattern exactly, then deform the clustered roots while keeping
// their moduli at distance >= eps/2 from 1 +- eps, so the special root stays
// extremal.
Witness special_core(const ThreeBlockPlan& plan, const OrderWord& core_word) {
  const int r = plan.r;
  const int inner_count = r * r - 1;
  const ThreeBlockPlan base = ThreeBlockPlan::make(r, plan.delta, 0, 0, plan.side);
  const SignPattern expected = base.pattern();

  RootMultiset cluster;
  cluster.roots = {Rational(1), Rational(1)};
  cluster.roots.insert(cluster.roots.end(), static_cast<std::size_t>(r * r - 3), Rational(-1));
  const RationalPoly undisturbed = poly_from_roots(cluster);

  EpsilonChain eps_chain;
  const Rational eps = eps_chain.select(Rational(1, 4), [&](const Rational& e) {
    const Rational shift = plan.side == Side::Left ? Rational(1 + e) : Rational(1 - e);
    if (!(shift > 0)) return false;
    const RationalPoly candidate =
        undisturbed * RationalPoly::from_coeffs({shift, Rational(1)});
    const CoeffPattern pattern = sign_pattern_of(candidate);
    const auto* sp = std::get_if<SignPattern>(&pattern);
    return sp != nullptr && *sp == expected;
  });

  const Rational special_mod = plan.side == Side::Left ? Rational(1 + eps) : Rational(1 - eps);
  const int special_slot = plan.side == Side::Left ? core_word.length() - 1 : 0;
  if (core_word.at(special_slot) != RootSign::N) {
    throw Error("special slot of the core word is not N");
  }
  std::vector<RootSign> inner_letters = core_word.letters();
  inner_letters.erase(inner_letters.begin() + special_slot);

  EpsilonChain widths;
  std::optional<Witness> accepted;
  widths.select(eps / (2 * (inner_count - 1)), [&](const Rational& h) {
    // Cluster diameter (inner_count-1)*h stays within eps/2 of modulus 1.
    if (!(Rational(inner_count - 1) * h / 2 < eps / 2)) return false;
    RootMultiset roots = signed_roots(progression_moduli(inner_count, h), inner_letters);
    roots.roots.push_back(-special_mod);
    try {
      Witness candidate = make_witness(std::move(roots));
      if (candidate.pattern == expected && candidate.word == core_word) {
        accepted = std::move(candidate);
        return true;
      }
    } catch (const Error&) {
    }
    return false;
  });
  return *std::move(accepted);
}

}  // namespace

std::vector<OrderWord> admissible_three_block_words(const ThreeBlockPlan& plan) {
  std::vector<OrderWord> words;
  for (OrderWord& word : two_positive_words(plan.degree())) {
    const auto stats = word.two_positive_stats();
    if (stats->above >= plan.min_above() && stats->below >= plan.min_below()) {
      words.push_back(std::move(word));
    }
  }
  return words;
}

Witness realize_three_block(const ThreeBlockPlan& plan, const OrderWord& target) {
  ThreeBlockPlan::make(plan.r, plan.delta, plan.tau1, plan.tau2, plan.side);
  if (target.length() != plan.degree()) {
    throw HypothesisViolation("target word length != delta + tau1 + tau2");
  }
  const auto stats = target.two_positive_stats();
  if (!stats) throw HypothesisViolation("target word must have exactly two P letters");
  if (stats->above < plan.min_above() || stats->below < plan.min_below()) {
    throw HypothesisViolation("target word violates the admissibility bounds");
  }

  const auto& letters = target.letters();
  const std::vector<RootSign> core_letters(letters.begin() + plan.tau2,
                                           letters.begin() + plan.tau2 + plan.delta);
  const OrderWord core_word = OrderWord::from_letters(core_letters);

  Witness w = plan.part() == 3 ? special_core(plan, core_word) : bulk_core(plan, core_word);

  EpsilonChain front_chain, back_chain;
  for (int t = 0; t < plan.tau1; ++t) w = concat_front(w, ConcatKind::Preserve, &front_chain);
  for (int t = 0; t < plan.tau2; ++t) w = concat_back(w, ConcatKind::Preserve, &back_chain);

  if (!(w.pattern == plan.pattern()) || !(w.word == target)) {
    throw Error("three-block construction postcondition failed");
  }
  w.meta.method = "three-block";
  w.meta.params = {{"r", std::to_string(plan.r)},
                   {"delta", std::to_string(plan.delta)},
                   {"tau1", std::to_string(plan.tau1)},
                   {"tau2", std::to_string(plan.tau2)},
                   {"side", std::string(to_string(plan.side))},
                   {"part", std::to_string(plan.part())}};
  return w;
}

}  // namespace hyposign
