#include "hyposign/realize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "hyposign/catalog.hpp"
#include "hyposign/errors.hpp"

namespace hyposign {

std::vector<OrderWord> enumerate_order_words(const SignPattern& sp) {
  const int d = sp.degree();
  const int c = counts(sp).changes;
  std::vector<RootSign> letters;
  letters.insert(letters.end(), static_cast<std::size_t>(d - c), RootSign::N);
  letters.insert(letters.end(), static_cast<std::size_t>(c), RootSign::P);
  std::vector<OrderWord> words;
  do {
    words.push_back(OrderWord::from_letters(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return words;
}

int RealizabilityReport::found_count() const {
  int n = 0;
  for (const WordResult& r : words) {
    if (r.found) ++n;
  }
  return n;
}

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Hinge objective over the coefficient-sign constraints. `logmods` are the
// strictly increasing log-moduli; signs and wanted coefficient signs are
// +-1. Returns the penalty and reports the smallest relative margin.
double objective(const std::vector<double>& logmods, const std::vector<double>& root_signs,
                 const std::vector<double>& wanted, double target_margin, double* min_margin) {
  const std::size_t d = logmods.size();
  // Keep moduli inside e^[-40, 40]: everything beyond risks overflow in the
  // coefficient products and is never needed at desk scale.
  for (const double logmod : logmods) {
    if (!(std::abs(logmod) <= 40.0)) {
      if (min_margin) *min_margin = -std::numeric_limits<double>::infinity();
      return std::numeric_limits<double>::infinity();
    }
  }
  std::vector<double> coef(d + 1, 0.0);
  coef[0] = 1.0;
  std::size_t size = 1;
  for (std::size_t i = 0; i < d; ++i) {
    const double root = root_signs[i] * std::exp(logmods[i]);
    coef[size] = 0.0;
    for (std::size_t j = size; j > 0; --j) {
      coef[j] = coef[j - 1] - root * coef[j];
    }
    coef[0] *= -root;
    ++size;
  }
  double scale = 1.0;
  for (std::size_t j = 0; j < size; ++j) scale = std::max(scale, std::abs(coef[j]));
  double penalty = 0.0;
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j + 1 < size; ++j) {
    const double margin = wanted[j] * coef[j] / scale;
    lowest = std::min(lowest, margin);
    if (margin < target_margin) penalty += target_margin - margin;
  }
  if (min_margin) *min_margin = lowest;
  return penalty;
}

// Replaces each modulus by a bounded-denominator rational and re-verifies all
// constraints exactly; the denominator bound doubles until verification
// passes or the cap is reached.
std::optional<Witness> certify(const SignPattern& sp, const OrderWord& word,
                               const std::vector<double>& logmods, const SearchConfig& config,
                               WitnessMeta meta) {
  const int d = sp.degree();
  for (int blog = config.denom_start_log2; blog <= config.denom_max_log2; ++blog) {
    BigInt bound = 1;
    bound <<= blog;
    RootMultiset roots;
    roots.roots.reserve(static_cast<std::size_t>(d));
    bool usable = true;
    for (int k = 0; k < d && usable; ++k) {
      const Rational mod = rationalize(std::exp(logmods[static_cast<std::size_t>(k)]), bound);
      if (!(mod > 0)) {
        usable = false;
        break;
      }
      roots.roots.push_back(word.at(k) == RootSign::P ? mod : -mod);
    }
    if (!usable) continue;
    try {
      Witness w = make_witness(std::move(roots), meta);
      if (w.pattern == sp && w.word == word) return w;
    } catch (const Error&) {
      // collapsed moduli or vanished coefficient at this precision
    }
  }
  return std::nullopt;
}

struct RestartInit {
  double gap_lo = 0.0;
  double gap_hi = 0.0;
};

}  // namespace

SearchOutcome search_realization(const SignPattern& sp, const OrderWord& word,
                                 const SearchConfig& config) {
  const int d = sp.degree();
  const Counts cnt = counts(sp);
  if (word.length() != d || word.count_p() != cnt.changes) {
    throw InvalidWord("word " + word.text() + " does not fit " + sp.second_rep());
  }
  if (word == canonical_order(sp)) {
    Witness w = build_canonical(sp);
    w.meta.seed = config.seed;
    return {std::move(w), 0};
  }

  const std::uint64_t word_seed =
      fnv1a(word.text(), fnv1a(sp.first_rep(), fnv1a(std::to_string(config.seed))));
  std::mt19937_64 rng(word_seed);

  std::vector<double> wanted(static_cast<std::size_t>(d));
  for (int e = 0; e < d; ++e) {
    wanted[static_cast<std::size_t>(e)] = sp.at_exponent(e) == Sign::Plus ? 1.0 : -1.0;
  }
  std::vector<double> root_signs(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    root_signs[static_cast<std::size_t>(k)] = word.at(k) == RootSign::P ? 1.0 : -1.0;
  }

  const double min_gap = std::ldexp(1.0, config.min_gap_log2);
  const double accept_margin = std::ldexp(1.0, config.accept_margin_log2);
  const double target_margin = std::ldexp(1.0, -10);

  WitnessMeta meta;
  meta.method = "search";
  meta.seed = config.seed;

  std::vector<double> params(static_cast<std::size_t>(d));
  std::vector<double> logmods(static_cast<std::size_t>(d));
  auto fill_logmods = [&] {
    double acc = params[0];
    logmods[0] = acc;
    for (int k = 1; k < d; ++k) {
      acc += params[static_cast<std::size_t>(k)];
      logmods[static_cast<std::size_t>(k)] = acc;
    }
  };

  for (std::uint32_t restart = 1; restart <= config.budget; ++restart) {
    // Alternate between a wide-spread and a near-1 clustered initialization;
    // realizable orders live in both regimes.
    const bool cluster = (rng() & 1) != 0;
    const RestartInit init = cluster ? RestartInit{std::log(1e-6), std::log(0.08)}
                                     : RestartInit{std::log(1e-4), std::log(1.25)};
    params[0] = cluster ? uniform(rng, -0.25, 0.25) : uniform(rng, -2.5, 1.0);
    for (int k = 1; k < d; ++k) {
      params[static_cast<std::size_t>(k)] =
          std::max(min_gap, std::exp(uniform(rng, init.gap_lo, init.gap_hi)));
    }

    fill_logmods();
    double margin = 0.0;
    double best = objective(logmods, root_signs, wanted, target_margin, &margin);
    std::uint32_t evals = 1;
    double factor = 4.0;
    double step = 1.0;

    while (true) {
      if (margin >= accept_margin) {
        meta.params = {{"restarts", std::to_string(restart)}};
        if (auto w = certify(sp, word, logmods, config, meta)) {
          return {std::move(w), restart};
        }
      }
      if (best == 0.0 || evals >= config.max_iters) break;

      bool improved = false;
      for (int coord = 0; coord < d && evals < config.max_iters; ++coord) {
        const double saved = params[static_cast<std::size_t>(coord)];
        double best_value = saved;
        for (int dir = 0; dir < 2; ++dir) {
          double candidate;
          if (coord == 0) {
            candidate = dir == 0 ? saved + step : saved - step;
          } else {
            candidate = dir == 0 ? saved * factor : saved / factor;
            candidate = std::max(candidate, min_gap);
          }
          params[static_cast<std::size_t>(coord)] = candidate;
          fill_logmods();
          double cand_margin = 0.0;
          const double value =
              objective(logmods, root_signs, wanted, target_margin, &cand_margin);
          ++evals;
          if (value < best - 1e-15) {
            best = value;
            margin = cand_margin;
            best_value = candidate;
            improved = true;
          }
          if (evals >= config.max_iters) break;
        }
        params[static_cast<std::size_t>(coord)] = best_value;
        fill_logmods();
      }
      if (!improved) {
        factor = std::sqrt(factor);
        step /= 2.0;
        if (factor < 1.001) break;
      }
    }

    // One more certification attempt at the restart's local optimum.
    if (margin >= accept_margin) {
      meta.params = {{"restarts", std::to_string(restart)}};
      if (auto w = certify(sp, word, logmods, config, meta)) {
        return {std::move(w), restart};
      }
    }
  }
  return {std::nullopt, config.budget};
}

RealizabilityReport explore(const SignPattern& sp, const SearchConfig& config, unsigned jobs,
                            Catalog* catalog) {
  const std::vector<OrderWord> words = enumerate_order_words(sp);
  std::vector<SearchOutcome> outcomes(words.size());
  auto run_one = [&](std::size_t i) { outcomes[i] = search_realization(sp, words[i], config); };

  const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(words.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < words.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= words.size()) return;
          run_one(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  RealizabilityReport report{sp, config, {}};
  report.words.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const bool found = outcomes[i].witness.has_value();
    report.words.push_back(
        WordResult{words[i], found, std::move(outcomes[i].witness), outcomes[i].restarts_used});
  }

  if (catalog) {
    for (const WordResult& result : report.words) {
      if (result.witness) catalog->put(*result.witness);
    }
  }
  return report;
}

SeedFinder make_seed_finder(const SearchConfig& config, Catalog* catalog) {
  return [config, catalog](const SignPattern& sp) -> std::optional<std::pair<Witness, Witness>> {
    const OrderWord canon_word = canonical_order(sp);
    std::optional<Witness> canon;
    if (catalog) canon = catalog->get(sp, canon_word);
    if (!canon) {
      canon = build_canonical(sp);
      if (catalog) catalog->put(*canon);
    }
    for (const OrderWord& word : enumerate_order_words(sp)) {
      if (word == canon_word) continue;
      std::optional<Witness> other;
      if (catalog) other = catalog->get(sp, word);
      if (!other) {
        SearchOutcome outcome = search_realization(sp, word, config);
        if (outcome.witness) {
          other = std::move(outcome.witness);
          if (catalog) catalog->put(*other);
        }
      }
      if (other) return std::make_pair(*canon, *other);
    }
    return std::nullopt;
  };
}

CanonicityVerdict decide_canonicity(const SignPattern& sp, const SearchConfig& config,
                                    const SeedFinder& finder) {
  const StaticClassification st = classify_static(sp);
  if (st.status == CanonicityStatus::CertifiedCanonical) {
    return {st.status, st.rule, std::nullopt, {}};
  }
  if (st.status == CanonicityStatus::CertifiedNonCanonical) {
    const SeedFinder& source = finder ? finder : make_seed_finder(config);
    auto pair = build_noncanonical_pair(sp, source);
    return {st.status, st.rule, std::move(pair), {}};
  }

  Witness canon = build_canonical(sp);
  const OrderWord canon_word = canonical_order(sp);
  std::vector<AttemptRecord> attempts;
  for (const OrderWord& word : enumerate_order_words(sp)) {
    if (word == canon_word) continue;
    SearchOutcome outcome = search_realization(sp, word, config);
    attempts.push_back({word, outcome.restarts_used, outcome.witness.has_value()});
    if (outcome.witness) {
      return {CanonicityStatus::CertifiedNonCanonical, "search realized word " + word.text(),
              std::make_pair(std::move(canon), *std::move(outcome.witness)),
              std::move(attempts)};
    }
  }
  return {CanonicityStatus::Inconclusive,
          "search budget exhausted over " + std::to_string(attempts.size()) +
              " non-canonical words",
          std::nullopt, std::move(attempts)};
}

}  // namespace hyposign
