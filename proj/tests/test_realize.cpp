#include "doctest.h"

#include "hyposign/errors.hpp"
#include "hyposign/json_io.hpp"
#include "hyposign/realize.hpp"
#include "hyposign/suites.hpp"

using namespace hyposign;

TEST_CASE("order word enumeration") {
  const auto words_121 = enumerate_order_words(SignPattern::parse("S{1,2,1}"));
  REQUIRE(words_121.size() == 3);
  CHECK(words_121[0].text() == "NPP");
  CHECK(words_121[1].text() == "PNP");
  CHECK(words_121[2].text() == "PPN");

  CHECK(enumerate_order_words(SignPattern::parse("S{3,2,3}")).size() == 21);

  const auto all_plus = enumerate_order_words(SignPattern::parse("+++++"));
  REQUIRE(all_plus.size() == 1);
  CHECK(all_plus[0].text() == "NNNN");
}

TEST_CASE("search delegates the canonical word to the builder") {
  const SignPattern sp = SignPattern::parse("S{2,2,3}");
  SearchConfig config;
  config.seed = 7;
  const SearchOutcome outcome = search_realization(sp, canonical_order(sp), config);
  REQUIRE(outcome.witness.has_value());
  CHECK(outcome.restarts_used == 0);
  CHECK(outcome.witness->meta.method == "canonical-builder");
  CHECK(outcome.witness->word == canonical_order(sp));
}

TEST_CASE("search rejects incompatible words") {
  const SignPattern sp = SignPattern::parse("S{1,2,1}");
  SearchConfig config;
  CHECK_THROWS_AS(search_realization(sp, OrderWord::parse("NNP"), config), InvalidWord);
  CHECK_THROWS_AS(search_realization(sp, OrderWord::parse("NPPP"), config), InvalidWord);
}

TEST_CASE("search certifies a non-canonical word exactly") {
  const SignPattern sp = SignPattern::parse("S{1,2,1}");
  SearchConfig config;
  config.seed = 7;
  const SearchOutcome outcome = search_realization(sp, OrderWord::parse("NPP"), config);
  REQUIRE(outcome.witness.has_value());
  const Witness& w = *outcome.witness;
  CHECK(w.pattern == sp);
  CHECK(w.word.text() == "NPP");
  CHECK(verify_witness(w).ok);
  CHECK(w.meta.method == "search");
}

TEST_CASE("explore finds all three realizations of S{1,2,1}") {
  SearchConfig config;
  config.budget = 50;
  config.seed = 7;
  const RealizabilityReport report = explore(SignPattern::parse("S{1,2,1}"), config);
  CHECK(report.found_count() == 3);
  for (const WordResult& result : report.words) {
    REQUIRE(result.witness.has_value());
    CHECK(verify_witness(*result.witness).ok);
  }
}

TEST_CASE("explore is deterministic and job-count independent") {
  const SignPattern sp = SignPattern::parse("S{2,2}");
  SearchConfig config;
  config.budget = 30;
  config.seed = 123;
  const std::string serial = report_to_json(explore(sp, config, 1));
  const std::string serial_again = report_to_json(explore(sp, config, 1));
  const std::string parallel = report_to_json(explore(sp, config, 4));
  CHECK(serial == serial_again);
  CHECK(serial == parallel);

  SearchConfig other = config;
  other.seed = 124;
  CHECK_FALSE(report_to_json(explore(sp, other, 1)) == serial);
}

TEST_CASE("explore always contains the canonical word (spot check, small degrees)") {
  SearchConfig config;
  config.budget = 1;
  config.max_iters = 10;
  config.seed = 3;
  for (int d = 1; d <= 5; ++d) {
    for (const SignPattern& sp : enumerate_patterns(d)) {
      const RealizabilityReport report = explore(sp, config);
      const OrderWord canon = canonical_order(sp);
      bool canon_found = false;
      for (const WordResult& result : report.words) {
        if (result.word == canon) canon_found = result.found;
      }
      CAPTURE(sp.first_rep());
      CHECK(canon_found);
    }
  }
}

TEST_CASE("decide_canonicity across the three verdict shapes") {
  SearchConfig config;
  config.seed = 7;

  const CanonicityVerdict canonical =
      decide_canonicity(SignPattern::parse("S{1,3,1}"), config);
  CHECK(canonical.status == CanonicityStatus::CertifiedCanonical);
  CHECK_FALSE(canonical.witnesses.has_value());

  const CanonicityVerdict refuted = decide_canonicity(SignPattern::parse("S{2,2,3}"), config);
  CHECK(refuted.status == CanonicityStatus::CertifiedNonCanonical);
  REQUIRE(refuted.witnesses.has_value());
  CHECK(refuted.witnesses->first.pattern == SignPattern::parse("S{2,2,3}"));
  CHECK(refuted.witnesses->first.pattern == refuted.witnesses->second.pattern);
  CHECK_FALSE(refuted.witnesses->first.word == refuted.witnesses->second.word);
  CHECK(verify_witness(refuted.witnesses->first).ok);
  CHECK(verify_witness(refuted.witnesses->second).ok);

  SearchConfig tiny;
  tiny.budget = 2;
  tiny.max_iters = 20;
  tiny.seed = 7;
  const CanonicityVerdict open = decide_canonicity(SignPattern::parse("S{3,1,1,3}"), tiny);
  CHECK(open.status == CanonicityStatus::Inconclusive);
  CHECK_FALSE(open.attempts.empty());
  for (const AttemptRecord& attempt : open.attempts) {
    CHECK(attempt.restarts_used == tiny.budget);
    CHECK_FALSE(attempt.found);
  }
}

TEST_CASE("witness JSON round-trips bit-exactly") {
  SearchConfig config;
  config.seed = 7;
  const SearchOutcome outcome =
      search_realization(SignPattern::parse("S{1,2,1}"), OrderWord::parse("NPP"), config);
  REQUIRE(outcome.witness.has_value());
  const std::string text = witness_to_json(*outcome.witness);
  const Witness back = witness_from_json(text);
  CHECK(back.roots.roots == outcome.witness->roots.roots);
  CHECK(back.poly == outcome.witness->poly);
  CHECK(back.pattern == outcome.witness->pattern);
  CHECK(back.word == outcome.witness->word);
  CHECK(back.meta.method == outcome.witness->meta.method);
  CHECK(witness_to_json(back) == text);

  CHECK_THROWS_AS(witness_from_json("{"), ParseError);
  CHECK_THROWS_AS(witness_from_json(R"({"roots":["1/1"],"pattern":"+-","word":"N"})"),
                  ParseError);  // claimed word is wrong (root is positive)
}
