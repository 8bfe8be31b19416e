#include "hyposign/json_io.hpp"

#include <nlohmann/json.hpp>

#include "hyposign/errors.hpp"

namespace hyposign {

using nlohmann::json;

namespace {

json meta_to_json(const WitnessMeta& meta) {
  json params = json::object();
  for (const auto& [key, value] : meta.params) params[key] = value;
  return json{{"method", meta.method}, {"seed", meta.seed}, {"params", params}};
}

WitnessMeta meta_from_json(const json& j) {
  WitnessMeta meta;
  meta.method = j.value("method", std::string{});
  meta.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("params")) {
    for (const auto& [key, value] : j.at("params").items()) {
      meta.params[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  return meta;
}

json witness_to_json_value(const Witness& w) {
  json roots = json::array();
  for (const Rational& root : w.roots.roots) roots.push_back(rational_to_string(root));
  json coeffs = json::array();
  for (const Rational& c : w.poly.coeffs()) coeffs.push_back(rational_to_string(c));
  return json{{"roots", roots},
              {"coeffs", coeffs},
              {"pattern", w.pattern.first_rep()},
              {"word", w.word.text()},
              {"meta", meta_to_json(w.meta)}};
}

Witness witness_from_json_value(const json& j) {
  RootMultiset roots;
  for (const auto& entry : j.at("roots")) {
    roots.roots.push_back(rational_from_string(entry.get<std::string>()));
  }
  Witness w = make_witness(std::move(roots), meta_from_json(j.value("meta", json::object())));
  const SignPattern pattern = SignPattern::parse(j.at("pattern").get<std::string>(), SpRep::First);
  const OrderWord word = OrderWord::parse(j.at("word").get<std::string>());
  if (!(w.pattern == pattern)) throw ParseError("stored pattern does not match the roots");
  if (!(w.word == word)) throw ParseError("stored order word does not match the roots");
  if (j.contains("coeffs")) {
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != w.poly.coeffs().size()) {
      throw ParseError("stored coefficient count does not match the roots");
    }
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
      if (!(rational_from_string(coeffs[e].get<std::string>()) ==
            w.poly.at(static_cast<int>(e)))) {
        throw ParseError("stored coefficient mismatch at exponent " + std::to_string(e));
      }
    }
  }
  return w;
}

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

}  // namespace

std::string witness_to_json(const Witness& w, int indent) {
  return dump(witness_to_json_value(w), indent);
}

Witness witness_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad witness JSON: ") + e.what());
  }
  try {
    return witness_from_json_value(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad witness JSON: ") + e.what());
  }
}

std::string report_to_json(const RealizabilityReport& report, int indent) {
  json words = json::array();
  for (const WordResult& result : report.words) {
    json entry{{"word", result.word.text()},
               {"status", result.found ? "found" : "not-found"},
               {"restartsUsed", result.restarts_used}};
    if (result.witness) entry["witness"] = json::parse(witness_to_json(*result.witness));
    words.push_back(std::move(entry));
  }
  const SearchConfig& c = report.config;
  json config{{"budget", c.budget},
              {"seed", c.seed},
              {"maxIters", c.max_iters},
              {"margins",
               {{"minGapLog2", c.min_gap_log2},
                {"acceptMarginLog2", c.accept_margin_log2},
                {"denomStartLog2", c.denom_start_log2},
                {"denomMaxLog2", c.denom_max_log2}}}};
  return dump(json{{"sp", report.sp.first_rep()}, {"config", config}, {"words", words}}, indent);
}

std::string verdict_to_json(const CanonicityVerdict& verdict, int indent) {
  json j{{"status", std::string(to_string(verdict.status))},
         {"justification", verdict.justification}};
  if (verdict.witnesses) {
    j["witnesses"] = json::array({json::parse(witness_to_json(verdict.witnesses->first)),
                                  json::parse(witness_to_json(verdict.witnesses->second))});
  }
  if (!verdict.attempts.empty()) {
    json attempts = json::array();
    for (const AttemptRecord& attempt : verdict.attempts) {
      attempts.push_back(json{{"word", attempt.word.text()},
                              {"restartsUsed", attempt.restarts_used},
                              {"found", attempt.found}});
    }
    j["attempts"] = std::move(attempts);
  }
  return dump(j, indent);
}

}  // namespace hyposign
