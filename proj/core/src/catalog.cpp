#include "hyposign/catalog.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "hyposign/errors.hpp"
#include "hyposign/json_io.hpp"

namespace hyposign {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

std::pair<std::string, std::string> key_of(const Witness& w) {
  return {w.pattern.first_rep(), w.word.text()};
}

}  // namespace

Catalog::Catalog(std::filesystem::path file) : path_(std::move(file)) {
  if (path_.has_parent_path()) {
    std::filesystem::create_directories(path_.parent_path());
  }
  std::ifstream in(path_);
  if (!in.is_open()) {
    // First use: create the file so later appends cannot surprise-fail.
    std::ofstream create(path_, std::ios::app);
    if (!create.is_open()) throw StorageError("cannot create catalog at " + path_.string());
    return;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json record = json::parse(line);
      if (record.value("schema", 0) != kSchemaVersion) {
        throw ParseError("unsupported schema version");
      }
      Witness w = witness_from_json(record.at("witness").dump());
      const json& key = record.at("key");
      if (key.at("pattern").get<std::string>() != w.pattern.first_rep() ||
          key.at("word").get<std::string>() != w.word.text()) {
        throw ParseError("key does not match witness");
      }
      auto map_key = key_of(w);
      records_.try_emplace(std::move(map_key), std::move(w));  // first write wins
    } catch (const std::exception& e) {
      quarantined_.push_back({line_no, e.what()});
    }
  }
}

std::filesystem::path Catalog::resolve_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("HYPOSIGN_CATALOG"); env != nullptr && *env != '\0') {
    return env;
  }
  return "catalog.jsonl";
}

bool Catalog::put(const Witness& w) {
  const VerifyReport report = verify_witness(w);
  if (!report.ok) {
    throw Error("refusing to store a witness that fails verification: " +
                report.issues.front().what);
  }
  std::lock_guard<std::mutex> lock(write_mutex_);
  auto key = key_of(w);
  if (records_.contains(key)) return false;

  json record{{"schema", kSchemaVersion},
              {"key", {{"pattern", key.first}, {"word", key.second}}},
              {"witness", json::parse(witness_to_json(w))},
              {"createdBy", {{"method", w.meta.method}, {"seed", w.meta.seed}}}};
  std::ofstream out(path_, std::ios::app);
  if (!out.is_open()) throw StorageError("cannot append to catalog at " + path_.string());
  out << record.dump() << '\n';
  out.flush();
  if (!out) throw StorageError("write to catalog failed at " + path_.string());
  records_.emplace(std::move(key), w);
  return true;
}

std::optional<Witness> Catalog::get(const SignPattern& sp, const OrderWord& word) const {
  const auto it = records_.find({sp.first_rep(), word.text()});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

std::vector<Witness> Catalog::scan(const SignPattern& sp) const {
  std::vector<Witness> out;
  const std::string pattern = sp.first_rep();
  for (const auto& [key, witness] : records_) {
    if (key.first == pattern) out.push_back(witness);
  }
  return out;
}

}  // namespace hyposign
