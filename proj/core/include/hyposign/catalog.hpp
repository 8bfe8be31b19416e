#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hyposign/witness.hpp"

namespace hyposign {

/// Append-only store of verified witnesses, one JSON record per line:
///   {"schema":1,"key":{"pattern":"+--+","word":"NPP"},"witness":{...},
///    "createdBy":{"method":"...","seed":...}}
/// Keys are (pattern first-rep, word text). Every record re-verifies on load;
/// records that fail are quarantined with a warning instead of loaded.
/// Duplicate keys keep the first-written record, and a put under an existing
/// key is a no-op. Single writer, any number of readers.
class Catalog {
 public:
  /// Opens (creating if missing) the JSONL file and loads it.
  explicit Catalog(std::filesystem::path file);

  /// Resolves the catalog path: explicit value if nonempty, else the
  /// HYPOSIGN_CATALOG environment variable, else "catalog.jsonl".
  static std::filesystem::path resolve_path(const std::string& flag_value = {});

  /// Verifies and appends. Returns false (no-op) when the key already exists.
  /// Throws Error if the witness fails verification, StorageError on I/O.
  bool put(const Witness& w);

  std::optional<Witness> get(const SignPattern& sp, const OrderWord& word) const;
  std::vector<Witness> scan(const SignPattern& sp) const;

  struct Quarantined {
    std::size_t line = 0;
    std::string reason;
  };
  const std::vector<Quarantined>& quarantined() const { return quarantined_; }

  std::size_t size() const { return records_.size(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::map<std::pair<std::string, std::string>, Witness> records_;
  std::vector<Quarantined> quarantined_;
  mutable std::mutex write_mutex_;
};

}  // namespace hyposign
