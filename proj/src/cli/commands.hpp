#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "stfib/params.hpp"
#include "stfib/rational.hpp"

namespace stfib::cli {

enum class Format { Human, Json, Csv };

struct CliConfig {
  std::string subcommand;
  std::string s = "1";
  std::string t = "1";
  std::string u;
  std::string a;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 1;
  std::optional<std::size_t> q;
  std::size_t q_min = 1;
  std::size_t q_max = 10;
  std::optional<std::size_t> depth;
  std::size_t horizon = 50;
  std::size_t order = 16;
  std::string width = "1e-12";
  int digits = 12;
  std::optional<Format> output;
  bool all = false;
  bool strict = false;
  unsigned threads = 0;
  std::string kernel = "recurrence";
  std::string sign = "plus";
  std::string root = "phi";
  std::string mode = "scan";
  std::string kind = "fast-doubling";
};

/// Exit code of one subcommand; domain errors propagate as stfib::Error.
int run_command(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Decimal (`0.001`), scientific (`1e-12`) or fraction (`p/q`) text as an exact rational.
BigRational parse_precision(const std::string& text);

/// Fibotorials memoized under a directory as "n value" lines, re-verified against the recurrence on load.
class FibotorialCache {
 public:
  FibotorialCache(std::string dir, STParams params);
  /// Verified entries from disk; entries that fail verification are dropped.
  std::map<std::size_t, BigRational> load(std::ostream& err) const;
  void store(const std::map<std::size_t, BigRational>& entries) const;
  std::string path() const;

 private:
  std::string dir_;
  STParams params_;
};

}  // namespace stfib::cli
