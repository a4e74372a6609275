#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "stfib/sequences.hpp"

namespace stfib::cli {

namespace {

std::string file_token(const BigRational& x) {
  std::string out = x.str();
  for (char& c : out) {
    if (c == '/') c = '_';
    if (c == '-') c = 'm';
  }
  return out;
}

}  // namespace

FibotorialCache::FibotorialCache(std::string dir, STParams params)
    : dir_(std::move(dir)), params_(std::move(params)) {}

std::string FibotorialCache::path() const {
  const auto name = "fibotorial_" + file_token(params_.s()) + "_" + file_token(params_.t()) + ".txt";
  return (std::filesystem::path(dir_) / name).string();
}

std::map<std::size_t, BigRational> FibotorialCache::load(std::ostream& err) const {
  std::map<std::size_t, BigRational> entries;
  std::ifstream in(path());
  if (!in) return entries;
  SeqCache seq(params_);
  std::string line;
  std::size_t rejected = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::size_t n = 0;
    std::string value;
    if (!(fields >> n >> value)) {
      ++rejected;
      continue;
    }
    try {
      const BigRational parsed = BigRational::parse(value);
      if (parsed == seq.fibotorial(n)) {
        entries.emplace(n, parsed);
      } else {
        ++rejected;
      }
    } catch (const std::exception&) {
      ++rejected;
    }
  }
  if (rejected > 0) err << "cache: dropped " << rejected << " unverifiable entries from " << path() << "\n";
  return entries;
}

void FibotorialCache::store(const std::map<std::size_t, BigRational>& entries) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const std::string target = path();
  const std::string tmp = target + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    for (const auto& [n, value] : entries) out << n << " " << value.str() << "\n";
  }
  std::filesystem::rename(tmp, target, ec);
}

}  // namespace stfib::cli
