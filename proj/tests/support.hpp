#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ikc/derivation.hpp"
#include "ikc/env.hpp"
#include "ikc/term.hpp"
#include "ikc/types.hpp"

namespace ikc::test {

inline Term T(std::string_view s) { return parse_term(s); }
inline CanonType Ty(std::string_view s) { return parse_type(s); }
inline Env E(std::string_view s) { return parse_env(s); }
inline Derivation D(std::string_view s) { return parse_derivation(s); }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::filesystem::path corpus_dir() { return IKC_CORPUS_DIR; }

struct CorpusEntry {
  std::string name;
  CheckedJudgment cj;
};

// Every corpus/*.drv, sorted by file name.
inline std::vector<CorpusEntry> load_corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir()))
    if (e.path().extension() == ".drv") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) out.push_back({f.stem().string(), certify(parse_derivation(slurp(f)))});
  return out;
}

inline std::vector<CheckedJudgment> corpus_judgments() {
  std::vector<CheckedJudgment> out;
  for (auto& e : load_corpus()) out.push_back(e.cj);
  return out;
}

}  // namespace ikc::test
