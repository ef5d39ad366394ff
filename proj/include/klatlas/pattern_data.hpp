#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "klatlas/patterns.hpp"
#include "klatlas/permutation.hpp"

namespace klatlas {

enum class PatternList { SIX, SIXTY_SIX };

/// The six patterns whose avoidance (together with a one-component singular
/// locus) characterizes P_{id,w}(1) = 2.
inline const std::vector<Permutation>& six_patterns() {
  static const std::vector<Permutation> v = [] {
    std::vector<Permutation> out;
    for (const char* s : {"653421", "632541", "463152", "526413", "546213", "465132"})
      out.push_back(parse_permutation(s));
    return out;
  }();
  return v;
}

/// The 66 patterns characterizing KL_2 by avoidance.
inline const std::vector<Permutation>& sixty_six_patterns() {
  static const std::vector<Permutation> v = [] {
    static const char* words[] = {
        "45123",    "34512",    "53412",    "52341",    //
        "45231",    "351624",   "523614",   "526314",   //
        "624153",   "524613",   "462513",   "526413",   //
        "546213",   "361452",   "461352",   "364152",   //
        "463152",   "536142",   "465132",   "426351",   //
        "632541",   "635241",   "642531",   "653421",   //
        "3612745",  "6231745",  "6241735",  "3416725",  //
        "4236715",  "4263715",  "4267315",  "3712564",  //
        "7231564",  "3715264",  "3751264",  "7523164",  //
        "6251734",  "7261453",  "3417562",  "3517462",  //
        "4517362",  "4237561",  "5347261",  "4275631",  //
        "34127856", "42317856", "34172856", "42371856", //
        "42731856", "35127846", "52317846", "52417836", //
        "34128675", "42318675", "34182675", "42381675", //
        "42831675", "34186275", "42386175", "42863175", //
        "35128674", "52318674", "36128574", "62318574", //
        "52418673", "62518473",
    };
    std::vector<Permutation> out;
    for (const char* s : words) out.push_back(parse_permutation(s));
    return out;
  }();
  return v;
}

/// A permutation with a marked subset of positions whose flattening is 4231
/// or 3412 (the "dotted part").
struct DottedPattern {
  Permutation word;
  Embedding dotted;
};

/// The 13 dotted patterns whose dotted parts mark 4231/3412 occurrences that
/// do not correspond to singular-locus components.
inline const std::vector<DottedPattern>& dotted_patterns() {
  static const std::vector<DottedPattern> v = [] {
    struct Raw {
      const char* word;
      std::vector<int> dotted;
    };
    static const Raw raw[] = {
        {"35412", {1, 2, 4, 5}},  {"43512", {1, 3, 4, 5}},  {"45132", {1, 2, 3, 5}},
        {"45213", {1, 2, 4, 5}},  {"52341", {1, 2, 4, 5}},  {"52431", {1, 2, 3, 5}},
        {"53241", {1, 3, 4, 5}},  {"53421", {1, 2, 3, 5}},  {"54231", {1, 3, 4, 5}},
        {"635241", {1, 2, 5, 6}}, {"563412", {1, 2, 5, 6}}, {"526413", {1, 3, 5, 6}},
        {"463152", {1, 2, 4, 6}},
    };
    std::vector<DottedPattern> out;
    for (const Raw& r : raw) out.push_back({parse_permutation(r.word), r.dotted});
    return out;
  }();
  return v;
}

/// True iff w contains at least one pattern from the named list.
inline bool pattern_list_member(const Permutation& w, PatternList list) {
  const std::vector<Permutation>& pats =
      list == PatternList::SIX ? six_patterns() : sixty_six_patterns();
  for (const Permutation& p : pats)
    if (contains(w, p)) return true;
  return false;
}

/// FNV-1a over a string, used to checksum pattern list files.
inline uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Canonical file body for a pattern list: one comma-separated literal per
/// line.  The shipped files carry "# checksum: <hex of fnv1a(body)>" on top.
inline std::string pattern_list_body(const std::vector<Permutation>& pats) {
  std::string body;
  for (const Permutation& p : pats) body += p.str() + "\n";
  return body;
}

inline std::string dotted_list_body(const std::vector<DottedPattern>& pats) {
  std::string body;
  for (const DottedPattern& d : pats) {
    body += d.word.str() + " : ";
    for (size_t i = 0; i < d.dotted.size(); ++i) {
      if (i) body += ",";
      body += std::to_string(d.dotted[i]);
    }
    body += "\n";
  }
  return body;
}

inline std::string checksum_header(const std::string& body) {
  std::ostringstream os;
  os << "# checksum: " << std::hex << fnv1a(body) << "\n";
  return os.str();
}

/// Parses a pattern list file: '#' comment lines ignored; a checksum comment,
/// when present, must match the body.
inline std::vector<Permutation> parse_pattern_list_file(const std::string& text) {
  std::vector<Permutation> out;
  std::string body;
  std::string expected_checksum;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string key = "# checksum: ";
      if (line.rfind(key, 0) == 0) expected_checksum = line.substr(key.size());
      continue;
    }
    body += line + "\n";
    out.push_back(parse_permutation(line));
  }
  if (!expected_checksum.empty()) {
    std::ostringstream os;
    os << std::hex << fnv1a(body);
    if (os.str() != expected_checksum)
      throw std::runtime_error("pattern list checksum mismatch");
  }
  return out;
}

}  // namespace klatlas
