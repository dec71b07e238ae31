#ifndef ZETALAB_TEXTDOC_HPP
#define ZETALAB_TEXTDOC_HPP

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zetalab/core.hpp"

// Sectioned key=value documents: the format shared by function-spec files and
// experiment configs.  Lines are `key = value`, sections are `[name]`, `#`
// starts a comment.  Keys may repeat within a section (order preserved).

namespace zetalab {

struct DocEntry {
  std::string section;
  std::string key;
  std::string value;
};

class TextDoc {
 public:
  static TextDoc parse(const std::string& text) {
    TextDoc doc;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']')
          throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
        section = trim(line.substr(1, line.size() - 2));
        if (section.empty())
          throw ConfigError("line " + std::to_string(lineno) + ": empty section name");
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      if (key.empty())
        throw ConfigError("line " + std::to_string(lineno) + ": empty key");
      doc.entries_.push_back({section, key, value});
    }
    return doc;
  }

  static TextDoc load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    try {
      return parse(ss.str());
    } catch (const ConfigError& e) {
      throw ConfigError(path + ": " + e.what());
    }
  }

  const std::vector<DocEntry>& entries() const { return entries_; }

  bool has(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
  }

  std::string get(const std::string& section, const std::string& key) const {
    const DocEntry* e = find(section, key);
    if (!e) throw ConfigError("missing key [" + section + "] " + key);
    return e->value;
  }

  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const {
    const DocEntry* e = find(section, key);
    return e ? e->value : fallback;
  }

  std::vector<std::string> get_all(const std::string& section, const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& e : entries_)
      if (e.section == section && e.key == key) out.push_back(e.value);
    return out;
  }

  std::vector<std::string> sections() const {
    std::vector<std::string> out;
    for (const auto& e : entries_)
      if (std::find(out.begin(), out.end(), e.section) == out.end())
        out.push_back(e.section);
    return out;
  }

  // Canonical form: sections and keys sorted, repeated keys in input order.
  // Whitespace and comments never survive parsing, so the digest of this
  // string is stable under reformatting.
  std::string canonical() const {
    std::vector<DocEntry> sorted = entries_;
    std::stable_sort(sorted.begin(), sorted.end(), [](const DocEntry& a, const DocEntry& b) {
      if (a.section != b.section) return a.section < b.section;
      return a.key < b.key;
    });
    std::string out;
    std::string section = "\x01";  // sentinel distinct from any real name
    for (const auto& e : sorted) {
      if (e.section != section) {
        section = e.section;
        out += "[" + section + "]\n";
      }
      out += e.key + " = " + e.value + "\n";
    }
    return out;
  }

  std::string digest() const { return fnv1a64_hex(canonical()); }

  static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

 private:
  const DocEntry* find(const std::string& section, const std::string& key) const {
    for (const auto& e : entries_)
      if (e.section == section && e.key == key) return &e;
    return nullptr;
  }

  std::vector<DocEntry> entries_;
};

// ---------------------------------------------------------------------------
// Value parsing helpers
// ---------------------------------------------------------------------------

// Complex literals: "2", "-1.5", "3i", "2+3i", "1.2e-3-4i", "i", "-i".
inline Complex parse_complex(const std::string& text) {
  std::string s = TextDoc::trim(text);
  if (s.empty()) throw ConfigError("empty complex literal");

  auto parse_real = [](const std::string& t, double& out) -> bool {
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size();
  };

  // split at the last +/- that is not part of an exponent and not leading
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }

  double re = 0.0, im = 0.0;
  if (!s.empty() && s.back() == 'i') {
    std::string imag_part = s.substr(0, s.size() - 1);
    if (split == std::string::npos) {
      // pure imaginary
      if (imag_part.empty() || imag_part == "+")
        im = 1.0;
      else if (imag_part == "-")
        im = -1.0;
      else if (!parse_real(imag_part, im))
        throw ConfigError("malformed complex literal: '" + text + "'");
      return {0.0, im};
    }
    std::string re_part = s.substr(0, split);
    std::string im_part = s.substr(split, s.size() - 1 - split);
    if (im_part == "+")
      im = 1.0;
    else if (im_part == "-")
      im = -1.0;
    else if (!parse_real(im_part, im))
      throw ConfigError("malformed complex literal: '" + text + "'");
    if (!parse_real(re_part, re))
      throw ConfigError("malformed complex literal: '" + text + "'");
    return {re, im};
  }

  if (!parse_real(s, re))
    throw ConfigError("malformed complex literal: '" + text + "'");
  return {re, 0.0};
}

inline double parse_double(const std::string& text) {
  std::string s = TextDoc::trim(text);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw ConfigError("malformed number: '" + text + "'");
  return v;
}

inline long parse_long(const std::string& text) {
  std::string s = TextDoc::trim(text);
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size())
    throw ConfigError("malformed integer: '" + text + "'");
  return v;
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  for (const auto& tok : split_list(text)) out.push_back(parse_complex(tok));
  return out;
}

inline std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& tok : split_list(text)) out.push_back(parse_double(tok));
  return out;
}

}  // namespace zetalab

#endif  // ZETALAB_TEXTDOC_HPP
