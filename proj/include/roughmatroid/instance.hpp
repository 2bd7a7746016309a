// instance.hpp -- the instance file format: parse, print, digest
//
// Grammar (line-based, '#' starts a comment, tokens split on blanks):
//
//   universe <name> <name> ...     exactly one, first
//   block <name> <name> ...        one line per block, at least one line
//
// Names are arbitrary non-blank tokens without '#'. The blocks must
// partition the universe. Documents are canonicalized on construction:
// blocks ordered by their smallest element (in universe order), block
// members in universe order.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "roughmatroid/errors.hpp"
#include "roughmatroid/rough.hpp"
#include "roughmatroid/verify.hpp"

namespace roughmatroid {

struct InstanceDocument {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> blocks;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

/// The named approximation space described by a document.
inline Partition to_partition(const InstanceDocument& doc) {
  Universe u(static_cast<int>(doc.universe.size()), doc.universe);
  std::vector<Subset> sets;
  sets.reserve(doc.blocks.size());
  for (const auto& block : doc.blocks) {
    Subset s(u.size());
    for (const std::string& name : block) {
      const auto id = u.index_of(name);
      if (!id) throw UnknownElementError("unknown element: " + name);
      s = s.with(*id);
    }
    sets.push_back(s);
  }
  return Partition(std::move(u), sets);
}

/// Canonical document for a named partition.
inline InstanceDocument instance_from_partition(const Partition& p) {
  InstanceDocument doc;
  const Universe& u = p.universe();
  doc.universe.reserve(static_cast<std::size_t>(u.size()));
  for (ElementId e = 0; e < u.size(); ++e) doc.universe.push_back(u.label(e));
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    std::vector<std::string> block;
    for (ElementId e : p.block(i).elements()) block.push_back(u.label(e));
    doc.blocks.push_back(std::move(block));
  }
  return doc;
}

/// Validating, canonicalizing construction path for documents built in
/// code (the parser has its own position-annotated validation).
inline InstanceDocument make_instance(std::vector<std::string> universe,
                                      const std::vector<std::vector<std::string>>& blocks) {
  InstanceDocument raw{std::move(universe), blocks};
  return instance_from_partition(to_partition(raw));
}

inline std::string print_instance(const InstanceDocument& doc) {
  std::string out = "universe";
  for (const std::string& name : doc.universe) out += " " + name;
  out += '\n';
  for (const auto& block : doc.blocks) {
    out += "block";
    for (const std::string& name : block) out += " " + name;
    out += '\n';
  }
  return out;
}

/// FNV-1a 64 over the canonical text, as 16 hex digits. Stable across
/// platforms; pins golden outputs.
inline std::string instance_digest(const InstanceDocument& doc) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char byte : print_instance(doc)) {
    h ^= byte;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace detail {

struct Token {
  std::string text;
  int line;
  int column;  // 1-based
};

inline std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::vector<Token> current;
  int line = 1, column = 1;
  std::string word;
  int word_column = 0;
  auto flush_word = [&]() {
    if (!word.empty()) {
      current.push_back({word, line, word_column});
      word.clear();
    }
  };
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      flush_word();
      if (!current.empty()) lines.push_back(std::move(current));
      current.clear();
      ++line;
      column = 1;
      in_comment = false;
      continue;
    }
    if (!in_comment) {
      if (c == '#') {
        flush_word();
        in_comment = true;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        flush_word();
      } else {
        if (word.empty()) word_column = column;
        word += c;
      }
    }
    ++column;
  }
  flush_word();
  if (!current.empty()) lines.push_back(std::move(current));
  return lines;
}

}  // namespace detail

/// Parses and validates an instance document. Structural problems raise
/// SyntaxError, name-level problems SemanticError, a universe with no
/// elements EmptyUniverseError; all carry a 1-based position.
inline InstanceDocument parse_instance(std::string_view text) {
  const auto lines = detail::tokenize_lines(text);
  if (lines.empty()) throw SyntaxError("expected a 'universe' line", 1, 1);

  const auto& first = lines.front();
  if (first[0].text != "universe")
    throw SyntaxError("expected 'universe', got '" + first[0].text + "'",
                      first[0].line, first[0].column);
  if (first.size() == 1)
    throw EmptyUniverseError("universe has no elements (line " +
                             std::to_string(first[0].line) + ")");

  InstanceDocument raw;
  std::unordered_map<std::string, const detail::Token*> declared;
  for (std::size_t i = 1; i < first.size(); ++i) {
    const auto& token = first[i];
    if (declared.count(token.text))
      throw SemanticError("duplicate element name '" + token.text + "'",
                          token.line, token.column);
    declared.emplace(token.text, &token);
    raw.universe.push_back(token.text);
  }
  if (raw.universe.size() > static_cast<std::size_t>(kMaxUniverse))
    throw SemanticError("universe larger than " + std::to_string(kMaxUniverse) +
                        " elements", first[0].line, first[0].column);

  std::unordered_map<std::string, int> block_of;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& tokens = lines[li];
    if (tokens[0].text == "universe")
      throw SyntaxError("only one 'universe' line is allowed", tokens[0].line,
                        tokens[0].column);
    if (tokens[0].text != "block")
      throw SyntaxError("expected 'block', got '" + tokens[0].text + "'",
                        tokens[0].line, tokens[0].column);
    if (tokens.size() == 1)
      throw SyntaxError("block has no elements", tokens[0].line, tokens[0].column);
    std::vector<std::string> block;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const auto& token = tokens[i];
      if (!declared.count(token.text))
        throw SemanticError("element '" + token.text + "' is not in the universe",
                            token.line, token.column);
      const auto [it, inserted] =
          block_of.emplace(token.text, static_cast<int>(raw.blocks.size()));
      if (!inserted)
        throw SemanticError("element '" + token.text + "' appears in more than one block",
                            token.line, token.column);
      block.push_back(token.text);
    }
    raw.blocks.push_back(std::move(block));
  }

  if (raw.blocks.empty()) {
    const auto& last = lines.back().back();
    throw SyntaxError("expected at least one 'block' line", last.line + 1, 1);
  }
  for (const std::string& name : raw.universe)
    if (!block_of.count(name)) {
      const detail::Token* token = declared.at(name);
      throw SemanticError("element '" + name + "' is in no block", token->line,
                          token->column);
    }

  // canonicalize through the partition (also re-validates)
  return instance_from_partition(to_partition(raw));
}

/// Full verification of one document, plus its content digest.
struct SuiteReport {
  std::string instance_digest;
  std::vector<CheckResult> results;

  bool all_passed() const { return roughmatroid::all_passed(results); }
};

inline SuiteReport run_suite(const InstanceDocument& doc, const VerifyOptions& options = {}) {
  return SuiteReport{instance_digest(doc), verify_all(to_partition(doc), options)};
}

}  // namespace roughmatroid
