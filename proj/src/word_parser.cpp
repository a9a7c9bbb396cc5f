#include "goeritz/word_parser.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace goeritz {

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back({s.substr(start, i - start), start});
  }
  return out;
}

struct Parsed {
  char head;
  int index = 0;  // 0 when absent
  bool prime = false;
  int exp = 1;
};

// head letter, optional decimal index, optional prime, optional ^1 / ^-1.
Parsed parse_token(const Token& tok) {
  const std::string_view t = tok.text;
  auto fail = [&](const std::string& why, std::size_t at) -> MalformedWord {
    return MalformedWord(why + " in token '" + std::string(t) + "' at byte " +
                             std::to_string(tok.offset + at),
                         tok.offset + at);
  };
  Parsed p{t[0]};
  std::size_t i = 1;
  const std::size_t digits_start = i;
  long idx = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
    idx = idx * 10 + (t[i] - '0');
    if (idx > 1000000) throw fail("index too large", digits_start);
    ++i;
  }
  if (i > digits_start) {
    if (idx < 1) throw fail("index must be >= 1", digits_start);
    p.index = static_cast<int>(idx);
  }
  if (i < t.size() && t[i] == '\'') {
    p.prime = true;
    ++i;
  }
  if (i < t.size()) {
    const std::string_view rest = t.substr(i);
    if (rest == "^-1") {
      p.exp = -1;
    } else if (rest == "^1") {
      p.exp = 1;
    } else if (rest[0] == '^') {
      throw fail("malformed exponent (expected ^1 or ^-1)", i);
    } else {
      throw fail("unexpected character", i);
    }
  }
  return p;
}

MalformedWord token_error(const Token& tok, const std::string& why) {
  return MalformedWord(why + ": '" + std::string(tok.text) + "' at byte " + std::to_string(tok.offset),
                       tok.offset);
}

}  // namespace

GoeritzWord parse_goeritz_word(std::string_view text, int genus) {
  GoeritzWord w(genus);
  for (const Token& tok : tokenize(text)) {
    const Parsed p = parse_token(tok);
    switch (p.head) {
      case 'a':
        if (!p.index) throw token_error(tok, "anchored generator needs an index");
        if (p.index > genus) throw token_error(tok, "index exceeds genus " + std::to_string(genus));
        w.push_back(p.prime ? GoeritzGen::APrime(p.index, p.exp) : GoeritzGen::A(p.index, p.exp));
        break;
      case 'f':
        if (!p.index) throw token_error(tok, "freewheeling generator needs an index");
        if (p.prime) throw token_error(tok, "freewheeling generators take no prime");
        if (p.index > 2 * genus)
          throw token_error(tok, "index exceeds 2g = " + std::to_string(2 * genus));
        w.push_back(GoeritzGen::F(p.index, p.exp));
        break;
      case 'r':
        if (p.index || p.prime) throw token_error(tok, "rotor takes no index");
        w.push_back(GoeritzGen::Rho0(p.exp));
        break;
      default:
        throw token_error(tok, "unknown token");
    }
  }
  return w;
}

ArcClass parse_target(std::string_view text, int genus) {
  std::vector<Letter> letters;
  int parity = 0;
  const auto toks = tokenize(text);
  if (toks.size() == 1 && toks[0].text == "1") return ArcClass::identity(genus);
  for (const Token& tok : toks) {
    const Parsed p = parse_token(tok);
    if (p.prime) throw token_error(tok, "surface letters take no prime");
    if (p.head == 'r') {
      if (p.index) throw token_error(tok, "rotor takes no index");
      parity ^= 1;
      continue;
    }
    if (p.head != 'a' && p.head != 'b') throw token_error(tok, "unknown surface letter");
    if (!p.index) throw token_error(tok, "surface letter needs an index");
    if (p.index > genus) throw token_error(tok, "index exceeds genus " + std::to_string(genus));
    const Letter x = p.head == 'a' ? surface::a(p.index) : surface::b(p.index);
    letters.push_back(p.exp * x);
  }
  return {SurfaceWord::normalize(letters, genus), parity};
}

}  // namespace goeritz
