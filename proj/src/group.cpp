#include "qmono/group.hpp"

#include <cctype>

#include "qmono/errors.hpp"

namespace qmono {

namespace {

Gen swapped(Gen g) {
  switch (g) {
    case Gen::Alpha: return Gen::Beta;
    case Gen::Beta: return Gen::Alpha;
    case Gen::Kappa: return Gen::Kappa;
  }
  return g;
}

// Appends one letter to an already reduced stack.
void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back().gen == l.gen &&
      stack.back().exp == -l.exp) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

}  // namespace

Letter make_letter(Gen gen, int exp) {
  if (exp != 1 && exp != -1) {
    throw Error(ErrorKind::MalformedWord, "exponent must be +1 or -1");
  }
  return gen == Gen::Kappa ? Letter{Gen::Kappa, 1} : Letter{gen, exp};
}

FreeWord FreeWord::reduce(std::span<const Letter> letters) {
  FreeWord w;
  w.letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.gen == Gen::Kappa) {
      throw Error(ErrorKind::MalformedWord, "k is not a free generator");
    }
    push_reduced(w.letters_, make_letter(l.gen, l.exp));
  }
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& other) const {
  FreeWord w = *this;
  for (const Letter& l : other.letters_) push_reduced(w.letters_, l);
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(qmono::inverse(*it));
  }
  return w;
}

FreeWord free_reduce(std::span<const Letter> letters) {
  return FreeWord::reduce(letters);
}

FreeWord sigma(const FreeWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) out.push_back({swapped(l.gen), l.exp});
  // Swapping labels cannot create cancellations.
  return FreeWord::reduce(out);
}

GroupWord GroupWord::generator(Gen gen, int exp) {
  const Letter l = make_letter(gen, exp);
  return normalize(std::span<const Letter>(&l, 1));
}

std::vector<Letter> GroupWord::letters() const {
  std::vector<Letter> out(free_part.letters().begin(),
                          free_part.letters().end());
  if (kappa) out.push_back({Gen::Kappa, 1});
  return out;
}

// (w k^e) g = w sigma^e(g) k^e, so k is pushed right while scanning.
GroupWord normalize(std::span<const Letter> raw) {
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  bool kappa = false;
  for (const Letter& l : raw) {
    const Letter n = make_letter(l.gen, l.exp);
    if (n.gen == Gen::Kappa) {
      kappa = !kappa;
    } else {
      push_reduced(stack, kappa ? Letter{swapped(n.gen), n.exp} : n);
    }
  }
  return {FreeWord::reduce(stack), kappa};
}

GroupWord multiply(const GroupWord& g, const GroupWord& h) {
  const FreeWord tail = g.kappa ? sigma(h.free_part) : h.free_part;
  return {g.free_part * tail, g.kappa != h.kappa};
}

// (w k^e)^-1 = k^e w^-1 = sigma^e(w^-1) k^e
GroupWord invert(const GroupWord& g) {
  const FreeWord inv = g.free_part.inverse();
  return {g.kappa ? sigma(inv) : inv, g.kappa};
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view tok = text.substr(i, j - i);
    i = j;

    if (tok == "e") continue;
    Gen gen;
    switch (tok.front()) {
      case 'a': gen = Gen::Alpha; break;
      case 'b': gen = Gen::Beta; break;
      case 'k': gen = Gen::Kappa; break;
      default:
        throw Error(ErrorKind::MalformedWord,
                    "unknown token '" + std::string(tok) + "'");
    }
    const std::string_view suffix = tok.substr(1);
    int exp;
    if (suffix.empty() || suffix == "^1") {
      exp = 1;
    } else if (suffix == "^-1") {
      exp = -1;
    } else {
      throw Error(ErrorKind::MalformedWord,
                  "bad exponent in token '" + std::string(tok) + "'");
    }
    out.push_back(make_letter(gen, exp));
  }
  return out;
}

GroupWord parse_word(std::string_view text) {
  const auto letters = parse_letters(text);
  return normalize(letters);
}

std::string format_letters(std::span<const Letter> letters) {
  if (letters.empty()) return "e";
  std::string out;
  for (const Letter& l : letters) {
    if (!out.empty()) out += ' ';
    switch (l.gen) {
      case Gen::Alpha: out += 'a'; break;
      case Gen::Beta: out += 'b'; break;
      case Gen::Kappa: out += 'k'; break;
    }
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

std::string format_word(const GroupWord& g) {
  return format_letters(g.letters());
}

}  // namespace qmono
