#pragma once

// Elements of G = <a, b, k | k a = b k, k^2 = 1>, i.e. the semidirect
// product F2 x| Z/2 where k acts on the free group by swapping a and b.
//
// Normal form: a freely reduced word over {a, b} followed by k^0 or k^1.
// Words are read left to right; the leftmost letter is traversed first.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qmono {

enum class Gen : unsigned char { Alpha, Beta, Kappa };

struct Letter {
  Gen gen = Gen::Alpha;
  int exp = 1;  // +1 or -1; always +1 for Kappa

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

Letter make_letter(Gen gen, int exp = 1);

inline Letter inverse(Letter l) {
  return l.gen == Gen::Kappa ? l : Letter{l.gen, -l.exp};
}

// Freely reduced word over Alpha/Beta.
class FreeWord {
 public:
  FreeWord() = default;

  // Reduces on construction; Kappa letters are rejected.
  static FreeWord reduce(std::span<const Letter> letters);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // this * other, freely reduced.
  FreeWord operator*(const FreeWord& other) const;
  FreeWord inverse() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

FreeWord free_reduce(std::span<const Letter> letters);

// Swap automorphism a <-> b (conjugation by k). An involution.
FreeWord sigma(const FreeWord& w);

struct GroupWord {
  FreeWord free_part;
  bool kappa = false;

  static GroupWord identity() { return {}; }
  static GroupWord generator(Gen gen, int exp = 1);

  bool is_identity() const { return free_part.empty() && !kappa; }
  // Letters of the normal form, free part first then k if present.
  std::vector<Letter> letters() const;
  std::size_t length() const { return free_part.size() + (kappa ? 1 : 0); }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;
};

GroupWord normalize(std::span<const Letter> raw);
GroupWord multiply(const GroupWord& g, const GroupWord& h);
GroupWord invert(const GroupWord& g);

// Tokens "a", "b", "k", each optionally suffixed "^1" or "^-1", separated by
// whitespace. "e" and the empty string denote the identity.
GroupWord parse_word(std::string_view text);
std::vector<Letter> parse_letters(std::string_view text);
std::string format_word(const GroupWord& g);
std::string format_letters(std::span<const Letter> letters);

}  // namespace qmono
