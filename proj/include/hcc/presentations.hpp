#pragma once

// Finite presentations <a_1..a_n | R_1..R_m>, free-group words, Fox
// derivatives and the mod-p data of the presentation complex.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hcc/error.hpp"
#include "hcc/fpexact.hpp"

namespace hcc {

struct Letter {
  std::size_t gen;
  int exp;  // +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word. Every mutation keeps it reduced.
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord from_letters(const std::vector<Letter>& letters);
  static FreeWord generator(std::size_t gen, int exp = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(Letter l);
  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  /// w^k for any integer k.
  FreeWord power(long long k) const;
  /// Exponent sum of generator gen.
  long long exponent_sum(std::size_t gen) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<FreeWord> relators;

  std::size_t n_generators() const noexcept { return generator_names.size(); }
  std::size_t n_relators() const noexcept { return relators.size(); }
  long long deficiency() const noexcept {
    return static_cast<long long>(generator_names.size()) - static_cast<long long>(relators.size());
  }
  /// Throws InputError on a duplicate or malformed name or an out-of-range letter.
  void validate() const;
};

/// Syntax error with a 1-based position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Grammar: '<' ident (',' ident)* '|' [word (',' word)*] '>', where a word is
/// a whitespace-separated list of ident ['^' signed-int] terms, or the literal
/// `1` for the empty word. Lines starting with '#' are comments.
Presentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation; runs of one letter print as x^k.
std::string format_presentation(const Presentation& pres);
std::string format_word(const FreeWord& w, const std::vector<std::string>& names);

struct FoxTerm {
  int sign;  // +1 or -1
  FreeWord prefix;

  friend bool operator==(const FoxTerm&, const FoxTerm&) = default;
};

/// ∂w/∂a_j as a signed sum of prefixes, one term per occurrence of a_j^{±1},
/// in word order. A letter a_j at position t contributes +x_1..x_{t-1};
/// a_j^{-1} contributes -x_1..x_t.
std::vector<FoxTerm> fox_derivative(const FreeWord& w, std::size_t j);

struct ComplexSummary {
  std::uint32_t p = 0;
  FpMatrix boundary_A;  // n x m, entry (j,i) = exponent sum of a_j in R_i mod p
  std::size_t b0 = 1;
  std::size_t b1 = 0;
  std::size_t b2 = 0;
  long long euler = 0;
  std::size_t rank_A = 0;
};

ComplexSummary complex_summary(const Presentation& pres, std::uint32_t p);

struct NormalizationTrace {
  Presentation presentation;
  SnfResult snf;
  /// New generator k written as a word in the original generators.
  std::vector<FreeWord> generator_words;
};

/// Replays the Smith form of A: column ops as relator transforms
/// (ω_i <- ω_i ω_j^q, swaps), then row ops as generator substitutions
/// (a'_i = a_i a_j^{-q}, swaps). The result has A = block-diag(D, 0).
NormalizationTrace normalize_with_trace(const Presentation& pres, std::uint32_t p);
Presentation normalize_presentation(const Presentation& pres, std::uint32_t p);

class Homomorphism;

/// Presentation of ker(hom) on Schreier generators. Cosets are the elements
/// of im(hom); the transversal is the breadth-first shortlex tree with
/// letters tried in the order a_1, a_1^-1, a_2, a_2^-1, ...
/// Schreier generator s_{c,j} = u_c a_j u_{c a_j}^{-1} is named
/// "<name of a_j>_<index of c>". Empty rewritten relators are kept.
Presentation reidemeister_schreier(const Presentation& pres, const Homomorphism& hom);

}  // namespace hcc
