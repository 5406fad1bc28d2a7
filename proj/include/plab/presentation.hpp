#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plab {

/// One letter of a word over generators and their inverses.
struct Letter {
  std::uint32_t generator = 0;
  bool inverse = false;

  Letter inverted() const noexcept { return {generator, !inverse}; }
  /// Column index used by coset tables: 2g for g, 2g+1 for g^-1.
  std::size_t column() const noexcept { return 2 * generator + (inverse ? 1 : 0); }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) {
    return std::pair{a.generator, a.inverse} <=> std::pair{b.generator, b.inverse};
  }
};

using Word = std::vector<Letter>;

/// Removes adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);
Word inverse_word(const Word& w);
/// "a b^-1 a", or "1" for the empty word.
std::string format_word(const Word& w, const std::vector<std::string>& names);

/// Finite presentation <A | R>.
class Presentation {
public:
  Presentation() = default;
  /// Relators are freely reduced; the ones that vanish are dropped and
  /// counted in dropped_relators().
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);
  /// Keeps relators exactly as given (used for triangular presentations,
  /// whose length-3 relators need not be freely reduced).
  static Presentation verbatim(std::vector<std::string> generators, std::vector<Word> relators);

  std::size_t generator_count() const noexcept { return generators_.size(); }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t max_relator_length() const noexcept;
  std::size_t dropped_relators() const noexcept { return dropped_; }

  /// Canonical text form: "gens: a, b\nrels: a^2, b^3, a b a b\n".
  std::string to_text() const;

private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  std::size_t dropped_ = 0;
};

struct ParsedPresentation {
  Presentation presentation;
  std::vector<std::string> warnings;
};

/// Grammar: sections "gens: name, ..." and "rels: word, ..." separated by
/// newlines or ';'. word := term (space term)*; term := name | name^int.
/// '#' starts a comment. Throws UnknownGenerator, BadExponent,
/// EmptyGeneratorList or ParseError.
ParsedPresentation parse_presentation(std::string_view text);

}  // namespace plab
