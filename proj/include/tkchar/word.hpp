#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tkchar {

enum class Generator { X, Y };

struct Letter {
  Generator gen;
  long exponent;  ///< nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A reduced word in the free group on x, y.
///
/// Adjacent letters on the same generator are merged and zero exponents are
/// dropped, so consecutive letters always alternate generators. Text form
/// uses x, y and uppercase X, Y for inverses: "xyXY" is [x, y].
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  /// Throws std::invalid_argument on characters outside {x, y, X, Y}.
  static Word parse(std::string_view text);

  static Word x() { return Word({{Generator::X, 1}}); }
  static Word y() { return Word({{Generator::Y, 1}}); }
  static Word commutator() { return parse("xyXY"); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  /// Inverse of parse, on reduced words.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// x, y, xy, xY, xyXY: traces of x and y fix (k, k'), xy and xY tell mu
/// from mu^{-1}, and the commutator pins the cross-ratio.
std::vector<Word> default_words();

/// Comma-separated word list, e.g. "x,y,xyXY". Empty entries are rejected.
std::vector<Word> parse_word_list(std::string_view text);

}  // namespace tkchar
