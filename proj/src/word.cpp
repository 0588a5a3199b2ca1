#include "tkchar/word.hpp"

#include <stdexcept>

namespace tkchar {

Word::Word(std::vector<Letter> letters) {
  for (const Letter& l : letters) {
    if (l.exponent == 0) continue;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exponent += l.exponent;
      if (letters_.back().exponent == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'x': letters.push_back({Generator::X, 1}); break;
      case 'X': letters.push_back({Generator::X, -1}); break;
      case 'y': letters.push_back({Generator::Y, 1}); break;
      case 'Y': letters.push_back({Generator::Y, -1}); break;
      default:
        throw std::invalid_argument(std::string("word: unexpected character '") + ch + "'");
    }
  }
  return Word(std::move(letters));
}

std::string Word::to_string() const {
  std::string out;
  for (const Letter& l : letters_) {
    const char ch = l.gen == Generator::X ? (l.exponent > 0 ? 'x' : 'X')
                                          : (l.exponent > 0 ? 'y' : 'Y');
    out.append(static_cast<std::size_t>(l.exponent > 0 ? l.exponent : -l.exponent), ch);
  }
  return out;
}

std::vector<Word> default_words() {
  return {Word::x(), Word::y(), Word::parse("xy"), Word::parse("xY"), Word::commutator()};
}

std::vector<Word> parse_word_list(std::string_view text) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (item.empty()) throw std::invalid_argument("word list: empty entry");
    out.push_back(Word::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace tkchar
