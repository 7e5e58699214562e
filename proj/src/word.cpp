#include "ncalg/word.hpp"

#include <cctype>

#include "ncalg/error.hpp"

namespace ncalg {

  bool Alphabet::valid_symbol(std::string_view s) {
    if (s.empty()) {
      return false;
    }
    auto head = static_cast<unsigned char>(s[0]);
    if (!(std::isalpha(head) || head == '_')) {
      return false;
    }
    for (char c : s) {
      auto u = static_cast<unsigned char>(c);
      if (!(std::isalnum(u) || u == '_' || u == '\'')) {
        return false;
      }
    }
    return true;
  }

  Alphabet::Alphabet(std::vector<std::string> symbols)
      : _symbols(std::move(symbols)) {
    if (_symbols.size() > 255) {
      throw InputError("alphabets are limited to 255 symbols");
    }
    for (std::size_t i = 0; i < _symbols.size(); ++i) {
      auto const& s = _symbols[i];
      if (!valid_symbol(s)) {
        throw InputError("invalid symbol '" + s + "'");
      }
      if (!_index.emplace(s, static_cast<Letter>(i)).second) {
        throw InputError("duplicate symbol '" + s + "'");
      }
    }
  }

  Letter Alphabet::letter(std::string const& s) const {
    auto it = _index.find(s);
    if (it == _index.end()) {
      throw InputError("unknown symbol '" + s + "'");
    }
    return it->second;
  }

  std::string Alphabet::format(Word const& w) const {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) {
        out += '.';
      }
      out += symbol(w[i]);
    }
    return out;
  }

  Word Alphabet::parse(std::string_view text) const {
    std::size_t i = 0;
    auto        skip = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
        ++i;
      }
    };
    skip();
    if (i < text.size() && text[i] == '1') {
      ++i;
      skip();
      if (i != text.size()) {
        throw ParseError("trailing input after empty word", 0, i + 1);
      }
      return Word();
    }
    Word w;
    while (true) {
      skip();
      std::size_t start = i;
      while (i < text.size()
             && (std::isalnum(static_cast<unsigned char>(text[i]))
                 || text[i] == '_' || text[i] == '\'')) {
        ++i;
      }
      std::string sym(text.substr(start, i - start));
      if (!valid_symbol(sym)) {
        throw ParseError("expected symbol", 0, start + 1);
      }
      if (!has(sym)) {
        throw ParseError("unknown symbol '" + sym + "'", 0, start + 1);
      }
      std::size_t power = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        std::size_t ds = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        if (ds == i) {
          throw ParseError("expected exponent", 0, ds + 1);
        }
        power = std::stoul(std::string(text.substr(ds, i - ds)));
        skip();
      }
      w *= Word::power(letter(sym), power);
      if (i < text.size() && text[i] == '.') {
        ++i;
        continue;
      }
      break;
    }
    if (i != text.size()) {
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'",
                       0,
                       i + 1);
    }
    return w;
  }

}  // namespace ncalg
