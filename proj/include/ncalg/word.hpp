#ifndef NCALG_WORD_HPP_
#define NCALG_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ncalg {

  /// Index of a symbol in its Alphabet.
  using Letter = std::uint8_t;

  /// An element of the free monoid: a finite sequence of letters. The empty
  /// word is the identity. Letters are stored in a std::string so that short
  /// words live inline and factor searches use the library's substring
  /// search.
  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) {
      for (auto l : letters) {
        _letters.push_back(static_cast<char>(l));
      }
    }
    explicit Word(std::vector<Letter> const& letters) {
      for (auto l : letters) {
        _letters.push_back(static_cast<char>(l));
      }
    }

    static Word letter(Letter l) { return Word({l}); }
    /// l repeated n times.
    static Word power(Letter l, std::size_t n) {
      Word w;
      w._letters.assign(n, static_cast<char>(l));
      return w;
    }

    std::size_t size() const noexcept { return _letters.size(); }
    bool        empty() const noexcept { return _letters.empty(); }
    Letter      operator[](std::size_t i) const noexcept {
      return static_cast<Letter>(_letters[i]);
    }

    /// The factor of length `len` starting at `pos`.
    Word factor(std::size_t pos, std::size_t len = std::string::npos) const {
      Word w;
      w._letters = _letters.substr(pos, len);
      return w;
    }
    Word prefix(std::size_t len) const { return factor(0, len); }
    Word suffix(std::size_t len) const { return factor(size() - len); }

    /// First occurrence of `pattern` at or after `from`, or npos.
    std::size_t find(Word const& pattern, std::size_t from = 0) const noexcept {
      return _letters.find(pattern._letters, from);
    }
    bool contains(Word const& pattern) const noexcept {
      return find(pattern) != std::string::npos;
    }
    bool occurs_at(Word const& pattern, std::size_t pos) const noexcept {
      return pos + pattern.size() <= size()
             && _letters.compare(pos, pattern.size(), pattern._letters) == 0;
    }
    bool starts_with(Word const& p) const noexcept { return occurs_at(p, 0); }
    bool ends_with(Word const& p) const noexcept {
      return p.size() <= size() && occurs_at(p, size() - p.size());
    }

    Word& operator*=(Word const& other) {
      _letters += other._letters;
      return *this;
    }
    friend Word operator*(Word a, Word const& b) {
      a *= b;
      return a;
    }
    Word& push_back(Letter l) {
      _letters.push_back(static_cast<char>(l));
      return *this;
    }

    std::vector<Letter> letters() const {
      return std::vector<Letter>(_letters.begin(), _letters.end());
    }

    friend bool operator==(Word const&, Word const&) = default;

    /// Raw byte view, letter i at byte i. Used for hashing and tries.
    std::string_view bytes() const noexcept { return _letters; }

   private:
    std::string _letters;
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      return std::hash<std::string_view>{}(w.bytes());
    }
  };

  /// Length-graded lexicographic comparison over the alphabet order.
  inline std::strong_ordering deglex_compare(Word const& a, Word const& b) {
    if (a.size() != b.size()) {
      return a.size() <=> b.size();
    }
    int c = a.bytes().compare(b.bytes());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  struct DeglexLess {
    bool operator()(Word const& a, Word const& b) const {
      return deglex_compare(a, b) < 0;
    }
  };

  struct DeglexGreater {
    bool operator()(Word const& a, Word const& b) const {
      return deglex_compare(a, b) > 0;
    }
  };

  /// Ordered list of distinct symbols. The order fixes the monomial order.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const noexcept { return _symbols.size(); }
    std::vector<std::string> const& symbols() const noexcept {
      return _symbols;
    }
    std::string const& symbol(Letter l) const { return _symbols.at(l); }

    bool has(std::string const& s) const { return _index.count(s) != 0; }
    /// Throws InputError for unknown symbols.
    Letter letter(std::string const& s) const;

    /// Symbols joined by '.', or "1" for the empty word.
    std::string format(Word const& w) const;
    /// Parses the word grammar `sym(.sym)*` with optional `^k` powers, or
    /// "1". Throws ParseError.
    Word parse(std::string_view text) const;

    /// Valid symbol spelling: [A-Za-z_][A-Za-z0-9_']*.
    static bool valid_symbol(std::string_view s);

    friend bool operator==(Alphabet const& a, Alphabet const& b) {
      return a._symbols == b._symbols;
    }

   private:
    std::vector<std::string>                _symbols;
    std::unordered_map<std::string, Letter> _index;
  };

}  // namespace ncalg

#endif  // NCALG_WORD_HPP_
