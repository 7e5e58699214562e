#include "ncalg/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ncalg/error.hpp"

namespace ncalg::io {

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      throw InputError("cannot write " + path);
    }
  }

  namespace {

    // Piece of a line with the 1-based column where it starts.
    struct Field {
      std::string text;
      std::size_t column = 1;
    };

    struct Line {
      std::size_t number;
      Field       keyword;
      Field       rest;  // trimmed

      [[noreturn]] void fail(std::string const& what, std::size_t column) const {
        throw ParseError(what, number, column);
      }
      [[noreturn]] void fail(std::string const& what) const { fail(what, keyword.column); }
    };

    bool blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

    Field trim(std::string const& s, std::size_t column) {
      std::size_t b = 0;
      std::size_t e = s.size();
      while (b < e && blank(s[b])) {
        ++b;
      }
      while (e > b && blank(s[e - 1])) {
        --e;
      }
      return {s.substr(b, e - b), column + b};
    }

    std::vector<Line> split_lines(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       start  = 0;
      while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        std::string raw(text.substr(start, end - start));
        ++number;
        start = end + 1;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
          raw.erase(hash);
        }
        Field all = trim(raw, 1);
        if (all.text.empty()) {
          if (end == text.size()) {
            break;
          }
          continue;
        }
        auto  cut = all.text.find_first_of(" \t");
        Line  line{number, {all.text.substr(0, cut), all.column}, {}};
        if (cut != std::string::npos) {
          line.rest = trim(all.text.substr(cut), all.column + cut);
        } else {
          line.rest.column = all.column + all.text.size();
        }
        out.push_back(std::move(line));
        if (end == text.size()) {
          break;
        }
      }
      return out;
    }

    std::size_t last_line(std::string_view text) {
      std::size_t n = 1;
      for (char c : text) {
        n += c == '\n';
      }
      return text.empty() || text.back() != '\n' ? n : n - 1;
    }

    std::vector<Field> tokens(Field const& f) {
      std::vector<Field> out;
      std::size_t        i = 0;
      while (i < f.text.size()) {
        while (i < f.text.size() && blank(f.text[i])) {
          ++i;
        }
        std::size_t b = i;
        while (i < f.text.size() && !blank(f.text[i])) {
          ++i;
        }
        if (i > b) {
          out.push_back({f.text.substr(b, i - b), f.column + b});
        }
      }
      return out;
    }

    // "<left> -> <right>".
    std::pair<Field, Field> arrow(Line const& line) {
      auto at = line.rest.text.find("->");
      if (at == std::string::npos) {
        line.fail("expected '->'", line.rest.column);
      }
      Field left  = trim(line.rest.text.substr(0, at), line.rest.column);
      Field right = trim(line.rest.text.substr(at + 2), line.rest.column + at + 2);
      if (left.text.empty()) {
        line.fail("missing left side of '->'", left.column);
      }
      if (right.text.empty()) {
        line.fail("missing right side of '->'", right.column);
      }
      return {left, right};
    }

    // Re-raise errors from the text parsers with file coordinates.
    template <typename F>
    auto attributed(Line const& line, Field const& f, F&& parse) {
      try {
        return parse(f.text);
      } catch (ParseError const& e) {
        std::string what = e.what();
        auto        cut  = what.find(": ");
        line.fail(cut == std::string::npos ? what : what.substr(cut + 2),
                  f.column + (e.column() == 0 ? 0 : e.column() - 1));
      } catch (InputError const& e) {
        line.fail(e.what(), f.column);
      }
    }

    CoeffRing parse_ring(Line const& line) {
      return attributed(line, line.rest, [](std::string const& t) { return CoeffRing::parse(t); });
    }

    Alphabet parse_symbols(Line const& line) {
      std::vector<std::string> symbols;
      std::set<std::string>    seen;
      for (auto const& t : tokens(line.rest)) {
        if (!Alphabet::valid_symbol(t.text)) {
          line.fail("invalid symbol '" + t.text + "'", t.column);
        }
        if (!seen.insert(t.text).second) {
          line.fail("duplicate symbol '" + t.text + "'", t.column);
        }
        symbols.push_back(t.text);
      }
      return Alphabet(symbols);
    }

    Word parse_word(Line const& line, Field const& f, Alphabet const& a) {
      return attributed(line, f, [&](std::string const& t) { return a.parse(t); });
    }

    FreePoly parse_poly_at(Line const& line, Field const& f, AlgebraPtr const& algebra) {
      return attributed(line, f, [&](std::string const& t) { return parse_poly(t, algebra); });
    }

    std::size_t parse_index(Line const& line, Field const& f) {
      if (f.text.empty() || f.text.find_first_not_of("0123456789") != std::string::npos
          || f.text.size() > 9) {
        line.fail("expected a nonnegative index", f.column);
      }
      return static_cast<std::size_t>(std::stoul(f.text));
    }

    template <typename T>
    T const& require(std::optional<T> const& v, Line const& line, char const* what) {
      if (!v) {
        line.fail(std::string(what) + " must come first");
      }
      return *v;
    }

    std::string join(std::vector<std::string> const& xs) {
      std::string out;
      for (auto const& x : xs) {
        out += (out.empty() ? "" : " ") + x;
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // .ncalg

  rewrite::ReductionSystem load_system(std::string_view text) {
    std::optional<CoeffRing>  ring;
    std::optional<Alphabet>   alphabet;
    AlgebraPtr                algebra;
    std::vector<rewrite::Rule> rules;
    for (auto const& line : split_lines(text)) {
      auto const& k = line.keyword.text;
      if (k == "ring") {
        if (ring) {
          line.fail("duplicate ring line");
        }
        ring = parse_ring(line);
      } else if (k == "alphabet") {
        if (alphabet) {
          line.fail("duplicate alphabet line");
        }
        alphabet = parse_symbols(line);
        algebra  = attributed(line, line.rest, [&](std::string const&) {
          return make_algebra(*alphabet, require(ring, line, "ring"));
        });
      } else if (k == "rule") {
        require(alphabet, line, "alphabet");
        auto [left, right] = arrow(line);
        Word     lhs       = parse_word(line, left, *alphabet);
        FreePoly rhs       = parse_poly_at(line, right, algebra);
        if (lhs.empty()) {
          line.fail("rule left side must be a nonempty word", left.column);
        }
        for (auto const& [w, c] : rhs.terms()) {
          if (deglex_compare(w, lhs) >= 0) {
            line.fail("right side word " + alphabet->format(w) + " is not below "
                          + alphabet->format(lhs),
                      right.column);
          }
        }
        rules.push_back({lhs, rhs});
      } else {
        line.fail("unknown keyword '" + k + "'");
      }
    }
    if (!alphabet) {
      throw ParseError("missing alphabet line", last_line(text), 1);
    }
    return rewrite::ReductionSystem(algebra, std::move(rules));
  }

  std::string save_system(rewrite::ReductionSystem const& sys) {
    std::string out = "ring " + sys.ring().name() + "\n";
    out += "alphabet " + join(sys.alphabet().symbols()) + "\n";
    for (auto const& r : sys.rules()) {
      out += "rule " + rewrite::format_rule(r, sys.alphabet()) + "\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // .alg

  AlgebraDocument load_algebra(std::string_view text) {
    std::optional<CoeffRing>             ring;
    std::optional<Alphabet>              basis;
    std::optional<bool>                  unital;
    AlgebraPtr                           algebra;
    AlgebraPtr                           xalg;
    std::map<std::pair<Letter, Letter>, FreePoly> table;
    std::map<std::size_t, FreePoly>     gens;
    std::map<Letter, Coeff>             aug;
    std::map<Letter, FreePoly>          psi;
    std::optional<std::string>          lift;
    std::optional<std::size_t>          aug_line;
    std::size_t                         unital_line = 0;

    auto symbol = [&](Line const& line, Field const& f) {
      if (!basis->has(f.text)) {
        line.fail("unknown basis symbol '" + f.text + "'", f.column);
      }
      return basis->letter(f.text);
    };

    for (auto const& line : split_lines(text)) {
      auto const& k = line.keyword.text;
      if (k == "ring") {
        if (ring) {
          line.fail("duplicate ring line");
        }
        ring = parse_ring(line);
      } else if (k == "basis") {
        if (basis) {
          line.fail("duplicate basis line");
        }
        basis   = parse_symbols(line);
        algebra = attributed(line, line.rest, [&](std::string const&) {
          return make_algebra(*basis, require(ring, line, "ring"));
        });
      } else if (k == "unital") {
        if (unital) {
          line.fail("duplicate unital line");
        }
        if (line.rest.text != "true" && line.rest.text != "false") {
          line.fail("expected true or false", line.rest.column);
        }
        unital      = line.rest.text == "true";
        unital_line = line.number;
      } else if (k == "table") {
        require(basis, line, "basis");
        auto [left, right] = arrow(line);
        Word pair          = parse_word(line, left, *basis);
        if (pair.size() != 2) {
          line.fail("table key must be a product b.b'", left.column);
        }
        auto value = parse_poly_at(line, right, algebra);
        if (!table.emplace(std::make_pair(pair[0], pair[1]), value).second) {
          line.fail("duplicate table entry " + left.text, left.column);
        }
      } else if (k == "gen") {
        require(basis, line, "basis");
        auto [left, right] = arrow(line);
        auto i             = parse_index(line, left);
        if (!gens.emplace(i, parse_poly_at(line, right, algebra)).second) {
          line.fail("duplicate generator " + left.text, left.column);
        }
      } else if (k == "aug") {
        require(basis, line, "basis");
        auto [left, right] = arrow(line);
        auto b             = symbol(line, left);
        auto c             = parse_poly_at(line, right, algebra);
        if (c.degree() != 0) {
          line.fail("augmentation value must be a scalar", right.column);
        }
        if (!aug.emplace(b, c.coeff(Word())).second) {
          line.fail("duplicate augmentation of " + left.text, left.column);
        }
        aug_line = aug_line.value_or(line.number);
      } else if (k == "psi") {
        require(basis, line, "basis");
        if (!xalg) {
          xalg = make_algebra(Alphabet({"x"}), *ring);
        }
        auto [left, right] = arrow(line);
        auto b             = symbol(line, left);
        if (!psi.emplace(b, parse_poly_at(line, right, xalg)).second) {
          line.fail("duplicate psi entry for " + left.text, left.column);
        }
      } else if (k == "lift") {
        require(basis, line, "basis");
        auto [left, right] = arrow(line);
        if (left.text != "x") {
          line.fail("expected 'lift x -> b'", left.column);
        }
        if (lift) {
          line.fail("duplicate lift line");
        }
        symbol(line, right);
        lift = right.text;
      } else {
        line.fail("unknown keyword '" + k + "'");
      }
    }
    std::size_t const end = last_line(text);
    if (!basis) {
      throw ParseError("missing basis line", end, 1);
    }
    if (!unital) {
      throw ParseError("missing unital line", end, 1);
    }
    std::vector<FreePoly> entries;
    for (std::size_t i = 0; i < basis->size(); ++i) {
      for (std::size_t j = 0; j < basis->size(); ++j) {
        auto it = table.find({static_cast<Letter>(i), static_cast<Letter>(j)});
        if (it == table.end()) {
          throw ParseError("missing table entry " + basis->symbol(static_cast<Letter>(i)) + "."
                               + basis->symbol(static_cast<Letter>(j)),
                           end, 1);
        }
        entries.push_back(it->second);
      }
    }
    std::optional<std::vector<Coeff>> augmentation;
    if (!aug.empty()) {
      if (aug.size() != basis->size()) {
        throw ParseError("augmentation must cover every basis symbol", *aug_line, 1);
      }
      augmentation.emplace();
      for (auto const& [b, c] : aug) {
        augmentation->push_back(c);
      }
    }
    std::optional<embed::AlgebraPresentation> A;
    try {
      A.emplace(algebra, *unital, std::move(entries), std::move(augmentation));
    } catch (ParseError const&) {
      throw;
    } catch (InputError const& e) {
      throw ParseError(e.what(), aug_line.value_or(unital_line), 1);
    }
    AlgebraDocument doc{*A, {}, std::nullopt, lift};
    std::size_t     expected = 0;
    for (auto const& [i, g] : gens) {
      if (i != expected++) {
        throw ParseError("generator indices must run 0, 1, 2, ... without gaps", end, 1);
      }
      try {
        A->check_element(g);
      } catch (InputError const& e) {
        throw ParseError(std::string("gen ") + std::to_string(i) + ": " + e.what(), end, 1);
      }
      doc.gens.push_back(g);
    }
    if (!psi.empty()) {
      if (psi.size() != basis->size()) {
        throw ParseError("psi must cover every basis symbol", end, 1);
      }
      doc.psi.emplace();
      for (auto const& [b, p] : psi) {
        doc.psi->push_back(p);
      }
    }
    return doc;
  }

  std::string save_algebra(AlgebraDocument const& doc) {
    auto const& A   = doc.algebra;
    auto const& B   = A.basis();
    std::string out = "ring " + A.ring().name() + "\n";
    out += "basis" + std::string(B.size() ? " " : "") + join(B.symbols()) + "\n";
    out += std::string("unital ") + (A.unital() ? "true" : "false") + "\n";
    for (std::size_t i = 0; i < B.size(); ++i) {
      for (std::size_t j = 0; j < B.size(); ++j) {
        out += "table " + B.symbol(static_cast<Letter>(i)) + "." + B.symbol(static_cast<Letter>(j))
               + " -> " + format_poly(A.product(static_cast<Letter>(i), static_cast<Letter>(j)))
               + "\n";
      }
    }
    for (std::size_t i = 0; i < doc.gens.size(); ++i) {
      out += "gen " + std::to_string(i) + " -> " + format_poly(doc.gens[i]) + "\n";
    }
    if (A.augmentation()) {
      for (std::size_t i = 0; i < B.size(); ++i) {
        out += "aug " + B.symbol(static_cast<Letter>(i)) + " -> "
               + A.ring().format((*A.augmentation())[i]) + "\n";
      }
    }
    if (doc.psi) {
      for (std::size_t i = 0; i < B.size(); ++i) {
        out += "psi " + B.symbol(static_cast<Letter>(i)) + " -> " + format_poly((*doc.psi)[i])
               + "\n";
      }
    }
    if (doc.lift) {
      out += "lift x -> " + *doc.lift + "\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // .zalg

  namespace {

    tensorring::Vec combination(Line const& line, Field const& f, AlgebraPtr const& names) {
      auto            p = parse_poly_at(line, f, names);
      tensorring::Vec v(names->alphabet.size());
      for (auto const& [w, c] : p.terms()) {
        if (w.size() != 1) {
          line.fail("expected a combination of generator names", f.column);
        }
        v[w[0]] = c.scalar();
      }
      return v;
    }

    std::string format_combination(tensorring::Vec const& v, AlgebraPtr const& names) {
      FreePoly p(names);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
          p.add_term(Word::letter(static_cast<Letter>(i)), names->ring.from_rational(v[i]));
        }
      }
      return format_poly(p);
    }

  }  // namespace

  ZAlgebraDocument load_zalgebra(std::string_view text) {
    std::optional<tensorring::Domain>    domain;
    std::optional<Alphabet>              names;
    AlgebraPtr                           combos;
    std::vector<std::vector<Integer>>    relations;
    std::optional<tensorring::Vec>       unit;
    std::map<std::pair<Letter, Letter>, tensorring::Vec> table;
    std::map<std::size_t, tensorring::Vec> s;
    std::size_t                          generators_line = 0;

    for (auto const& line : split_lines(text)) {
      auto const& k = line.keyword.text;
      if (k == "domain") {
        if (domain) {
          line.fail("duplicate domain line");
        }
        if (line.rest.text == "Z") {
          domain = tensorring::Domain::integers;
        } else if (line.rest.text == "Q") {
          domain = tensorring::Domain::rationals;
        } else {
          line.fail("domain must be Z or Q", line.rest.column);
        }
      } else if (k == "generators") {
        if (names) {
          line.fail("duplicate generators line");
        }
        require(domain, line, "domain");
        names           = parse_symbols(line);
        generators_line = line.number;
        if (names->size() == 0) {
          line.fail("need at least one generator", line.rest.column);
        }
        combos = make_algebra(*names, *domain == tensorring::Domain::integers
                                          ? CoeffRing::integers()
                                          : CoeffRing::rationals());
      } else if (k == "relation") {
        require(names, line, "generators");
        if (*domain == tensorring::Domain::rationals) {
          line.fail("modules over Q take no relations");
        }
        auto                 ts = tokens(line.rest);
        std::vector<Integer> row;
        if (ts.size() != names->size()) {
          line.fail("relation needs " + std::to_string(names->size()) + " integers",
                    line.rest.column);
        }
        for (auto const& t : ts) {
          Integer z;
          if (t.text.empty() || z.set_str(t.text, 10) != 0) {
            line.fail("expected an integer", t.column);
          }
          row.push_back(z);
        }
        relations.push_back(std::move(row));
      } else if (k == "unit") {
        require(names, line, "generators");
        if (unit) {
          line.fail("duplicate unit line");
        }
        if (line.rest.text.rfind("->", 0) != 0) {
          line.fail("expected 'unit -> combination'", line.rest.column);
        }
        unit = combination(line, trim(line.rest.text.substr(2), line.rest.column + 2), combos);
      } else if (k == "table") {
        require(names, line, "generators");
        auto [left, right] = arrow(line);
        Word pair          = parse_word(line, left, *names);
        if (pair.size() != 2) {
          line.fail("table key must be a product g.g'", left.column);
        }
        if (!table.emplace(std::make_pair(pair[0], pair[1]), combination(line, right, combos))
                 .second) {
          line.fail("duplicate table entry " + left.text, left.column);
        }
      } else if (k == "s") {
        require(names, line, "generators");
        auto [left, right] = arrow(line);
        auto n             = parse_index(line, left);
        if (!s.emplace(n, combination(line, right, combos)).second) {
          line.fail("duplicate s " + left.text, left.column);
        }
      } else {
        line.fail("unknown keyword '" + k + "'");
      }
    }
    std::size_t const end = last_line(text);
    if (!names) {
      throw ParseError("missing generators line", end, 1);
    }
    if (!unit) {
      throw ParseError("missing unit line", end, 1);
    }
    auto const      g = names->size();
    std::vector<tensorring::Vec> entries;
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = 0; j < g; ++j) {
        auto it = table.find({static_cast<Letter>(i), static_cast<Letter>(j)});
        if (it == table.end()) {
          throw ParseError("missing table entry " + names->symbol(static_cast<Letter>(i)) + "."
                               + names->symbol(static_cast<Letter>(j)),
                           end, 1);
        }
        entries.push_back(it->second);
      }
    }
    ZAlgebraDocument doc;
    try {
      tensorring::IntMatrix rel(relations.size(), g);
      for (std::size_t r = 0; r < relations.size(); ++r) {
        for (std::size_t c = 0; c < g; ++c) {
          rel(r, c) = relations[r][c];
        }
      }
      auto module = std::make_shared<tensorring::FgAbGroup const>(g, std::move(rel), *domain);
      doc.algebra = std::make_shared<tensorring::ZAlgebra const>(module, *unit, std::move(entries),
                                                                  names->symbols());
    } catch (ParseError const&) {
      throw;
    } catch (InputError const& e) {
      throw ParseError(e.what(), generators_line, 1);
    }
    std::size_t expected = 0;
    for (auto const& [n, v] : s) {
      if (n != expected++) {
        throw ParseError("s indices must run 0, 1, 2, ... without gaps", end, 1);
      }
      doc.s.push_back(doc.algebra->module()->normalize(v));
    }
    return doc;
  }

  std::string save_zalgebra(ZAlgebraDocument const& doc) {
    auto const& A      = *doc.algebra;
    auto const& M      = *A.module();
    bool const  over_z = M.domain() == tensorring::Domain::integers;
    auto        combos = make_algebra(Alphabet(A.names()),
                                      over_z ? CoeffRing::integers() : CoeffRing::rationals());
    std::string out    = std::string("domain ") + (over_z ? "Z" : "Q") + "\n";
    out += "generators " + join(A.names()) + "\n";
    for (std::size_t r = 0; r < M.relations().rows(); ++r) {
      std::string row;
      for (std::size_t c = 0; c < M.relations().cols(); ++c) {
        row += (c ? " " : "") + M.relations()(r, c).get_str();
      }
      out += "relation " + row + "\n";
    }
    out += "unit -> " + format_combination(A.unit(), combos) + "\n";
    for (std::size_t i = 0; i < A.rank(); ++i) {
      for (std::size_t j = 0; j < A.rank(); ++j) {
        out += "table " + A.names()[i] + "." + A.names()[j] + " -> "
               + format_combination(A.product(i, j), combos) + "\n";
      }
    }
    for (std::size_t n = 0; n < doc.s.size(); ++n) {
      out += "s " + std::to_string(n) + " -> " + format_combination(doc.s[n], combos) + "\n";
    }
    return out;
  }

}  // namespace ncalg::io
