#include "koszulkit/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "koszulkit/error.hpp"

namespace koszulkit {

Presentation Presentation::make(std::vector<std::string> names, FieldSpec field, GenOrder order,
                                std::vector<NcPoly> relations) {
  Presentation p{std::move(names), field, std::move(order), std::move(relations)};
  p.validate();
  return p;
}

Presentation Presentation::make(std::vector<std::string> names, FieldSpec field, std::vector<NcPoly> relations) {
  GenOrder ord = GenOrder::identity(names.size());
  return make(std::move(names), field, std::move(ord), std::move(relations));
}

void Presentation::validate() const {
  if (names.empty()) throw Error(ErrorCode::InvalidArgument, "a presentation needs at least one generator");
  if (order.size() != names.size())
    throw Error(ErrorCode::InvalidArgument, "generator order does not match the generator count");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw Error(ErrorCode::InvalidArgument, "duplicate generator name " + names[i]);
  for (const NcPoly& f : relations) {
    if (!(f.field() == field)) throw Error(ErrorCode::FieldMismatch, "relation over a different field");
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero relation");
    if (!f.is_homogeneous())
      throw Error(ErrorCode::NonHomogeneousRelation, "relation " + render_poly(f) + " is not homogeneous");
    if (f.degree() < 2)
      throw Error(ErrorCode::InvalidArgument, "relation " + render_poly(f) + " has degree below 2");
    for (const auto& [w, c] : f.terms())
      for (Letter l : w.letters())
        if (l >= names.size()) throw Error(ErrorCode::UnknownGenerator, "letter index out of range");
  }
}

bool Presentation::all_quadratic() const {
  return std::all_of(relations.begin(), relations.end(), [](const NcPoly& f) { return f.degree() == 2; });
}

bool Presentation::all_monomial() const {
  return std::all_of(relations.begin(), relations.end(), [](const NcPoly& f) { return f.is_monomial(); });
}

Presentation Presentation::with_order(const GenOrder& ord) const {
  Presentation p = *this;
  p.order = ord;
  p.validate();
  return p;
}

std::string Presentation::render_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += names.at(w[i]);
  }
  return s;
}

std::string Presentation::render_poly(const NcPoly& f) const {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Word, Scalar>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return word_compare(a.first, b.first, order) == Cmp::GT; });
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms) {
    bool neg = c.prints_negative();
    std::string mag = neg ? (-c).to_string() : c.to_string();
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      s += mag;
    } else {
      if (mag != "1") s += mag + " ";
      s += render_word(w);
    }
  }
  return s;
}

std::string Presentation::render() const {
  std::ostringstream out;
  out << "field " << field.to_string() << "\n";
  out << "generators";
  for (const auto& n : names) out << " " << n;
  out << "\n";
  if (!(order == GenOrder::identity(names.size()))) {
    out << "order";
    for (Letter g : order.ascending()) out << " " << names[g];
    out << "\n";
  }
  out << "relations\n";
  for (const NcPoly& f : relations) out << "  " << render_poly(f) << "\n";
  out << "end\n";
  return out.str();
}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names, const FieldSpec& field,
             std::size_t line)
      : text_(text), names_(names), field_(field), line_(line) {}

  NcPoly parse() {
    NcPoly result(field_);
    skip();
    if (at_end()) fail("polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = get() == '-';
        skip();
      } else if (!first) {
        fail("'+' or '-'");
      }
      first = false;
      Scalar coeff = field_.one();
      bool have_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        mpq_class q(number());
        skip();
        if (peek() == '/') {
          get();
          skip();
          mpz_class den = number();
          if (den == 0) fail("nonzero denominator");
          q /= den;
          skip();
        }
        coeff = field_.from_rational(q);
        have_coeff = true;
        if (peek() == '*') {
          get();
          skip();
          if (!is_name_start(peek())) fail("generator name");
        }
      }
      Word w;
      if (is_name_start(peek())) {
        w = word();
      } else if (!have_coeff) {
        fail("coefficient or generator name");
      }
      result.add_term(w, negative ? -coeff : coeff);
      skip();
    }
    return result;
  }

  Word word() {
    std::vector<Letter> letters;
    while (true) {
      std::size_t col = pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end())
        throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + name + "' at line " +
                                                     std::to_string(line_) + ", column " +
                                                     std::to_string(col + 1));
      letters.push_back(static_cast<Letter>(it - names_.begin()));
      skip();
      if (peek() != '*') break;
      get();
      skip();
      if (!is_name_start(peek())) fail("generator name");
    }
    return Word(std::move(letters));
  }

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(line_, pos_ + 1, expected); }

 private:
  mpz_class number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  FieldSpec field_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::vector<std::pair<std::string, std::size_t>> tokenize(std::string_view line) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.emplace_back(std::string(line.substr(start, i - start)), start + 1);
  }
  return out;
}

}  // namespace

NcPoly parse_poly(std::string_view text, const std::vector<std::string>& names, const FieldSpec& field,
                  std::size_t line) {
  return PolyParser(text, names, field, line).parse();
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  std::size_t a = text.find_first_not_of(" \t");
  if (a == std::string_view::npos) throw ParseError(1, 1, "word");
  std::size_t b = text.find_last_not_of(" \t");
  text = text.substr(a, b - a + 1);
  if (text == "1") return {};
  PolyParser p(text, names, FieldSpec::rationals(), 1);
  if (!is_name_start(text.front())) p.fail("generator name");
  Word w = p.word();
  if (!p.at_end()) p.fail("end of word");
  return w;
}

Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string l(text.substr(start, end - start));
      if (!l.empty() && l.back() == '\r') l.pop_back();
      lines.push_back(std::move(l));
      start = end + 1;
    }
  }

  FieldSpec field;
  bool have_field = false;
  std::vector<std::string> names;
  std::vector<std::string> order_names;
  std::size_t order_line = 0;
  std::vector<NcPoly> relations;
  enum class State { Header, Relations, Done } state = State::Header;

  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t lineno = idx + 1;
    std::string content = lines[idx];
    if (auto hash = content.find('#'); hash != std::string::npos) content.erase(hash);
    auto tokens = tokenize(content);
    if (tokens.empty()) continue;

    if (state == State::Relations) {
      if (tokens.size() == 1 && tokens[0].first == "end") {
        state = State::Done;
        continue;
      }
      NcPoly f = parse_poly(content, names, field, lineno);
      if (!f.is_homogeneous())
        throw Error(ErrorCode::NonHomogeneousRelation, "relation on line " + std::to_string(lineno) +
                                                           " is not homogeneous");
      if (f.is_zero())
        throw Error(ErrorCode::InvalidArgument, "relation on line " + std::to_string(lineno) + " is zero");
      if (f.degree() < 2)
        throw Error(ErrorCode::InvalidArgument,
                    "relation on line " + std::to_string(lineno) + " has degree below 2");
      relations.push_back(std::move(f));
      continue;
    }
    if (state == State::Done) throw ParseError(lineno, tokens[0].second, "end of file after 'end'");

    const std::string& key = tokens[0].first;
    if (key == "field") {
      if (have_field || !names.empty()) throw ParseError(lineno, tokens[0].second, "single 'field' line first");
      if (tokens.size() == 2 && tokens[1].first == "rational") {
        field = FieldSpec::rationals();
      } else if (tokens.size() == 3 && tokens[1].first == "prime") {
        const std::string& ps = tokens[2].first;
        if (ps.empty() || !std::all_of(ps.begin(), ps.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) || ps.size() > 12)
          throw ParseError(lineno, tokens[2].second, "prime number");
        try {
          field = FieldSpec::prime(std::stoull(ps));
        } catch (const Error&) {
          throw ParseError(lineno, tokens[2].second, "prime below 2^31");
        }
      } else {
        std::size_t col = tokens.size() > 1 ? tokens[1].second : content.size() + 1;
        throw ParseError(lineno, col, "'rational' or 'prime <p>'");
      }
      have_field = true;
    } else if (key == "generators") {
      if (!names.empty()) throw ParseError(lineno, tokens[0].second, "single 'generators' line");
      if (tokens.size() < 2) throw ParseError(lineno, content.size() + 1, "generator names");
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        const std::string& n = tokens[t].first;
        if (!is_name_start(n[0]) || !std::all_of(n.begin(), n.end(), is_name_char))
          throw ParseError(lineno, tokens[t].second, "generator name");
        if (std::find(names.begin(), names.end(), n) != names.end())
          throw ParseError(lineno, tokens[t].second, "distinct generator names");
        names.push_back(n);
      }
    } else if (key == "order") {
      if (names.empty()) throw ParseError(lineno, tokens[0].second, "'generators' before 'order'");
      order_line = lineno;
      for (std::size_t t = 1; t < tokens.size(); ++t)
        if (tokens[t].first != "<") order_names.push_back(tokens[t].first);
    } else if (key == "relations") {
      if (names.empty()) throw ParseError(lineno, tokens[0].second, "'generators' before 'relations'");
      if (tokens.size() != 1) throw ParseError(lineno, tokens[1].second, "end of line");
      state = State::Relations;
    } else {
      throw ParseError(lineno, tokens[0].second, "'field', 'generators', 'order' or 'relations'");
    }
  }
  if (names.empty()) throw ParseError(lines.size(), 1, "'generators' line");
  if (state == State::Relations) throw ParseError(lines.size(), 1, "'end'");

  GenOrder ord = GenOrder::identity(names.size());
  if (!order_names.empty() || order_line) {
    std::vector<Letter> asc;
    for (const auto& n : order_names) {
      auto it = std::find(names.begin(), names.end(), n);
      if (it == names.end())
        throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + n + "' in order line " +
                                                     std::to_string(order_line));
      asc.push_back(static_cast<Letter>(it - names.begin()));
    }
    try {
      ord = GenOrder(std::move(asc));
    } catch (const Error&) {
      throw ParseError(order_line, 1, "a permutation of the generators");
    }
  }
  return Presentation::make(std::move(names), field, std::move(ord), std::move(relations));
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

}  // namespace koszulkit
