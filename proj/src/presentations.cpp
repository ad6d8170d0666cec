#include "hcc/presentations.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace hcc {

FreeWord FreeWord::from_letters(const std::vector<Letter>& letters) {
  FreeWord w;
  for (const Letter& l : letters) w.push_back(l);
  return w;
}

FreeWord FreeWord::generator(std::size_t gen, int exp) {
  FreeWord w;
  w.push_back({gen, exp});
  return w;
}

void FreeWord::push_back(Letter l) {
  if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("FreeWord: letter exponent must be +-1");
  if (!letters_.empty() && letters_.back() == l.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  FreeWord w = *this;
  for (const Letter& l : o.letters_) w.push_back(l);
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

FreeWord FreeWord::power(long long k) const {
  const FreeWord base = k >= 0 ? *this : inverse();
  FreeWord w;
  for (long long i = 0; i < (k >= 0 ? k : -k); ++i) w = w * base;
  return w;
}

long long FreeWord::exponent_sum(std::size_t gen) const {
  long long s = 0;
  for (const Letter& l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool valid_identifier(const std::string& s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  for (char c : s)
    if (!is_ident_char(c)) return false;
  return true;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#' && at_line_start_) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'" + found());
    advance();
  }
  std::string ident() {
    if (!is_ident_start(peek())) fail("expected a generator name" + found());
    std::string s;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) s += advance();
    return s;
  }
  long long signed_int() {
    skip_space();
    std::string s;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) s += advance();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) s += advance();
    if (s.empty() || s == "-" || s == "+") fail("expected an integer exponent" + found());
    if (s.size() > 10) fail("exponent " + s + " is too large");
    return std::stoll(s);
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }
  std::string found() {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
      at_line_start_ = true;
    } else {
      ++col_;
      if (!std::isspace(static_cast<unsigned char>(c))) at_line_start_ = false;
    }
    return c;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  bool at_line_start_ = true;
};

constexpr long long kMaxExpansion = 1 << 20;

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& name : generator_names) {
    if (!valid_identifier(name)) throw InputError("invalid generator name '" + name + "'");
    if (!seen.insert(name).second) throw InputError("duplicate generator name '" + name + "'");
  }
  for (std::size_t i = 0; i < relators.size(); ++i)
    for (const Letter& l : relators[i].letters())
      if (l.gen >= generator_names.size())
        throw InputError("relator " + std::to_string(i + 1) + " uses generator index " + std::to_string(l.gen) +
                         " out of range");
}

Presentation parse_presentation(std::string_view text) {
  Lexer lx(text);
  Presentation pres;
  lx.expect('<');
  std::map<std::string, std::size_t> index;
  for (;;) {
    lx.peek();
    const std::size_t line = lx.line(), col = lx.column();
    std::string name = lx.ident();
    if (!index.emplace(name, pres.generator_names.size()).second)
      throw ParseError("duplicate generator name '" + name + "'", line, col);
    pres.generator_names.push_back(name);
    if (lx.peek() == ',') {
      lx.advance();
      continue;
    }
    break;
  }
  lx.expect('|');
  if (lx.peek() != '>') {
    for (;;) {
      FreeWord w;
      bool any = false;
      while (lx.peek() != ',' && lx.peek() != '>') {
        if (lx.peek() == '\0') lx.fail("unterminated presentation, expected '>'");
        if (lx.peek() == '1') {
          lx.advance();
          if (any) lx.fail("the empty word '1' must stand alone");
          any = true;
          if (lx.peek() != ',' && lx.peek() != '>') lx.fail("the empty word '1' must stand alone");
          break;
        }
        const std::size_t line = lx.line(), col = lx.column();
        std::string name = lx.ident();
        auto it = index.find(name);
        if (it == index.end()) throw ParseError("unknown generator '" + name + "' in relator", line, col);
        long long e = 1;
        if (lx.peek() == '^') {
          lx.advance();
          e = lx.signed_int();
        }
        if (e > kMaxExpansion || e < -kMaxExpansion) lx.fail("exponent too large");
        for (long long k = 0; k < (e >= 0 ? e : -e); ++k) w.push_back({it->second, e >= 0 ? 1 : -1});
        any = true;
      }
      if (!any) lx.fail("empty relator (write 1 for the trivial word)");
      pres.relators.push_back(std::move(w));
      if (lx.peek() == ',') {
        lx.advance();
        continue;
      }
      break;
    }
  }
  lx.expect('>');
  if (!lx.done()) lx.fail("trailing input after '>'");
  return pres;
}

std::string format_word(const FreeWord& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long long run = static_cast<long long>(j - i) * ls[i].exp;
    if (i) out << ' ';
    out << names.at(ls[i].gen);
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

std::string format_presentation(const Presentation& pres) {
  std::ostringstream out;
  out << "< ";
  for (std::size_t i = 0; i < pres.generator_names.size(); ++i)
    out << (i ? ", " : "") << pres.generator_names[i];
  out << " |";
  for (std::size_t i = 0; i < pres.relators.size(); ++i)
    out << (i ? ", " : " ") << format_word(pres.relators[i], pres.generator_names);
  out << " >";
  return out.str();
}

std::vector<FoxTerm> fox_derivative(const FreeWord& w, std::size_t j) {
  std::vector<FoxTerm> terms;
  FreeWord prefix;
  for (const Letter& l : w.letters()) {
    if (l.gen == j && l.exp == 1) terms.push_back({+1, prefix});
    prefix.push_back(l);
    if (l.gen == j && l.exp == -1) terms.push_back({-1, prefix});
  }
  return terms;
}

ComplexSummary complex_summary(const Presentation& pres, std::uint32_t p) {
  const std::size_t n = pres.n_generators(), m = pres.n_relators();
  FpMatrix a(n, m, p);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a.set(j, i, pres.relators[i].exponent_sum(j));
  ComplexSummary s{p, a};
  s.rank_A = rank(a);
  s.b0 = 1;
  s.b1 = n - s.rank_A;
  s.b2 = m - s.rank_A;
  s.euler = 1 - static_cast<long long>(n) + static_cast<long long>(m);
  return s;
}

NormalizationTrace normalize_with_trace(const Presentation& pres, std::uint32_t p) {
  pres.validate();
  NormalizationTrace tr{pres, smith_normal_form(complex_summary(pres, p).boundary_A), {}};
  Presentation& out = tr.presentation;
  for (std::size_t k = 0; k < pres.n_generators(); ++k) tr.generator_words.push_back(FreeWord::generator(k));

  for (const ElementaryOp& op : tr.snf.right_ops) {
    if (op.kind == ElementaryOp::Kind::Swap) {
      std::swap(out.relators[op.i], out.relators[op.j]);
    } else {
      out.relators[op.i] = out.relators[op.i] * out.relators[op.j].power(op.q);
    }
  }
  for (const ElementaryOp& op : tr.snf.left_ops) {
    if (op.kind == ElementaryOp::Kind::Swap) {
      std::swap(tr.generator_words[op.i], tr.generator_words[op.j]);
      std::swap(out.generator_names[op.i], out.generator_names[op.j]);
      for (FreeWord& r : out.relators) {
        std::vector<Letter> ls = r.letters();
        for (Letter& l : ls) {
          if (l.gen == op.i) l.gen = op.j;
          else if (l.gen == op.j) l.gen = op.i;
        }
        r = FreeWord::from_letters(ls);
      }
    } else {
      // a_i = a'_i a'_j^q, i.e. the new generator is a'_i = a_i a_j^{-q}
      const FreeWord sub = FreeWord::generator(op.i) * FreeWord::generator(op.j).power(op.q);
      const FreeWord sub_inv = sub.inverse();
      for (FreeWord& r : out.relators) {
        FreeWord w;
        for (const Letter& l : r.letters()) {
          if (l.gen != op.i) w.push_back(l);
          else w = w * (l.exp == 1 ? sub : sub_inv);
        }
        r = std::move(w);
      }
      tr.generator_words[op.i] =
          tr.generator_words[op.i] * tr.generator_words[op.j].power(-static_cast<long long>(op.q));
    }
  }
  return tr;
}

Presentation normalize_presentation(const Presentation& pres, std::uint32_t p) {
  return normalize_with_trace(pres, p).presentation;
}

}  // namespace hcc
