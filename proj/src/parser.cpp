#include <cctype>
#include <set>
#include <sstream>

#include "tropnewton/error.hpp"
#include "tropnewton/io.hpp"

namespace tropnewton {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingPtr& ring, int line) : s_(text), ring_(ring), line_(line) {}

  MPoly parse() {
    MPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("expected an operator or end of line");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(line_) + ", column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool is_puiseux() const { return !ring_->field.is_padic(); }

  MPoly constant(const Scalar& c) const { return MPoly::constant(ring_, c); }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        size_t at = pos_;
        MPoly d = unary();
        if (!d.is_constant()) {
          pos_ = at;
          fail("divisor must not involve ring variables");
        }
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc.scaled(Scalar(1) / d.terms().begin()->second);
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Int integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  // Exponent after '^': n, -n, (n), (-n) or (a/b).
  Rat exponent() {
    if (accept('(')) {
      bool neg = accept('-');
      Rat e(integer());
      if (accept('/')) {
        Int d = integer();
        if (d == 0) fail("zero denominator in exponent");
        e /= Rat(d);
      }
      expect(')');
      return neg ? Rat(-e) : e;
    }
    bool neg = accept('-');
    Rat e(integer());
    return neg ? Rat(-e) : e;
  }

  MPoly power() {
    skip_ws();
    bool is_t = false;
    MPoly base = atom(is_t);
    if (!accept('^')) return base;
    size_t at = pos_;
    Rat e = exponent();
    if (is_t) return constant(Scalar::t_power(e));
    if (e.get_den() != 1) {
      pos_ = at;
      fail("only t accepts fractional exponents");
    }
    if (!e.get_num().fits_slong_p()) fail("exponent too large");
    long k = e.get_num().get_si();
    if (k < 0) {
      if (!base.is_constant() || base.is_zero()) {
        pos_ = at;
        fail("negative exponents need a nonzero variable-free base");
      }
      return constant(base.terms().begin()->second.pow(k));
    }
    return base.pow(static_cast<unsigned>(k));
  }

  MPoly atom(bool& is_t) {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected a number, variable or '('");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(Scalar(Rat(integer())));
    if (is_ident_start(c)) {
      size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (auto idx = ring_->index_of(name)) return MPoly::variable(ring_, *idx);
      if (name == "t" && is_puiseux()) {
        is_t = true;
        return constant(Scalar::t_power(1));
      }
      pos_ = start;
      throw Error(ErrorKind::UnknownVariable, "line " + std::to_string(line_) + ", column " + std::to_string(pos_ + 1) +
                                                  ": unknown variable '" + name + "'");
    }
    fail("expected a number, variable or '('");
  }

  std::string_view s_;
  const RingPtr& ring_;
  int line_;
  size_t pos_ = 0;
};

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void line_error(int line, const std::string& what) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  for (char c : s) {
    if (!is_ident_char(c)) return false;
  }
  return true;
}

}  // namespace

MPoly parse_polynomial(std::string_view text, const RingPtr& ring, int line) {
  return ExprParser(text, ring, line).parse();
}

Scalar parse_scalar(std::string_view text, const Field& field) {
  MPoly p = parse_polynomial(text, make_ring({}, field));
  return p.is_zero() ? Scalar() : p.terms().begin()->second;
}

IdealFile parse_ideal_file(std::string_view text) {
  enum class Stage { Field, Ring, Gens, Body } stage = Stage::Field;
  std::optional<Field> field;
  IdealFile out;
  int lineno = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = strip(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto words = split_words(line);
    switch (stage) {
      case Stage::Field: {
        if (words[0] != "field") line_error(lineno, "expected 'field puiseux' or 'field padic <p>'");
        if (words.size() == 2 && words[1] == "puiseux") {
          field = Field::puiseux();
        } else if (words.size() == 3 && words[1] == "padic") {
          long p = 0;
          try {
            size_t used = 0;
            p = std::stol(words[2], &used);
            if (used != words[2].size()) throw std::invalid_argument("trailing");
          } catch (const std::exception&) {
            line_error(lineno, "expected an integer prime after 'padic'");
          }
          field = Field::padic(p);
        } else {
          line_error(lineno, "expected 'field puiseux' or 'field padic <p>'");
        }
        stage = Stage::Ring;
        break;
      }
      case Stage::Ring: {
        if (words[0] != "ring") line_error(lineno, "expected 'ring <names>'");
        std::vector<std::string> names(words.begin() + 1, words.end());
        std::set<std::string> seen;
        for (const auto& n : names) {
          if (!valid_identifier(n)) line_error(lineno, "invalid variable name '" + n + "'");
          if (!field->is_padic() && n == "t") line_error(lineno, "'t' is reserved for the uniformizer");
          if (!seen.insert(n).second) line_error(lineno, "duplicate variable '" + n + "'");
        }
        out.ring = make_ring(std::move(names), *field);
        stage = Stage::Gens;
        break;
      }
      case Stage::Gens:
      case Stage::Body: {
        if (words[0] == "weight") {
          auto colon = line.find(':');
          if (colon == std::string_view::npos) line_error(lineno, "expected 'weight <name>: a,b,...'");
          auto name = std::string(strip(line.substr(6, colon - 6)));
          if (!valid_identifier(name)) line_error(lineno, "invalid weight name '" + name + "'");
          WeightVec w;
          try {
            w = parse_weight_list(strip(line.substr(colon + 1)));
          } catch (const Error& e) {
            line_error(lineno, e.detail());
          }
          if (w.size() > out.ring->nvars()) {
            throw Error(ErrorKind::LengthMismatch, "line " + std::to_string(lineno) + ": weight has " +
                                                       std::to_string(w.size()) + " entries, ring has " +
                                                       std::to_string(out.ring->nvars()));
          }
          out.weights[name] = std::move(w);
        } else if (stage == Stage::Gens) {
          if (words.size() != 1 || words[0] != "gens") line_error(lineno, "expected 'gens'");
          stage = Stage::Body;
        } else {
          out.gens.push_back(parse_polynomial(line, out.ring, lineno));
        }
        break;
      }
    }
    if (end == text.size()) break;
  }
  if (stage != Stage::Body) line_error(lineno, "missing header; expected field, ring and gens lines");
  return out;
}

std::string print_ideal_file(const IdealFile& file) {
  std::string out = "field " + file.field().describe() + "\nring";
  for (const auto& v : file.ring->vars) out += " " + v;
  out += "\ngens\n";
  for (const auto& g : file.gens) out += g.to_string() + "\n";
  for (const auto& [name, w] : file.weights) out += "weight " + name + ": " + format_weight_list(w) + "\n";
  return out;
}

bool operator==(const IdealFile& a, const IdealFile& b) {
  return *a.ring == *b.ring && a.gens == b.gens && a.weights == b.weights;
}

}  // namespace tropnewton
