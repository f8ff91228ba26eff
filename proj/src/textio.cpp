#include "heiscusp/textio.hpp"

#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace heiscusp {

std::string to_text(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

namespace {

// One printed term: coefficient against the unit 1, sqrt(d) or i*sqrt(d).
void append_term(std::string& out, const Rat& coef, const std::string& unit) {
  if (coef == 0) return;
  const bool neg = coef < 0;
  const Rat mag = neg ? Rat(-coef) : coef;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (unit.empty()) {
    out += to_text(mag);
  } else if (mag == 1) {
    out += unit;
  } else {
    out += to_text(mag) + "*" + unit;
  }
}

std::string imag_unit(SquarefreeD d) {
  return d.value() == 1 ? "i" : "i*sqrt(" + std::to_string(d.value()) + ")";
}

}  // namespace

std::string to_text(const ImagQuad& x) {
  std::string out;
  append_term(out, x.a(), "");
  append_term(out, x.b(), imag_unit(x.d()));
  return out.empty() ? "0" : out;
}

std::string to_text(const RealQuad& t) {
  std::string out;
  append_term(out, t.p(), "");
  append_term(out, t.q(), "sqrt(" + std::to_string(t.d().value()) + ")");
  return out.empty() ? "0" : out;
}

std::string to_text(const HeisIsom& g) {
  std::string out = "(" + to_text(g.z()) + "; " + to_text(g.t()) + "; " +
                    to_text(g.u()) + ")";
  if (g.antiholomorphic()) out += "*sigma";
  return out;
}

std::string to_text(const AffineMapC& f) {
  std::string out = "w -> ";
  const std::string arg = f.conj ? "conj(w)" : "w";
  if (f.u.is_one()) {
    out += arg;
  } else {
    out += "(" + to_text(f.u) + ")*" + arg;
  }
  if (!f.z.is_zero()) out += " + (" + to_text(f.z) + ")";
  return out;
}

std::string to_text(const IqPoly& f) {
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const ImagQuad& c = f.coeff(k);
    if (c.is_zero() && f.degree() > 0) continue;
    const std::string xpow =
        k == 0 ? "" : (k == 1 ? "X" : "X^" + std::to_string(k));
    if (c.is_rational()) {
      std::string term;
      append_term(term, c.a(), xpow);
      if (term.empty()) continue;
      if (out.empty()) {
        out = term;
      } else {
        if (term[0] == '-') {
          out += " - " + term.substr(1);
        } else {
          out += " + " + term;
        }
      }
    } else {
      const std::string coef = "(" + to_text(c) + ")";
      const std::string term = xpow.empty() ? coef : coef + "*" + xpow;
      out += out.empty() ? term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

// A parsed additive term: coef * i^{has_i} * sqrt(sqrt_arg), sqrt_arg = 0
// meaning no radical.
struct RawTerm {
  Rat coef;
  bool has_i = false;
  long sqrt_arg = 0;
};

class Scanner {
 public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool eat_word(const std::string& w) {
    skip_ws();
    if (s_.compare(pos_, w.size(), w) == 0) {
      const size_t end = pos_ + w.size();
      // Do not split a longer identifier.
      if (end >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[end]))) {
        pos_ = end;
        return true;
      }
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }

  Int integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return Int(s_.substr(start, pos_ - start));
  }

  Rat rational() {
    const Int num = integer();
    if (eat('/')) {
      const Int den = integer();
      if (den == 0) fail("zero denominator");
      return Rat(num, den);
    }
    return Rat(num);
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos_) + ": " + why);
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;
};

RawTerm parse_term(Scanner& sc) {
  RawTerm term;
  term.coef = 1;
  bool first = true;
  do {
    if (sc.eat_word("i")) {
      if (term.has_i) sc.fail("repeated factor i");
      term.has_i = true;
    } else if (sc.eat_word("sqrt")) {
      if (term.sqrt_arg != 0) sc.fail("repeated sqrt factor");
      sc.expect('(');
      const Int n = sc.integer();
      sc.expect(')');
      if (n < 1 || n > 1000000) sc.fail("radicand out of range");
      term.sqrt_arg = static_cast<long>(n);
    } else if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      term.coef *= sc.rational();
    } else if (first) {
      sc.fail("expected a term");
    } else {
      sc.fail("expected a factor after '*'");
    }
    first = false;
  } while (sc.eat('*'));
  return term;
}

std::vector<RawTerm> parse_expr(Scanner& sc) {
  std::vector<RawTerm> terms;
  bool neg = false;
  if (sc.eat('-')) neg = true;
  while (true) {
    RawTerm t = parse_term(sc);
    if (neg) t.coef = -t.coef;
    terms.push_back(std::move(t));
    if (sc.eat('+')) {
      neg = false;
    } else if (sc.eat('-')) {
      neg = true;
    } else {
      return terms;
    }
  }
}

ImagQuad to_imag(const std::vector<RawTerm>& terms, SquarefreeD d) {
  Rat a(0), b(0);
  for (const RawTerm& t : terms) {
    if (!t.has_i) {
      if (t.sqrt_arg != 0 && t.coef != 0) {
        throw std::invalid_argument(
            "real radical term is not representable in E_d");
      }
      a += t.coef;
    } else {
      const long arg = t.sqrt_arg == 0 ? 1 : t.sqrt_arg;
      if (arg != d.value()) {
        throw std::invalid_argument("imaginary term does not match the field");
      }
      b += t.coef;
    }
  }
  return {d, std::move(a), std::move(b)};
}

RealQuad to_real(const std::vector<RawTerm>& terms, SquarefreeD d) {
  Rat p(0), q(0);
  for (const RawTerm& t : terms) {
    if (t.has_i) {
      throw std::invalid_argument("imaginary term in a real coordinate");
    }
    if (t.sqrt_arg == 0) {
      p += t.coef;
    } else if (t.sqrt_arg == d.value()) {
      q += t.coef;
    } else {
      throw std::invalid_argument("radical term does not match the field");
    }
  }
  return {d, std::move(p), std::move(q)};
}

}  // namespace

HeisIsom parse_heis(const std::string& text, std::optional<long> d_hint) {
  Scanner sc(text);
  sc.expect('(');
  const std::vector<RawTerm> ez = parse_expr(sc);
  sc.expect(';');
  const std::vector<RawTerm> et = parse_expr(sc);
  sc.expect(';');
  const std::vector<RawTerm> eu = parse_expr(sc);
  sc.expect(')');
  bool antiholomorphic = false;
  if (sc.eat('*')) {
    if (!sc.eat_word("sigma")) sc.fail("expected sigma");
    antiholomorphic = true;
  }
  if (!sc.at_end()) sc.fail("trailing input");

  // The field is the unique radicand present; a bare i means d = 1.
  std::set<long> radicands;
  for (const auto* expr : {&ez, &et, &eu}) {
    for (const RawTerm& t : *expr) {
      if (t.sqrt_arg != 0) radicands.insert(t.sqrt_arg);
      else if (t.has_i) radicands.insert(1);
    }
  }
  if (radicands.size() > 1) {
    throw std::invalid_argument("mixed radicands in input");
  }
  long dv = d_hint.value_or(1);
  if (!radicands.empty()) {
    dv = *radicands.begin();
    if (d_hint && *d_hint != dv) {
      throw std::invalid_argument(
          "input uses sqrt(" + std::to_string(dv) + ") but d = " +
          std::to_string(*d_hint) + " was requested");
    }
  }
  const SquarefreeD d(dv);

  return {to_imag(ez, d), to_real(et, d), to_imag(eu, d), antiholomorphic};
}

std::ostream& operator<<(std::ostream& os, const ImagQuad& x) {
  return os << to_text(x);
}
std::ostream& operator<<(std::ostream& os, const RealQuad& t) {
  return os << to_text(t);
}
std::ostream& operator<<(std::ostream& os, const HeisIsom& g) {
  return os << to_text(g);
}
std::ostream& operator<<(std::ostream& os, const AffineMapC& f) {
  return os << to_text(f);
}
std::ostream& operator<<(std::ostream& os, const IqPoly& f) {
  return os << to_text(f);
}

}  // namespace heiscusp
