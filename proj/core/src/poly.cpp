#include "ahs/poly.hpp"

#include <cctype>
#include <sstream>

#include "ahs/errors.hpp"

namespace ahs {

HomogPoly::HomogPoly(unsigned n, unsigned long degree) : n_(n), degree_(degree) {}

HomogPoly::HomogPoly(unsigned n, unsigned long degree, Terms terms) : n_(n), degree_(degree) {
  for (auto& [I, c] : terms) add_term(I, c);
}

void HomogPoly::add_term(const MultiIndex& I, const Rational& c) {
  if (I.size() != n_ + 1) throw DomainError("monomial has the wrong number of variables");
  if (degree_of(I) != degree_) {
    throw DomainError("monomial of degree " + std::to_string(degree_of(I)) + " in a form of degree " +
                      std::to_string(degree_));
  }
  if (c == 0) return;
  auto it = terms_.find(I);
  if (it == terms_.end()) {
    Rational v = c;
    v.canonicalize();
    terms_.emplace(I, v);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational HomogPoly::coefficient(const MultiIndex& I) const {
  auto it = terms_.find(I);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> HomogPoly::coefficient_vector() const {
  std::vector<Rational> v;
  for (CompositionGenerator g(n_, degree_); !g.done(); g.next()) v.push_back(coefficient(g.current()));
  return v;
}

HomogPoly HomogPoly::from_coefficients(unsigned n, unsigned long degree, const std::vector<Rational>& coeffs) {
  HomogPoly f(n, degree);
  std::size_t i = 0;
  for (CompositionGenerator g(n, degree); !g.done(); g.next(), ++i) {
    if (i >= coeffs.size()) throw DomainError("coefficient vector too short");
    f.add_term(g.current(), coeffs[i]);
  }
  if (i != coeffs.size()) throw DomainError("coefficient vector too long");
  return f;
}

std::string HomogPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [I, c] : terms_) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool constant = degree_ == 0;
    bool wrote = false;
    if (a != 1 || constant) {
      os << a.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < I.size(); ++k) {
      if (I[k] == 0) continue;
      if (wrote) os << "*";
      os << "x" << k;
      if (I[k] > 1) os << "^" << I[k];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        pos_.push_back(i);
      }
    }
    end_pos_ = text.size();
  }

  struct RawTerm {
    Rational coef;
    std::vector<std::pair<unsigned, unsigned>> factors;  // (variable, exponent)
    std::size_t position;
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> out;
    if (chars_.empty()) fail("empty polynomial");
    bool first = true;
    while (i_ < chars_.size()) {
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = peek() == '-';
        ++i_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      RawTerm t = parse_term();
      if (neg) t.coef = -t.coef;
      out.push_back(std::move(t));
    }
    return out;
  }

 private:
  char peek() const { return i_ < chars_.size() ? chars_[i_] : '\0'; }
  std::size_t here() const { return i_ < pos_.size() ? pos_[i_] : end_pos_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, here()); }

  Natural parse_digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(chars_[i_++]);
    if (d.empty()) fail("expected digits");
    return Natural(d, 10);
  }

  RawTerm parse_term() {
    RawTerm t{Rational(1), {}, here()};
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Natural num = parse_digits();
      Natural den = 1;
      if (peek() == '/') {
        ++i_;
        den = parse_digits();
        if (den == 0) fail("zero denominator");
      }
      t.coef = Rational(num, den);
      t.coef.canonicalize();
      have_coef = true;
    }
    bool need_factor = !have_coef;
    while (true) {
      if (peek() == '*') {
        ++i_;
        need_factor = true;
      }
      if (peek() == 'x' || peek() == 'X') {
        ++i_;
        Natural idx = parse_digits();
        if (!idx.fits_uint_p()) fail("variable index too large");
        unsigned e = 1;
        if (peek() == '^') {
          ++i_;
          Natural ex = parse_digits();
          if (!ex.fits_uint_p()) fail("exponent too large");
          e = static_cast<unsigned>(ex.get_ui());
        }
        t.factors.emplace_back(static_cast<unsigned>(idx.get_ui()), e);
        need_factor = false;
        continue;
      }
      if (need_factor) fail("expected a variable x<k>");
      break;
    }
    if (i_ < chars_.size() && peek() != '+' && peek() != '-') {
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return t;
  }

  std::vector<char> chars_;
  std::vector<std::size_t> pos_;
  std::size_t end_pos_ = 0;
  std::size_t i_ = 0;
};

HomogPoly build(const std::vector<PolyParser::RawTerm>& raw, unsigned n) {
  unsigned long degree = 0;
  bool have_degree = false;
  HomogPoly f(n, 0);
  for (const auto& t : raw) {
    MultiIndex I(n + 1, 0);
    for (auto [v, e] : t.factors) {
      if (v > n) {
        throw ParseError("variable x" + std::to_string(v) + " exceeds x" + std::to_string(n), t.position);
      }
      I[v] += e;
    }
    unsigned long d = degree_of(I);
    if (!have_degree) {
      degree = d;
      have_degree = true;
      f = HomogPoly(n, degree);
    } else if (d != degree) {
      throw ParseError("mixed degrees " + std::to_string(degree) + " and " + std::to_string(d), t.position);
    }
    f.add_term(I, t.coef);
  }
  return f;
}

}  // namespace

HomogPoly parse_poly(const std::string& text, unsigned n) {
  PolyParser p(text);
  return build(p.parse(), n);
}

HomogPoly parse_poly(const std::string& text) {
  PolyParser p(text);
  auto raw = p.parse();
  unsigned n = 0;
  for (const auto& t : raw) {
    for (auto [v, e] : t.factors) n = std::max(n, v);
  }
  return build(raw, n);
}

HomogPoly normalize_primitive(const HomogPoly& f) {
  if (f.is_zero()) throw DomainError("the zero polynomial has no primitive representative");
  Natural l = 1;
  for (const auto& [I, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Natural g = 0;
  for (const auto& [I, c] : f.terms()) {
    Natural v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (f.terms().begin()->second < 0) scale = -scale;
  return poly_scale(f, scale);
}

bool is_primitive(const HomogPoly& f) { return !f.is_zero() && normalize_primitive(f) == f; }

HomogPoly poly_mul(const HomogPoly& f, const HomogPoly& g) {
  if (f.n() != g.n()) throw DomainError("poly_mul needs the same number of variables");
  HomogPoly h(f.n(), f.degree() + g.degree());
  MultiIndex K(f.n() + 1);
  for (const auto& [I, a] : f.terms()) {
    for (const auto& [J, b] : g.terms()) {
      for (std::size_t k = 0; k < K.size(); ++k) K[k] = I[k] + J[k];
      h.add_term(K, a * b);
    }
  }
  return h;
}

HomogPoly poly_scale(const HomogPoly& f, const Rational& c) {
  HomogPoly h(f.n(), f.degree());
  for (const auto& [I, a] : f.terms()) h.add_term(I, a * c);
  return h;
}

ProjPoint::ProjPoint(std::vector<Natural> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("a point needs at least one coordinate");
  Natural g = 0;
  for (const auto& x : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw DomainError("the zero vector is not a projective point");
  for (const auto& x : coords_) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  for (auto& x : coords_) x /= g;
}

std::string ProjPoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ":";
    s += coords_[i].get_str();
  }
  return s + "]";
}

ProjPoint parse_point(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", i);
  ++i;
  std::vector<Natural> coords;
  while (true) {
    skip();
    std::size_t start = i;
    std::string num;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) num.push_back(text[i++]);
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num.push_back(text[i++]);
    if (num.empty() || num == "-" || num == "+") throw ParseError("expected an integer coordinate", start);
    if (num[0] == '+') num.erase(0, 1);
    coords.emplace_back(num, 10);
    skip();
    if (i < text.size() && text[i] == ':') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ']') {
      ++i;
      break;
    }
    throw ParseError("expected ':' or ']'", i);
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters after point", i);
  if (coords.size() < 2) throw ParseError("a projective point needs at least two coordinates", 0);
  return ProjPoint(std::move(coords));
}

Natural monomial_value(const MultiIndex& I, const std::vector<Natural>& x) {
  Natural v = 1;
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (I[k] == 0) continue;
    Natural p;
    mpz_pow_ui(p.get_mpz_t(), x[k].get_mpz_t(), I[k]);
    v *= p;
  }
  return v;
}

Rational evaluate(const HomogPoly& f, const ProjPoint& p) {
  if (f.n() != p.n()) throw DomainError("point and polynomial live in different projective spaces");
  Rational v = 0;
  for (const auto& [I, c] : f.terms()) v += c * monomial_value(I, p.coords());
  v.canonicalize();
  return v;
}

}  // namespace ahs
