#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

#include "foxcalc/ring.hpp"
#include "text_util.hpp"

namespace foxcalc {

LaurentFraction::LaurentFraction(LaurentPolynomial num) : num_(std::move(num)), den_(LaurentPolynomial::constant(num_.rank(), 1)) {}

LaurentFraction::LaurentFraction(LaurentPolynomial num, LaurentPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.rank() != den_.rank()) throw Error(ErrorCode::RankMismatch, "numerator and denominator of different rank");
  normalize();
}

void LaurentFraction::normalize() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "fraction with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPolynomial::constant(num_.rank(), 1);
    return;
  }
  Exponent m = den_.min_exponent();
  for (auto& x : m) x = -x;
  den_ = den_.shifted(m);
  num_ = num_.shifted(m);
  const Coefficient g = std::gcd(num_.content(), den_.content());
  if (g > 1) {
    num_ = num_.divided_by(g);
    den_ = den_.divided_by(g);
  }
  if (den_.leading().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (!den_.is_constant()) {
    if (auto q = num_.exact_divide(den_)) {
      num_ = std::move(*q);
      den_ = LaurentPolynomial::constant(num_.rank(), 1);
    }
  }
}

LaurentFraction& LaurentFraction::operator+=(const LaurentFraction& b) {
  if (den_ == b.den_) {
    num_ += b.num_;
  } else if (auto q = b.den_.exact_divide(den_)) {
    num_ = num_ * *q + b.num_;
    den_ = b.den_;
  } else if (auto r = den_.exact_divide(b.den_)) {
    num_ += b.num_ * *r;
  } else {
    num_ = num_ * b.den_ + b.num_ * den_;
    den_ = den_ * b.den_;
  }
  normalize();
  return *this;
}

LaurentFraction& LaurentFraction::operator-=(const LaurentFraction& b) { return *this += -b; }

LaurentFraction operator-(const LaurentFraction& a) {
  LaurentFraction out = a;
  out.num_ = -out.num_;
  return out;
}

LaurentFraction& LaurentFraction::operator*=(const LaurentFraction& b) {
  LaurentPolynomial n1 = num_, d1 = den_, n2 = b.num_, d2 = b.den_;
  if (!d2.is_constant())
    if (auto q = n1.exact_divide(d2)) {
      n1 = std::move(*q);
      d2 = LaurentPolynomial::constant(d2.rank(), 1);
    }
  if (!d1.is_constant())
    if (auto q = n2.exact_divide(d1)) {
      n2 = std::move(*q);
      d1 = LaurentPolynomial::constant(d1.rank(), 1);
    }
  num_ = n1 * n2;
  den_ = d1 * d2;
  normalize();
  return *this;
}

LaurentFraction& LaurentFraction::operator/=(const LaurentFraction& b) { return *this *= b.inverse(); }

bool operator==(const LaurentFraction& a, const LaurentFraction& b) {
  if (a.rank() != b.rank()) return false;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

LaurentFraction LaurentFraction::inverse() const {
  if (num_.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return LaurentFraction(den_, num_);
}

LaurentFraction LaurentFraction::bar() const { return LaurentFraction(num_.bar(), den_.bar()); }

LaurentFraction LaurentFraction::substitute(const std::vector<Exponent>& images, int target_rank) const {
  return LaurentFraction(num_.substitute(images, target_rank), den_.substitute(images, target_rank));
}

// Printing ------------------------------------------------------------------

std::vector<std::string> default_variable_names(int rank) {
  if (rank == 1) return {"t"};
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i) names.push_back("g" + std::to_string(i));
  return names;
}

namespace {

std::string format_term(Coefficient c, const std::string& monomial) {
  if (monomial.empty()) return std::to_string(c);
  if (c == 1) return monomial;
  if (c == -1) return "-" + monomial;
  return std::to_string(c) + "*" + monomial;
}

}  // namespace

std::string to_string(const LaurentPolynomial& p, const std::vector<std::string>& names_in) {
  if (p.is_zero()) return "0";
  const auto names = names_in.empty() ? default_variable_names(p.rank()) : names_in;
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      const int x = it->first[i];
      if (x == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names.at(i);
      if (x != 1) mono += "^" + std::to_string(x);
    }
    if (!out.empty()) out += " + ";
    out += format_term(it->second, mono);
  }
  return out;
}

std::string to_string(const LaurentFraction& f, const std::vector<std::string>& names) {
  if (f.is_polynomial()) return to_string(f.num(), names);
  return "(" + to_string(f.num(), names) + ")/(" + to_string(f.den(), names) + ")";
}

std::string to_string(const FreeRingElement& e, const std::vector<std::string>& names_in) {
  if (e.is_zero()) return "0";
  std::vector<std::string> names = names_in;
  if (names.empty())
    for (int i = 1; i <= e.rank(); ++i) names.push_back("g" + std::to_string(i));
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    std::string mono;
    for (int l : w.letters()) {
      if (!mono.empty()) mono += '*';
      mono += names.at(static_cast<std::size_t>(std::abs(l) - 1));
      if (l < 0) mono += "^-1";
    }
    if (!out.empty()) out += " + ";
    out += format_term(c, mono);
  }
  return out;
}

// Parsing -------------------------------------------------------------------

namespace {

struct Factor {
  int variable;  // 0 for a bare integer
  long long power;
};

/// Splits a sum into signed terms, each a list of '*'-separated factors.
template <class OnTerm>
void parse_sum(std::string_view text, const std::vector<std::string>& names, OnTerm&& on_term) {
  std::size_t i = 0;
  const auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw ParseError("empty expression", 0);
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (!first) {
      if (text[i] != '+' && text[i] != '-') throw ParseError("expected '+' or '-'", i);
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    }
    while (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      skip();
    }
    first = false;
    Coefficient coeff = sign;
    std::vector<Factor> factors;
    while (true) {
      skip();
      const std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      if (i == start) throw ParseError("expected a number or variable", start);
      const std::string_view tok = text.substr(start, i - start);
      long long power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        const std::size_t ps = i;
        if (i < text.size() && text[i] == '-') ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        const auto p = detail::to_integer(text.substr(ps, i - ps));
        if (!p) throw ParseError("malformed exponent", ps);
        power = *p;
      }
      if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
        const auto v = detail::to_integer(tok);
        if (!v || power != 1) throw ParseError("malformed integer coefficient", start);
        coeff = checked_mul(coeff, *v);
      } else {
        const auto it = std::find(names.begin(), names.end(), tok);
        if (it == names.end()) throw ParseError("unknown variable '" + std::string(tok) + "'", start);
        factors.push_back({static_cast<int>(it - names.begin()) + 1, power});
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    on_term(coeff, factors);
    skip();
  }
}

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text, int rank, const std::vector<std::string>& names_in) {
  const auto names = names_in.empty() ? default_variable_names(rank) : names_in;
  LaurentPolynomial out(rank);
  parse_sum(text, names, [&](Coefficient c, const std::vector<Factor>& factors) {
    Exponent e(static_cast<std::size_t>(rank), 0);
    for (const auto& f : factors) e[static_cast<std::size_t>(f.variable - 1)] += static_cast<int>(f.power);
    out.add_term(e, c);
  });
  return out;
}

LaurentFraction parse_fraction(std::string_view text, int rank, const std::vector<std::string>& names) {
  text = detail::trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return LaurentFraction(parse_laurent(text, rank, names));
  const auto strip = [](std::string_view s, std::size_t offset) {
    s = detail::trim(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("fraction parts must be parenthesized", offset);
    return s.substr(1, s.size() - 2);
  };
  const auto num = parse_laurent(strip(text.substr(0, slash), 0), rank, names);
  const auto den = parse_laurent(strip(text.substr(slash + 1), slash + 1), rank, names);
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "fraction with zero denominator");
  return LaurentFraction(num, den);
}

FreeRingElement parse_free_ring(std::string_view text, int rank, const std::vector<std::string>& names_in) {
  std::vector<std::string> names = names_in;
  if (names.empty())
    for (int i = 1; i <= rank; ++i) names.push_back("g" + std::to_string(i));
  FreeRingElement out(rank);
  parse_sum(text, names, [&](Coefficient c, const std::vector<Factor>& factors) {
    Word w;
    for (const auto& f : factors) w *= Word::generator(f.variable, static_cast<int>(f.power));
    out.add_term(w, c);
  });
  return out;
}

}  // namespace foxcalc
