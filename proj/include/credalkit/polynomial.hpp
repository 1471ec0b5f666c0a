#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "credalkit/errors.hpp"
#include "credalkit/rational.hpp"

namespace credalkit {

/// Sparse multivariate polynomial with exact rational coefficients, keyed by
/// exponent vectors of fixed dimension.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;

  explicit Polynomial(std::size_t dim) : dim_(dim) {}

  static Polynomial constant(std::size_t dim, Rational c) {
    Polynomial p(dim);
    if (c != 0) p.terms_.emplace(Exponents(dim, 0), std::move(c));
    return p;
  }

  static Polynomial variable(std::size_t dim, std::size_t index) {
    if (index >= dim) throw ValidationError("variable index out of range");
    Polynomial p(dim);
    Exponents e(dim, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exponents(dim_, 0));
  }
  Rational constant_value() const {
    if (!is_constant()) throw ValidationError("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  unsigned max_degree(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_dim(b);
    Polynomial out(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  Rational eval(std::span<const Rational> point) const {
    if (point.size() != dim_) throw ValidationError("evaluation point has wrong dimension");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
      total += term;
    }
    return total;
  }

  double eval(std::span<const double> point) const {
    double total = 0;
    for (const auto& [e, c] : terms_) {
      double term = to_double(c);
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
      total += term;
    }
    return total;
  }

  /// Flat double-precision form for hot evaluation loops.
  struct Compiled {
    std::size_t dim = 0;
    std::vector<double> coefs;
    std::vector<std::uint32_t> exps;  // coefs.size() * dim, row-major

    double eval(const double* x) const {
      double total = 0;
      const std::uint32_t* e = exps.data();
      for (double c : coefs) {
        double term = c;
        for (std::size_t i = 0; i < dim; ++i, ++e)
          for (std::uint32_t k = 0; k < *e; ++k) term *= x[i];
        total += term;
      }
      return total;
    }
  };

  Compiled compile() const {
    Compiled out;
    out.dim = dim_;
    for (const auto& [e, c] : terms_) {
      out.coefs.push_back(to_double(c));
      out.exps.insert(out.exps.end(), e.begin(), e.end());
    }
    return out;
  }

  /// Canonical text that parse_polynomial reads back to an equal polynomial.
  std::string to_string(std::span<const std::string> var_names) const {
    if (var_names.size() != dim_)
      throw ValidationError("variable name list has wrong dimension");
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      const Rational mag = c < 0 ? Rational(-c) : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      std::string vars;
      for (std::size_t i = 0; i < dim_; ++i) {
        if (e[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += var_names[i];
        if (e[i] > 1) vars += "^" + std::to_string(e[i]);
      }
      if (vars.empty())
        out += to_fraction_string(mag);
      else if (mag == 1)
        out += vars;
      else
        out += to_fraction_string(mag) + "*" + vars;
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_dim(const Polynomial& o) const {
    if (dim_ != o.dim_) throw ValidationError("polynomial dimensions differ");
  }
  void add_term(const Exponents& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  std::size_t dim_;
  std::map<Exponents, Rational> terms_;
};

namespace detail {

// Recursive-descent parser over +, -, *, / (constant divisor), ^, parentheses,
// decimal/fraction literals, and the given variable names.
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::span<const std::string> vars)
      : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size())
      throw ValidationError("unexpected character '" + std::string(1, text_[pos_]) +
                            "' in polynomial \"" + std::string(text_) + "\"");
    return p;
  }

 private:
  Polynomial expression() {
    Polynomial p = term();
    while (true) {
      skip_ws();
      if (consume('+'))
        p += term();
      else if (consume('-'))
        p -= term();
      else
        return p;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (true) {
      skip_ws();
      if (consume('*')) {
        p = p * factor();
      } else if (consume('/')) {
        Polynomial d = factor();
        if (!d.is_constant() || d.constant_value() == 0)
          throw ValidationError("division only by nonzero constants in \"" +
                                std::string(text_) + "\"");
        p *= Rational(1) / d.constant_value();
      } else {
        return p;
      }
    }
  }

  Polynomial factor() {
    skip_ws();
    bool neg = false;
    while (consume('-')) neg = !neg, skip_ws();
    Polynomial p = atom();
    skip_ws();
    if (consume('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_) throw ValidationError("exponent expected in polynomial");
      unsigned k = std::stoul(std::string(text_.substr(start, pos_ - start)));
      Polynomial base = p;
      p = Polynomial::constant(base.dim(), Rational(1));
      for (unsigned i = 0; i < k; ++i) p = p * base;
    }
    return neg ? -p : p;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ValidationError("unexpected end of polynomial");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      skip_ws();
      if (!consume(')')) throw ValidationError("missing ')' in polynomial");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      return Polynomial::constant(
          vars_.size(), parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Polynomial::variable(vars_.size(), i);
      throw ValidationError("unknown variable \"" + std::string(name) +
                            "\" in polynomial \"" + std::string(text_) + "\"");
    }
    throw ValidationError("unexpected character '" + std::string(1, c) +
                          "' in polynomial \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text,
                                   std::span<const std::string> var_names) {
  return detail::PolynomialParser(text, var_names).parse();
}

}  // namespace credalkit
