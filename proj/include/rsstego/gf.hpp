#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rsstego/error.hpp"

namespace rsstego {

/// One symbol of GF(2^m). Addition needs no field context (it is XOR), so it
/// lives on the type; everything else goes through GaloisField.
struct Element {
  std::uint16_t value = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t v) : value(static_cast<std::uint16_t>(v)) {}

  constexpr bool is_zero() const { return value == 0; }

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr Element operator+(Element a, Element b) { return Element(a.value ^ b.value); }
  friend constexpr Element operator^(Element a, Element b) { return a + b; }
  constexpr Element& operator+=(Element o) {
    value ^= o.value;
    return *this;
  }
};

/// GF(2^m) for 2 <= m <= 16, built from a primitive polynomial given as a
/// bitmask (bit i = coefficient of x^i). alpha is the class of x.
///
/// Multiplication uses exp/log tables: 2 * 2^m entries of 16 bits each.
/// Immutable after construction.
class GaloisField {
 public:
  GaloisField(int m, std::uint32_t primitive_poly);

  /// Field with the library's default primitive polynomial for this width.
  static GaloisField with_default_poly(int m);
  static std::uint32_t default_primitive_poly(int m);

  int m() const { return m_; }
  std::uint32_t primitive_poly() const { return poly_; }
  std::uint32_t size() const { return q_; }   // q = 2^m
  std::uint32_t order() const { return q_ - 1; }  // multiplicative group order

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element alpha() const { return Element(2); }

  bool contains(Element a) const { return a.value < q_; }

  Element add(Element a, Element b) const { return a + b; }
  Element mul(Element a, Element b) const {
    if (a.is_zero() || b.is_zero()) return Element(0);
    return exp_[log_[a.value] + log_[b.value]];
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const;
  Element pow(Element a, std::int64_t e) const;

  /// alpha^e for any integer e (negative exponents wrap modulo q - 1).
  Element exp(std::int64_t e) const;
  /// Discrete log base alpha, in [0, q - 1). Throws for zero.
  std::uint32_t log(Element a) const;

 private:
  int m_;
  std::uint32_t poly_;
  std::uint32_t q_;
  std::vector<Element> exp_;  // length 2(q-1) so products skip the modulo
  std::vector<std::uint32_t> log_;
};

/// Polynomial over GF(2^m). coeffs()[i] is the coefficient of x^i; the
/// representation never carries trailing zeros, so the zero polynomial is
/// empty and has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Element> coeffs);
  Poly(std::initializer_list<Element> coeffs) : Poly(std::vector<Element>(coeffs)) {}

  static Poly constant(Element c) { return Poly({c}); }
  /// c * x^power
  static Poly monomial(Element c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero above the degree.
  Element coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Element(0);
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Element> coeffs_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

Element poly_eval(const GaloisField& f, const Poly& p, Element x);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const GaloisField& f, const Poly& p, Element c);
Poly poly_mul(const GaloisField& f, const Poly& a, const Poly& b);
PolyDivision poly_divmod(const GaloisField& f, const Poly& a, const Poly& b);
Poly poly_mod(const GaloisField& f, const Poly& a, const Poly& b);
/// Formal derivative. In characteristic 2 only odd-power terms survive.
Poly poly_derivative(const Poly& p);

}  // namespace rsstego
