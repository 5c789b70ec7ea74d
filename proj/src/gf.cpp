#include "rsstego/gf.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <string>

namespace rsstego {

namespace {

int degree_of(std::uint32_t poly) { return poly == 0 ? -1 : std::bit_width(poly) - 1; }

// Remainder of a(x) / b(x) over GF(2).
std::uint32_t gf2_mod(std::uint32_t a, std::uint32_t b) {
  const int db = degree_of(b);
  for (int da = degree_of(a); da >= db; da = degree_of(a)) a ^= b << (da - db);
  return a;
}

std::string hex(std::uint32_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

bool gf2_irreducible(std::uint32_t poly) {
  const int m = degree_of(poly);
  for (std::uint32_t d = 2; degree_of(d) <= m / 2; ++d) {
    if (gf2_mod(poly, d) == 0) return false;
  }
  return true;
}

}  // namespace

std::uint32_t GaloisField::default_primitive_poly(int m) {
  static constexpr std::uint32_t kPolys[] = {
      0,       0,       0x7,     0xB,     0x13,    0x25,    0x43,    0x89,    0x11D,
      0x211,   0x409,   0x805,   0x1053,  0x201B,  0x4443,  0x8003,  0x1100B,
  };
  if (m < 2 || m > 16) throw Error(Errc::invalid_argument, "m must be in [2, 16], got " + std::to_string(m));
  return kPolys[m];
}

GaloisField GaloisField::with_default_poly(int m) { return GaloisField(m, default_primitive_poly(m)); }

GaloisField::GaloisField(int m, std::uint32_t primitive_poly)
    : m_(m), poly_(primitive_poly), q_(0) {
  if (m < 2 || m > 16) throw Error(Errc::invalid_argument, "m must be in [2, 16], got " + std::to_string(m));
  if (degree_of(primitive_poly) != m) {
    throw Error(Errc::invalid_argument, "polynomial degree does not match m=" + std::to_string(m));
  }
  if (!gf2_irreducible(primitive_poly)) {
    throw Error(Errc::reducible_polynomial, "polynomial " + hex(primitive_poly) + " is reducible");
  }

  q_ = 1u << m;
  const std::uint32_t ord = q_ - 1;
  exp_.resize(2 * ord);
  log_.assign(q_, 0);

  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < ord; ++i) {
    if (i > 0 && x == 1) {
      throw Error(Errc::non_primitive_generator,
                  "alpha has order " + std::to_string(i) + " < " + std::to_string(ord));
    }
    exp_[i] = Element(x);
    log_[x] = i;
    x <<= 1;
    if (x & q_) x ^= primitive_poly;
  }
  std::copy_n(exp_.begin(), ord, exp_.begin() + ord);
}

Element GaloisField::inv(Element a) const {
  if (a.is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  return exp_[(order() - log_[a.value]) % order()];
}

Element GaloisField::div(Element a, Element b) const {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
  if (a.is_zero()) return Element(0);
  return exp_[log_[a.value] + order() - log_[b.value]];
}

Element GaloisField::pow(Element a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e == 0) return one();
    if (e < 0) throw Error(Errc::division_by_zero, "negative power of zero");
    return zero();
  }
  return exp(static_cast<std::int64_t>(log_[a.value]) * e);
}

Element GaloisField::exp(std::int64_t e) const {
  const auto ord = static_cast<std::int64_t>(order());
  std::int64_t r = e % ord;
  if (r < 0) r += ord;
  return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t GaloisField::log(Element a) const {
  if (a.is_zero()) throw Error(Errc::division_by_zero, "log of zero");
  return log_[a.value];
}

// --- polynomials ---

Poly::Poly(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Element c, int power) {
  std::vector<Element> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Element poly_eval(const GaloisField& f, const Poly& p, Element x) {
  Element acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = f.mul(acc, x) + *it;
  return acc;
}

Poly poly_add(const Poly& a, const Poly& b) {
  std::vector<Element> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return Poly(std::move(out));
}

Poly poly_scale(const GaloisField& f, const Poly& p, Element c) {
  std::vector<Element> out(p.coeffs());
  for (auto& e : out) e = f.mul(e, c);
  return Poly(std::move(out));
}

Poly poly_mul(const GaloisField& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Element> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] += f.mul(a.coeffs()[i], b.coeffs()[j]);
    }
  }
  return Poly(std::move(out));
}

PolyDivision poly_divmod(const GaloisField& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  const int db = b.degree();
  if (a.degree() < db) return {Poly{}, a};

  std::vector<Element> rem(a.coeffs());
  std::vector<Element> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Element lead_inv = f.inv(b.coeffs().back());
  for (int i = a.degree(); i >= db; --i) {
    const Element c = rem[i];
    if (c.is_zero()) continue;
    const Element factor = f.mul(c, lead_inv);
    quot[i - db] = factor;
    for (int j = 0; j <= db; ++j) rem[i - db + j] += f.mul(factor, b.coeffs()[j]);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_mod(const GaloisField& f, const Poly& a, const Poly& b) { return poly_divmod(f, a, b).remainder; }

Poly poly_derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Element> out(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); i += 2) out[i - 1] = p.coeffs()[i];
  return Poly(std::move(out));
}

}  // namespace rsstego
