#include "rsstego/rs_codec.hpp"

#include <algorithm>
#include <string>

namespace rsstego {

CodeParams::CodeParams(std::shared_ptr<const GaloisField> field, int n, int k)
    : field_(std::move(field)), n_(n), k_(k) {
  if (!field_) throw Error(Errc::invalid_argument, "null field");
  if (n_ != static_cast<int>(field_->order())) {
    throw Error(Errc::invalid_argument,
                "n must equal 2^m - 1 = " + std::to_string(field_->order()) + ", got " + std::to_string(n));
  }
  if (k_ <= 0 || k_ >= n_) throw Error(Errc::invalid_argument, "k must satisfy 0 < k < n");
  if (t() < 1) throw Error(Errc::invalid_argument, "code corrects no errors (n - k < 2)");
}

CodeParams CodeParams::make(int m, int k) {
  auto field = std::make_shared<const GaloisField>(GaloisField::with_default_poly(m));
  const int n = static_cast<int>(field->order());
  return CodeParams(std::move(field), n, k);
}

std::vector<Element> data_symbols(const CodeParams& params, const Codeword& cw) {
  std::vector<Element> d(static_cast<std::size_t>(params.k()));
  for (int i = 0; i < params.k(); ++i) d[i] = cw[params.data_position(i)];
  return d;
}

std::vector<Element> parity_symbols(const CodeParams& params, const Codeword& cw) {
  std::vector<Element> p(static_cast<std::size_t>(params.parity_count()));
  for (int j = 0; j < params.parity_count(); ++j) p[j] = cw[params.parity_position(j)];
  return p;
}

// --- Cauchy generator ---

CauchyGenerator CauchyGenerator::build(const CodeParams& params) {
  const GaloisField& f = params.field();
  const int n = params.n();
  const int k = params.k();
  const int r = params.parity_count();

  CauchyGenerator g;
  g.k_ = k;
  g.r_ = r;
  g.x_.resize(k);
  g.y_.resize(r);
  for (int i = 0; i < k; ++i) g.x_[i] = f.exp(n - 1 - i);
  for (int j = 0; j < r; ++j) g.y_[j] = f.exp(n - 1 - k - j);

  // Subtraction is addition in characteristic 2.
  g.u_.resize(k);
  for (int i = 0; i < k; ++i) {
    Element prod = f.one();
    for (int l = 0; l < k; ++l) {
      if (l != i) prod = f.mul(prod, g.x_[i] + g.x_[l]);
    }
    g.u_[i] = f.inv(prod);
  }
  g.v_.resize(r);
  for (int j = 0; j < r; ++j) {
    Element prod = f.one();
    for (int l = 0; l < k; ++l) prod = f.mul(prod, g.y_[j] + g.x_[l]);
    g.v_[j] = prod;
  }

  g.a_.resize(static_cast<std::size_t>(k) * r);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < r; ++j) {
      const Element denom = g.x_[i] + g.y_[j];
      if (denom.is_zero()) throw Error(Errc::degenerate_params, "x_i equals y_j");
      g.a_[static_cast<std::size_t>(i) * r + j] = f.div(f.mul(g.u_[i], g.v_[j]), denom);
    }
  }
  return g;
}

std::vector<Element> CauchyGenerator::parity(const GaloisField& f, std::span<const Element> data) const {
  if (static_cast<int>(data.size()) != k_) throw Error(Errc::length_mismatch, "data length must equal k");
  std::vector<Element> p(static_cast<std::size_t>(r_));
  for (int i = 0; i < k_; ++i) {
    if (data[i].is_zero()) continue;
    const Element* row = &a_[static_cast<std::size_t>(i) * r_];
    for (int j = 0; j < r_; ++j) p[j] += f.mul(data[i], row[j]);
  }
  return p;
}

// --- codec ---

ReedSolomon::ReedSolomon(CodeParams params) : params_(std::move(params)), gen_(CauchyGenerator::build(params_)) {}

void ReedSolomon::check_length(const Codeword& cw) const {
  if (static_cast<int>(cw.size()) != params_.n()) {
    throw Error(Errc::length_mismatch, "codeword length " + std::to_string(cw.size()) + " != n");
  }
}

Codeword ReedSolomon::encode(std::span<const Element> data) const {
  if (static_cast<int>(data.size()) != params_.k()) throw Error(Errc::length_mismatch, "data length must equal k");
  for (Element d : data) {
    if (!params_.field().contains(d)) throw Error(Errc::invalid_argument, "data symbol outside the field");
  }
  const std::vector<Element> p = gen_.parity(params_.field(), data);
  Codeword cw{std::vector<Element>(static_cast<std::size_t>(params_.n()))};
  for (int i = 0; i < params_.k(); ++i) cw[params_.data_position(i)] = data[i];
  for (int j = 0; j < params_.parity_count(); ++j) cw[params_.parity_position(j)] = p[j];
  return cw;
}

std::vector<Element> ReedSolomon::syndromes(const Codeword& received) const {
  check_length(received);
  const GaloisField& f = params_.field();
  const int two_t = 2 * params_.t();
  std::vector<Element> s(static_cast<std::size_t>(two_t));
  for (int j = 1; j <= two_t; ++j) {
    const Element root = f.exp(j);
    Element acc;
    for (auto it = received.symbols.rbegin(); it != received.symbols.rend(); ++it) acc = f.mul(acc, root) + *it;
    s[j - 1] = acc;
  }
  return s;
}

DecodeResult ReedSolomon::decode(const Codeword& received) const {
  const GaloisField& f = params_.field();
  const std::vector<Element> synd = syndromes(received);

  DecodeResult out;
  out.corrected = received;
  if (std::all_of(synd.begin(), synd.end(), [](Element e) { return e.is_zero(); })) return out;

  const int two_t = static_cast<int>(synd.size());

  // Berlekamp-Massey: shortest LFSR (error locator Lambda) generating S_1..S_2t.
  std::vector<Element> lambda{f.one()};
  std::vector<Element> prev{f.one()};
  int len = 0;
  int shift = 1;
  Element prev_disc = f.one();
  for (int r = 0; r < two_t; ++r) {
    Element disc = synd[r];
    for (int i = 1; i <= len && i < static_cast<int>(lambda.size()); ++i) disc += f.mul(lambda[i], synd[r - i]);
    if (disc.is_zero()) {
      ++shift;
      continue;
    }
    const Element scale = f.div(disc, prev_disc);
    std::vector<Element> next = lambda;
    if (next.size() < prev.size() + shift) next.resize(prev.size() + shift);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + shift] += f.mul(scale, prev[i]);
    if (2 * len <= r) {
      prev = std::move(lambda);
      len = r + 1 - len;
      prev_disc = disc;
      shift = 1;
    } else {
      ++shift;
    }
    lambda = std::move(next);
  }
  const Poly locator(lambda);

  auto fail = [&] {
    DecodeResult bad;
    bad.corrected = received;
    bad.failure = true;
    return bad;
  };
  if (len > params_.t() || locator.degree() != len) return fail();

  // Chien search: position i is in error iff Lambda(alpha^-i) = 0.
  std::vector<int> positions;
  for (int i = 0; i < params_.n(); ++i) {
    if (poly_eval(f, locator, f.exp(-i)).is_zero()) positions.push_back(i);
  }
  if (static_cast<int>(positions.size()) != len) return fail();

  // Forney, first consecutive root alpha^1: e = Omega(X^-1) / Lambda'(X^-1),
  // Omega = S(x) Lambda(x) mod x^2t.
  const Poly syndrome_poly(synd);
  std::vector<Element> omega_coeffs = poly_mul(f, syndrome_poly, locator).coeffs();
  if (static_cast<int>(omega_coeffs.size()) > two_t) omega_coeffs.resize(static_cast<std::size_t>(two_t));
  const Poly omega(std::move(omega_coeffs));
  const Poly dlocator = poly_derivative(locator);

  out.error_positions = positions;
  out.error_magnitudes.reserve(positions.size());
  for (int pos : positions) {
    const Element x_inv = f.exp(-pos);
    const Element denom = poly_eval(f, dlocator, x_inv);
    if (denom.is_zero()) return fail();
    const Element mag = f.div(poly_eval(f, omega, x_inv), denom);
    if (mag.is_zero()) return fail();
    out.error_magnitudes.push_back(mag);
    out.corrected[pos] += mag;
  }

  // A locator that fits but leaves residual syndromes is a miscorrection we can see.
  const std::vector<Element> residual = syndromes(out.corrected);
  if (!std::all_of(residual.begin(), residual.end(), [](Element e) { return e.is_zero(); })) return fail();
  return out;
}

CauchyGenerator build_cauchy(const CodeParams& params) { return CauchyGenerator::build(params); }

Codeword encode(const CodeParams& params, std::span<const Element> data) { return ReedSolomon(params).encode(data); }

std::vector<Element> syndromes(const CodeParams& params, const Codeword& received) {
  return ReedSolomon(params).syndromes(received);
}

DecodeResult decode(const CodeParams& params, const Codeword& received) { return ReedSolomon(params).decode(received); }

}  // namespace rsstego
