#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "rsstego/gf.hpp"

namespace rsstego {

/// Half-open range of symbol indices.
struct IndexRange {
  int begin = 0;
  int end = 0;

  int size() const { return end - begin; }
  bool contains(int i) const { return i >= begin && i < end; }
};

/// Geometry of a full-length RS(n, k) code over GF(2^m): n = 2^m - 1,
/// t = floor((n - k) / 2).
///
/// Symbol index i is the coefficient of x^i. Data occupies the high indices
/// [n - k, n) with data symbol d_i at n - 1 - i; parity occupies [0, n - k)
/// with parity symbol p_j at n - k - 1 - j.
class CodeParams {
 public:
  CodeParams(std::shared_ptr<const GaloisField> field, int n, int k);

  /// Default primitive polynomial for m, n = 2^m - 1.
  static CodeParams make(int m, int k);

  const GaloisField& field() const { return *field_; }
  const std::shared_ptr<const GaloisField>& field_ptr() const { return field_; }
  int m() const { return field_->m(); }
  int n() const { return n_; }
  int k() const { return k_; }
  int t() const { return (n_ - k_) / 2; }
  int parity_count() const { return n_ - k_; }

  int data_position(int i) const { return n_ - 1 - i; }
  int parity_position(int j) const { return n_ - k_ - 1 - j; }
  IndexRange data_range() const { return {n_ - k_, n_}; }
  IndexRange parity_range() const { return {0, n_ - k_}; }

 private:
  std::shared_ptr<const GaloisField> field_;
  int n_;
  int k_;
};

struct Codeword {
  std::vector<Element> symbols;

  std::size_t size() const { return symbols.size(); }
  Element operator[](std::size_t i) const { return symbols[i]; }
  Element& operator[](std::size_t i) { return symbols[i]; }

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Data symbols d_0..d_{k-1} read back out of a codeword.
std::vector<Element> data_symbols(const CodeParams& params, const Codeword& cw);
/// Parity symbols p_0..p_{n-k-1}.
std::vector<Element> parity_symbols(const CodeParams& params, const Codeword& cw);

/// Systematic generator G = (I | A) with A the k x (n - k) Cauchy matrix
///
///   A[i][j] = u_i v_j / (x_i + y_j)
///   x_i = alpha^(n-1-i),  y_j = alpha^(n-1-k-j)
///   u_i = 1 / prod_{l != i} (x_i - x_l)
///   v_j = prod_l (y_j - x_l)
///
/// which is the Lagrange interpolation matrix carrying the values of a
/// degree < k polynomial at the data locators to its values at the parity
/// locators. The resulting code is the RS code with zeros alpha^1..alpha^(n-k).
class CauchyGenerator {
 public:
  static CauchyGenerator build(const CodeParams& params);

  int rows() const { return k_; }
  int cols() const { return r_; }
  Element at(int i, int j) const { return a_[static_cast<std::size_t>(i) * r_ + j]; }

  const std::vector<Element>& x() const { return x_; }
  const std::vector<Element>& y() const { return y_; }
  const std::vector<Element>& u() const { return u_; }
  const std::vector<Element>& v() const { return v_; }

  /// p = d A
  std::vector<Element> parity(const GaloisField& f, std::span<const Element> data) const;

 private:
  int k_ = 0;
  int r_ = 0;
  std::vector<Element> x_, y_, u_, v_;
  std::vector<Element> a_;  // row-major
};

struct DecodeResult {
  Codeword corrected;
  std::vector<int> error_positions;      // ascending
  std::vector<Element> error_magnitudes;  // parallel to error_positions
  bool failure = false;

  int error_count() const { return static_cast<int>(error_positions.size()); }
};

/// Encoder and syndrome decoder for one code. The decoder solves the syndrome
/// system with Berlekamp-Massey (minimal-degree error locator), Chien search
/// for the locator roots and Forney's formula for the magnitudes.
class ReedSolomon {
 public:
  explicit ReedSolomon(CodeParams params);

  const CodeParams& params() const { return params_; }
  const CauchyGenerator& generator() const { return gen_; }

  Codeword encode(std::span<const Element> data) const;
  /// S_j = v(alpha^j) for j = 1..2t.
  std::vector<Element> syndromes(const Codeword& received) const;
  /// Never throws on uncorrectable input: a word with more than t errors
  /// comes back with failure set (or miscorrected to another codeword).
  DecodeResult decode(const Codeword& received) const;

 private:
  void check_length(const Codeword& cw) const;

  CodeParams params_;
  CauchyGenerator gen_;
};

CauchyGenerator build_cauchy(const CodeParams& params);
Codeword encode(const CodeParams& params, std::span<const Element> data);
std::vector<Element> syndromes(const CodeParams& params, const Codeword& received);
DecodeResult decode(const CodeParams& params, const Codeword& received);

}  // namespace rsstego
