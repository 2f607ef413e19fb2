#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "szlab/matrix.hpp"
#include "szlab/rational.hpp"

namespace szlab {

inline constexpr std::size_t kDefaultLevelCap = 5;

/// Construction constants. A valid triple has 0 < b < a <= 1, lambda > 1 and
/// a + 2*b*lambda < lambda; a < 1 is additionally required unless explicitly waived.
struct BDParams {
  Rational a{1, 2};
  Rational b{1, 4};
  Rational lambda{2};

  /// Parses "a,b,lambda", each an exact rational. Does not validate.
  static BDParams parse(std::string_view text);

  /// Throws kParamInvalid with the violated constraint.
  void validate(bool allow_a_equal_one = false) const;

  friend bool operator==(const BDParams&, const BDParams&) = default;
};

/// phi(k) = (sigma', i, m, sigma'', j).
struct PhiTuple {
  int sigma1 = 1;
  std::size_t i = 1;
  std::size_t m = 1;
  int sigma2 = 1;
  std::size_t j = 1;

  friend bool operator==(const PhiTuple&, const PhiTuple&) = default;
};

/// Order in which phi enumerates the tuples of one level.
inline constexpr std::string_view kPhiOrdering =
    "lexicographic on (m, i, sigma1, j, sigma2); +1 before -1";

/// The finite levels E_1 .. E_N of the extension scheme over exact rationals.
/// Coordinates and levels are 1-based, as in the construction. Built eagerly and
/// immutable afterwards.
class BDSpace {
 public:
  struct Options {
    bool allow_a_equal_one = false;
    std::size_t level_cap = kDefaultLevelCap;
  };

  /// Validates params and builds levels 1..max_level. Throws kParamInvalid, or
  /// kLevelOutOfRange when max_level is 0 or above the cap.
  BDSpace(BDParams params, std::size_t max_level, Options options);
  BDSpace(BDParams params, std::size_t max_level) : BDSpace(std::move(params), max_level, Options{}) {}

  const BDParams& params() const { return params_; }
  std::size_t max_level() const { return dims_.size(); }

  /// d_n. Throws kLevelOutOfRange.
  std::size_t dim(std::size_t n) const;
  const std::vector<std::size_t>& dims() const { return dims_; }

  /// The n with d_n < k <= d_{n+1}, for 2 < k <= d_N. Throws kIndexOutOfRange.
  std::size_t level_of(std::size_t k) const;

  /// Throws kIndexOutOfRange unless 2 < k <= d_N.
  const PhiTuple& phi(std::size_t k) const;

  /// f_phi(k) as a row vector on E_n, n = level_of(k).
  std::vector<Rational> functional_row(std::size_t k) const;

  /// Matrix of i_{m,n} : E_m -> E_n (d_n x d_m), 1 <= m < n <= N.
  const RationalMatrix& embed(std::size_t m, std::size_t n) const;

  /// P_m on the E_N window: embed(m, N) composed with truncation to E_m (d_N x d_N).
  RationalMatrix proj_window(std::size_t m, std::size_t n) const;

  /// First d_N coordinates of P_m x, given the first d_N coordinates of x.
  /// P_0 = 0 and P_m acts as the identity on the window once m >= N.
  std::vector<Rational> project(std::size_t m, std::span<const Rational> x) const;

  /// Coordinate r (1-based) of P_m x from the same window, without forming the whole vector.
  Rational project_coordinate(std::size_t m, std::size_t r, std::span<const Rational> x) const;

 private:
  std::size_t window_level(std::size_t length) const;

  BDParams params_;
  std::vector<std::size_t> dims_;
  std::vector<PhiTuple> phi_;                       // phi_[k - 3]
  std::vector<std::vector<RationalMatrix>> embed_;  // embed_[n - 1][m - 1]
};

struct EmbeddingNorm {
  std::size_t m = 0;
  std::size_t n = 0;
  Rational norm;
};

struct LambdaReport {
  std::vector<EmbeddingNorm> norms;
  /// First (m, n) whose embedding norm exceeds lambda.
  std::optional<EmbeddingNorm> violation;

  bool passed() const { return !violation.has_value(); }
};

/// ||i_{m,n}||_inf for all 1 <= m < n <= max_level, compared with lambda.
LambdaReport verify_lambda_bound(const BDSpace& space, std::size_t max_level);

/// A failed structural law of the embeddings, with the levels involved.
struct LawViolation {
  std::string law;
  std::string witness;
};

/// Exact checks of the embedding algebra on levels 1..max_level: composition
/// i_{m,n} = i_{l,n} i_{m,l}, identity top blocks, sign-symmetric extension rows,
/// and P_m P_m' = P_min(m,m') on the E_max_level window. Empty when everything holds.
std::vector<LawViolation> check_embedding_laws(const BDSpace& space, std::size_t max_level);

struct L1Witness {
  Rational pairing;       // sum a_k * (P_m s)_k = sum |a_k|
  Rational window_norm;   // ||P_m s||_inf on the E_N window
  Rational ratio;         // pairing / window_norm, 0 for zero coefficients
  Rational lower_bound;   // lambda^{-1} * sum |a_k|
  bool certified = false; // ratio >= lower_bound
};

/// Tests the functional sum a_k e_k^* (coefficients on E_m) against the sign vector
/// s of the coefficients pushed through P_m. Requires m < N <= max_level.
L1Witness l1_lower_witness(const BDSpace& space, std::span<const Rational> coeffs, std::size_t m, std::size_t n);

}  // namespace szlab
