#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "galkit/error.hpp"
#include "galkit/report.hpp"
#include "json.hpp"

namespace galkit {

/// Integer polynomial, constant term first. The zero polynomial has no
/// coefficients and degree -1.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coefficients);
  static IntegerPolynomial monomial(BigInt c, std::size_t k);

  const std::vector<BigInt> &coefficients() const noexcept { return coeffs_; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^i (0 beyond the degree).
  BigInt coefficient(std::size_t i) const;
  const BigInt &leading() const;

  IntegerPolynomial derivative() const;
  /// f(x + a).
  IntegerPolynomial shift(const BigInt &a) const;
  BigInt evaluate(const BigInt &x) const;
  /// Non-negative gcd of the coefficients.
  BigInt content() const;

  IntegerPolynomial operator+(const IntegerPolynomial &rhs) const;
  IntegerPolynomial operator-(const IntegerPolynomial &rhs) const;
  IntegerPolynomial operator*(const IntegerPolynomial &rhs) const;
  IntegerPolynomial operator*(const BigInt &c) const;
  /// Exact division of every coefficient; throws if some coefficient is not
  /// divisible.
  IntegerPolynomial divide_exact(const BigInt &c) const;

  /// "x^3 - 30x + 20"
  std::string to_string() const;

  friend bool operator==(const IntegerPolynomial &, const IntegerPolynomial &) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Parses human notation such as "x^3 - 30x + 20" or "2*x^2 + x - 1".
IntegerPolynomial parse_polynomial(std::string_view text);
nlohmann::json polynomial_to_json(const IntegerPolynomial &f);
IntegerPolynomial polynomial_from_json(const nlohmann::json &j);

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b.
IntegerPolynomial pseudo_remainder(const IntegerPolynomial &a, const IntegerPolynomial &b);

/// Res(a, b) by the subresultant algorithm.
BigInt resultant(const IntegerPolynomial &a, const IntegerPolynomial &b);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). Degree at least 2.
BigInt discriminant(const IntegerPolynomial &f);

/// f_p(x) = x^l - l(lp+1)x + (l-1)(lp+1). `ell` an odd prime, |p| prime or
/// p = +-1.
IntegerPolynomial fp_family(std::uint64_t ell, std::int64_t p);

/// Delta_p from (-1)^((l-1)(l-2)/2) Delta_p = -(l-1)^(l-1) l^(l+1) (lp+1)^(l-1) p.
BigInt closed_form_discriminant(std::uint64_t ell, std::int64_t p);

/// Exact rational slope num/den with den > 0.
struct Slope {
  BigInt num;
  BigInt den = 1;
  friend bool operator==(const Slope &, const Slope &) = default;
};

struct PolygonPoint {
  std::size_t i = 0;
  std::uint64_t v = 0;
  friend bool operator==(const PolygonPoint &, const PolygonPoint &) = default;
};

struct PolygonSegment {
  PolygonPoint start, end;
  Slope slope;
};

struct NewtonPolygon {
  std::uint64_t prime = 0;
  std::vector<PolygonPoint> points;
  std::vector<PolygonPoint> hull;
  std::vector<PolygonSegment> segments;
};

/// q-adic valuation of a nonzero integer.
std::uint64_t valuation(const BigInt &n, std::uint64_t q);

/// Lower convex hull of (i, v_q(a_i)). Rejects a zero constant term.
NewtonPolygon newton_polygon(const IntegerPolynomial &f, std::uint64_t q);

enum class CertificateKind { eisenstein, dumas, none };

std::string to_string(CertificateKind kind);

struct IrreducibilityCertificate {
  CertificateKind kind = CertificateKind::none;
  std::uint64_t prime = 0;
  /// Eisenstein only.
  std::int64_t shift = 0;
  /// Dumas only.
  PolygonSegment segment;
  /// Exponent of `prime` in p^2 + 1 when chosen for f_p with l = p.
  std::uint64_t multiplicity = 0;
};

nlohmann::json certificate_to_json(const IrreducibilityCertificate &c);

bool is_eisenstein(const IntegerPolynomial &f, std::uint64_t q);

/// First a in 0, 1, -1, 2, -2, ..., +-A with f(x + a) Eisenstein at q.
IrreducibilityCertificate eisenstein_shift_certificate(const IntegerPolynomial &f,
                                                       std::uint64_t q, std::uint64_t range);

/// Single hull segment (0, v0) -- (deg f, 0) with gcd(deg f, v0) = 1.
/// Requires content 1.
IrreducibilityCertificate dumas_certificate(const IntegerPolynomial &f, std::uint64_t q);

/// l != p: Eisenstein at l after the shift x -> x + 1. l = p: Dumas at the
/// least odd prime q with q^m || p^2 + 1, gcd(q, p - 1) = 1 and gcd(m, p) = 1.
IrreducibilityCertificate certify_fp_irreducible(std::uint64_t ell, std::int64_t p);

struct SqrtWitness {
  /// The member whose discriminant is p times a square: f_p or f_{-p}.
  bool minus_p = false;
  BigInt discriminant;
  BigInt square_root;
};

/// Fails with precondition when neither or both members qualify.
SqrtWitness sqrt_embedding_witness(std::uint64_t ell, std::int64_t p);

/// Least prime strictly between d/2 and d - 2, for d >= 8.
std::uint64_t bertrand_prime(std::uint64_t d);

CheckReport check_fp_irreducible(std::uint64_t ell, std::int64_t p);
CheckReport check_discriminant(std::uint64_t ell, std::int64_t p);
CheckReport check_sqrt_witness(std::uint64_t ell, std::int64_t p);

}  // namespace galkit
