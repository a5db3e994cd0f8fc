#include "galkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>

#include "galkit/group_io.hpp"
#include "galkit/number_theory.hpp"

namespace galkit {

namespace mp = boost::multiprecision;

namespace {

BigInt ipow(const BigInt &base, std::uint64_t e) {
  return mp::pow(base, static_cast<unsigned>(e));
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

void require_family(std::uint64_t ell, std::int64_t p) {
  if (ell < 3 || !is_prime(ell))
    fail(ErrorCode::invalid_argument, "ell must be an odd prime, got " + std::to_string(ell));
  const std::uint64_t mag = p < 0 ? static_cast<std::uint64_t>(-p) : static_cast<std::uint64_t>(p);
  if (mag != 1 && !is_prime(mag))
    fail(ErrorCode::invalid_argument, "p must be prime or +-1, got " + std::to_string(p));
}

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntegerPolynomial IntegerPolynomial::monomial(BigInt c, std::size_t k) {
  std::vector<BigInt> v(k + 1, 0);
  v[k] = std::move(c);
  return IntegerPolynomial(std::move(v));
}

void IntegerPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntegerPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

const BigInt &IntegerPolynomial::leading() const {
  if (coeffs_.empty()) fail(ErrorCode::precondition, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntegerPolynomial IntegerPolynomial::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * i);
  return IntegerPolynomial(std::move(d));
}

IntegerPolynomial IntegerPolynomial::shift(const BigInt &a) const {
  // Horner in the ring Z[x]: ((c_n)(x + a) + c_{n-1})(x + a) + ...
  IntegerPolynomial linear({a, 1});
  IntegerPolynomial out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    out = out * linear + IntegerPolynomial({*it});
  return out;
}

BigInt IntegerPolynomial::evaluate(const BigInt &x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt IntegerPolynomial::content() const {
  BigInt g = 0;
  for (const auto &c : coeffs_) g = mp::gcd(g, c);
  return mp::abs(g);
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial &rhs) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coefficient(i) + rhs.coefficient(i);
  return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::operator-(const IntegerPolynomial &rhs) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coefficient(i) - rhs.coefficient(i);
  return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial &rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> v(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::operator*(const BigInt &c) const {
  std::vector<BigInt> v = coeffs_;
  for (auto &x : v) x *= c;
  return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::divide_exact(const BigInt &c) const {
  if (c == 0) fail(ErrorCode::invalid_argument, "division by zero");
  std::vector<BigInt> v = coeffs_;
  for (auto &x : v) {
    if (x % c != 0) fail(ErrorCode::internal, "inexact polynomial division");
    x /= c;
  }
  return IntegerPolynomial(std::move(v));
}

std::string IntegerPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt &c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = mp::abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntegerPolynomial parse_polynomial(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(ErrorCode::parse_error, "empty polynomial");
  auto bad = [&]() -> void {
    fail(ErrorCode::parse_error, "cannot parse polynomial '" + std::string(text) + "'");
  };
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      bad();
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    BigInt c = pos > start ? BigInt(s.substr(start, pos - start)) : BigInt(1);
    std::size_t power = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (pos == start) bad();
      ++pos;
      if (pos >= s.size() || s[pos] != 'x') bad();
    }
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t e0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == e0) bad();
        power = std::stoul(s.substr(e0, pos - e0));
      }
    } else if (pos == start) {
      bad();
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
    coeffs[power] += sign * c;
  }
  return IntegerPolynomial(std::move(coeffs));
}

nlohmann::json polynomial_to_json(const IntegerPolynomial &f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &c : f.coefficients()) out.push_back(bigint_to_json(c));
  return out;
}

IntegerPolynomial polynomial_from_json(const nlohmann::json &j) {
  if (!j.is_array()) fail(ErrorCode::parse_error, "polynomial must be a JSON array");
  std::vector<BigInt> coeffs;
  for (const auto &c : j) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<std::int64_t>());
    } else if (c.is_number_unsigned()) {
      coeffs.emplace_back(c.get<std::uint64_t>());
    } else if (c.is_string()) {
      try {
        coeffs.emplace_back(c.get<std::string>());
      } catch (const std::exception &) {
        fail(ErrorCode::parse_error, "bad coefficient " + c.dump());
      }
    } else {
      fail(ErrorCode::parse_error, "bad coefficient " + c.dump());
    }
  }
  return IntegerPolynomial(std::move(coeffs));
}

IntegerPolynomial pseudo_remainder(const IntegerPolynomial &a, const IntegerPolynomial &b) {
  if (b.is_zero()) fail(ErrorCode::invalid_argument, "pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  const BigInt &lc = b.leading();
  long e = a.degree() - b.degree() + 1;
  IntegerPolynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    auto t = IntegerPolynomial::monomial(r.leading(), static_cast<std::size_t>(r.degree() - b.degree()));
    r = r * lc - t * b;
    --e;
  }
  return r * ipow(lc, static_cast<std::uint64_t>(e));
}

BigInt resultant(const IntegerPolynomial &a_in, const IntegerPolynomial &b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  IntegerPolynomial a = a_in, b = b_in;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  if (b.degree() == 0) return s * ipow(b.leading(), static_cast<std::uint64_t>(a.degree()));
  BigInt ca = a.content(), cb = b.content();
  a = a.divide_exact(ca);
  b = b.divide_exact(cb);
  BigInt t = ipow(ca, static_cast<std::uint64_t>(b.degree())) *
             ipow(cb, static_cast<std::uint64_t>(a.degree()));
  BigInt g = 1, h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    auto r = pseudo_remainder(a, b);
    a = b;
    if (r.is_zero()) return 0;
    b = r.divide_exact(g * ipow(h, static_cast<std::uint64_t>(delta)));
    g = a.leading();
    if (delta > 0) h = ipow(g, static_cast<std::uint64_t>(delta)) / ipow(h, static_cast<std::uint64_t>(delta - 1));
    if (b.degree() > 0) continue;
    const auto da = static_cast<std::uint64_t>(a.degree());
    h = ipow(b.leading(), da) / ipow(h, da - 1);
    return s * t * h;
  }
}

BigInt discriminant(const IntegerPolynomial &f) {
  if (f.degree() < 2) fail(ErrorCode::invalid_argument, "discriminant needs degree at least 2");
  const long n = f.degree();
  BigInt r = resultant(f, f.derivative());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  if (r % f.leading() != 0) fail(ErrorCode::internal, "resultant not divisible by leading coefficient");
  return r / f.leading();
}

IntegerPolynomial fp_family(std::uint64_t ell, std::int64_t p) {
  require_family(ell, p);
  const BigInt l(ell);
  const BigInt lp1 = l * p + 1;
  std::vector<BigInt> c(ell + 1, 0);
  c[ell] = 1;
  c[1] = -l * lp1;
  c[0] = (l - 1) * lp1;
  return IntegerPolynomial(std::move(c));
}

BigInt closed_form_discriminant(std::uint64_t ell, std::int64_t p) {
  require_family(ell, p);
  const BigInt l(ell);
  BigInt rhs = -ipow(l - 1, ell - 1) * ipow(l, ell + 1) * ipow(l * p + 1, ell - 1) * p;
  if (((ell - 1) * (ell - 2) / 2) % 2 == 1) rhs = -rhs;
  return rhs;
}

std::uint64_t valuation(const BigInt &n, std::uint64_t q) {
  if (n == 0) fail(ErrorCode::invalid_argument, "valuation of zero");
  if (q < 2) fail(ErrorCode::invalid_argument, "valuation needs a prime");
  BigInt m = mp::abs(n);
  std::uint64_t v = 0;
  while (m % q == 0) {
    m /= q;
    ++v;
  }
  return v;
}

namespace {

Slope make_slope(const PolygonPoint &a, const PolygonPoint &b) {
  BigInt num = BigInt(static_cast<long long>(b.v)) - BigInt(static_cast<long long>(a.v));
  BigInt den = BigInt(static_cast<long long>(b.i)) - BigInt(static_cast<long long>(a.i));
  BigInt g = mp::gcd(mp::abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

long long cross(const PolygonPoint &o, const PolygonPoint &a, const PolygonPoint &b) {
  auto ax = static_cast<long long>(a.i) - static_cast<long long>(o.i);
  auto ay = static_cast<long long>(a.v) - static_cast<long long>(o.v);
  auto bx = static_cast<long long>(b.i) - static_cast<long long>(o.i);
  auto by = static_cast<long long>(b.v) - static_cast<long long>(o.v);
  return ax * by - ay * bx;
}

}  // namespace

NewtonPolygon newton_polygon(const IntegerPolynomial &f, std::uint64_t q) {
  if (!is_prime(q)) fail(ErrorCode::invalid_argument, "Newton polygon needs a prime");
  if (f.is_zero() || f.coefficient(0) == 0)
    fail(ErrorCode::invalid_argument, "Newton polygon needs a nonzero constant term");
  NewtonPolygon poly;
  poly.prime = q;
  for (std::size_t i = 0; i < f.coefficients().size(); ++i)
    if (f.coefficients()[i] != 0) poly.points.push_back({i, valuation(f.coefficients()[i], q)});
  for (const auto &pt : poly.points) {
    while (poly.hull.size() >= 2 &&
           cross(poly.hull[poly.hull.size() - 2], poly.hull.back(), pt) <= 0)
      poly.hull.pop_back();
    poly.hull.push_back(pt);
  }
  for (std::size_t k = 0; k + 1 < poly.hull.size(); ++k)
    poly.segments.push_back({poly.hull[k], poly.hull[k + 1], make_slope(poly.hull[k], poly.hull[k + 1])});
  return poly;
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::eisenstein: return "eisenstein";
    case CertificateKind::dumas: return "dumas";
    case CertificateKind::none: return "none";
  }
  return "none";
}

nlohmann::json certificate_to_json(const IrreducibilityCertificate &c) {
  nlohmann::json j{{"kind", to_string(c.kind)}, {"prime", c.prime}};
  if (c.kind == CertificateKind::eisenstein) j["shift"] = c.shift;
  if (c.kind == CertificateKind::dumas) {
    j["segment"] = {{c.segment.start.i, c.segment.start.v}, {c.segment.end.i, c.segment.end.v}};
    if (c.multiplicity) j["multiplicity"] = c.multiplicity;
  }
  return j;
}

bool is_eisenstein(const IntegerPolynomial &f, std::uint64_t q) {
  if (f.degree() < 1) return false;
  const auto &c = f.coefficients();
  if (c.back() % q == 0) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] % q != 0) return false;
  return c[0] % (BigInt(q) * q) != 0;
}

IrreducibilityCertificate eisenstein_shift_certificate(const IntegerPolynomial &f,
                                                       std::uint64_t q, std::uint64_t range) {
  IrreducibilityCertificate cert;
  cert.prime = q;
  for (std::uint64_t k = 0; k <= range; ++k)
    for (int sign : {1, -1}) {
      if (k == 0 && sign == -1) continue;
      const auto a = sign * static_cast<std::int64_t>(k);
      if (is_eisenstein(f.shift(a), q)) {
        cert.kind = CertificateKind::eisenstein;
        cert.shift = a;
        return cert;
      }
    }
  return cert;
}

IrreducibilityCertificate dumas_certificate(const IntegerPolynomial &f, std::uint64_t q) {
  if (f.content() != 1) fail(ErrorCode::precondition, "Dumas test needs a primitive polynomial");
  IrreducibilityCertificate cert;
  cert.prime = q;
  auto poly = newton_polygon(f, q);
  const auto deg = static_cast<std::size_t>(f.degree());
  if (poly.segments.size() != 1) return cert;
  const auto &seg = poly.segments.front();
  if (seg.start.i != 0 || seg.end.i != deg || seg.end.v != 0) return cert;
  if (gcd_u64(deg, seg.start.v) != 1) return cert;
  cert.kind = CertificateKind::dumas;
  cert.segment = seg;
  return cert;
}

IrreducibilityCertificate certify_fp_irreducible(std::uint64_t ell, std::int64_t p) {
  auto f = fp_family(ell, p);
  if (static_cast<std::int64_t>(ell) != p) {
    IrreducibilityCertificate cert;
    cert.prime = ell;
    if (is_eisenstein(f.shift(1), ell)) {
      cert.kind = CertificateKind::eisenstein;
      cert.shift = 1;
    }
    return cert;
  }
  const auto up = static_cast<std::uint64_t>(p);
  for (auto [q, m] : factorize(up * up + 1)) {
    if (q == 2 || gcd_u64(q, up - 1) != 1 || gcd_u64(m, up) != 1) continue;
    auto cert = dumas_certificate(f, q);
    cert.multiplicity = m;
    return cert;
  }
  IrreducibilityCertificate none;
  return none;
}

SqrtWitness sqrt_embedding_witness(std::uint64_t ell, std::int64_t p) {
  std::vector<SqrtWitness> found;
  for (bool minus : {false, true}) {
    const std::int64_t member = minus ? -p : p;
    BigInt delta = discriminant(fp_family(ell, member));
    if (delta % p != 0) continue;
    BigInt quotient = delta / p;
    if (quotient < 0) continue;
    BigInt root = mp::sqrt(quotient);
    if (root * root != quotient) continue;
    found.push_back({minus, delta, root});
  }
  if (found.size() != 1)
    fail(ErrorCode::precondition, std::to_string(found.size()) +
                                      " members of the family have discriminant p times a square");
  return found.front();
}

std::uint64_t bertrand_prime(std::uint64_t d) {
  if (d < 8) fail(ErrorCode::invalid_argument, "bertrand_prime needs d >= 8");
  for (std::uint64_t p = d / 2 + 1; p + 2 < d; ++p)
    if (is_prime(p)) return p;
  fail(ErrorCode::internal, "no prime in (d/2, d-2)");
}

namespace {

using Clock = std::chrono::steady_clock;

CheckReport family_report(const char *name, std::uint64_t ell, std::int64_t p) {
  CheckReport r;
  r.check_name = name;
  r.params = {{"ell", ell}, {"p", p}};
  return r;
}

}  // namespace

CheckReport check_fp_irreducible(std::uint64_t ell, std::int64_t p) {
  auto start = Clock::now();
  auto r = family_report("fp-irreducible", ell, p);
  auto f = fp_family(ell, p);
  r.witness("polynomial", f.to_string());
  auto cert = certify_fp_irreducible(ell, p);
  r.witness("certificate", certificate_to_json(cert));
  const bool want_eisenstein = static_cast<std::int64_t>(ell) != p;
  const bool ok = want_eisenstein ? cert.kind == CertificateKind::eisenstein && cert.shift == 1
                                  : cert.kind == CertificateKind::dumas;
  if (!ok) {
    r.status = CheckStatus::fail;
    r.witness("reason", want_eisenstein ? "f(x+1) is not Eisenstein at ell"
                                        : "no Dumas certificate at an admissible prime");
  }
  r.elapsed = Clock::now() - start;
  return r;
}

CheckReport check_discriminant(std::uint64_t ell, std::int64_t p) {
  auto start = Clock::now();
  auto r = family_report("discriminant", ell, p);
  auto f = fp_family(ell, p);
  BigInt via_resultant = discriminant(f);
  BigInt closed = closed_form_discriminant(ell, p);
  r.witness("polynomial", f.to_string());
  r.witness("resultant", via_resultant.str());
  r.witness("closed_form", closed.str());
  if (via_resultant != closed) r.status = CheckStatus::fail;
  r.elapsed = Clock::now() - start;
  return r;
}

CheckReport check_sqrt_witness(std::uint64_t ell, std::int64_t p) {
  auto start = Clock::now();
  auto r = family_report("sqrt-witness", ell, p);
  try {
    auto w = sqrt_embedding_witness(ell, p);
    r.witness("branch", w.minus_p ? "f_minus_p" : "f_p");
    r.witness("discriminant", w.discriminant.str());
    r.witness("square_root", w.square_root.str());
    r.witness("identity", w.discriminant.str() + " = " + std::to_string(p) + " * " +
                              w.square_root.str() + "^2");
    if (w.square_root * w.square_root * p != w.discriminant) r.status = CheckStatus::fail;
  } catch (const Error &e) {
    if (e.code() != ErrorCode::precondition) throw;
    r.status = CheckStatus::fail;
    r.witness("discriminants", {discriminant(fp_family(ell, p)).str(),
                                discriminant(fp_family(ell, -p)).str()});
    r.witness("reason", e.what());
  }
  r.elapsed = Clock::now() - start;
  return r;
}

}  // namespace galkit
