#include "hlab/field.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hlab/errors.hpp"

namespace hlab {

namespace {

using Poly = std::vector<Rational>;  // constant term first

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Euclidean division; divisor must be non-zero after trimming.
std::pair<Poly, Poly> poly_divmod(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (poly_degree(a) < poly_degree(b)) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational lead_inv = b.back().inverse();
  while (!a.empty() && poly_degree(a) >= poly_degree(b)) {
    const int shift = poly_degree(a) - poly_degree(b);
    const Rational c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= c * b[j];
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int order) {
  if (order < 1) throw InputError("cyclotomic order must be positive");
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  Poly p(order + 1);
  p[0] = Rational(-1);
  p[order] = Rational(1);
  for (int d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    auto [q, r] = poly_divmod(p, cyclotomic_polynomial(d));
    if (!r.empty()) throw ConsistencyError("cyclotomic polynomial division left a remainder");
    p = std::move(q);
  }
  return p;
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int order) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const CyclotomicField> field(new CyclotomicField(order, cyclotomic_polynomial(order)));
  cache.emplace(order, field);
  return field;
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> poly) const {
  trim(poly);
  if (poly_degree(poly) >= degree()) poly = poly_divmod(std::move(poly), modulus_).second;
  poly.resize(degree());
  return poly;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)) {
  if (!field_) throw InputError("cyclotomic element without a field");
  coeffs_ = field_->reduce(std::move(coeffs));
}

Cyclotomic Cyclotomic::zeta(int order, int k) {
  auto field = CyclotomicField::get(order);
  const int e = ((k % order) + order) % order;
  Poly p(e + 1);
  p[e] = Rational(1);
  return Cyclotomic(field, std::move(p));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void Cyclotomic::adopt(const Cyclotomic& o) {
  if (!o.field_) return;
  if (!field_) {
    Poly c = std::move(coeffs_);
    field_ = o.field_;
    coeffs_ = field_->reduce(std::move(c));
    return;
  }
  if (field_->order() != o.field_->order()) {
    throw InputError("mixed cyclotomic fields: order " + std::to_string(field_->order()) + " vs " +
                     std::to_string(o.field_->order()));
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  adopt(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  adopt(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  adopt(o);
  Poly product = poly_mul(coeffs_, o.coeffs_);
  if (field_) {
    coeffs_ = field_->reduce(std::move(product));
  } else {
    coeffs_ = product.empty() ? Poly{Rational(0)} : std::move(product);
  }
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic element");
  if (!field_) return Cyclotomic(coeffs_[0].inverse());
  // Extended Euclid: find u with u * self == 1 (mod Phi_m).
  Poly r0 = field_->modulus();
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0{};  // coefficient of self in r0
  Poly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a non-zero constant because Phi_m is irreducible.
  if (poly_degree(r0) != 0) throw ConsistencyError("cyclotomic inverse: non-trivial gcd with Phi_m");
  const Rational scale = r0[0].inverse();
  for (auto& c : s0) c *= scale;
  return Cyclotomic(field_, std::move(s0));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ && b.field_ && a.field_->order() != b.field_->order()) return false;
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational x = i < a.coeffs_.size() ? a.coeffs_[i] : Rational(0);
    const Rational y = i < b.coeffs_.size() ? b.coeffs_[i] : Rational(0);
    if (x != y) return false;
  }
  return true;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i];
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeResidue::PrimeResidue(std::int64_t value, std::int64_t prime) : prime_(prime) {
  if (prime >= (std::int64_t{1} << 31) || !is_prime(prime)) {
    throw InputError("prime field modulus must be a prime below 2^31, got " + std::to_string(prime));
  }
  value_ = ((value % prime) + prime) % prime;
}

std::int64_t PrimeResidue::align(const PrimeResidue& o) {
  if (o.prime_ == 0) return prime_ == 0 ? o.value_ : ((o.value_ % prime_) + prime_) % prime_;
  if (prime_ == 0) {
    prime_ = o.prime_;
    value_ = ((value_ % prime_) + prime_) % prime_;
  } else if (prime_ != o.prime_) {
    throw InputError("mixed prime fields: p = " + std::to_string(prime_) + " vs " + std::to_string(o.prime_));
  }
  return o.value_;
}

PrimeResidue& PrimeResidue::operator+=(const PrimeResidue& o) {
  const std::int64_t v = align(o);
  value_ += v;
  if (prime_) value_ %= prime_;
  return *this;
}

PrimeResidue& PrimeResidue::operator-=(const PrimeResidue& o) {
  const std::int64_t v = align(o);
  value_ -= v;
  if (prime_) value_ = ((value_ % prime_) + prime_) % prime_;
  return *this;
}

PrimeResidue& PrimeResidue::operator*=(const PrimeResidue& o) {
  const std::int64_t v = align(o);
  value_ *= v;
  if (prime_) value_ %= prime_;
  return *this;
}

PrimeResidue PrimeResidue::operator-() const {
  PrimeResidue out = *this;
  out.value_ = prime_ ? (prime_ - value_) % prime_ : -value_;
  return out;
}

PrimeResidue PrimeResidue::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero residue");
  if (prime_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw std::domain_error("inverse of unbound integer constant " + std::to_string(value_));
  }
  // Extended Euclid on (value, p).
  std::int64_t a = value_, b = prime_, x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
  }
  return PrimeResidue(x0, prime_);
}

bool operator==(const PrimeResidue& a, const PrimeResidue& b) {
  if (a.prime_ && b.prime_) return a.prime_ == b.prime_ && a.value_ == b.value_;
  const std::int64_t p = a.prime_ ? a.prime_ : b.prime_;
  if (p == 0) return a.value_ == b.value_;
  return ((a.value_ - b.value_) % p + p) % p == 0;
}

std::ostream& operator<<(std::ostream& os, const PrimeResidue& r) { return os << r.value(); }

}  // namespace hlab
