#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hlab/rational.hpp"

namespace hlab {

/// Q(zeta_m) realised as Q[x] / Phi_m(x). Instances are shared and immutable.
class CyclotomicField {
public:
  static std::shared_ptr<const CyclotomicField> get(int order);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Monic Phi_m, coefficients from the constant term upward.
  const std::vector<Rational>& modulus() const { return modulus_; }
  /// Remainder of `poly` modulo Phi_m, padded to exactly degree() coefficients.
  std::vector<Rational> reduce(std::vector<Rational> poly) const;

private:
  CyclotomicField(int order, std::vector<Rational> modulus)
      : order_(order), modulus_(std::move(modulus)) {}

  int order_;
  std::vector<Rational> modulus_;
};

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<Rational> cyclotomic_polynomial(int order);

/// Element of a cyclotomic field. A default-constructed or integer-constructed
/// value is an unbound rational constant and adopts the field of whatever it
/// is combined with; this is what lets Eigen write Scalar(0) and Scalar(1).
class Cyclotomic {
public:
  Cyclotomic() : coeffs_{Rational(0)} {}
  Cyclotomic(int v) : coeffs_{Rational(v)} {}  // NOLINT
  Cyclotomic(const Rational& v) : coeffs_{v} {}  // NOLINT
  Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs);

  /// zeta_m^k.
  static Cyclotomic zeta(int order, int k = 1);

  /// 0 for an unbound rational constant.
  int order() const { return field_ ? field_->order() : 0; }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  /// Coefficients in the power basis 1, zeta, ..., zeta^(deg-1).
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  Cyclotomic inverse() const;
  std::string str() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

private:
  void adopt(const Cyclotomic& o);

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Residue modulo a prime p, stored in [0, p). p == 0 marks an unbound
/// integer constant, with the same adoption rule as Cyclotomic.
class PrimeResidue {
public:
  PrimeResidue() = default;
  PrimeResidue(int v) : value_(v) {}  // NOLINT
  PrimeResidue(std::int64_t value, std::int64_t prime);

  std::int64_t value() const { return value_; }
  std::int64_t prime() const { return prime_; }

  bool is_zero() const { return value_ == 0; }
  PrimeResidue inverse() const;
  std::string str() const { return std::to_string(value_); }

  PrimeResidue& operator+=(const PrimeResidue& o);
  PrimeResidue& operator-=(const PrimeResidue& o);
  PrimeResidue& operator*=(const PrimeResidue& o);
  PrimeResidue& operator/=(const PrimeResidue& o) { return *this *= o.inverse(); }

  friend PrimeResidue operator+(PrimeResidue a, const PrimeResidue& b) { return a += b; }
  friend PrimeResidue operator-(PrimeResidue a, const PrimeResidue& b) { return a -= b; }
  friend PrimeResidue operator*(PrimeResidue a, const PrimeResidue& b) { return a *= b; }
  friend PrimeResidue operator/(PrimeResidue a, const PrimeResidue& b) { return a /= b; }
  PrimeResidue operator-() const;

  friend bool operator==(const PrimeResidue& a, const PrimeResidue& b);

private:
  std::int64_t align(const PrimeResidue& o);

  std::int64_t value_ = 0;
  std::int64_t prime_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PrimeResidue& r);

bool is_prime(std::int64_t p);

// Uniform zero test and field identity across the scalar types.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_zero(const PrimeResidue& x) { return x.is_zero(); }

/// Identifies the concrete field an entry lives in; 0 means "any" (unbound constant or Q).
inline std::int64_t field_id(const Rational&) { return 0; }
inline std::int64_t field_id(const Cyclotomic& x) { return x.order(); }
inline std::int64_t field_id(const PrimeResidue& x) { return x.prime(); }

}  // namespace hlab

namespace Eigen {

template <typename T>
struct HlabExactNumTraits : GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline T epsilon() { return T(0); }
  static inline T dummy_precision() { return T(0); }
  static inline int digits10() { return 0; }
};

template <> struct NumTraits<hlab::Rational> : HlabExactNumTraits<hlab::Rational> {};
template <> struct NumTraits<hlab::Cyclotomic> : HlabExactNumTraits<hlab::Cyclotomic> {};
template <> struct NumTraits<hlab::PrimeResidue> : HlabExactNumTraits<hlab::PrimeResidue> {};

}  // namespace Eigen
