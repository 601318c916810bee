#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "polylad/bigreal.hpp"
#include "polylad/rational.hpp"

namespace polylad {

/// Dense integer polynomial, coefficients ascending by degree. The zero
/// polynomial is the empty list; otherwise the leading coefficient is
/// nonzero.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> ascending);
    explicit IntPoly(std::vector<mpz_class> ascending);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const mpz_class& c);
    static IntPoly x_pow(long k); // x^k

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const mpz_class& lc() const;
    bool is_monic() const { return !is_zero() && lc() == 1; }
    const mpz_class& coeff(long i) const; // 0 outside range
    const std::vector<mpz_class>& coeffs() const { return c_; }

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly mul_z(const mpz_class& s) const;
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    /// Quotient of an exact division; throws if the division leaves a
    /// remainder.
    IntPoly divexact(const IntPoly& d) const;

    /// Remainder of *this modulo a monic divisor (exact integer arithmetic).
    IntPoly mod_monic(const IntPoly& d) const;

    IntPoly derivative() const;
    IntPoly reverse() const;          // x^deg * P(1/x)
    IntPoly compose_xk(long k) const; // P(x^k)
    IntPoly negate_x() const;         // P(-x)

    mpz_class content() const;
    IntPoly primitive_part() const;

    mpz_class eval_z(const mpz_class& x) const;
    Rational eval_q(const Rational& x) const;
    BigReal eval_r(const BigReal& x) const;

    /// Sum of |coefficients| (used for root bounds).
    mpz_class one_norm() const;

    bool is_reciprocal() const; // x^d P(1/x) == P

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<mpz_class> c_;
};

/// gcd of integer polynomials (primitive, positive leading coefficient).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Resultant of a and b over Z, by the subresultant PRS.
mpz_class resultant(const IntPoly& a, const IntPoly& b);

/// k-th cyclotomic polynomial (internally cached; safe to share).
const IntPoly& cyclotomic(long k);

/// expr reduced modulo a monic minimal polynomial, by repeated substitution
/// for the leading power; exact throughout.
IntPoly reduce_mod(const IntPoly& p_min, const IntPoly& expr);

/// Sparse rational exponent vector for a multiplicative identity
///   Phi_k(x) = x^a0 * prod_j Phi_j(x)^A_j.
/// Entries never hold zeroes; indices are >= 1.
struct RatExpVec {
    Rational a0;
    std::map<long, Rational> entries;

    void set(long j, const Rational& v);
    const Rational& at(long j) const; // zero if absent
    mpz_class common_denominator() const;
};

struct IdentityCheck {
    bool ok = false;
    IntPoly residual; // nonzero side difference when the identity fails
};

/// Symbolic verification of Phi_k = x^a0 * prod Phi_j^A_j in the field
/// defined by p_min: raise both sides to the common denominator, clear
/// negative exponents, and reduce the difference modulo p_min.
IdentityCheck verify_cyclotomic_identity(const IntPoly& p_min, const RatExpVec& rel, long k);

/// Norm bookkeeping for N_k = prod_roots Phi_k(x_r) (an exact integer for
/// monic defining polynomials).
struct NormRecord {
    enum class Cofactor { unit, probable_prime, composite_unfactored };
    long k = 0;
    mpz_class value;
    std::map<mpz_class, int> factors;
    mpz_class cofactor = 1;
    Cofactor cofactor_class = Cofactor::unit;

    bool fully_factored() const { return cofactor == 1; }
};

/// N_k for monic P, computed exactly from resultants, with factorization
/// attempted by trial division and Pollard rho within a budget.
NormRecord norm(const IntPoly& p, long k, long rho_budget = 10'000'000);

/// Incremental norm computation across many k for a fixed field: keeps the
/// divisor norms and a known-prime pool so factoring work is shared.
class NormCalculator {
  public:
    explicit NormCalculator(const IntPoly& p, long rho_budget = 10'000'000);

    const NormRecord& record(long k); // computes and caches on demand

    /// Raw product over roots of x^k - 1: resultant(P, x^k - 1).
    mpz_class power_norm(long k);

  private:
    IntPoly p_;
    long rho_budget_;
    std::map<long, NormRecord> records_;
    std::vector<mpz_class> known_primes_;
    std::map<long, IntPoly> xk_mod_; // x^k mod P cache for binary powering
    IntPoly x_pow_mod(long k);
};

} // namespace polylad
