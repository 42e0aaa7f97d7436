#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lca {

using Rat = mpq_class;

// Backend-wide tolerance used for float comparisons.  Pinned at startup,
// adjustable from the CLI (--tol).
double &float_tol();

enum class Backend { Exact, Float };

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularMatrix : NumericError {
    using NumericError::NumericError;
};

namespace cyclo {

// Coefficients of the n-th cyclotomic polynomial (monic, ascending).
const std::vector<Rat> &cyclotomic_poly(int n);
int degree(int n);  // Euler phi(n)

// Row giving zeta_n^k (any k >= 0) in the power basis 1, z, ..., z^{phi-1}.
const std::vector<Rat> &power_row(int n, long k);

}  // namespace cyclo

// Element of Q(zeta_n), stored in the power basis modulo the n-th
// cyclotomic polynomial.  Immutable once built; shared between scalars.
struct ExactVal {
    int n = 1;                 // conductor
    std::vector<Rat> c;        // length cyclo::degree(n)
    bool zero = true;          // cached: all coefficients vanish
};

// A field scalar: either an exact cyclotomic number or a complex double.
// Arithmetic between the two backends degrades to float.
class Scalar {
  public:
    Scalar() : kind_(Kind::Exact), e_(zero_exact()) {}
    static Scalar rational(const Rat &r);
    static Scalar integer(long k) { return rational(Rat(k)); }
    static Scalar zeta(int conductor, long power = 1);  // zeta_n^power, exact
    static Scalar complex_num(std::complex<double> z);
    static Scalar of_backend_zero(Backend b);
    static Scalar of_backend_one(Backend b);

    bool is_exact() const { return kind_ == Kind::Exact; }
    Backend backend() const { return is_exact() ? Backend::Exact : Backend::Float; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;          // exact and conductor-free
    Rat rational_value() const;        // throws unless is_rational()

    std::complex<double> to_complex() const;
    Scalar to_float() const { return complex_num(to_complex()); }

    Scalar operator+(const Scalar &o) const;
    Scalar operator-(const Scalar &o) const;
    Scalar operator*(const Scalar &o) const;
    Scalar operator/(const Scalar &o) const;
    Scalar operator-() const;
    Scalar &operator+=(const Scalar &o) { return *this = *this + o; }
    Scalar &operator-=(const Scalar &o) { return *this = *this - o; }
    Scalar &operator*=(const Scalar &o) { return *this = *this * o; }

    Scalar inv() const;
    Scalar conj() const;
    Scalar pow(long k) const;

    bool operator==(const Scalar &o) const;
    bool operator!=(const Scalar &o) const { return !(*this == o); }

    // |value| after numeric embedding zeta_n -> exp(2*pi*i/n).
    double abs_num() const { return std::abs(to_complex()); }

    // "2/3*z^4 + 1" style; float scalars render as "(re,im)".
    std::string str() const;
    // Parses the exact format above; conductor must be supplied.
    static Scalar parse(const std::string &s, int conductor);

    int conductor() const { return is_exact() ? e_->n : 0; }
    const ExactVal &exact_val() const { return *e_; }

  private:
    enum class Kind { Exact, Float };
    Kind kind_;
    std::complex<double> f_{0.0, 0.0};
    std::shared_ptr<const ExactVal> e_;

    static std::shared_ptr<const ExactVal> zero_exact();
    static Scalar make_exact(int n, std::vector<Rat> c);
    friend Scalar lift_to(const Scalar &, int);
};

// Exact square root of a nonnegative integer inside Q(zeta_conductor),
// realized through Gauss sums.  Throws NumericError if the conductor is
// too small to contain it.
Scalar sqrt_integer(unsigned long m, int conductor, Backend b);

// Smallest conductor that sqrt_integer accepts for m (always a multiple
// of the caller-provided base).
int conductor_for_sqrt(unsigned long m, int base);

}  // namespace lca
