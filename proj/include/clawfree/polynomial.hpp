#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

namespace clawfree {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial with exact integer coefficients, indexed by degree.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class SparsePolynomial {
public:
    static constexpr int kZeroDegree = -1;

    SparsePolynomial() = default;
    explicit SparsePolynomial(std::vector<BigInt> coeffs);
    SparsePolynomial(std::initializer_list<long long> coeffs);

    static SparsePolynomial monomial(const BigInt& c, int degree);

    /// kZeroDegree for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of z^k; zero beyond the degree.
    BigInt coeff(int k) const;
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    SparsePolynomial& operator+=(const SparsePolynomial& rhs);
    SparsePolynomial& operator-=(const SparsePolynomial& rhs);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

    /// Horner evaluation at double precision.
    std::complex<double> evaluate(std::complex<double> z) const;
    double evaluate(double x) const;

    /// sum_k |c_k| |z|^k, the scale against which evaluation error is judged.
    double magnitude_bound(double abs_z) const;

    double max_abs_coeff() const;

    /// e.g. "q^3 - 3q^2 + 2q"
    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// q^n F(-1/q) for a polynomial F of degree <= n.
SparsePolynomial substitute_negative_reciprocal(const SparsePolynomial& f, int n);

}  // namespace clawfree
