#include "clawfree/polynomial.hpp"

#include "clawfree/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace clawfree {

SparsePolynomial::SparsePolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

SparsePolynomial::SparsePolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

SparsePolynomial SparsePolynomial::monomial(const BigInt& c, int degree) {
    if (degree < 0) throw ContractViolation("monomial degree must be non-negative");
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return SparsePolynomial(std::move(v));
}

void SparsePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt SparsePolynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return SparsePolynomial(std::move(out));
}

std::complex<double> SparsePolynomial::evaluate(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->convert_to<double>();
    return acc;
}

double SparsePolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
}

double SparsePolynomial::magnitude_bound(double abs_z) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * abs_z + std::fabs(it->convert_to<double>());
    return acc;
}

double SparsePolynomial::max_abs_coeff() const {
    double best = 0.0;
    for (const BigInt& c : coeffs_) best = std::max(best, std::fabs(c.convert_to<double>()));
    return best;
}

std::string SparsePolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) out << mag;
        if (k >= 1) out << var;
        if (k >= 2) out << '^' << k;
        first = false;
    }
    return out.str();
}

SparsePolynomial substitute_negative_reciprocal(const SparsePolynomial& f, int n) {
    if (f.degree() > n) throw ContractViolation("degree exceeds the substitution exponent");
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= f.degree(); ++k) {
        BigInt c = f.coeff(k);
        out[static_cast<std::size_t>(n - k)] = (k % 2 == 0) ? c : BigInt(-c);
    }
    return SparsePolynomial(std::move(out));
}

}  // namespace clawfree
