#include "gcas/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <unordered_map>

namespace gcas {

bool operator==(const CyclotomicSum& a, const CyclotomicSum& b) {
    return a.q.q == b.q.q && (a.coeffs == b.coeffs).all();
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs.size() == b.coeffs.size() && (a.coeffs == b.coeffs).all();
}

IntPolynomial poly_trim(IntVector coeffs) {
    Eigen::Index n = coeffs.size();
    while (n > 0 && coeffs[n - 1] == 0) --n;
    IntPolynomial out;
    out.coeffs = coeffs.head(n);
    return out;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return {};
    IntVector prod = IntVector::Zero(a.coeffs.size() + b.coeffs.size() - 1);
    for (Eigen::Index i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (Eigen::Index j = 0; j < b.coeffs.size(); ++j)
            prod[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return poly_trim(std::move(prod));
}

namespace {

// Long division by a monic divisor; returns {quotient, remainder}.
std::pair<IntPolynomial, IntPolynomial> poly_divmod_monic(const IntPolynomial& a,
                                                          const IntPolynomial& b) {
    if (b.is_zero_poly()) throw std::invalid_argument("poly_divmod_monic: division by zero");
    if (b.coeffs[b.coeffs.size() - 1] != 1)
        throw std::invalid_argument("poly_divmod_monic: divisor must be monic");
    if (a.coeffs.size() < b.coeffs.size()) return {IntPolynomial{}, a};

    IntVector rem = a.coeffs;
    const Eigen::Index db = b.degree();
    IntVector quot = IntVector::Zero(a.degree() - db + 1);
    for (Eigen::Index k = a.degree(); k >= db; --k) {
        Int c = rem[k];
        if (c == 0) continue;
        quot[k - db] = c;
        for (Eigen::Index j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs[j];
    }
    return {poly_trim(std::move(quot)), poly_trim(std::move(rem))};
}

}  // namespace

IntPolynomial poly_mod_monic(const IntPolynomial& a, const IntPolynomial& b) {
    return poly_divmod_monic(a, b).second;
}

IntPolynomial poly_div_exact_monic(const IntPolynomial& a, const IntPolynomial& b) {
    auto [quot, rem] = poly_divmod_monic(a, b);
    if (!rem.is_zero_poly())
        throw internal_error("poly_div_exact_monic: division left a nonzero remainder");
    return quot;
}

CyclotomicSum& add_term(CyclotomicSum& s, Int exponent, Int weight) {
    s.coeffs[mod_reduce(exponent, s.q.q)] += weight;
    return s;
}

const IntPolynomial& cyclotomic_polynomial(Int n) {
    if (n < 1 || n > kMaxModulus)
        throw std::invalid_argument("cyclotomic_polynomial: n out of supported range");

    static std::mutex cache_mutex;
    static std::unordered_map<Int, IntPolynomial> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    // x^n - 1 divided by every proper-divisor cyclotomic polynomial.
    // Each division step is exact because the undivided factors remain.
    IntVector xn = IntVector::Zero(n + 1);
    xn[0] = -1;
    xn[n] = 1;
    IntPolynomial acc = poly_trim(std::move(xn));
    for (Int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        acc = poly_div_exact_monic(acc, cyclotomic_polynomial(d));
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = cache.emplace(n, std::move(acc));
    return it->second;
}

bool is_zero(const CyclotomicSum& s) {
    if ((s.coeffs == 0).all()) return true;
    IntPolynomial p = poly_trim(s.coeffs);
    const IntPolynomial& phi = cyclotomic_polynomial(s.q.q);
    if (p.degree() < phi.degree()) return false;
    return poly_mod_monic(p, phi).is_zero_poly();
}

std::complex<double> to_complex(const CyclotomicSum& s) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(s.q.q);
    double re = 0.0, im = 0.0;
    for (Eigen::Index j = 0; j < s.coeffs.size(); ++j) {
        if (s.coeffs[j] == 0) continue;
        const double c = static_cast<double>(s.coeffs[j]);
        re += c * std::cos(step * static_cast<double>(j));
        im += c * std::sin(step * static_cast<double>(j));
    }
    return {re, im};
}

std::optional<Int> magnitude_of_real_integer(const CyclotomicSum& s) {
    // s is an integer c iff coeffs(x) - c reduces to zero mod Phi_q, i.e.
    // iff the reduction of coeffs(x) is a constant polynomial.
    IntPolynomial rem = poly_mod_monic(poly_trim(s.coeffs), cyclotomic_polynomial(s.q.q));
    if (rem.is_zero_poly()) return Int{0};
    if (rem.degree() == 0) return rem.coeffs[0];
    return std::nullopt;
}

CyclotomicSum conjugate(const CyclotomicSum& s) {
    CyclotomicSum out(s.q);
    const Int q = s.q.q;
    out.coeffs[0] = s.coeffs[0];
    for (Int j = 1; j < q; ++j) out.coeffs[q - j] = s.coeffs[j];
    return out;
}

}  // namespace gcas
