#include "gcas/egbf.hpp"

#include <stdexcept>
#include <string>

namespace gcas {

bool operator==(const ExponentArray& a, const ExponentArray& b) {
    return a.q.q == b.q.q && a.rows() == b.rows() && a.cols() == b.cols() &&
           (a.entries == b.entries).all();
}

namespace {

void require_digits(const DigitVector& d, Int base, Int count, const char* label) {
    if (d.base != base)
        throw std::invalid_argument(std::string("eval: ") + label + " digit base mismatch");
    if (static_cast<Int>(d.size()) != count)
        throw std::invalid_argument(std::string("eval: ") + label + " digit count mismatch");
}

// Affine part sum_{gamma=1}^{q-1} lambda(gamma, l) * v^gamma + running mod q.
Int affine_term(const IntArray& lambda, Int l_index, Int value, Modulus q) {
    Int acc = 0;
    for (Int gamma = 1; gamma < q.q; ++gamma) {
        Int coeff = lambda(gamma - 1, l_index);
        if (coeff == 0) continue;
        acc = (acc + coeff % q.q * mod_pow(value, gamma, q)) % q.q;
    }
    return acc;
}

Int chain_terms(const std::vector<std::vector<Int>>& partitions,
                const std::vector<std::vector<Int>>& d, Int scale,
                const std::vector<Int>& z, Modulus q) {
    Int acc = 0;
    for (std::size_t alpha = 0; alpha < partitions.size(); ++alpha) {
        const auto& chain = partitions[alpha];
        for (std::size_t beta = 0; beta + 1 < chain.size(); ++beta) {
            Int term = scale % q.q * (d[alpha][beta] % q.q) % q.q;
            term = term * (z[static_cast<std::size_t>(chain[beta] - 1)] % q.q) % q.q;
            term = term * (z[static_cast<std::size_t>(chain[beta + 1] - 1)] % q.q) % q.q;
            acc = (acc + term) % q.q;
        }
    }
    return acc;
}

}  // namespace

Int eval_t1(const Theorem1Function& fn, const DigitVector& g_digits,
            const DigitVector& i_digits) {
    require_digits(g_digits, fn.b, fn.m, "g");
    require_digits(i_digits, fn.b, fn.n, "i");

    const DigitVector z = unified_digits(g_digits, i_digits);
    const Int q = fn.q.q;

    Int acc = chain_terms(fn.partitions, fn.d, q / fn.b, z.digits, fn.q);
    for (Int l = 1; l <= fn.m + fn.n; ++l)
        acc = (acc + affine_term(fn.lambda, l - 1, z.digits[static_cast<std::size_t>(l - 1)],
                                 fn.q)) % q;
    return (acc + mod_reduce(fn.lambda0, q)) % q;
}

Int eval_t2(const Theorem2Function& fn, const DigitVector& g_digits,
            const DigitVector& i_digits) {
    require_digits(g_digits, fn.b1, fn.m, "g");
    require_digits(i_digits, fn.b2, fn.n, "i");

    const Int q = fn.q.q;
    Int acc = chain_terms(fn.x_partitions, fn.d, q / fn.b1, g_digits.digits, fn.q);
    acc = (acc + chain_terms(fn.y_partitions, fn.d_prime, q / fn.b2, i_digits.digits, fn.q)) % q;
    for (Int l = 1; l <= fn.m; ++l)
        acc = (acc + affine_term(fn.lambda, l - 1, g_digits.digits[static_cast<std::size_t>(l - 1)],
                                 fn.q)) % q;
    for (Int l = 1; l <= fn.n; ++l)
        acc = (acc + affine_term(fn.nu, l - 1, i_digits.digits[static_cast<std::size_t>(l - 1)],
                                 fn.q)) % q;
    return (acc + mod_reduce(fn.lambda0, q)) % q;
}

ExponentArray materialize(const PointEvaluator& evaluator, Int b1, Int m, Int b2, Int n,
                          Modulus q) {
    if (b1 < 2 || b2 < 2) throw std::invalid_argument("materialize: bases must be >= 2");
    if (m < 0 || n < 0) throw std::invalid_argument("materialize: negative dimension");

    Int rows = 1, cols = 1;
    for (Int t = 0; t < m; ++t) {
        rows *= b1;
        if (rows > kMaxArrayCells) throw std::length_error("materialize: array too large");
    }
    for (Int t = 0; t < n; ++t) {
        cols *= b2;
        if (cols > kMaxArrayCells) throw std::length_error("materialize: array too large");
    }
    if (rows * cols > kMaxArrayCells) throw std::length_error("materialize: array too large");

    IntArray entries(rows, cols);
    for (Int i = 0; i < cols; ++i) {
        const DigitVector idig = index_to_digits(i, b2, static_cast<int>(n));
        for (Int g = 0; g < rows; ++g) {
            const DigitVector gdig = index_to_digits(g, b1, static_cast<int>(m));
            entries(g, i) = mod_reduce(evaluator(gdig, idig), q.q);
        }
    }
    return {q, std::move(entries)};
}

ExponentArray materialize(const Theorem1Function& fn) {
    return materialize(
        [&fn](const DigitVector& g, const DigitVector& i) { return eval_t1(fn, g, i); }, fn.b,
        fn.m, fn.b, fn.n, fn.q);
}

ExponentArray materialize(const Theorem2Function& fn) {
    return materialize(
        [&fn](const DigitVector& g, const DigitVector& i) { return eval_t2(fn, g, i); }, fn.b1,
        fn.m, fn.b2, fn.n, fn.q);
}

}  // namespace gcas
