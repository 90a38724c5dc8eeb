#include "gcas/construct.hpp"

#include <numeric>
#include <stdexcept>

namespace gcas {

const char* to_string(OffsetStrategy s) {
    switch (s) {
        case OffsetStrategy::AsPrintedUnscaled: return "as-printed";
        case OffsetStrategy::AsPrintedScaled: return "as-printed-scaled";
        case OffsetStrategy::MirrorTheorem1: return "mirror-t1";
    }
    return "?";
}

std::size_t ArraySet::duplicate_count() const {
    std::size_t count = 0;
    for (std::size_t i = 1; i < members.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (members[i] == members[j]) {
                ++count;
                break;
            }
    return count;
}

namespace {

Int checked_pow(Int base, Int exp, Int cap) {
    Int v = 1;
    for (Int t = 0; t < exp; ++t) {
        v *= base;
        if (v > cap) return cap + 1;
    }
    return v;
}

void check_partition(const std::vector<std::vector<Int>>& partitions, Int universe,
                     const char* label, std::vector<std::string>& errors) {
    std::vector<int> seen(static_cast<std::size_t>(universe) + 1, 0);
    Int covered = 0;
    for (const auto& chain : partitions) {
        if (chain.empty()) {
            errors.push_back(std::string(label) + ": empty chain");
            continue;
        }
        for (Int idx : chain) {
            if (idx < 1 || idx > universe) {
                errors.push_back(std::string(label) + ": index out of range");
            } else if (seen[static_cast<std::size_t>(idx)]++) {
                errors.push_back(std::string(label) + ": index repeated across chains");
            } else {
                ++covered;
            }
        }
    }
    if (covered != universe)
        errors.push_back(std::string(label) + ": chains must cover every variable index");
}

void check_chain_coeffs(const std::vector<std::vector<Int>>& partitions,
                        const std::vector<std::vector<Int>>& d, Int b, const char* label,
                        std::vector<std::string>& errors) {
    if (d.size() != partitions.size()) {
        errors.push_back(std::string(label) + ": one coefficient list per chain required");
        return;
    }
    for (std::size_t alpha = 0; alpha < partitions.size(); ++alpha) {
        if (d[alpha].size() + 1 != partitions[alpha].size()) {
            errors.push_back(std::string(label) + ": chain needs length-1 coefficients");
            continue;
        }
        for (Int v : d[alpha])
            if (v < 1 || v >= b || std::gcd(v, b) != 1)
                errors.push_back(std::string(label) + ": coefficient not in U(b)");
    }
}

void check_affine(const IntArray& coeffs, Int q, Int vars, const char* label,
                  std::vector<std::string>& errors) {
    if (coeffs.rows() != q - 1 || coeffs.cols() != vars) {
        errors.push_back(std::string(label) + ": expected a (q-1) x vars coefficient matrix");
        return;
    }
    if (coeffs.size() > 0 && ((coeffs < 0) || (coeffs >= q)).any())
        errors.push_back(std::string(label) + ": coefficient outside Z_q");
}

// Digit value of 1-based variable `l` with radix `base` for indices 0..count-1.
IntVector digit_column(Int l, Int base, Int count) {
    IntVector out(count);
    Int scale = 1;
    for (Int t = 1; t < l; ++t) scale *= base;
    for (Int v = 0; v < count; ++v) out[v] = (v / scale) % base;
    return out;
}

// One linear offset term scale * tuple[slot] * digit(variable); rows or columns.
struct OffsetTerm {
    bool on_rows = true;
    Int variable = 1;  // 1-based within its side
    Int scale = 1;
    std::size_t slot = 0;
};

// Base array plus, for every offset tuple in lexicographic order (last slot
// fastest), the rank-1 offset described by `terms`. Each member stays in Z_q.
ArraySet enumerate_offsets(const ExponentArray& base, const std::vector<OffsetTerm>& terms,
                           const std::vector<Int>& radices, Int b1, Int b2) {
    const Int q = base.q.q;
    const Int rows = base.rows();
    const Int cols = base.cols();

    Int total = 1;
    for (Int r : radices) {
        total *= r;
        if (total > kMaxSetMembers) throw std::length_error("build: set too large");
    }

    std::vector<IntVector> digits;
    digits.reserve(terms.size());
    for (const auto& term : terms)
        digits.push_back(term.on_rows ? digit_column(term.variable, b1, rows)
                                      : digit_column(term.variable, b2, cols));

    ArraySet set(base.q);
    set.members.reserve(static_cast<std::size_t>(total));
    set.labels.reserve(static_cast<std::size_t>(total));

    std::vector<Int> tuple(radices.size(), 0);
    IntVector row_add(rows), col_add(cols);
    for (Int index = 0; index < total; ++index) {
        row_add.setZero();
        col_add.setZero();
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const Int weight = mod_reduce(terms[t].scale * tuple[terms[t].slot], q);
            if (weight == 0) continue;
            if (terms[t].on_rows)
                row_add += weight * digits[t];
            else
                col_add += weight * digits[t];
        }

        IntArray entries = base.entries;
        entries.colwise() += row_add;
        entries.rowwise() += col_add.transpose();
        entries = entries.unaryExpr([q](Int v) { return mod_reduce(v, q); });
        set.members.emplace_back(base.q, std::move(entries));
        set.labels.push_back(tuple);

        for (std::size_t t = tuple.size(); t-- > 0;) {
            if (++tuple[t] < radices[t]) break;
            tuple[t] = 0;
        }
    }
    return set;
}

void throw_if_invalid(const Validation& v, const char* what) {
    if (v.ok()) return;
    std::string msg = std::string(what) + ": invalid parameters";
    for (const auto& e : v.errors) msg += "\n  " + e;
    throw std::invalid_argument(msg);
}

Validation validate_t1_impl(const Theorem1Params& p, bool pinned_offset) {
    Validation v;
    const auto& fn = p.fn;
    const Int mn = fn.m + fn.n;

    if (fn.b < 2) v.errors.push_back("b must be >= 2");
    if (fn.m < 1) v.errors.push_back("m must be >= 1");
    if (fn.n < 0) v.errors.push_back("n must be >= 0");
    if (fn.k() < 1 || fn.k() > mn) v.errors.push_back("k must satisfy 1 <= k <= m+n");
    if (fn.b >= 2 && fn.q.q % fn.b != 0) v.errors.push_back("b must divide q");
    if (p.N < 2) v.errors.push_back("N must be >= 2");
    if (p.N >= 2 && fn.q.q % p.N != 0) v.errors.push_back("N must divide q");
    if (p.N < fn.b) v.errors.push_back("N must be >= b");

    if (fn.m >= 1 && fn.n >= 0) {
        if (checked_pow(fn.b, mn, kMaxArrayCells) > kMaxArrayCells)
            v.errors.push_back("array size b^(m+n) exceeds capacity bound");
        const Int set_exp = pinned_offset ? fn.k() + 1 : fn.k();
        if (p.N >= 2 && checked_pow(p.N, set_exp, kMaxSetMembers) > kMaxSetMembers)
            v.errors.push_back("set size exceeds capacity bound");
    }

    check_partition(fn.partitions, mn, "partitions", v.errors);
    if (fn.b >= 2) check_chain_coeffs(fn.partitions, fn.d, fn.b, "d", v.errors);
    check_affine(fn.lambda, fn.q.q, mn, "lambda", v.errors);
    if (fn.lambda0 < 0 || fn.lambda0 >= fn.q.q) v.errors.push_back("lambda0 outside Z_q");

    if (pinned_offset && v.errors.empty()) {
        for (const auto& chain : fn.partitions)
            if (chain.front() == fn.m) {
                v.warnings.push_back(
                    "chain head equals the pinned offset variable z_m: offsets collide and "
                    "the set will contain duplicate members");
                break;
            }
    }
    return v;
}

}  // namespace

Validation validate_t1(const Theorem1Params& p) { return validate_t1_impl(p, true); }

Validation validate_t1_base(const Theorem1Params& p) { return validate_t1_impl(p, false); }

Validation validate_t2(const Theorem2Params& p) {
    Validation v;
    const auto& fn = p.fn;

    if (fn.b1 < 2) v.errors.push_back("b1 must be >= 2");
    if (fn.b2 < 2) v.errors.push_back("b2 must be >= 2");
    if (fn.m < 1) v.errors.push_back("m must be >= 1");
    if (fn.n < 1) v.errors.push_back("n must be >= 1");
    if (fn.k1() < 1 || fn.k1() > fn.m) v.errors.push_back("k1 must satisfy 1 <= k1 <= m");
    if (fn.k2() < 1 || fn.k2() > fn.n) v.errors.push_back("k2 must satisfy 1 <= k2 <= n");
    if (fn.b1 >= 2 && fn.q.q % fn.b1 != 0) v.errors.push_back("b1 must divide q");
    if (fn.b2 >= 2 && fn.q.q % fn.b2 != 0) v.errors.push_back("b2 must divide q");
    if (p.N1 < 2) v.errors.push_back("N1 must be >= 2");
    if (p.N2 < 2) v.errors.push_back("N2 must be >= 2");
    if (p.N1 >= 2 && fn.q.q % p.N1 != 0) v.errors.push_back("N1 must divide q");
    if (p.N2 >= 2 && fn.q.q % p.N2 != 0) v.errors.push_back("N2 must divide q");
    if (p.N1 < fn.b1) v.errors.push_back("N1 must be >= b1");
    if (p.N2 < fn.b2) v.errors.push_back("N2 must be >= b2");

    if (fn.m >= 1 && fn.n >= 1) {
        if (checked_pow(fn.b1, fn.m, kMaxArrayCells) > kMaxArrayCells ||
            checked_pow(fn.b2, fn.n, kMaxArrayCells) > kMaxArrayCells)
            v.errors.push_back("array size b1^m * b2^n exceeds capacity bound");
        if (p.N1 >= 2 && p.N2 >= 2) {
            const Int sz1 = checked_pow(p.N1, fn.k1() + 1, kMaxSetMembers);
            const Int sz2 = checked_pow(p.N2, fn.k2(), kMaxSetMembers);
            if (sz1 > kMaxSetMembers || sz2 > kMaxSetMembers ||
                sz1 > kMaxSetMembers / sz2)
                v.errors.push_back("set size exceeds capacity bound");
        }
    }

    check_partition(fn.x_partitions, fn.m, "x_partitions", v.errors);
    check_partition(fn.y_partitions, fn.n, "y_partitions", v.errors);
    if (fn.b1 >= 2) check_chain_coeffs(fn.x_partitions, fn.d, fn.b1, "d", v.errors);
    if (fn.b2 >= 2) check_chain_coeffs(fn.y_partitions, fn.d_prime, fn.b2, "d_prime", v.errors);
    check_affine(fn.lambda, fn.q.q, fn.m, "lambda", v.errors);
    check_affine(fn.nu, fn.q.q, fn.n, "nu", v.errors);
    if (fn.lambda0 < 0 || fn.lambda0 >= fn.q.q) v.errors.push_back("lambda0 outside Z_q");

    if (!v.errors.empty()) return v;

    const bool as_printed = p.offset_strategy == OffsetStrategy::AsPrintedUnscaled ||
                            p.offset_strategy == OffsetStrategy::AsPrintedScaled;
    if (as_printed) {
        const Int pin = fn.k1() + 1;
        if (pin > fn.m) v.errors.push_back("strategy needs x_{k1+1}: k1+1 must be <= m");
        if (pin > fn.n) v.errors.push_back("strategy needs y_{k1+1}: k1+1 must be <= n");
        if (v.errors.empty()) {
            for (const auto& chain : fn.x_partitions)
                if (chain.front() == pin)
                    v.warnings.push_back(
                        "x chain head equals pinned index k1+1: offsets collide and the set "
                        "may contain duplicate members");
            for (const auto& chain : fn.y_partitions)
                if (chain.front() == pin)
                    v.warnings.push_back(
                        "y chain head equals pinned index k1+1: offsets collide and the set "
                        "may contain duplicate members");
        }
    } else {
        for (const auto& chain : fn.x_partitions)
            if (chain.front() == fn.m) {
                v.warnings.push_back(
                    "x chain head equals the pinned offset variable x_m: offsets collide and "
                    "the set will contain duplicate members");
                break;
            }
    }
    return v;
}

ArraySet build_t1_set(const Theorem1Params& p) {
    throw_if_invalid(validate_t1(p), "build_t1_set");
    const auto& fn = p.fn;
    const Int step = fn.q.q / p.N;

    std::vector<OffsetTerm> terms;
    std::size_t slot = 0;
    for (const auto& chain : fn.partitions) {
        const Int head = chain.front();
        terms.push_back({head <= fn.m, head <= fn.m ? head : head - fn.m, step, slot++});
    }
    terms.push_back({true, fn.m, step, slot});  // pinned z_m

    const std::vector<Int> radices(static_cast<std::size_t>(fn.k() + 1), p.N);
    return enumerate_offsets(materialize(fn), terms, radices, fn.b, fn.b);
}

ArraySet build_t1_base_set(const Theorem1Params& p) {
    throw_if_invalid(validate_t1_base(p), "build_t1_base_set");
    const auto& fn = p.fn;
    const Int step = fn.q.q / p.N;

    std::vector<OffsetTerm> terms;
    std::size_t slot = 0;
    for (const auto& chain : fn.partitions) {
        const Int head = chain.front();
        terms.push_back({head <= fn.m, head <= fn.m ? head : head - fn.m, step, slot++});
    }
    const std::vector<Int> radices(static_cast<std::size_t>(fn.k()), p.N);
    return enumerate_offsets(materialize(fn), terms, radices, fn.b, fn.b);
}

ArraySet build_t2_set(const Theorem2Params& p) {
    throw_if_invalid(validate_t2(p), "build_t2_set");
    const auto& fn = p.fn;
    const Int step1 = fn.q.q / p.N1;
    const Int step2 = fn.q.q / p.N2;

    // Tuple layout: (n_1..n_{k1}, n_{k1+1}, n'_1..n'_{k2}).
    std::vector<OffsetTerm> terms;
    std::vector<Int> radices;
    std::size_t slot = 0;
    for (const auto& chain : fn.x_partitions) {
        terms.push_back({true, chain.front(), step1, slot++});
        radices.push_back(p.N1);
    }
    const std::size_t pin_slot = slot++;
    radices.push_back(p.N1);
    switch (p.offset_strategy) {
        case OffsetStrategy::MirrorTheorem1:
            terms.push_back({true, fn.m, step1, pin_slot});
            break;
        case OffsetStrategy::AsPrintedScaled:
            terms.push_back({true, fn.k1() + 1, step1, pin_slot});
            terms.push_back({false, fn.k1() + 1, step1, pin_slot});
            break;
        case OffsetStrategy::AsPrintedUnscaled:
            terms.push_back({true, fn.k1() + 1, 1, pin_slot});
            terms.push_back({false, fn.k1() + 1, 1, pin_slot});
            break;
    }
    for (const auto& chain : fn.y_partitions) {
        terms.push_back({false, chain.front(), step2, slot++});
        radices.push_back(p.N2);
    }

    return enumerate_offsets(materialize(fn), terms, radices, fn.b1, fn.b2);
}

}  // namespace gcas
