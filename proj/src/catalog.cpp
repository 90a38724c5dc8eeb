#include "gcas/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gcas {

const char* to_string(Source s) {
    switch (s) {
        case Source::Th1: return "Th1";
        case Source::Th2: return "Th2";
        case Source::Ref11: return "Ref11";
        case Source::Ref16: return "Ref16";
        case Source::Ref17a: return "Ref17a";
        case Source::Ref17b: return "Ref17b";
        case Source::Ref18a: return "Ref18a";
        case Source::Ref18b: return "Ref18b";
        case Source::Ref12a: return "Ref12a";
        case Source::Ref12b: return "Ref12b";
    }
    return "?";
}

std::string CatalogRow::witness() const {
    std::ostringstream out;
    for (std::size_t t = 0; t < params.size(); ++t) {
        if (t) out << " ";
        out << params[t].first << "=" << params[t].second;
    }
    return out.str();
}

namespace {

constexpr Int kMaxRows = Int{1} << 20;

using Params = std::vector<std::pair<std::string, Int>>;

bool is_prime(Int v) {
    if (v < 2) return false;
    for (Int d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// (exponent, base^exponent) pairs with base^exponent <= cap, exponent >= min_exp.
std::vector<std::pair<Int, Int>> powers_within(Int base, Int min_exp, Int cap) {
    std::vector<std::pair<Int, Int>> out;
    Int value = 1;
    for (Int e = 0; value <= cap; ++e) {
        if (e >= min_exp) out.push_back({e, value});
        if (value > cap / base) break;
        value *= base;
    }
    return out;
}

template <class Fn>
void for_each_tuple(Int base, Int length, Fn&& fn) {
    std::vector<Int> r(static_cast<std::size_t>(length), 0);
    while (true) {
        fn(const_cast<const std::vector<Int>&>(r));
        std::size_t pos = r.size();
        bool wrapped = true;
        while (pos-- > 0) {
            if (++r[pos] < base) {
                wrapped = false;
                break;
            }
            r[pos] = 0;
        }
        if (wrapped) return;
    }
}

template <class Fn>
void for_each_q(Int divisor, Int max_q, Fn&& fn) {
    for (Int q = divisor; q <= max_q; q += divisor)
        if (q >= 2) fn(q);
}

struct Collector {
    std::vector<CatalogRow> rows;
    std::set<std::tuple<Int, Int, Int, Int>> seen;

    void emit(Source src, Int set_size, Int L1, Int L2, Int q, const char* constraint,
              Params params) {
        if (!seen.insert({L1, L2, set_size, q}).second) return;
        if (static_cast<Int>(rows.size()) >= kMaxRows)
            throw std::length_error("enumerate_feasible: bounds produce too many rows");
        rows.push_back({src, set_size, L1, L2, q, constraint, std::move(params)});
    }
};

// Shared single-alphabet loops: Th1 (set size N^{k+1}), Ref18a (N^k), and the
// truncated-column variant Ref12a (N^k over b^m x (b^{n-1}+eta1)).
void enumerate_t1_family(Source src, const CatalogBounds& b, Collector& out) {
    const char* constraint = "lcm(N,b) | q";
    for (Int base = 2; base <= b.max_L1; ++base) {
        for (auto [m, L1] : powers_within(base, 1, b.max_L1)) {
            for (auto [n, L2full] : powers_within(base, 0, b.max_L2)) {
                if (src == Source::Ref12a && n < 1) continue;
                for (Int N = base; N <= b.max_q; ++N) {
                    const Int sigma = std::lcm(N, base);
                    if (sigma > b.max_q) continue;
                    Int size = (src == Source::Th1) ? N : 1;
                    for (Int k = 1; k <= m + n; ++k) {
                        if (size > b.max_set_size / N) break;
                        size *= N;

                        if (src != Source::Ref12a) {
                            for_each_q(sigma, b.max_q, [&](Int q) {
                                out.emit(src, size, L1, L2full, q, constraint,
                                         {{"N", N}, {"b", base}, {"m", m}, {"n", n}, {"k", k},
                                          {"q", q}});
                            });
                            continue;
                        }

                        // eta1 = sum_{a=1}^{k-1} r_a b^{n-k+a-1} + r0 b^{n-k}
                        if (k > n) continue;
                        Int head = 1;
                        for (Int t = 0; t < n - 1; ++t) head *= base;
                        std::set<Int> columns;
                        for_each_tuple(base, k, [&](const std::vector<Int>& r) {
                            Int scale = 1;
                            for (Int t = 0; t < n - k; ++t) scale *= base;
                            Int eta = r[0] * scale;
                            for (Int alpha = 1; alpha < k; ++alpha) {
                                Int s = 1;
                                for (Int t = 0; t < n - k + alpha - 1; ++t) s *= base;
                                eta += r[static_cast<std::size_t>(alpha)] * s;
                            }
                            columns.insert(head + eta);
                        });
                        for (Int cols : columns) {
                            if (cols > b.max_L2) continue;
                            for_each_q(sigma, b.max_q, [&](Int q) {
                                out.emit(src, size, L1, cols, q, constraint,
                                         {{"N", N}, {"b", base}, {"m", m}, {"n", n}, {"k", k},
                                          {"q", q}, {"eta1", cols - head}});
                            });
                        }
                    }
                }
            }
        }
    }
}

// Shared two-alphabet loops: Th2 (N1^{k1+1} N2^{k2}), Ref18b (N1^{k1} N2^{k2}),
// Ref12b (Ref18b sizes over b1^m x (b2^{n-1}+eta2)).
void enumerate_t2_family(Source src, const CatalogBounds& b, Collector& out) {
    const char* constraint = "lcm(N1,N2,b1,b2) | q";
    const Int n_cap = std::min(b.max_q, b.max_set_size);
    for (Int b1 = 2; b1 <= b.max_L1; ++b1) {
        for (auto [m, L1] : powers_within(b1, 1, b.max_L1)) {
            for (Int b2 = 2; b2 <= b.max_L2; ++b2) {
                for (auto [n, L2full] : powers_within(b2, 1, b.max_L2)) {
                    for (Int N1 = b1; N1 <= n_cap; ++N1) {
                        for (Int N2 = b2; N2 <= n_cap; ++N2) {
                            const Int sigma = std::lcm(std::lcm(N1, N2), std::lcm(b1, b2));
                            if (sigma > b.max_q) continue;
                            Int size1 = (src == Source::Th2) ? N1 : 1;
                            for (Int k1 = 1; k1 <= m; ++k1) {
                                if (size1 > b.max_set_size / N1) break;
                                size1 *= N1;
                                Int size = size1;
                                for (Int k2 = 1; k2 <= n; ++k2) {
                                    if (size > b.max_set_size / N2) break;
                                    size *= N2;

                                    if (src != Source::Ref12b) {
                                        for_each_q(sigma, b.max_q, [&](Int q) {
                                            out.emit(src, size, L1, L2full, q, constraint,
                                                     {{"N1", N1}, {"N2", N2}, {"b1", b1},
                                                      {"b2", b2}, {"m", m}, {"n", n},
                                                      {"k1", k1}, {"k2", k2}, {"q", q}});
                                        });
                                        continue;
                                    }

                                    // eta2 uses a free exponent phi in [0, n-k2];
                                    // the upper end is a boundary reading of the
                                    // formula and is flagged as such.
                                    Int head = 1;
                                    for (Int t = 0; t < n - 1; ++t) head *= b2;
                                    std::map<Int, std::pair<Int, Int>> columns;
                                    for (Int phi = 0; phi <= n - k2; ++phi) {
                                        for_each_tuple(b2, k2, [&](const std::vector<Int>& r) {
                                            Int s0 = 1;
                                            for (Int t = 0; t < phi; ++t) s0 *= b2;
                                            Int eta = r[0] * s0;
                                            for (Int alpha = 1; alpha < k2; ++alpha) {
                                                Int s = 1;
                                                for (Int t = 0; t < n - k2 + alpha - 1; ++t)
                                                    s *= b2;
                                                eta += r[static_cast<std::size_t>(alpha)] * s;
                                            }
                                            columns.emplace(
                                                head + eta,
                                                std::pair<Int, Int>{phi, phi == n - k2 ? 1 : 0});
                                        });
                                    }
                                    for (const auto& [cols, tag] : columns) {
                                        if (cols > b.max_L2) continue;
                                        for_each_q(sigma, b.max_q, [&](Int q) {
                                            out.emit(src, size, L1, cols, q, constraint,
                                                     {{"N1", N1}, {"N2", N2}, {"b1", b1},
                                                      {"b2", b2}, {"m", m}, {"n", n},
                                                      {"k1", k1}, {"k2", k2}, {"q", q},
                                                      {"eta2", cols - head}, {"phi", tag.first},
                                                      {"boundary", tag.second}});
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

void enumerate_ref11(const CatalogBounds& b, Collector& out) {
    for (auto [m1, L1] : powers_within(2, 1, b.max_L1))
        for (auto [m2, L2] : powers_within(2, 1, b.max_L2))
            for (auto [k, size] : powers_within(2, 1, b.max_set_size)) {
                if (k > m1 + m2) break;
                for (Int q = 2; q <= b.max_q; q += 2)
                    out.emit(Source::Ref11, size, L1, L2, q, "q even",
                             {{"k", k}, {"m1", m1}, {"m2", m2}, {"q", q}});
            }
}

void enumerate_ref16(const CatalogBounds& b, Collector& out) {
    for (Int N = 2; N <= b.max_q; ++N)
        for (auto [m, L1] : powers_within(N, 1, b.max_L1))
            for (auto [n, L2] : powers_within(N, 1, b.max_L2))
                for (auto [k, size] : powers_within(N, 1, b.max_set_size))
                    out.emit(Source::Ref16, size, L1, L2, N, "q = N",
                             {{"N", N}, {"m", m}, {"n", n}, {"k", k}, {"q", N}});
}

void enumerate_ref17a(const CatalogBounds& b, Collector& out) {
    for (Int p1 = 2; p1 <= b.max_L1; ++p1) {
        if (!is_prime(p1)) continue;
        for (Int p2 = 2; p2 <= b.max_L2; ++p2) {
            if (!is_prime(p2)) continue;
            const Int sigma = std::lcm(p1, p2);
            if (sigma > b.max_q) continue;
            for (auto [m1, L1] : powers_within(p1, 1, b.max_L1))
                for (auto [m2, L2] : powers_within(p2, 1, b.max_L2))
                    for (auto [k1, size1] : powers_within(p1, 1, b.max_set_size)) {
                        if (k1 > m1) break;
                        for (auto [k2, size2] : powers_within(p2, 1, b.max_set_size)) {
                            if (k2 > m2) break;
                            if (size1 > b.max_set_size / size2) break;
                            for_each_q(sigma, b.max_q, [&](Int q) {
                                out.emit(Source::Ref17a, size1 * size2, L1, L2, q,
                                         "lcm(p1,p2) | q",
                                         {{"p1", p1}, {"p2", p2}, {"k1", k1}, {"k2", k2},
                                          {"m1", m1}, {"m2", m2}, {"q", q}});
                            });
                        }
                    }
        }
    }
}

void enumerate_ref17b(const CatalogBounds& b, Collector& out) {
    for (Int p = 2; p <= std::min(b.max_L1, b.max_L2); ++p) {
        if (!is_prime(p)) continue;
        for (auto [m1, L1] : powers_within(p, 1, b.max_L1))
            for (auto [m2, L2] : powers_within(p, 1, b.max_L2))
                for (auto [k, size] : powers_within(p, 1, b.max_set_size)) {
                    if (k > m1 + m2) break;
                    for_each_q(p, b.max_q, [&](Int q) {
                        out.emit(Source::Ref17b, size, L1, L2, q, "p | q",
                                 {{"p", p}, {"k", k}, {"m1", m1}, {"m2", m2}, {"q", q}});
                    });
                }
    }
}

}  // namespace

std::vector<CatalogRow> enumerate_feasible(Source source, const CatalogBounds& bounds) {
    if (bounds.max_L1 < 1 || bounds.max_L2 < 1 || bounds.max_set_size < 1 || bounds.max_q < 2)
        return {};

    Collector out;
    switch (source) {
        case Source::Th1:
        case Source::Ref18a:
        case Source::Ref12a:
            enumerate_t1_family(source, bounds, out);
            break;
        case Source::Th2:
        case Source::Ref18b:
        case Source::Ref12b:
            enumerate_t2_family(source, bounds, out);
            break;
        case Source::Ref11:
            enumerate_ref11(bounds, out);
            break;
        case Source::Ref16:
            enumerate_ref16(bounds, out);
            break;
        case Source::Ref17a:
            enumerate_ref17a(bounds, out);
            break;
        case Source::Ref17b:
            enumerate_ref17b(bounds, out);
            break;
    }

    std::sort(out.rows.begin(), out.rows.end(), [](const CatalogRow& a, const CatalogRow& b) {
        return std::tie(a.L1, a.L2, a.set_size, a.q) < std::tie(b.L1, b.L2, b.set_size, b.q);
    });
    return out.rows;
}

namespace {

// Same-witness comparisons only make sense between rows generated by the
// same function family (identical or base-variant constructions).
bool family_compatible(Source a, Source b) {
    if (a == b) return true;
    auto family = [](Source s) {
        switch (s) {
            case Source::Th1:
            case Source::Ref18a:
            case Source::Ref12a: return 1;
            case Source::Th2:
            case Source::Ref18b:
            case Source::Ref12b: return 2;
            default: return 0;
        }
    };
    const int fa = family(a), fb = family(b);
    return fa != 0 && fa == fb;
}

// Witnesses agree when the rows come from the same family and every
// parameter named by both rows is equal (one name set contains the other).
bool witness_matches(const CatalogRow& a, const CatalogRow& b) {
    if (!family_compatible(a.source, b.source)) return false;
    std::size_t shared = 0;
    for (const auto& [name, value] : a.params) {
        for (const auto& [bname, bvalue] : b.params) {
            if (name != bname) continue;
            if (value != bvalue) return false;
            ++shared;
        }
    }
    return shared == a.params.size() || shared == b.params.size();
}

bool better_row(const CatalogRow* x, const CatalogRow* y) {
    if (x->set_size != y->set_size) return x->set_size > y->set_size;
    return static_cast<int>(x->source) < static_cast<int>(y->source);
}

}  // namespace

std::vector<ComparisonEntry> compare(const std::vector<CatalogRow>& rows_a,
                                     const std::vector<CatalogRow>& rows_b) {
    std::map<std::tuple<Int, Int, Int>,
             std::pair<std::vector<const CatalogRow*>, std::vector<const CatalogRow*>>>
        keyed;
    for (const auto& row : rows_a) keyed[{row.L1, row.L2, row.q}].first.push_back(&row);
    for (const auto& row : rows_b) keyed[{row.L1, row.L2, row.q}].second.push_back(&row);

    std::vector<ComparisonEntry> entries;
    for (const auto& [key, lists] : keyed) {
        const auto& [a_rows, b_rows] = lists;
        if (a_rows.empty() || b_rows.empty()) continue;

        const CatalogRow* a_best =
            *std::min_element(a_rows.begin(), a_rows.end(), better_row);
        const CatalogRow* b_best =
            *std::min_element(b_rows.begin(), b_rows.end(), better_row);

        ComparisonEntry entry;
        std::tie(entry.L1, entry.L2, entry.q) = key;
        entry.a_best = a_best->set_size;
        entry.a_source = to_string(a_best->source);
        entry.a_witness = a_best->witness();
        entry.b_best = b_best->set_size;
        entry.b_source = to_string(b_best->source);

        const CatalogRow* matched = nullptr;
        for (const CatalogRow* row : b_rows) {
            if (!witness_matches(*a_best, *row)) continue;
            if (!matched || better_row(row, matched)) matched = row;
        }
        if (matched) {
            entry.b_matched = matched->set_size;
            entry.b_matched_source = to_string(matched->source);
        }
        const Int denom = matched ? matched->set_size : b_best->set_size;
        entry.ratio =
            denom > 0 ? static_cast<double>(a_best->set_size) / static_cast<double>(denom) : 0.0;
        entry.a_exceeds_all_b = a_best->set_size > b_best->set_size;
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::string render_catalog_csv(const std::vector<CatalogRow>& rows) {
    std::ostringstream out;
    out << "source,set_size,L1,L2,q,witness\n";
    for (const auto& row : rows)
        out << to_string(row.source) << "," << row.set_size << "," << row.L1 << "," << row.L2
            << "," << row.q << "," << row.witness() << "\n";
    return out.str();
}

std::string render_catalog_text(const std::vector<CatalogRow>& rows) {
    std::ostringstream out;
    auto pad = [&](const std::string& s, std::size_t width) {
        out << s;
        for (std::size_t t = s.size(); t < width; ++t) out << ' ';
    };
    pad("source", 9);
    pad("set_size", 10);
    pad("L1", 6);
    pad("L2", 6);
    pad("q", 6);
    out << "witness\n";
    for (const auto& row : rows) {
        pad(to_string(row.source), 9);
        pad(std::to_string(row.set_size), 10);
        pad(std::to_string(row.L1), 6);
        pad(std::to_string(row.L2), 6);
        pad(std::to_string(row.q), 6);
        out << row.witness() << "\n";
    }
    return out.str();
}

std::string render_comparison(const std::vector<ComparisonEntry>& entries) {
    std::ostringstream out;
    if (entries.empty()) {
        out << "comparison: no common (L1, L2, q) keys\n";
        return out.str();
    }
    for (const auto& entry : entries) {
        out << "key L1=" << entry.L1 << " L2=" << entry.L2 << " q=" << entry.q << ": "
            << entry.a_source << " set size " << entry.a_best << " (" << entry.a_witness << ")";
        if (entry.b_matched) {
            out << " vs " << entry.b_matched_source << " set size " << *entry.b_matched
                << " (same witness)";
        } else {
            out << " vs " << entry.b_source << " set size " << entry.b_best;
        }
        out << "; ratio " << entry.ratio;
        out << "; best prior " << entry.b_best << " (" << entry.b_source << ")";
        if (entry.a_exceeds_all_b) out << " [exceeds all prior rows]";
        out << "\n";
    }
    return out.str();
}

}  // namespace gcas
