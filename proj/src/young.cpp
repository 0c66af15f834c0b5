#include "swg/young.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace swg {

namespace {

Integer dim_paths_rec(const YoungDiagram& d, std::map<std::vector<long long>, Integer>& memo) {
    if (d.empty()) return 1;
    auto it = memo.find(d.rows());
    if (it != memo.end()) return it->second;
    Integer total = 0;
    for (CellPosition c : d.corners()) total += dim_paths_rec(d.with_cell_removed(c), memo);
    memo.emplace(d.rows(), total);
    return total;
}

long long hook_length(const YoungDiagram& d, const YoungDiagram& conj, int i, int j) {
    return d.rows()[i - 1] - j + conj.rows()[j - 1] - i + 1;
}

}  // namespace

Integer dim_paths(const YoungDiagram& d) {
    std::map<std::vector<long long>, Integer> memo;
    return dim_paths_rec(d, memo);
}

Integer dim_hook(const YoungDiagram& d) {
    if (d.empty()) return 1;
    YoungDiagram conj = d.conjugate();
    Integer denom = 1;
    for (std::size_t i = 1; i <= d.row_count(); ++i)
        for (long long j = 1; j <= d.rows()[i - 1]; ++j)
            denom *= to_integer(hook_length(d, conj, static_cast<int>(i), static_cast<int>(j)));
    Integer num = factorial(static_cast<unsigned long>(d.size()));
    Rational r(num, denom);
    r.canonicalize();
    if (r.get_den() != 1) throw std::logic_error("hook formula did not divide evenly");
    return r.get_num();
}

Integer dim_frobenius(const YoungDiagram& d) {
    if (d.empty()) return 1;
    FrobeniusCoords f = frobenius(d);
    const std::size_t r = f.arms.size();
    Rational result(factorial(static_cast<unsigned long>(d.size())));
    for (std::size_t i = 0; i < r; ++i) {
        result /= Rational(factorial(static_cast<unsigned long>(f.arms[i])));
        result /= Rational(factorial(static_cast<unsigned long>(f.legs[i])));
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            result *= Rational(to_integer(f.arms[i] - f.arms[j]));
            result *= Rational(to_integer(f.legs[i] - f.legs[j]));
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            result /= Rational(to_integer(f.arms[i] + f.legs[j] + 1));
    result.canonicalize();
    if (result.get_den() != 1) throw std::logic_error("Frobenius formula did not divide evenly");
    return result.get_num();
}

namespace {

Integer skew_dim_rec(const YoungDiagram& inner, const YoungDiagram& outer,
                     std::map<std::vector<long long>, Integer>& memo) {
    if (outer == inner) return 1;
    auto it = memo.find(outer.rows());
    if (it != memo.end()) return it->second;
    Integer total = 0;
    for (CellPosition c : outer.corners()) {
        YoungDiagram next = outer.with_cell_removed(c);
        if (next.contains(inner)) total += skew_dim_rec(inner, next, memo);
    }
    memo.emplace(outer.rows(), total);
    return total;
}

}  // namespace

Integer skew_dim(const YoungDiagram& inner, const YoungDiagram& outer) {
    if (!outer.contains(inner))
        throw std::invalid_argument("skew_dim: inner diagram not contained in outer");
    std::map<std::vector<long long>, Integer> memo;
    return skew_dim_rec(inner, outer, memo);
}

namespace {

void enumerate_syt_rec(const YoungDiagram& d, std::vector<std::vector<Symbol>>& acc,
                       std::vector<Tableau>& out) {
    if (d.empty()) {
        out.emplace_back(acc);
        return;
    }
    const int n = static_cast<int>(d.size());
    for (CellPosition c : d.corners()) {
        acc[c.row - 1][c.col - 1] = Symbol::row(n);
        enumerate_syt_rec(d.with_cell_removed(c), acc, out);
    }
}

}  // namespace

std::vector<Tableau> enumerate_syt(const YoungDiagram& d) {
    std::vector<std::vector<Symbol>> acc;
    for (long long len : d.rows()) acc.emplace_back(static_cast<std::size_t>(len), Symbol());
    std::vector<Tableau> out;
    enumerate_syt_rec(d, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Row-major backtracking over fillings; `candidates` lists the alphabet in
// ascending order so the output is lexicographically sorted.
void enumerate_fillings_rec(const YoungDiagram& d, const std::vector<Symbol>& candidates,
                            bool hook, std::size_t cell_index,
                            std::vector<std::vector<Symbol>>& acc, std::vector<Tableau>& out) {
    std::size_t r = 0, offset = cell_index;
    while (r < d.row_count() && offset >= static_cast<std::size_t>(d.rows()[r])) {
        offset -= static_cast<std::size_t>(d.rows()[r]);
        ++r;
    }
    if (r == d.row_count()) {
        out.emplace_back(acc);
        return;
    }
    const std::size_t c = offset;
    for (Symbol s : candidates) {
        if (c > 0) {
            Symbol left = acc[r][c - 1];
            if (s < left) continue;
            if (hook && s == left && s.starred()) continue;
        }
        if (r > 0) {
            Symbol above = acc[r - 1][c];
            if (s < above) continue;
            if (s == above && (hook ? !s.starred() : true)) continue;
        }
        acc[r][c] = s;
        enumerate_fillings_rec(d, candidates, hook, cell_index + 1, acc, out);
    }
}

std::vector<Tableau> enumerate_fillings(const YoungDiagram& d, int k, int l, bool hook) {
    std::vector<Symbol> candidates;
    for (int v = 1; v <= k; ++v) candidates.push_back(Symbol::row(v));
    for (int v = l; v >= 1; --v) candidates.push_back(Symbol::column(v));
    std::vector<std::vector<Symbol>> acc;
    for (long long len : d.rows()) acc.emplace_back(static_cast<std::size_t>(len), Symbol());
    std::vector<Tableau> out;
    enumerate_fillings_rec(d, candidates, hook, 0, acc, out);
    return out;
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const YoungDiagram& d, int k) {
    return enumerate_fillings(d, k, 0, false);
}

std::vector<Tableau> enumerate_hook_ssyt(const YoungDiagram& d, int k, int l) {
    if (d.row(k + 1) > l) return {};  // outside the (k,l) hook
    return enumerate_fillings(d, k, l, true);
}

Integer count_ssyt(const YoungDiagram& d, int k) {
    if (static_cast<int>(d.row_count()) > k) return 0;
    if (d.empty()) return 1;
    YoungDiagram conj = d.conjugate();
    Integer num = 1, denom = 1;
    for (std::size_t i = 1; i <= d.row_count(); ++i)
        for (long long j = 1; j <= d.rows()[i - 1]; ++j) {
            num *= to_integer(k + j - static_cast<long long>(i));
            denom *= to_integer(hook_length(d, conj, static_cast<int>(i), static_cast<int>(j)));
        }
    Rational r(num, denom);
    r.canonicalize();
    if (r.get_den() != 1) throw std::logic_error("hook content formula did not divide evenly");
    return r.get_num();
}

ThomaParams::ThomaParams(std::vector<Rational> a, std::vector<Rational> b)
    : alpha(std::move(a)), beta(std::move(b)) {
    Rational total = 0;
    for (const auto* list : {&alpha, &beta}) {
        for (std::size_t i = 0; i < list->size(); ++i) {
            if ((*list)[i] < 0) throw std::invalid_argument("Thoma parameters must be nonnegative");
            if (i > 0 && (*list)[i] > (*list)[i - 1])
                throw std::invalid_argument("Thoma parameters must be nonincreasing");
            total += (*list)[i];
        }
    }
    if (total != 1) throw std::invalid_argument("Thoma parameters must sum to 1");
}

namespace {

// Content-count lists memoized per (shape, k, l); counts are indexed
// 0..k-1 for row symbols and k..k+l-1 for column symbols.
const std::vector<std::vector<int>>& content_counts(const YoungDiagram& d, int k, int l) {
    static std::mutex mutex;
    static std::map<std::tuple<std::vector<long long>, int, int>, std::vector<std::vector<int>>>
        cache;
    std::scoped_lock lock(mutex);
    auto key = std::make_tuple(d.rows(), k, l);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> counts;
    auto tableaux = l == 0 ? enumerate_ssyt(d, k) : enumerate_hook_ssyt(d, k, l);
    for (const Tableau& t : tableaux) {
        std::vector<int> c(static_cast<std::size_t>(k + l), 0);
        for (const auto& row : t.row_data())
            for (Symbol s : row) ++c[s.starred() ? k + s.value() - 1 : s.value() - 1];
        counts.push_back(std::move(c));
    }
    return cache.emplace(std::move(key), std::move(counts)).first->second;
}

Rational pow_rational(const Rational& base, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

Rational schur(const YoungDiagram& d, const std::vector<Rational>& p) {
    const int k = static_cast<int>(p.size());
    if (static_cast<int>(d.row_count()) > k) return 0;
    Rational total = 0;
    for (const auto& counts : content_counts(d, k, 0)) {
        Rational term = 1;
        for (int i = 0; i < k; ++i) term *= pow_rational(p[i], counts[i]);
        total += term;
    }
    return total;
}

namespace {

Rational det_minor(const std::vector<std::vector<Rational>>& m, std::size_t row,
                   unsigned used_cols) {
    const std::size_t k = m.size();
    if (row == k) return 1;
    Rational total = 0;
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
        if (used_cols >> c & 1) continue;
        total += Rational(sign) * m[row][c] * det_minor(m, row + 1, used_cols | (1u << c));
        sign = -sign;
    }
    return total;
}

}  // namespace

Rational schur_alternant(const YoungDiagram& d, const std::vector<Rational>& p) {
    const std::size_t k = p.size();
    if (d.row_count() > k) return 0;
    if (k == 0) return d.empty() ? 1 : 0;
    if (k > 8) throw std::length_error("alternant evaluation limited to k <= 8");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (p[i] == p[j])
                throw std::invalid_argument("alternant evaluation needs distinct values");

    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            long long e = d.row(static_cast<int>(j + 1)) + static_cast<long long>(k - 1 - j);
            Rational pw = 1;
            for (long long t = 0; t < e; ++t) pw *= p[i];
            m[i][j] = std::move(pw);
        }
    return det_minor(m, 0, 0) / vandermonde(p);
}

Rational hook_schur(const YoungDiagram& d, const ThomaParams& params) {
    const int k = static_cast<int>(params.alpha.size());
    const int l = static_cast<int>(params.beta.size());
    if (l == 0) return schur(d, params.alpha);
    if (d.row(k + 1) > l) return 0;
    Rational total = 0;
    for (const auto& counts : content_counts(d, k, l)) {
        Rational term = 1;
        for (int i = 0; i < k; ++i) term *= pow_rational(params.alpha[i], counts[i]);
        for (int j = 0; j < l; ++j) term *= pow_rational(params.beta[j], counts[k + j]);
        total += term;
    }
    return total;
}

Rational thoma_cylinder(const YoungDiagram& d, const ThomaParams& params) {
    return Rational(dim_hook(d)) * hook_schur(d, params);
}

namespace {

// Multiplicity vector of a pure word, 1-indexed values.
std::vector<long long> multiplicities(const Word& a, std::size_t size) {
    std::vector<long long> m(size, 0);
    for (Symbol s : a.symbols()) {
        if (s.starred()) throw std::invalid_argument("dim_ratio expects a pure word");
        if (static_cast<std::size_t>(s.value()) > m.size()) m.resize(s.value(), 0);
        ++m[s.value() - 1];
    }
    return m;
}

bool deletion_valid(const YoungDiagram& lambda, const std::vector<long long>& m) {
    long long prev = -1;
    for (std::size_t i = m.size(); i >= 1; --i) {
        long long after = lambda.row(static_cast<int>(i)) - m[i - 1];
        if (after < 0 || (prev >= 0 && after < prev)) return false;
        prev = after;
    }
    // rows below the deletion range must not exceed the last modified row
    if (!m.empty() && lambda.row(static_cast<int>(m.size()) + 1) >
                          lambda.row(static_cast<int>(m.size())) - m.back())
        return false;
    return true;
}

}  // namespace

Rational dim_ratio(const YoungDiagram& lambda, const Word& a) {
    const std::size_t rows = lambda.row_count();
    std::vector<long long> m = multiplicities(a, rows);
    if (m.size() > rows && *std::max_element(m.begin() + rows, m.end()) > 0)
        return 0;  // deletion from a nonexistent row
    m.resize(std::max(m.size(), rows), 0);
    if (!deletion_valid(lambda, m)) return 0;

    const std::size_t K = m.size();
    std::vector<long long> ell(K), ell_after(K);
    for (std::size_t i = 0; i < K; ++i) {
        ell[i] = lambda.row(static_cast<int>(i + 1)) + static_cast<long long>(K - i - 1);
        ell_after[i] = ell[i] - m[i];
    }
    Rational ratio = 1;
    for (std::size_t i = 0; i < K; ++i)
        ratio *= Rational(falling_factorial(ell[i], static_cast<unsigned long>(m[i])));
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = i + 1; j < K; ++j)
            {
                Rational factor(to_integer(ell_after[i] - ell_after[j]),
                                to_integer(ell[i] - ell[j]));
                factor.canonicalize();
                ratio *= factor;
            }
    long long total_m = 0;
    for (long long v : m) total_m += v;
    ratio /= Rational(falling_factorial(lambda.size(), static_cast<unsigned long>(total_m)));
    ratio.canonicalize();
    return ratio;
}

double dim_ratio_asymp(const YoungDiagram& lambda, const Word& a,
                       const std::vector<double>& p_hat) {
    const std::size_t k = p_hat.size();
    std::vector<long long> m = multiplicities(a, k);
    if (m.size() > k) return 0;
    m.resize(k, 0);
    if (!deletion_valid(lambda, m)) return 0;

    double result = 1;
    for (std::size_t i = 0; i < k; ++i)
        for (long long t = 0; t < m[i]; ++t) result *= p_hat[i];
    // alpha_i = lambda_i - i with rows padded by zeros (Durfee rank < k).
    std::vector<double> alpha(k);
    for (std::size_t i = 0; i < k; ++i)
        alpha[i] = static_cast<double>(lambda.row(static_cast<int>(i + 1))) -
                   static_cast<double>(i + 1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            result *= (alpha[i] - alpha[j] - static_cast<double>(m[i] - m[j])) /
                      (alpha[i] - alpha[j]);
    return result;
}

namespace {

// Folds small positive factors into an Integer, batching in 64-bit chunks.
class ProductAccumulator {
public:
    void mul(long long factor) {
        if (factor <= 0) throw std::logic_error("nonpositive hook length");
        auto f = static_cast<unsigned long long>(factor);
        if (chunk_ > std::numeric_limits<unsigned long long>::max() / f) flush();
        chunk_ *= f;
    }
    Integer value() {
        flush();
        return total_;
    }

private:
    void flush() {
        total_ *= Integer(static_cast<unsigned long>(chunk_));
        chunk_ = 1;
    }
    Integer total_ = 1;
    unsigned long long chunk_ = 1;
};

}  // namespace

Rational contained_dim_ratio(const YoungDiagram& nu, const YoungDiagram& mu) {
    if (!nu.contains(mu)) throw std::invalid_argument("mu not contained in nu");
    YoungDiagram nu_conj = nu.conjugate();
    YoungDiagram mu_conj = mu.conjugate();

    std::vector<std::size_t> changed_rows, changed_cols;
    for (std::size_t i = 1; i <= nu.row_count(); ++i)
        if (nu.row(static_cast<int>(i)) != mu.row(static_cast<int>(i))) changed_rows.push_back(i);
    for (std::size_t j = 1; j <= static_cast<std::size_t>(nu.row(1)); ++j)
        if (nu.col(static_cast<int>(j)) != mu.col(static_cast<int>(j))) changed_cols.push_back(j);

    auto affected_product = [&](const YoungDiagram& d, const YoungDiagram& conj) {
        ProductAccumulator acc;
        std::vector<bool> row_changed(d.row_count() + 1, false);
        for (std::size_t r : changed_rows)
            if (r <= d.row_count()) row_changed[r] = true;
        for (std::size_t i = 1; i <= d.row_count(); ++i) {
            long long len = d.rows()[i - 1];
            if (row_changed[i]) {
                for (long long j = 1; j <= len; ++j)
                    acc.mul(hook_length(d, conj, static_cast<int>(i), static_cast<int>(j)));
            } else {
                for (std::size_t j : changed_cols)
                    if (static_cast<long long>(j) <= len)
                        acc.mul(hook_length(d, conj, static_cast<int>(i), static_cast<int>(j)));
            }
        }
        return acc.value();
    };

    Integer h_nu = affected_product(nu, nu_conj);
    Integer h_mu = affected_product(mu, mu_conj);
    Rational ratio(h_nu, h_mu);
    ratio /= Rational(
        falling_factorial(nu.size(), static_cast<unsigned long>(nu.size() - mu.size())));
    ratio.canonicalize();
    return ratio;
}

Rational vandermonde(const std::vector<Rational>& x) {
    Rational result = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) result *= x[i] - x[j];
    return result;
}

Rational vandermonde_mu(const std::vector<Rational>& x, const YoungDiagram& mu) {
    const std::size_t n = x.size();
    if (mu.row_count() > n)
        throw std::invalid_argument("mu has more rows than there are variables");
    std::vector<long long> parts(mu.rows());
    parts.resize(n, 0);
    std::sort(parts.begin(), parts.end());
    Rational total = 0;
    std::vector<Rational> shifted(n);
    do {
        for (std::size_t i = 0; i < n; ++i) shifted[i] = x[i] - Rational(to_integer(parts[i]));
        total += vandermonde(shifted);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return total;
}

Integer perm_count(const YoungDiagram& mu, std::size_t n) {
    if (mu.row_count() > n)
        throw std::invalid_argument("mu has more rows than available slots");
    std::map<long long, unsigned long> mult;
    for (long long v : mu.rows()) ++mult[v];
    mult[0] += static_cast<unsigned long>(n - mu.row_count());
    Integer denom = 1;
    for (const auto& [value, count] : mult) denom *= factorial(count);
    Rational r(factorial(static_cast<unsigned long>(n)), denom);
    r.canonicalize();
    return r.get_num();
}

}  // namespace swg
