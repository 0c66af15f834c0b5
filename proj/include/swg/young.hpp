#pragma once

#include <vector>

#include "swg/diagram.hpp"
#include "swg/numeric.hpp"
#include "swg/tableau.hpp"
#include "swg/word.hpp"

namespace swg {

// Number of standard Young tableaux of shape `d`, by three independent
// methods: path counting in the Young graph, the hook length formula, and
// the Frobenius-coordinate formula. They must agree.
Integer dim_paths(const YoungDiagram& d);
Integer dim_hook(const YoungDiagram& d);
Integer dim_frobenius(const YoungDiagram& d);

// Number of paths from `inner` to `outer`, i.e. standard fillings of the skew
// shape outer \ inner.
Integer skew_dim(const YoungDiagram& inner, const YoungDiagram& outer);

std::vector<Tableau> enumerate_syt(const YoungDiagram& d);
std::vector<Tableau> enumerate_ssyt(const YoungDiagram& d, int k);
std::vector<Tableau> enumerate_hook_ssyt(const YoungDiagram& d, int k, int l);

// d_lambda(k): number of semistandard tableaux of shape d with entries <= k,
// by the hook content formula.
Integer count_ssyt(const YoungDiagram& d, int k);

// Thoma parameters (alpha, beta, 0): nonincreasing, nonnegative, total mass 1.
struct ThomaParams {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;

    ThomaParams(std::vector<Rational> a, std::vector<Rational> b);
    static ThomaParams pure(std::vector<Rational> a) { return ThomaParams(std::move(a), {}); }
};

// Combinatorial Schur polynomial: sum over semistandard tableaux of shape d
// of the content monomial in p. Zero if d has more than |p| rows.
Rational schur(const YoungDiagram& d, const std::vector<Rational>& p);

// Same value through the bialternant ratio det(p_i^(lambda_j+k-j)) / delta(p);
// needs pairwise distinct p but is cheap for large shapes.
Rational schur_alternant(const YoungDiagram& d, const std::vector<Rational>& p);

// Hook Schur polynomial: same sum over (k,l)-semistandard tableaux, alpha
// powers for row symbols and beta powers for column symbols. Zero if d does
// not fit the (k,l) hook.
Rational hook_schur(const YoungDiagram& d, const ThomaParams& params);

// Thoma cylinder measure M_(alpha,beta,0)(C_d) = dim d * s~_d(alpha, beta).
Rational thoma_cylinder(const YoungDiagram& d, const ThomaParams& params);

// Exact ratio dim(Lambda^a) / dim(Lambda), where Lambda^a deletes from row i
// as many cells as a has letters i. Zero if the deletion leaves no diagram.
// Lambda must have at most max(k, rows) rows with k = word bound.
Rational dim_ratio(const YoungDiagram& lambda, const Word& a);

// First-order asymptotic form of the same ratio: the Bernoulli mass of a
// times the pairwise difference product over alpha_i = lambda_i - i.
double dim_ratio_asymp(const YoungDiagram& lambda, const Word& a,
                       const std::vector<double>& p_hat);

// dim(mu)/dim(nu) for mu inside nu, exact, without materializing either
// dimension; cost proportional to the rows/columns touched by nu \ mu.
Rational contained_dim_ratio(const YoungDiagram& nu, const YoungDiagram& mu);

// Vandermonde determinant and its permutation convolution.
Rational vandermonde(const std::vector<Rational>& x);
Rational vandermonde_mu(const std::vector<Rational>& x, const YoungDiagram& mu);
Integer perm_count(const YoungDiagram& mu, std::size_t n);  // distinct permutations of mu padded to n

}  // namespace swg
