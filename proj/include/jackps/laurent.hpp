#ifndef JACKPS_LAURENT_HPP
#define JACKPS_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "jackps/rational.hpp"
#include "jackps/symmetry.hpp"

namespace jackps {

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
/// Terms map exponent vectors (fixed length N, signed entries) to nonzero
/// coefficients; equality is term-map equality.
class LaurentPolynomial {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rat>;

    explicit LaurentPolynomial(int nvars);

    static LaurentPolynomial zero(int nvars) { return LaurentPolynomial(nvars); }
    static LaurentPolynomial constant(int nvars, const Rat& c);
    static LaurentPolynomial monomial(Exponents exps, const Rat& coeff);
    /// The single variable z_p (1-based) in nvars variables.
    static LaurentPolynomial variable(int nvars, int p);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Rat& coefficient(const Exponents& exps) const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial operator-() const;
    friend LaurentPolynomial operator+(LaurentPolynomial a,
                                       const LaurentPolynomial& b)
    {
        return a += b;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a,
                                       const LaurentPolynomial& b)
    {
        return a -= b;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                       const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const Rat& c, LaurentPolynomial p);

    bool operator==(const LaurentPolynomial&) const = default;

    /// Adds coeff * z^exps in place.
    void add_term(const Exponents& exps, const Rat& coeff);

    /// (w f)(z): exponent vectors permuted so s_{jk} swaps z_j and z_k.
    LaurentPolynomial permuted(const Permutation& w) const;

    /// f(1/z): every exponent vector negated.
    LaurentPolynomial inverted_variables() const;

    /// f(1,...,1): the coefficient sum.
    Rat eval_ones() const;

    /// Coefficient of the zero exponent vector.
    Rat constant_term() const;

    /// Term-wise z_p d/dz_p (valid for negative exponents).
    LaurentPolynomial z_dz(int p) const;

    int total_degree_max() const; // max over terms of summed exponents; 0 if empty

    std::string str(const std::string& varname = "z") const;

private:
    int nvars_;
    TermMap terms_;
};

/// The Vandermonde product prod_{p<q in X} (z_p - z_q) over the 1-based
/// positions X; empty and singleton X give 1.
LaurentPolynomial vandermonde(const std::vector<int>& positions, int nvars);

/// Exact quotient q with q * g = f.  For a single-term divisor each term of
/// f must be divisible coordinatewise (z1 is not considered divisible by
/// z2 even though they are associates in the Laurent ring); otherwise
/// division proceeds by graded-lex leading-term reduction and throws
/// NotDivisibleError when no exact quotient exists.
LaurentPolynomial exact_divide(const LaurentPolynomial& f,
                               const LaurentPolynomial& g);

LaurentPolynomial pow(const LaurentPolynomial& f, int k);

/// JSON-able record list: [{"exponents":[...],"num":"...","den":"..."},...]
/// in graded-lex descending term order.
std::string polynomial_to_json(const LaurentPolynomial& f);
LaurentPolynomial polynomial_from_json(const std::string& json_text);

} // namespace jackps

#endif
