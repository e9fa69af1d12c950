#include "jackps/laurent.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "jackps/errors.hpp"

namespace jackps {

namespace {

constexpr int kExponentLimit = 1 << 24;

void check_exponent(long long e)
{
    if (e > kExponentLimit || e < -kExponentLimit)
        throw Error("exponent overflow in Laurent arithmetic");
}

int degree_of(const LaurentPolynomial::Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded-lex: higher total degree wins, ties broken lexicographically.
bool glex_less(const LaurentPolynomial::Exponents& a,
               const LaurentPolynomial::Exponents& b)
{
    const int da = degree_of(a), db = degree_of(b);
    if (da != db)
        return da < db;
    return a < b;
}

} // namespace

LaurentPolynomial::LaurentPolynomial(int nvars) : nvars_(nvars)
{
    if (nvars < 1)
        throw InvalidInputError("polynomial needs at least one variable");
}

LaurentPolynomial LaurentPolynomial::constant(int nvars, const Rat& c)
{
    LaurentPolynomial p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Exponents exps, const Rat& coeff)
{
    LaurentPolynomial p(static_cast<int>(exps.size()));
    p.add_term(exps, coeff);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(int nvars, int p)
{
    if (p < 1 || p > nvars)
        throw InvalidInputError("variable index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(p - 1)] = 1;
    return monomial(std::move(e), 1);
}

const Rat& LaurentPolynomial::coefficient(const Exponents& exps) const
{
    static const Rat zero = 0;
    const auto it = terms_.find(exps);
    return it == terms_.end() ? zero : it->second;
}

void LaurentPolynomial::add_term(const Exponents& exps, const Rat& coeff)
{
    if (static_cast<int>(exps.size()) != nvars_)
        throw InvalidInputError("term has wrong variable count");
    if (coeff == 0)
        return;
    const auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs)
{
    if (nvars_ != rhs.nvars_)
        throw InvalidInputError("variable-count mismatch in +");
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs)
{
    if (nvars_ != rhs.nvars_)
        throw InvalidInputError("variable-count mismatch in -");
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const
{
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b)
{
    if (a.nvars_ != b.nvars_)
        throw InvalidInputError("variable-count mismatch in *");
    LaurentPolynomial r(a.nvars_);
    LaurentPolynomial::Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) {
                const long long s =
                    static_cast<long long>(ea[v]) + static_cast<long long>(eb[v]);
                check_exponent(s);
                e[v] = static_cast<int>(s);
            }
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPolynomial operator*(const Rat& c, LaurentPolynomial p)
{
    if (c == 0)
        return LaurentPolynomial::zero(p.nvars_);
    for (auto& [e, coeff] : p.terms_) {
        (void)e;
        coeff *= c;
    }
    return p;
}

LaurentPolynomial LaurentPolynomial::permuted(const Permutation& w) const
{
    if (w.size() != nvars_)
        throw InvalidInputError("permutation size mismatch");
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(w.apply(e), c);
    return r;
}

LaurentPolynomial LaurentPolynomial::inverted_variables() const
{
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents neg(e.size());
        for (std::size_t v = 0; v < e.size(); ++v)
            neg[v] = -e[v];
        r.terms_.emplace(std::move(neg), c);
    }
    return r;
}

Rat LaurentPolynomial::eval_ones() const
{
    Rat s = 0;
    for (const auto& [e, c] : terms_) {
        (void)e;
        s += c;
    }
    return s;
}

Rat LaurentPolynomial::constant_term() const
{
    return coefficient(Exponents(static_cast<std::size_t>(nvars_), 0));
}

LaurentPolynomial LaurentPolynomial::z_dz(int p) const
{
    if (p < 1 || p > nvars_)
        throw InvalidInputError("z_dz: variable index out of range");
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(p - 1)];
        if (k != 0)
            r.terms_.emplace(e, c * k);
    }
    return r;
}

int LaurentPolynomial::total_degree_max() const
{
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        const int de = degree_of(e);
        d = first ? de : std::max(d, de);
        first = false;
    }
    return d;
}

std::string LaurentPolynomial::str(const std::string& varname) const
{
    if (terms_.empty())
        return "0";
    // graded-lex descending for display
    std::vector<const TermMap::value_type*> ordered;
    for (const auto& t : terms_)
        ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* a, const auto* b) {
                  return glex_less(b->first, a->first);
              });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : ordered) {
        const auto& [e, c] = *t;
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;

        std::string vars;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0)
                continue;
            if (!vars.empty())
                vars += ' ';
            vars += varname + std::to_string(v + 1);
            if (e[v] != 1)
                vars += '^' + std::to_string(e[v]);
        }
        if (vars.empty()) {
            os << rational_str(mag);
        } else {
            if (mag != 1) {
                if (denominator(mag) == 1)
                    os << rational_str(mag) << ' ';
                else
                    os << '(' << rational_str(mag) << ") ";
            }
            os << vars;
        }
    }
    return os.str();
}

LaurentPolynomial vandermonde(const std::vector<int>& positions, int nvars)
{
    LaurentPolynomial r = LaurentPolynomial::constant(nvars, 1);
    for (std::size_t a = 0; a < positions.size(); ++a)
        for (std::size_t b = a + 1; b < positions.size(); ++b) {
            const int p = std::min(positions[a], positions[b]);
            const int q = std::max(positions[a], positions[b]);
            r = r * (LaurentPolynomial::variable(nvars, p) -
                     LaurentPolynomial::variable(nvars, q));
        }
    return r;
}

LaurentPolynomial exact_divide(const LaurentPolynomial& f,
                               const LaurentPolynomial& g)
{
    if (f.nvars() != g.nvars())
        throw InvalidInputError("exact_divide: variable-count mismatch");
    if (g.is_zero())
        throw InvalidInputError("exact_divide: division by zero");
    const int n = f.nvars();
    if (f.is_zero())
        return LaurentPolynomial::zero(n);

    if (g.term_count() == 1) {
        const auto& [ge, gc] = *g.terms().begin();
        LaurentPolynomial q(n);
        for (const auto& [e, c] : f.terms()) {
            LaurentPolynomial::Exponents d(e.size());
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] < ge[v])
                    throw NotDivisibleError(
                        "exact_divide: term not divisible by monomial");
                d[v] = e[v] - ge[v];
            }
            q.add_term(d, c / gc);
        }
        return q;
    }

    // Coordinatewise support box every quotient exponent must lie in.
    std::vector<int> qlo(static_cast<std::size_t>(n),
                         std::numeric_limits<int>::max());
    std::vector<int> qhi(static_cast<std::size_t>(n),
                         std::numeric_limits<int>::min());
    {
        std::vector<int> flo(qlo), fhi(qhi), glo(qlo), ghi(qhi);
        for (const auto& [e, c] : f.terms()) {
            (void)c;
            for (std::size_t v = 0; v < e.size(); ++v) {
                flo[v] = std::min(flo[v], e[v]);
                fhi[v] = std::max(fhi[v], e[v]);
            }
        }
        for (const auto& [e, c] : g.terms()) {
            (void)c;
            for (std::size_t v = 0; v < e.size(); ++v) {
                glo[v] = std::min(glo[v], e[v]);
                ghi[v] = std::max(ghi[v], e[v]);
            }
        }
        for (std::size_t v = 0; v < qlo.size(); ++v) {
            qlo[v] = flo[v] - ghi[v];
            qhi[v] = fhi[v] - glo[v];
        }
    }

    const auto glead = std::max_element(
        g.terms().begin(), g.terms().end(),
        [](const auto& a, const auto& b) { return glex_less(a.first, b.first); });

    LaurentPolynomial q(n);
    LaurentPolynomial r = f;
    while (!r.is_zero()) {
        const auto rlead = std::max_element(
            r.terms().begin(), r.terms().end(), [](const auto& a, const auto& b) {
                return glex_less(a.first, b.first);
            });
        LaurentPolynomial::Exponents t(static_cast<std::size_t>(n));
        for (std::size_t v = 0; v < t.size(); ++v) {
            t[v] = rlead->first[v] - glead->first[v];
            if (t[v] < qlo[v] || t[v] > qhi[v])
                throw NotDivisibleError("exact_divide: nonzero remainder");
        }
        const LaurentPolynomial tm =
            LaurentPolynomial::monomial(t, rlead->second / glead->second);
        q += tm;
        r -= tm * g;
    }
    return q;
}

LaurentPolynomial pow(const LaurentPolynomial& f, int k)
{
    if (k < 0)
        throw InvalidInputError("pow: negative exponent");
    LaurentPolynomial r = LaurentPolynomial::constant(f.nvars(), 1);
    for (int i = 0; i < k; ++i)
        r = r * f;
    return r;
}

std::string polynomial_to_json(const LaurentPolynomial& f)
{
    std::vector<const LaurentPolynomial::TermMap::value_type*> ordered;
    for (const auto& t : f.terms())
        ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* a, const auto* b) {
                  return glex_less(b->first, a->first);
              });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto* t : ordered) {
        nlohmann::json rec;
        rec["exponents"] = t->first;
        rec["num"] = numerator(t->second).str();
        rec["den"] = denominator(t->second).str();
        arr.push_back(std::move(rec));
    }
    return arr.dump();
}

LaurentPolynomial polynomial_from_json(const std::string& json_text)
{
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("bad polynomial JSON: ") + e.what());
    }
    if (!arr.is_array() || arr.empty())
        throw InvalidInputError("polynomial JSON must be a nonempty array");
    int nvars = -1;
    LaurentPolynomial p(1);
    for (const auto& rec : arr) {
        if (!rec.contains("exponents") || !rec.contains("num") ||
            !rec.contains("den"))
            throw InvalidInputError("polynomial JSON record missing fields");
        const auto exps = rec["exponents"].get<std::vector<int>>();
        if (nvars == -1) {
            nvars = static_cast<int>(exps.size());
            p = LaurentPolynomial(nvars);
        }
        const BigInt num(rec["num"].get<std::string>());
        const BigInt den(rec["den"].get<std::string>());
        if (den == 0)
            throw InvalidInputError("polynomial JSON: zero denominator");
        p.add_term(exps, Rat(num, den));
    }
    return p;
}

} // namespace jackps
