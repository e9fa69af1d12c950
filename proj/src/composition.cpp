#include "jackps/composition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "jackps/errors.hpp"

namespace jackps {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw InvalidInputError("composition must have at least one part");
    for (int p : parts_)
        if (p < 0)
            throw InvalidInputError("composition parts must be nonnegative");
}

int Composition::degree() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Composition::is_partition() const
{
    return std::is_sorted(parts_.begin(), parts_.end(), std::greater<int>());
}

std::string Composition::str() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Composition sort_to_partition(const Composition& eta)
{
    std::vector<int> p = eta.parts();
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Composition(std::move(p));
}

namespace {

std::vector<int> partial_sums(const std::vector<int>& v)
{
    std::vector<int> s(v.size());
    std::partial_sum(v.begin(), v.end(), s.begin());
    return s;
}

/// Dominance on same-degree vectors: all partial sums <=, vectors distinct.
bool dominated_by(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a == b)
        return false;
    const auto sa = partial_sums(a);
    const auto sb = partial_sums(b);
    for (std::size_t p = 0; p < sa.size(); ++p)
        if (sa[p] > sb[p])
            return false;
    return true;
}

} // namespace

Precedence precedes(const Composition& nu, const Composition& eta)
{
    if (nu.size() != eta.size())
        throw InvalidInputError("precedes: length mismatch " + nu.str() +
                                " vs " + eta.str());
    if (nu.degree() != eta.degree())
        throw InvalidInputError("precedes: degree mismatch " + nu.str() +
                                " vs " + eta.str());
    const auto nup = sort_to_partition(nu).parts();
    const auto etap = sort_to_partition(eta).parts();
    if (nup == etap) {
        if (dominated_by(nu.parts(), eta.parts()))
            return Precedence::Before;
        if (dominated_by(eta.parts(), nu.parts()))
            return Precedence::After;
        return Precedence::Incomparable;
    }
    if (dominated_by(nup, etap))
        return Precedence::Before;
    if (dominated_by(etap, nup))
        return Precedence::After;
    return Precedence::Incomparable;
}

bool strictly_precedes(const Composition& nu, const Composition& eta)
{
    return precedes(nu, eta) == Precedence::Before;
}

std::vector<Rat> spectral_vector(const Composition& eta, const Rat& alpha)
{
    if (alpha == 0)
        throw InvalidInputError("spectral_vector: alpha must be nonzero");
    const int n = eta.size();
    std::vector<Rat> bar(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int before = 0, after = 0;
        for (int k = 1; k < i; ++k)
            if (eta.part(k) >= eta.part(i))
                ++before;
        for (int k = i + 1; k <= n; ++k)
            if (eta.part(k) > eta.part(i))
                ++after;
        bar[static_cast<std::size_t>(i - 1)] =
            alpha * eta.part(i) - before - after;
    }
    return bar;
}

std::vector<Cell> diagram_cells(const Composition& eta)
{
    std::vector<Cell> cells;
    for (int i = 1; i <= eta.size(); ++i)
        for (int j = 1; j <= eta.part(i); ++j)
            cells.push_back({i, j});
    return cells;
}

std::pair<int, int> arm_leg(const Composition& eta, Cell cell)
{
    const int n = eta.size();
    if (cell.row < 1 || cell.row > n || cell.col < 1 ||
        cell.col > eta.part(cell.row))
        throw InvalidInputError("arm_leg: cell outside the diagram of " +
                                eta.str());
    const int i = cell.row, j = cell.col;
    const int arm = eta.part(i) - j;
    int leg = 0;
    for (int k = 1; k < i; ++k)
        if (j <= eta.part(k) + 1 && eta.part(k) + 1 <= eta.part(i))
            ++leg;
    for (int k = i + 1; k <= n; ++k)
        if (j <= eta.part(k) && eta.part(k) <= eta.part(i))
            ++leg;
    return {arm, leg};
}

std::pair<Rat, Rat> hook_products(const Composition& eta, const Rat& alpha)
{
    if (alpha == 0)
        throw InvalidInputError("hook_products: alpha must be nonzero");
    Rat d = 1, dp = 1;
    for (const Cell& c : diagram_cells(eta)) {
        const auto [a, l] = arm_leg(eta, c);
        d *= alpha * (a + 1) + l + 1;
        dp *= alpha * (a + 1) + l;
    }
    return {d, dp};
}

Rat gen_pochhammer(const Rat& u, const Composition& lambda, const Rat& alpha)
{
    if (alpha == 0)
        throw InvalidInputError("gen_pochhammer: alpha must be nonzero");
    if (!lambda.is_partition())
        throw InvalidInputError("gen_pochhammer: " + lambda.str() +
                                " is not a partition");
    Rat r = 1;
    for (int j = 1; j <= lambda.size(); ++j)
        for (int m = 0; m < lambda.part(j); ++m)
            r *= u - Rat(j - 1) / alpha + m;
    return r;
}

Rat poch_ratio(const Rat& u, const Composition& top, const Composition& bot,
               const Rat& alpha)
{
    if (!top.is_partition() || !bot.is_partition())
        throw InvalidInputError("poch_ratio: arguments must be partitions");
    Rat r = 1;
    const int rows = std::max(top.size(), bot.size());
    for (int j = 1; j <= rows; ++j) {
        const int hi = (j <= top.size()) ? top.part(j) : 0;
        const int lo = (j <= bot.size()) ? bot.part(j) : 0;
        if (lo > hi)
            throw InvalidInputError("poch_ratio: row " + std::to_string(j) +
                                    " of " + bot.str() + " exceeds " +
                                    top.str());
        for (int m = lo; m < hi; ++m)
            r *= u - Rat(j - 1) / alpha + m;
    }
    return r;
}

std::pair<Rat, Rat> e_factors(const Composition& lambda, int nvars,
                              const Rat& alpha)
{
    if (!lambda.is_partition())
        throw InvalidInputError("e_factors: " + lambda.str() +
                                " is not a partition");
    if (lambda.size() > nvars)
        throw InvalidInputError("e_factors: partition longer than N");
    Rat apow = 1;
    for (int i = 0; i < lambda.degree(); ++i)
        apow *= alpha;
    const Rat e = apow * gen_pochhammer(1 + Rat(nvars) / alpha, lambda, alpha);
    const Rat ep = gen_pochhammer(1 + Rat(nvars - 1) / alpha, lambda, alpha);
    return {e, ep};
}

std::vector<Composition> compositions_of_degree(int degree, int nvars)
{
    if (degree < 0 || nvars < 1)
        throw InvalidInputError("compositions_of_degree: bad arguments");
    std::vector<Composition> out;
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == nvars - 1) {
            cur[static_cast<std::size_t>(pos)] = rest;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, rest - v);
        }
    };
    rec(0, degree);
    return out;
}

std::vector<Composition> cone_of(const Composition& eta)
{
    std::vector<Composition> cone;
    for (const auto& nu : compositions_of_degree(eta.degree(), eta.size()))
        if (nu == eta || strictly_precedes(nu, eta))
            cone.push_back(nu);
    return cone;
}

} // namespace jackps
