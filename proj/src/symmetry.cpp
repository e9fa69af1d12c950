#include "jackps/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "jackps/errors.hpp"

namespace jackps {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images))
{
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw InvalidInputError("not a permutation of {1..N}");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p)
        img[static_cast<std::size_t>(p - 1)] = p;
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int j, int k)
{
    Permutation w = identity(n);
    std::swap(w.img_[static_cast<std::size_t>(j - 1)],
              w.img_[static_cast<std::size_t>(k - 1)]);
    return w;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(img_.size());
    for (int p = 1; p <= size(); ++p)
        inv[static_cast<std::size_t>((*this)(p)-1)] = p;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& v) const
{
    if (size() != v.size())
        throw InvalidInputError("compose: size mismatch");
    std::vector<int> img(img_.size());
    for (int p = 1; p <= size(); ++p)
        img[static_cast<std::size_t>(p - 1)] = (*this)(v(p));
    return Permutation(std::move(img));
}

int Permutation::sign() const
{
    std::vector<bool> seen(img_.size(), false);
    int sgn = 1;
    for (int p = 1; p <= size(); ++p) {
        if (seen[static_cast<std::size_t>(p - 1)])
            continue;
        int len = 0, q = p;
        while (!seen[static_cast<std::size_t>(q - 1)]) {
            seen[static_cast<std::size_t>(q - 1)] = true;
            q = (*this)(q);
            ++len;
        }
        if (len % 2 == 0)
            sgn = -sgn;
    }
    return sgn;
}

bool Permutation::is_identity() const
{
    for (int p = 1; p <= size(); ++p)
        if ((*this)(p) != p)
            return false;
    return true;
}

Composition Permutation::apply(const Composition& c) const
{
    return Composition(apply(c.parts()));
}

std::vector<int> Permutation::apply(const std::vector<int>& exps) const
{
    if (static_cast<int>(exps.size()) != size())
        throw InvalidInputError("permutation/vector size mismatch");
    const Permutation inv = inverse();
    std::vector<int> out(exps.size());
    for (int p = 1; p <= size(); ++p)
        out[static_cast<std::size_t>(p - 1)] =
            exps[static_cast<std::size_t>(inv(p) - 1)];
    return out;
}

std::string Permutation::str() const
{
    std::ostringstream os;
    os << '[';
    for (int p = 1; p <= size(); ++p) {
        if (p > 1)
            os << ',';
        os << (*this)(p);
    }
    os << ']';
    return os.str();
}

namespace {

std::vector<Block> runs_to_blocks(const std::set<int>& s, bool antisym)
{
    std::vector<Block> blocks;
    auto it = s.begin();
    while (it != s.end()) {
        int lo = *it, hi = *it;
        ++it;
        while (it != s.end() && *it == hi + 1) {
            hi = *it;
            ++it;
        }
        blocks.push_back({lo, hi + 1, antisym}); // run plus its successor
    }
    return blocks;
}

} // namespace

SymmetrySpec::SymmetrySpec(int nvars, std::set<int> i_set, std::set<int> j_set)
    : n_(nvars), i_(std::move(i_set)), j_(std::move(j_set))
{
    if (n_ < 1)
        throw InvalidInputError("spec: N must be at least 1");
    for (int v : i_)
        if (v < 1 || v > n_ - 1)
            throw InvalidInputError("spec: I not a subset of {1..N-1}");
    for (int v : j_)
        if (v < 1 || v > n_ - 1)
            throw InvalidInputError("spec: J not a subset of {1..N-1}");
    for (int v : i_)
        if (j_.count(v))
            throw InvalidInputError("spec: I and J must be disjoint");
    // coloring rule: no i in I at distance 1 from a j in J
    for (int v : i_)
        if (j_.count(v - 1) || j_.count(v + 1))
            throw InvalidInputError(
                "spec: adjacent indices in I and J (coloring rule)");

    blocks_ = runs_to_blocks(i_, false);
    const auto jb = runs_to_blocks(j_, true);
    blocks_.insert(blocks_.end(), jb.begin(), jb.end());
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& a, const Block& b) { return a.lo < b.lo; });
    for (std::size_t b = 1; b < blocks_.size(); ++b)
        if (blocks_[b].lo <= blocks_[b - 1].hi)
            throw InternalError("spec: extended blocks overlap");
}

std::vector<Block> SymmetrySpec::i_blocks() const
{
    std::vector<Block> out;
    for (const Block& b : blocks_)
        if (!b.antisym)
            out.push_back(b);
    return out;
}

std::vector<Block> SymmetrySpec::j_blocks() const
{
    std::vector<Block> out;
    for (const Block& b : blocks_)
        if (b.antisym)
            out.push_back(b);
    return out;
}

std::vector<std::pair<int, int>> SymmetrySpec::r_j_plus() const
{
    std::vector<std::pair<int, int>> roots;
    for (const Block& b : j_blocks())
        for (int j = b.lo; j <= b.hi; ++j)
            for (int k = j + 1; k <= b.hi; ++k)
                roots.emplace_back(j, k);
    std::sort(roots.begin(), roots.end());
    return roots;
}

BigInt SymmetrySpec::group_order() const
{
    BigInt r = 1;
    for (const Block& b : blocks_)
        r *= factorial(b.size());
    return r;
}

std::string SymmetrySpec::str() const
{
    std::ostringstream os;
    os << "N=" << n_ << " I={";
    bool first = true;
    for (int v : i_) {
        if (!first)
            os << ',';
        os << v;
        first = false;
    }
    os << "} J={";
    first = true;
    for (int v : j_) {
        if (!first)
            os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

Composition delta_of_spec(const SymmetrySpec& spec)
{
    std::vector<int> parts(static_cast<std::size_t>(spec.nvars()), 0);
    for (const Block& b : spec.j_blocks())
        for (int j = b.lo; j <= b.hi; ++j)
            parts[static_cast<std::size_t>(j - 1)] = b.hi - j;
    return Composition(std::move(parts));
}

namespace {

void sort_block_range(std::vector<int>& parts, const Block& b, BlockSort eps)
{
    const auto lo = parts.begin() + (b.lo - 1);
    const auto hi = parts.begin() + b.hi;
    switch (eps) {
    case BlockSort::Keep:
        break;
    case BlockSort::Decreasing:
        std::sort(lo, hi, std::greater<int>());
        break;
    case BlockSort::Increasing:
        std::sort(lo, hi);
        break;
    }
    if (b.antisym && eps != BlockSort::Keep &&
        std::adjacent_find(lo, hi) != hi)
        throw InvalidInputError("repeated part in J-block " +
                                std::to_string(b.lo) + ".." +
                                std::to_string(b.hi));
}

} // namespace

Composition orbit_variant(const Composition& eta, const SymmetrySpec& spec,
                          BlockSort eps_i, BlockSort eps_j)
{
    if (eta.size() != spec.nvars())
        throw InvalidInputError("orbit_variant: length mismatch");
    std::vector<int> parts = eta.parts();
    for (const Block& b : spec.blocks())
        sort_block_range(parts, b, b.antisym ? eps_j : eps_i);
    return Composition(std::move(parts));
}

Composition eta_star(const Composition& eta, const SymmetrySpec& spec)
{
    return orbit_variant(eta, spec, BlockSort::Decreasing,
                         BlockSort::Decreasing);
}

bool is_valid_eta_star(const Composition& eta, const SymmetrySpec& spec)
{
    if (eta.size() != spec.nvars())
        return false;
    for (const Block& b : spec.blocks())
        for (int p = b.lo; p < b.hi; ++p) {
            if (b.antisym ? eta.part(p) <= eta.part(p + 1)
                          : eta.part(p) < eta.part(p + 1))
                return false;
        }
    return true;
}

BigInt stabilizer_order(const Composition& eta, const std::set<int>& i_set,
                        int nvars)
{
    if (eta.size() != nvars)
        throw InvalidInputError("stabilizer_order: length mismatch");
    BigInt order = 1;
    for (const Block& b : runs_to_blocks(i_set, false)) {
        std::map<int, int> mult;
        for (int p = b.lo; p <= b.hi; ++p)
            ++mult[eta.part(p)];
        for (const auto& [value, count] : mult) {
            (void)value;
            order *= factorial(count);
        }
    }
    return order;
}

namespace {

/// All permutations of {1..N} fixing everything outside the given blocks,
/// as N-images; paired with the parity restricted to antisym blocks.
std::vector<SignedPermutation> block_product_group(int nvars,
                                                   const std::vector<Block>& blocks)
{
    std::vector<SignedPermutation> out;
    std::function<void(std::size_t, const Permutation&, int)> rec =
        [&](std::size_t bi, const Permutation& acc, int det_j) {
            if (bi == blocks.size()) {
                out.push_back({acc, det_j});
                return;
            }
            const Block& b = blocks[bi];
            std::vector<int> positions;
            for (int p = b.lo; p <= b.hi; ++p)
                positions.push_back(p);
            std::vector<int> target = positions;
            do {
                std::vector<int> bimg(static_cast<std::size_t>(nvars));
                for (int p = 1; p <= nvars; ++p)
                    bimg[static_cast<std::size_t>(p - 1)] = p;
                for (std::size_t t = 0; t < positions.size(); ++t)
                    bimg[static_cast<std::size_t>(positions[t] - 1)] = target[t];
                const Permutation blockw{bimg};
                rec(bi + 1, blockw.compose(acc),
                    b.antisym ? det_j * blockw.sign() : det_j);
            } while (std::next_permutation(target.begin(), target.end()));
        };
    rec(0, Permutation::identity(nvars), 1);
    return out;
}

} // namespace

std::vector<SignedPermutation> group_elements(const SymmetrySpec& spec)
{
    return block_product_group(spec.nvars(), spec.blocks());
}

std::vector<SignedPermutation> wj_elements(const SymmetrySpec& spec)
{
    return block_product_group(spec.nvars(), spec.j_blocks());
}

std::vector<Composition> orbit_of(const Composition& eta,
                                  const SymmetrySpec& spec)
{
    std::set<Composition> seen;
    for (const auto& [w, det] : group_elements(spec)) {
        (void)det;
        seen.insert(w.apply(eta));
    }
    return {seen.begin(), seen.end()};
}

} // namespace jackps
