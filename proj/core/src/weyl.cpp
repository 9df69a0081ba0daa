#include "frobscan/weyl.hpp"

#include "frobscan/error.hpp"

#include <algorithm>
#include <map>

namespace frobscan {

namespace {

IntMatrix simple_reflection_matrix(const RootSystem& rs, std::size_t i) {
    // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i; alpha_i has fund coords C(., i).
    const std::size_t n = rs.rank();
    IntMatrix s(n, n);
    for (std::size_t r = 0; r < n; ++r) s(r, r) = 1;
    for (std::size_t r = 0; r < n; ++r) s(r, i) -= rs.cartan()(r, i);
    return s;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.rows();
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::int64_t aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

// w(rho) determines w uniquely since rho is regular.
std::vector<std::int64_t> rho_image(const IntMatrix& m) {
    std::vector<std::int64_t> v(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i] += m(i, j);
    return v;
}

std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

std::uint64_t WeylGroup::expected_order(const RootSystemSpec& spec) {
    validate(spec);
    const auto n = static_cast<std::uint64_t>(spec.rank);
    switch (spec.family) {
        case Family::A: return factorial(n + 1);
        case Family::B:
        case Family::C: return (std::uint64_t{1} << n) * factorial(n);
        case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
        case Family::G: return 12;
        case Family::F: return 1152;
    }
    return 0;
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::size_t cap) {
    const std::uint64_t order = expected_order(rs.spec());
    if (order > cap)
        throw Error(ErrorCode::GroupTooLarge,
                    "|W(" + rs.name() + ")| = " + std::to_string(order) + " exceeds cap " + std::to_string(cap));

    const std::size_t n = rs.rank();
    std::vector<IntMatrix> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(simple_reflection_matrix(rs, i));

    WeylGroup g;
    g.rank_ = n;
    IntMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
    g.elements_.push_back(WeylElement{0, id, 0, 1});

    std::map<std::vector<std::int64_t>, std::size_t> seen;
    seen.emplace(rho_image(id), 0);
    for (std::size_t w = 0; w < g.elements_.size(); ++w) {
        for (std::size_t i = 0; i < n; ++i) {
            IntMatrix m = frobscan::multiply(gens[i], g.elements_[w].matrix);
            auto [it, inserted] = seen.emplace(rho_image(m), g.elements_.size());
            if (inserted) {
                if (g.elements_.size() >= cap)
                    throw Error(ErrorCode::GroupTooLarge, "Weyl group enumeration exceeded cap");
                const int len = g.elements_[w].length + 1;
                g.elements_.push_back(WeylElement{g.elements_.size(), std::move(m), len, (len % 2) ? -1 : 1});
            }
            g.table_.push_back(it->second);
        }
    }
    return g;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
    const auto word = reduced_word(a);
    std::size_t x = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_multiply(*it, x);
    return x;
}

std::size_t WeylGroup::inverse(std::size_t w) const {
    std::size_t x = 0;
    for (std::size_t i : reduced_word(w)) x = left_multiply(i, x);
    return x;
}

std::vector<std::size_t> WeylGroup::reduced_word(std::size_t w) const {
    std::vector<std::size_t> word;
    while (elements_.at(w).length > 0) {
        std::size_t i = 0;
        while (elements_[left_multiply(i, w)].length >= elements_[w].length) ++i;
        word.push_back(i);
        w = left_multiply(i, w);
    }
    return word;
}

std::size_t WeylGroup::find(const IntMatrix& matrix) const {
    for (const auto& e : elements_)
        if (e.matrix == matrix) return e.index;
    return size();
}

Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
    std::vector<std::int64_t> out(rs.rank(), 0);
    for (std::size_t i = 0; i < rs.rank(); ++i)
        for (std::size_t j = 0; j < rs.rank(); ++j)
            out[i] = detail::checked_add(out[i], detail::checked_mul(w.matrix(i, j), lambda.fund(j)));
    return rs.weight_from_fund(out);
}

void dot_action_fund(const RootSystem& rs, const WeylElement& w, std::span<const std::int64_t> lambda,
                     std::span<std::int64_t> out) {
    const std::size_t n = rs.rank();
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < n; ++j)
            s = detail::checked_add(s, detail::checked_mul(w.matrix(i, j), detail::checked_add(lambda[j], 1)));
        out[i] = s - 1;
    }
}

Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
    std::vector<std::int64_t> out(rs.rank());
    dot_action_fund(rs, w, lambda.fund(), out);
    return rs.weight_from_fund(out);
}

std::vector<std::size_t> minus_w_dot_zero_roots(const RootSystem& rs, const WeylGroup& group, std::size_t w) {
    const auto word = group.reduced_word(w);
    std::vector<std::size_t> roots;
    for (std::size_t j = 0; j < word.size(); ++j) {
        Weight beta = rs.simple_roots()[word[j]];
        for (std::size_t k = j; k-- > 0;) beta = rs.reflect(beta, word[k]);
        const auto coords = beta.root_integers();
        const std::size_t idx = rs.find_positive_root(coords);
        if (idx == RootSystem::npos)
            throw Error(ErrorCode::InvalidArgument, "word is not reduced: produced a non-positive root");
        roots.push_back(idx);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<std::size_t> stabilizer(const RootSystem& rs, const WeylGroup& group, const Weight& lambda) {
    std::vector<std::size_t> out;
    for (const auto& e : group.elements())
        if (apply(rs, e, lambda) == lambda) out.push_back(e.index);
    return out;
}

}  // namespace frobscan
