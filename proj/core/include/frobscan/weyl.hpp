#pragma once

#include "frobscan/rootsys.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace frobscan {

/// An element of W, stored as its integer matrix on fundamental coordinates.
struct WeylElement {
    std::size_t index = 0;  // position in WeylGroup::elements()
    IntMatrix matrix;
    int length = 0;
    int sign = 1;  // (-1)^length
};

/// The finite Weyl group, materialized in breadth-first order by length.
///
/// Element 0 is the identity. Ties within a length are broken by the order in
/// which products s_i * w were discovered (lower w first, then lower i).
class WeylGroup {
public:
    static constexpr std::size_t kDefaultCap = 1'000'000;

    /// Throws GroupTooLarge if |W| exceeds `cap`.
    static WeylGroup enumerate(const RootSystem& rs, std::size_t cap = kDefaultCap);

    /// Standard order of W for a validated spec.
    static std::uint64_t expected_order(const RootSystemSpec& spec);

    std::size_t size() const noexcept { return elements_.size(); }
    std::size_t rank() const noexcept { return rank_; }
    const std::vector<WeylElement>& elements() const noexcept { return elements_; }
    const WeylElement& operator[](std::size_t i) const { return elements_.at(i); }
    const WeylElement& identity() const { return elements_.front(); }
    const WeylElement& longest() const { return elements_.back(); }

    /// Index of s_i * w (0-based simple reflection i).
    std::size_t left_multiply(std::size_t i, std::size_t w) const { return table_[w * rank_ + i]; }
    /// Index of a * b.
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t w) const;
    /// (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k} and k = l(w).
    std::vector<std::size_t> reduced_word(std::size_t w) const;

    /// Index of the element with this matrix, or size() if none.
    std::size_t find(const IntMatrix& matrix) const;

private:
    std::size_t rank_ = 0;
    std::vector<WeylElement> elements_;
    std::vector<std::size_t> table_;  // size() x rank_
};

/// w(lambda).
Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

/// w . lambda = w(lambda + rho) - rho.
Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

/// Fundamental coordinates of w . lambda without building a Weight.
void dot_action_fund(const RootSystem& rs, const WeylElement& w, std::span<const std::int64_t> lambda,
                     std::span<std::int64_t> out);

/// The l(w) distinct positive roots {beta_1, s_{beta_1}(beta_2), ...} read off a
/// reduced word of w; their sum is -w.0. Returned as sorted root indices.
std::vector<std::size_t> minus_w_dot_zero_roots(const RootSystem& rs, const WeylGroup& group, std::size_t w);

/// Elements fixing lambda under the linear action, as indices into the group.
std::vector<std::size_t> stabilizer(const RootSystem& rs, const WeylGroup& group, const Weight& lambda);

}  // namespace frobscan
