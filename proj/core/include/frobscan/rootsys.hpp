#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frobscan {

enum class Family { A, B, C, D, G, F };

char family_letter(Family family) noexcept;
Family parse_family(std::string_view text);

struct RootSystemSpec {
    Family family = Family::A;
    int rank = 1;

    std::string name() const;  // e.g. "A3"
    bool operator==(const RootSystemSpec&) const = default;
};

std::ostream& operator<<(std::ostream& os, const RootSystemSpec& spec);

/// Throws InvalidRank unless the (family, rank) pair names a supported
/// irreducible system.
void validate(const RootSystemSpec& spec);

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const std::int64_t> data() const noexcept { return data_; }

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// A lattice weight carried in fundamental-weight coordinates (integers) and
/// simple-root coordinates (rationals over the Cartan determinant).
///
/// Weights are only created by a RootSystem, which keeps both coordinate
/// systems consistent. Arithmetic between weights of different systems is
/// rejected.
class Weight {
public:
    Weight() = default;

    std::size_t rank() const noexcept { return fund_.size(); }

    std::span<const std::int64_t> fund() const noexcept { return fund_; }
    std::int64_t fund(std::size_t i) const { return fund_.at(i); }

    /// Root coordinates multiplied by denominator().
    std::span<const std::int64_t> root_numerators() const noexcept { return root_; }
    std::int64_t denominator() const noexcept { return det_; }

    mpq_class root(std::size_t j) const;
    std::vector<mpq_class> root_coords() const;

    /// True iff every root coordinate is an integer.
    bool root_integral() const noexcept;
    /// Root coordinates as integers; only meaningful when root_integral().
    std::vector<std::int64_t> root_integers() const;

    bool is_zero() const noexcept;

    Weight operator+(const Weight& other) const;
    Weight operator-(const Weight& other) const;
    Weight operator-() const;
    Weight operator*(std::int64_t k) const;
    friend Weight operator*(std::int64_t k, const Weight& w) { return w * k; }

    bool operator==(const Weight& other) const noexcept { return fund_ == other.fund_ && det_ == other.det_; }
    auto operator<=>(const Weight& other) const noexcept { return fund_ <=> other.fund_; }

    /// Fundamental coordinates, e.g. "(3,0,1)".
    std::string to_string() const;

private:
    friend class RootSystem;
    Weight(std::vector<std::int64_t> fund, std::vector<std::int64_t> root, std::int64_t det)
        : fund_(std::move(fund)), root_(std::move(root)), det_(det) {}

    void check_compatible(const Weight& other) const;

    std::vector<std::int64_t> fund_;
    std::vector<std::int64_t> root_;
    std::int64_t det_ = 1;
};

struct CoeffStats {
    std::vector<mpq_class> coefficients;  // M_j, j = 1..rank
    mpq_class max;                        // M
    std::size_t argmax = 0;               // m, 1-based, largest index attaining the max
};

/// Immutable tables for one irreducible root system in Bourbaki numbering.
///
/// Positive roots are ordered by height, ties broken lexicographically on
/// their simple-root coordinates. Indices into positive_roots() are the
/// "root indices" used throughout the engine.
class RootSystem {
public:
    static RootSystem build(const RootSystemSpec& spec);

    const RootSystemSpec& spec() const noexcept { return spec_; }
    std::size_t rank() const noexcept { return static_cast<std::size_t>(spec_.rank); }
    std::string name() const { return spec_.name(); }
    /// Stable identifier for caches: FNV-1a of the system name, hex encoded.
    const std::string& spec_hash() const noexcept { return hash_; }

    const std::vector<Weight>& simple_roots() const noexcept { return simple_; }
    const std::vector<Weight>& positive_roots() const noexcept { return positive_; }
    std::size_t num_positive_roots() const noexcept { return positive_.size(); }
    /// Root index of the i-th simple root (0-based i).
    std::size_t simple_root_index(std::size_t i) const { return simple_index_.at(i); }

    /// C(i, j) = <alpha_j, alpha_i^vee>.
    const IntMatrix& cartan() const noexcept { return cartan_; }
    /// det(C) * C^{-1}; root coordinates of a weight are this times its fund coords, over det.
    const IntMatrix& inv_cartan_times_det() const noexcept { return adj_; }
    std::int64_t cartan_det() const noexcept { return det_; }

    const Weight& rho() const noexcept { return rho_; }
    const Weight& fundamental_weight(std::size_t i) const { return fundamentals_.at(i); }
    const std::vector<Weight>& fundamental_weights() const noexcept { return fundamentals_; }

    std::size_t highest_root_index() const noexcept { return highest_; }
    const Weight& highest_root() const { return positive_[highest_]; }
    std::size_t highest_short_root_index() const noexcept { return highest_short_; }
    const Weight& highest_short_root() const { return positive_[highest_short_]; }
    int coxeter_number() const noexcept { return coxeter_; }

    bool simply_laced() const noexcept;
    bool is_long(std::size_t root_index) const { return norms_.at(root_index) == max_norm_; }
    /// Coefficients of beta^vee in the simple coroots (always nonnegative integers).
    std::span<const std::int64_t> coroot_coefficients(std::size_t root_index) const;
    /// Integer simple-root coordinates of a positive root.
    std::span<const std::int64_t> root_vector(std::size_t root_index) const;
    /// Height of a positive root.
    std::int64_t root_height(std::size_t root_index) const { return heights_.at(root_index); }

    Weight zero() const;
    Weight weight_from_fund(std::span<const std::int64_t> fund) const;
    Weight weight_from_fund(std::initializer_list<std::int64_t> fund) const;
    /// Throws NotInWeightLattice when the rational combination is not a weight.
    Weight weight_from_root(std::span<const mpq_class> root) const;
    Weight weight_from_root(std::span<const std::int64_t> root) const;

    /// <lambda, beta^vee>; always an integer for lattice weights.
    std::int64_t pairing(const Weight& lambda, std::size_t root_index) const;

    /// -w_0 lambda.
    Weight dual_weight(const Weight& lambda) const;
    /// sigma with -w_0 alpha_i = alpha_sigma(i).
    std::span<const std::size_t> dual_permutation() const noexcept { return dual_perm_; }

    bool is_dominant(const Weight& lambda) const;
    mpq_class height(const Weight& lambda) const;
    bool in_root_lattice(const Weight& lambda) const { return lambda.root_integral(); }
    CoeffStats coeff_stats(const Weight& gamma) const;

    /// Simple reflection s_i (0-based) applied to lambda.
    Weight reflect(const Weight& lambda, std::size_t i) const;

    /// Root index of a positive root given by integer root coordinates, or npos.
    std::size_t find_positive_root(std::span<const std::int64_t> root) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    RootSystem() = default;

    std::vector<std::int64_t> root_from_fund(std::span<const std::int64_t> fund) const;

    RootSystemSpec spec_;
    std::string hash_;
    IntMatrix cartan_;
    IntMatrix adj_;
    std::int64_t det_ = 1;
    std::vector<Weight> simple_;
    std::vector<Weight> positive_;
    std::vector<std::size_t> simple_index_;
    std::vector<std::vector<std::int64_t>> root_vectors_;
    std::vector<std::vector<std::int64_t>> coroot_coeffs_;
    std::vector<std::int64_t> norms_;
    std::vector<std::int64_t> heights_;
    std::int64_t max_norm_ = 0;
    std::vector<Weight> fundamentals_;
    Weight rho_;
    std::size_t highest_ = 0;
    std::size_t highest_short_ = 0;
    int coxeter_ = 0;
    std::vector<std::size_t> dual_perm_;
};

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace detail

}  // namespace frobscan
