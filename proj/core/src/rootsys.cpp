#include "frobscan/rootsys.hpp"

#include "frobscan/error.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace frobscan {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "lattice coordinate overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "lattice coordinate overflow");
    return out;
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;

char family_letter(Family family) noexcept {
    switch (family) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
        case Family::G: return 'G';
        case Family::F: return 'F';
    }
    return '?';
}

Family parse_family(std::string_view text) {
    if (text.size() == 1) {
        switch (text[0]) {
            case 'A': case 'a': return Family::A;
            case 'B': case 'b': return Family::B;
            case 'C': case 'c': return Family::C;
            case 'D': case 'd': return Family::D;
            case 'G': case 'g': return Family::G;
            case 'F': case 'f': return Family::F;
            default: break;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown root system family '" + std::string(text) + "'");
}

std::string RootSystemSpec::name() const {
    return std::string(1, family_letter(family)) + std::to_string(rank);
}

std::ostream& operator<<(std::ostream& os, const RootSystemSpec& spec) { return os << spec.name(); }

void validate(const RootSystemSpec& spec) {
    bool ok = false;
    switch (spec.family) {
        case Family::A: ok = spec.rank >= 1; break;
        case Family::B:
        case Family::C: ok = spec.rank >= 2; break;
        case Family::D: ok = spec.rank >= 3; break;
        case Family::G: ok = spec.rank == 2; break;
        case Family::F: ok = spec.rank == 4; break;
    }
    if (!ok) throw Error(ErrorCode::InvalidRank, "no irreducible system " + spec.name());
}

// ---------------------------------------------------------------------------
// Weight

mpq_class Weight::root(std::size_t j) const {
    mpq_class q(static_cast<long>(root_.at(j)), static_cast<unsigned long>(det_));
    q.canonicalize();
    return q;
}

std::vector<mpq_class> Weight::root_coords() const {
    std::vector<mpq_class> out;
    out.reserve(root_.size());
    for (std::size_t j = 0; j < root_.size(); ++j) out.push_back(root(j));
    return out;
}

bool Weight::root_integral() const noexcept {
    return std::all_of(root_.begin(), root_.end(), [this](std::int64_t x) { return x % det_ == 0; });
}

std::vector<std::int64_t> Weight::root_integers() const {
    std::vector<std::int64_t> out(root_.size());
    for (std::size_t j = 0; j < root_.size(); ++j) out[j] = root_[j] / det_;
    return out;
}

bool Weight::is_zero() const noexcept {
    return std::all_of(fund_.begin(), fund_.end(), [](std::int64_t x) { return x == 0; });
}

void Weight::check_compatible(const Weight& other) const {
    if (rank() != other.rank() || det_ != other.det_)
        throw Error(ErrorCode::InvalidArgument, "weights belong to different root systems");
}

Weight Weight::operator+(const Weight& other) const {
    check_compatible(other);
    Weight out = *this;
    for (std::size_t i = 0; i < fund_.size(); ++i) {
        out.fund_[i] = checked_add(fund_[i], other.fund_[i]);
        out.root_[i] = checked_add(root_[i], other.root_[i]);
    }
    return out;
}

Weight Weight::operator-(const Weight& other) const { return *this + (-other); }

Weight Weight::operator-() const { return *this * -1; }

Weight Weight::operator*(std::int64_t k) const {
    Weight out = *this;
    for (std::size_t i = 0; i < fund_.size(); ++i) {
        out.fund_[i] = checked_mul(fund_[i], k);
        out.root_[i] = checked_mul(root_[i], k);
    }
    return out;
}

std::string Weight::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < fund_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(fund_[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// Construction from the standard epsilon realizations

namespace {

using EpsVec = std::vector<std::int64_t>;

// All epsilon coordinates are doubled so that F4's half-integral roots stay integral.
struct Realization {
    std::size_t dim = 0;
    std::vector<EpsVec> simple;
    std::vector<EpsVec> positive;
};

EpsVec eps(std::size_t dim, std::initializer_list<std::pair<std::size_t, std::int64_t>> terms) {
    EpsVec v(dim, 0);
    for (auto [i, c] : terms) v[i] += 2 * c;
    return v;
}

Realization realize(const RootSystemSpec& spec) {
    const auto n = static_cast<std::size_t>(spec.rank);
    Realization r;
    auto pm_pairs = [&r](bool with_plus) {
        for (std::size_t i = 0; i < r.dim; ++i)
            for (std::size_t j = i + 1; j < r.dim; ++j) {
                r.positive.push_back(eps(r.dim, {{i, 1}, {j, -1}}));
                if (with_plus) r.positive.push_back(eps(r.dim, {{i, 1}, {j, 1}}));
            }
    };
    switch (spec.family) {
        case Family::A:
            r.dim = n + 1;
            for (std::size_t i = 0; i < n; ++i) r.simple.push_back(eps(r.dim, {{i, 1}, {i + 1, -1}}));
            pm_pairs(false);
            break;
        case Family::B:
        case Family::C:
        case Family::D: {
            r.dim = n;
            for (std::size_t i = 0; i + 1 < n; ++i) r.simple.push_back(eps(r.dim, {{i, 1}, {i + 1, -1}}));
            if (spec.family == Family::B) r.simple.push_back(eps(r.dim, {{n - 1, 1}}));
            if (spec.family == Family::C) r.simple.push_back(eps(r.dim, {{n - 1, 2}}));
            if (spec.family == Family::D) r.simple.push_back(eps(r.dim, {{n - 2, 1}, {n - 1, 1}}));
            pm_pairs(true);
            if (spec.family == Family::B)
                for (std::size_t i = 0; i < n; ++i) r.positive.push_back(eps(r.dim, {{i, 1}}));
            if (spec.family == Family::C)
                for (std::size_t i = 0; i < n; ++i) r.positive.push_back(eps(r.dim, {{i, 2}}));
            break;
        }
        case Family::G: {
            r.dim = 3;
            EpsVec a1 = eps(3, {{0, 1}, {1, -1}});
            EpsVec a2 = eps(3, {{0, -2}, {1, 1}, {2, 1}});
            r.simple = {a1, a2};
            for (auto [c1, c2] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}) {
                EpsVec v(3);
                for (std::size_t k = 0; k < 3; ++k) v[k] = c1 * a1[k] + c2 * a2[k];
                r.positive.push_back(v);
            }
            break;
        }
        case Family::F: {
            r.dim = 4;
            r.simple = {eps(4, {{1, 1}, {2, -1}}), eps(4, {{2, 1}, {3, -1}}), eps(4, {{3, 1}}),
                        EpsVec{1, -1, -1, -1}};
            pm_pairs(true);
            for (std::size_t i = 0; i < 4; ++i) r.positive.push_back(eps(4, {{i, 1}}));
            for (int mask = 0; mask < 8; ++mask)
                r.positive.push_back(EpsVec{1, (mask & 1) ? 1 : -1, (mask & 2) ? 1 : -1, (mask & 4) ? 1 : -1});
            break;
        }
    }
    return r;
}

std::int64_t dot(const EpsVec& a, const EpsVec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

using QMatrix = std::vector<std::vector<mpq_class>>;

// Gauss-Jordan inverse over Q; also returns the determinant.
QMatrix invert(QMatrix m, mpq_class& det) {
    const std::size_t n = m.size();
    QMatrix inv(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw Error(ErrorCode::InvalidArgument, "singular matrix");
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            std::swap(inv[pivot], inv[col]);
            det = -det;
        }
        const mpq_class p = m[col][col];
        det *= p;
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const mpq_class f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::int64_t to_int64(const mpq_class& q) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
        throw Error(ErrorCode::InvalidArgument, "expected an integer, got " + q.get_str());
    return q.get_num().get_si();
}

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

RootSystem RootSystem::build(const RootSystemSpec& spec) {
    validate(spec);
    const Realization real = realize(spec);
    const std::size_t n = static_cast<std::size_t>(spec.rank);

    RootSystem rs;
    rs.spec_ = spec;
    rs.hash_ = fnv1a_hex(spec.name());

    QMatrix gram(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram[i][j] = dot(real.simple[i], real.simple[j]);
    mpq_class gram_det;
    const QMatrix gram_inv = invert(gram, gram_det);

    rs.cartan_ = IntMatrix(n, n);
    QMatrix cartan_q(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cartan_q[i][j] = mpq_class(2) * gram[i][j] / gram[i][i];
            rs.cartan_(i, j) = to_int64(cartan_q[i][j]);
        }
    mpq_class det;
    const QMatrix cartan_inv = invert(cartan_q, det);
    rs.det_ = to_int64(det);
    if (rs.det_ <= 0) throw Error(ErrorCode::InvalidArgument, "nonpositive Cartan determinant");
    rs.adj_ = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rs.adj_(i, j) = to_int64(cartan_inv[i][j] * det);

    // Express each positive root in simple-root coordinates: c = G^{-1} (alpha_i . v).
    struct RootRecord {
        std::vector<std::int64_t> coords;
        std::int64_t norm;
        std::int64_t height;
    };
    std::vector<RootRecord> records;
    for (const EpsVec& v : real.positive) {
        RootRecord rec;
        rec.norm = dot(v, v);
        rec.height = 0;
        for (std::size_t i = 0; i < n; ++i) {
            mpq_class c = 0;
            for (std::size_t k = 0; k < n; ++k) c += gram_inv[i][k] * dot(real.simple[k], v);
            const std::int64_t ci = to_int64(c);
            if (ci < 0) throw Error(ErrorCode::InvalidArgument, "realization produced a non-positive root");
            rec.coords.push_back(ci);
            rec.height += ci;
        }
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end(), [](const RootRecord& a, const RootRecord& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coords < b.coords;
    });

    rs.max_norm_ = 0;
    for (const auto& rec : records) rs.max_norm_ = std::max(rs.max_norm_, rec.norm);
    for (const auto& rec : records) {
        rs.positive_.push_back(rs.weight_from_root(std::span<const std::int64_t>(rec.coords)));
        rs.root_vectors_.push_back(rec.coords);
        rs.norms_.push_back(rec.norm);
        rs.heights_.push_back(rec.height);
        std::vector<std::int64_t> coroot(n);
        for (std::size_t i = 0; i < n; ++i) {
            const mpq_class d = mpq_class(rec.coords[i]) * gram[i][i] / rec.norm;
            coroot[i] = to_int64(d);
        }
        rs.coroot_coeffs_.push_back(std::move(coroot));
    }

    rs.simple_index_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = 1;
        rs.simple_index_[i] = rs.find_positive_root(e);
        rs.simple_.push_back(rs.positive_[rs.simple_index_[i]]);
    }

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = 1;
        rs.fundamentals_.push_back(rs.weight_from_fund(e));
    }
    rs.rho_ = rs.weight_from_fund(std::vector<std::int64_t>(n, 1));

    rs.highest_ = rs.positive_.size() - 1;
    rs.highest_short_ = rs.highest_;
    if (!rs.simply_laced()) {
        for (std::size_t k = rs.positive_.size(); k-- > 0;)
            if (!rs.is_long(k)) {
                rs.highest_short_ = k;
                break;
            }
    }
    rs.coxeter_ = static_cast<int>(rs.heights_[rs.highest_]) + 1;

    // -w0 on fundamental weights: the antidominant element of the orbit of
    // omega_i is w0 omega_i, and its negative is some omega_sigma(i).
    rs.dual_perm_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Weight w = rs.fundamentals_[i];
        for (bool moved = true; moved;) {
            moved = false;
            for (std::size_t j = 0; j < n; ++j)
                if (w.fund(j) > 0) {
                    w = rs.reflect(w, j);
                    moved = true;
                }
        }
        const Weight image = -w;
        const auto it = std::find(rs.fundamentals_.begin(), rs.fundamentals_.end(), image);
        if (it == rs.fundamentals_.end()) throw Error(ErrorCode::InvalidArgument, "-w0 is not a diagram automorphism");
        rs.dual_perm_[i] = static_cast<std::size_t>(it - rs.fundamentals_.begin());
    }
    return rs;
}

bool RootSystem::simply_laced() const noexcept {
    return std::all_of(norms_.begin(), norms_.end(), [this](std::int64_t x) { return x == max_norm_; });
}

std::span<const std::int64_t> RootSystem::coroot_coefficients(std::size_t root_index) const {
    return coroot_coeffs_.at(root_index);
}

std::span<const std::int64_t> RootSystem::root_vector(std::size_t root_index) const {
    return root_vectors_.at(root_index);
}

std::vector<std::int64_t> RootSystem::root_from_fund(std::span<const std::int64_t> fund) const {
    const std::size_t n = rank();
    std::vector<std::int64_t> root(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) root[i] = checked_add(root[i], checked_mul(adj_(i, j), fund[j]));
    return root;
}

Weight RootSystem::zero() const { return weight_from_fund(std::vector<std::int64_t>(rank(), 0)); }

Weight RootSystem::weight_from_fund(std::span<const std::int64_t> fund) const {
    if (fund.size() != rank())
        throw Error(ErrorCode::InvalidArgument,
                    "expected " + std::to_string(rank()) + " coordinates, got " + std::to_string(fund.size()));
    std::vector<std::int64_t> f(fund.begin(), fund.end());
    return Weight(std::move(f), root_from_fund(fund), det_);
}

Weight RootSystem::weight_from_fund(std::initializer_list<std::int64_t> fund) const {
    return weight_from_fund(std::span<const std::int64_t>(fund.begin(), fund.size()));
}

Weight RootSystem::weight_from_root(std::span<const mpq_class> root) const {
    const std::size_t n = rank();
    if (root.size() != n)
        throw Error(ErrorCode::InvalidArgument,
                    "expected " + std::to_string(n) + " coordinates, got " + std::to_string(root.size()));
    std::vector<std::int64_t> fund(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class f = 0;
        for (std::size_t j = 0; j < n; ++j) f += cartan_(i, j) * root[j];
        if (f.get_den() != 1) throw Error(ErrorCode::NotInWeightLattice, "root coordinates do not define a weight");
        fund[i] = to_int64(f);
    }
    Weight w = weight_from_fund(fund);
    for (std::size_t j = 0; j < n; ++j)
        if (w.root(j) != root[j]) throw Error(ErrorCode::InvalidArgument, "inconsistent coordinates");
    return w;
}

Weight RootSystem::weight_from_root(std::span<const std::int64_t> root) const {
    std::vector<mpq_class> q;
    q.reserve(root.size());
    for (std::int64_t x : root) q.emplace_back(static_cast<long>(x));
    return weight_from_root(std::span<const mpq_class>(q));
}

std::int64_t RootSystem::pairing(const Weight& lambda, std::size_t root_index) const {
    const auto d = coroot_coefficients(root_index);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s = checked_add(s, checked_mul(d[i], lambda.fund(i)));
    return s;
}

Weight RootSystem::dual_weight(const Weight& lambda) const {
    std::vector<std::int64_t> fund(rank());
    for (std::size_t i = 0; i < rank(); ++i) fund[dual_perm_[i]] = lambda.fund(i);
    return weight_from_fund(fund);
}

bool RootSystem::is_dominant(const Weight& lambda) const {
    const auto f = lambda.fund();
    return std::all_of(f.begin(), f.end(), [](std::int64_t x) { return x >= 0; });
}

mpq_class RootSystem::height(const Weight& lambda) const {
    mpq_class h = 0;
    for (std::size_t j = 0; j < rank(); ++j) h += lambda.root(j);
    return h;
}

CoeffStats RootSystem::coeff_stats(const Weight& gamma) const {
    CoeffStats s;
    s.coefficients = gamma.root_coords();
    s.max = s.coefficients.front();
    s.argmax = 1;
    for (std::size_t j = 0; j < s.coefficients.size(); ++j)
        if (s.coefficients[j] >= s.max) {
            s.max = s.coefficients[j];
            s.argmax = j + 1;
        }
    return s;
}

Weight RootSystem::reflect(const Weight& lambda, std::size_t i) const {
    return lambda - simple_.at(i) * lambda.fund(i);
}

std::size_t RootSystem::find_positive_root(std::span<const std::int64_t> root) const {
    for (std::size_t k = 0; k < root_vectors_.size(); ++k)
        if (std::equal(root.begin(), root.end(), root_vectors_[k].begin(), root_vectors_[k].end())) return k;
    return npos;
}

}  // namespace frobscan
