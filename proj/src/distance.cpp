#include "ldi/distance.hpp"

#include <algorithm>

#include "ldi/symplectic.hpp"

namespace ldi {

namespace {

// Row-space membership over GF(p) by reduction against a fixed RREF.
class RowspaceTester {
  public:
    RowspaceTester(const IntMatrix &g, PrimeModulus p) : rr_(rref_mod(g, p)), p_(p) {}

    bool contains(std::vector<std::int64_t> v) const {
        for (std::size_t i = 0; i < rr_.rank; ++i) {
            const std::int64_t f = v[rr_.pivot_cols[i]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < v.size(); ++c) v[c] = p_.reduce(v[c] - f * rr_.reduced(i, c));
        }
        return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
    }

  private:
    RrefResult rr_;
    PrimeModulus p_;
};

class WeightSearch {
  public:
    WeightSearch(const IntMatrix &g, PrimeModulus p, bool need_d)
        : g_(g), p_(p), n_(g.cols() / 2), k_(g.rows()), need_d_(need_d), rowspace_(g, p) {
        const std::int64_t pv = p.value();
        const std::size_t per_reg = static_cast<std::size_t>(pv * pv);
        contrib_.assign(n_ * per_reg * k_, 0);
        for (std::size_t reg = 0; reg < n_; ++reg) {
            for (std::size_t a = 1; a < per_reg; ++a) {
                const std::int64_t x = static_cast<std::int64_t>(a) / pv, z = static_cast<std::int64_t>(a) % pv;
                for (std::size_t r = 0; r < k_; ++r) {
                    contrib_[(reg * per_reg + a) * k_ + r] = p.reduce(g(r, reg + n_) * x - g(r, reg) * z);
                }
            }
        }
    }

    // Scans every error supported exactly on `support`. Returns candidates examined.
    std::uint64_t scan(const std::vector<std::size_t> &support) {
        support_ = &support;
        assignment_.assign(support.size(), 0);
        partial_.assign((support.size() + 1) * k_, 0);
        count_ = 0;
        recurse(0);
        return count_;
    }

    std::optional<PhiVector> pure_hit;
    std::optional<PhiVector> nonisotropic_hit;

  private:
    void recurse(std::size_t depth) {
        const std::size_t per_reg = static_cast<std::size_t>(p_.value() * p_.value());
        if (depth == support_->size()) {
            ++count_;
            const std::int64_t *s = &partial_[depth * k_];
            for (std::size_t r = 0; r < k_; ++r)
                if (s[r] != 0) return;
            on_zero_syndrome();
            return;
        }
        const std::size_t reg = (*support_)[depth];
        const std::int64_t *prev = &partial_[depth * k_];
        std::int64_t *next = &partial_[(depth + 1) * k_];
        for (std::size_t a = 1; a < per_reg; ++a) {
            const std::int64_t *c = &contrib_[(reg * per_reg + a) * k_];
            for (std::size_t r = 0; r < k_; ++r) {
                std::int64_t v = prev[r] + c[r];
                next[r] = v >= p_.value() ? v - p_.value() : v;
            }
            assignment_[depth] = a;
            recurse(depth + 1);
        }
    }

    void on_zero_syndrome() {
        if (pure_hit && (!need_d_ || nonisotropic_hit)) return;
        std::vector<std::int64_t> v(2 * n_, 0);
        for (std::size_t i = 0; i < support_->size(); ++i) {
            v[(*support_)[i]] = static_cast<std::int64_t>(assignment_[i]) / p_.value();
            v[(*support_)[i] + n_] = static_cast<std::int64_t>(assignment_[i]) % p_.value();
        }
        if (!pure_hit) pure_hit = PhiVector(v, Modulus::finite(p_));
        if (need_d_ && !nonisotropic_hit && !rowspace_.contains(v)) {
            nonisotropic_hit = PhiVector(std::move(v), Modulus::finite(p_));
        }
    }

    const IntMatrix &g_;
    PrimeModulus p_;
    std::size_t n_;
    std::size_t k_;
    bool need_d_;
    RowspaceTester rowspace_;
    std::vector<std::int64_t> contrib_;
    const std::vector<std::size_t> *support_ = nullptr;
    std::vector<std::size_t> assignment_;
    std::vector<std::int64_t> partial_;
    std::uint64_t count_ = 0;
};

bool next_combination(std::vector<std::size_t> &comb, std::size_t n) {
    const std::size_t w = comb.size();
    for (std::size_t i = w; i-- > 0;) {
        if (comb[i] < n - w + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < w; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void finish_report(DistanceReport &rep) {
    // The least-weight undetectable error is isotropic exactly when d_pure < d.
    if (rep.d && rep.d_pure) rep.degenerate = *rep.d_pure < *rep.d;
    if (!rep.d && rep.kernel_is_isotropic) rep.witness = rep.pure_witness;
}

}  // namespace

std::uint64_t candidate_count(std::size_t n, std::size_t w, PrimeModulus p) {
    if (w > n) return 0;
    std::uint64_t binom = 1;
    for (std::size_t i = 0; i < w; ++i) binom = binom * (n - i) / (i + 1);
    const auto per = static_cast<std::uint64_t>(p.value() * p.value() - 1);
    std::uint64_t out = binom;
    for (std::size_t i = 0; i < w; ++i) out *= per;
    return out;
}

DistanceReport detection_distance(const IntMatrix &generators, PrimeModulus p, std::size_t max_weight) {
    const IntMatrix g = generators.reduced(p);
    const std::size_t n = g.cols() / 2;
    DistanceReport rep{.p = p};

    const std::size_t kernel_dim = undetectable_kernel(g, p).rows();
    const std::size_t iso_dim = isotropic_subgroup(g, p).rows();
    rep.kernel_is_isotropic = kernel_dim == iso_dim;
    rep.candidates_per_weight.assign(1, 0);
    if (kernel_dim == 0) return rep;

    WeightSearch search(g, p, !rep.kernel_is_isotropic);
    const std::size_t cap = std::min(max_weight, n);
    bool done = false;
    for (std::size_t w = 1; w <= cap && !done; ++w) {
        std::vector<std::size_t> support(w);
        for (std::size_t i = 0; i < w; ++i) support[i] = i;
        std::uint64_t examined = 0;
        do {
            examined += search.scan(support);
        } while (next_combination(support, n));
        rep.candidates_per_weight.push_back(examined);

        if (search.pure_hit && !rep.d_pure) {
            rep.d_pure = w;
            rep.pure_witness = search.pure_hit;
        }
        if (search.nonisotropic_hit && !rep.d) {
            rep.d = w;
            rep.witness = search.nonisotropic_hit;
        }
        done = rep.d_pure && (rep.d || rep.kernel_is_isotropic);
    }
    rep.cap_hit = !done;
    finish_report(rep);
    return rep;
}

DistanceReport detection_distance(const IntMatrix &generators, PrimeModulus p) {
    return detection_distance(generators, p, generators.cols() / 2);
}

DistanceReport oracle_distance(const IntMatrix &generators, PrimeModulus p) {
    const IntMatrix g = generators.reduced(p);
    const std::size_t n = g.cols() / 2, len = 2 * n, k = g.rows();
    const auto pv = static_cast<std::uint64_t>(p.value());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i) {
        total *= pv;
        if (total > kOracleLimit) {
            throw Error(ErrorKind::InstanceTooLarge, std::to_string(p.value()) + "^" + std::to_string(len) +
                                                         " vectors exceed the oracle limit");
        }
    }

    // Index of a vector: entry 0 is the most significant base-p digit.
    auto encode = [&](const std::vector<std::int64_t> &v) {
        std::uint64_t idx = 0;
        for (auto x : v) idx = idx * pv + static_cast<std::uint64_t>(x);
        return idx;
    };
    std::vector<bool> in_rowspace(total, false);
    {
        std::vector<std::int64_t> coeff(k, 0);
        while (true) {
            std::vector<std::int64_t> v(len, 0);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < len; ++c) v[c] = p.reduce(v[c] + coeff[r] * g(r, c));
            in_rowspace[encode(v)] = true;
            std::size_t pos = 0;
            while (pos < k && ++coeff[pos] == p.value()) coeff[pos++] = 0;
            if (pos == k) break;
        }
    }

    // (weight, support, assignments) ordering for the tie-break.
    using Key = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::int64_t>>;
    auto key_of = [&](const std::vector<std::int64_t> &v) {
        Key key;
        for (std::size_t reg = 0; reg < n; ++reg) {
            if (v[reg] != 0 || v[reg + n] != 0) {
                std::get<1>(key).push_back(reg);
                std::get<2>(key).push_back(v[reg] * p.value() + v[reg + n]);
            }
        }
        std::get<0>(key) = std::get<1>(key).size();
        return key;
    };

    std::optional<Key> best_pure, best_non;
    std::vector<std::int64_t> best_pure_v, best_non_v;
    std::vector<std::int64_t> v(len, 0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t c = len; c-- > 0;) {
            v[c] = static_cast<std::int64_t>(rest % pv);
            rest /= pv;
        }
        bool zero_syndrome = true;
        for (std::size_t r = 0; r < k && zero_syndrome; ++r) {
            zero_syndrome = symplectic_product(v, g.row(r), Modulus::finite(p)) == 0;
        }
        if (!zero_syndrome) continue;
        Key key = key_of(v);
        if (!best_pure || key < *best_pure) {
            best_pure = key;
            best_pure_v = v;
        }
        if (!in_rowspace[idx] && (!best_non || key < *best_non)) {
            best_non = std::move(key);
            best_non_v = v;
        }
    }

    DistanceReport rep{.p = p};
    rep.kernel_is_isotropic = !best_non;
    if (best_pure) {
        rep.d_pure = std::get<0>(*best_pure);
        rep.pure_witness = PhiVector(best_pure_v, Modulus::finite(p));
    }
    if (best_non) {
        rep.d = std::get<0>(*best_non);
        rep.witness = PhiVector(best_non_v, Modulus::finite(p));
    }
    finish_report(rep);
    return rep;
}

bool nondegeneracy_check(const CodeSpec &c, PrimeModulus p, std::size_t d) {
    const IntMatrix basis = isotropic_subgroup(c.generators(), p);
    const std::size_t dim = basis.rows(), len = basis.cols();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        total *= static_cast<std::uint64_t>(p.value());
        if (total > kOracleLimit) {
            throw Error(ErrorKind::InstanceTooLarge, "isotropic subgroup of dimension " + std::to_string(dim) +
                                                         " is too large to enumerate");
        }
    }
    std::vector<std::int64_t> coeff(dim, 0);
    while (true) {
        std::size_t pos = 0;
        while (pos < dim && ++coeff[pos] == p.value()) coeff[pos++] = 0;
        if (pos == dim) break;
        std::vector<std::int64_t> v(len, 0);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t col = 0; col < len; ++col) v[col] = p.reduce(v[col] + coeff[r] * basis(r, col));
        if (weight(v) < d) return false;
    }
    return true;
}

}  // namespace ldi
