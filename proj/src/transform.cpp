#include "ldi/transform.hpp"

#include <future>
#include <stdexcept>

namespace ldi {

namespace {

void require_distinct(PrimeModulus q, PrimeModulus p) {
    if (p == q) {
        throw Error(ErrorKind::SameModulus, "target prime equals the source local dimension " +
                                                std::to_string(q.value()) + "; q mod p = 0 has no inverse");
    }
}

}  // namespace

CommutatorDecomposition decompose(const CanonicalForm &canon, PrimeModulus p, NRepresentative rep) {
    const PrimeModulus q = canon.code.q();
    require_distinct(q, p);

    CommutatorDecomposition out{q, p, p.reduce(q.value()), 0, {}};
    out.nu_inv = mod_inverse(out.nu, p);

    const IntMatrix &g = canon.code.generators();
    for (std::size_t i = 1; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            PairDecomposition pd{};
            pd.i = i;
            pd.j = j;
            pd.c = symplectic_product(g.row(i), g.row(j), Modulus::unbounded());
            pd.alpha = q.reduce(pd.c);
            pd.m = (pd.c - pd.alpha) / q.value();
            pd.n = -checked_mul(out.nu_inv, pd.alpha);
            if (rep == NRepresentative::Centered) {
                pd.n = p.reduce(pd.n);
                if (pd.n > p.value() / 2) pd.n -= p.value();
            }
            pd.l = checked_mul(pd.m - pd.n, q.value());
            out.pairs.push_back(pd);
        }
    }
    return out;
}

std::string TransformResult::label() const {
    return commutator_matrix(output, Modulus::unbounded()).is_zero() ? "ldi" : "effectively-ldi";
}

CodeSpec TransformResult::output_code() const {
    DeclaredParams declared = source.code.declared();
    declared.k = static_cast<std::int64_t>(output.rows());
    declared.c = 0;
    return CodeSpec(target_p, source.code.n(), output, true, declared);
}

TransformResult transform(const CodeSpec &c, PrimeModulus p, NRepresentative rep) {
    require_distinct(c.q(), p);
    CanonicalForm canon = canonicalize(c);
    CommutatorDecomposition dec = decompose(canon, p, rep);

    const std::size_t k = canon.code.k(), n = canon.code.n();
    IntMatrix l(k, k);
    IntMatrix output = canon.code.generators();
    for (const auto &pd : dec.pairs) {
        l(pd.i, pd.j) = pd.l;
        output(pd.i, n + pd.j) = checked_add(output(pd.i, n + pd.j), pd.l);
    }

    TransformResult result{std::move(canon), p, std::move(l), std::move(output), std::move(dec)};
    if (!verify(result).passed()) throw std::logic_error("transform output failed re-verification");
    return result;
}

VerificationReport verify(const TransformResult &result) {
    VerificationReport rep;
    const PrimeModulus q = result.source.code.q();
    rep.matches_source_mod_q = result.output.rows() == result.source.code.k() &&
                               result.output.cols() == result.source.code.generators().cols() &&
                               result.output.reduced(q) == result.source.code.reduced();
    rep.commutes_mod_p = commutator_matrix(result.output, Modulus::finite(result.target_p)).is_zero();

    bool l_ok = result.l.rows() == result.l.cols() && result.l.rows() == result.output.rows();
    for (std::size_t i = 0; l_ok && i < result.l.rows(); ++i) {
        for (std::size_t j = 0; j < result.l.cols(); ++j) {
            if ((j >= i && result.l(i, j) != 0) || q.reduce(result.l(i, j)) != 0) {
                l_ok = false;
                break;
            }
        }
    }
    rep.l_lower_and_q_divisible = l_ok;
    rep.max_entry_observed = result.output.max_abs();
    return rep;
}

BigUnsigned entry_bound(const CodeSpec &c) {
    if (c.k() > c.n()) {
        throw Error(ErrorKind::DimensionMismatch, "entry bound needs k <= n, got k = " + std::to_string(c.k()) +
                                                      ", n = " + std::to_string(c.n()));
    }
    const auto qm1 = static_cast<std::uint64_t>(c.q().value() - 1);
    const auto slack = static_cast<std::uint64_t>(c.n() - c.k());
    using Rep = BigUnsigned::Rep;
    return BigUnsigned::from_rep((Rep(2) + Rep(slack) * qm1) * qm1);
}

BoundsReport threshold(const CodeSpec &c, std::uint64_t d) {
    BoundsReport rep;
    rep.b = entry_bound(c);
    rep.p_star = eval_p_star(rep.b, d);
    rep.d_used = d;
    return rep;
}

ScanReport prime_scan(const CodeSpec &c, std::span<const PrimeModulus> primes, std::size_t max_weight) {
    ScanReport report;
    if (c.declared().d) {
        report.source_distance = static_cast<std::size_t>(*c.declared().d);
        report.source_distance_declared = true;
    } else {
        report.source_distance = detection_distance(c.generators(), c.q(), max_weight).distance();
    }

    std::vector<std::future<ScanEntry>> jobs;
    jobs.reserve(primes.size());
    for (const PrimeModulus p : primes) {
        jobs.push_back(std::async(std::launch::async, [&c, p, max_weight, src = report.source_distance] {
            ScanEntry entry{p, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
            try {
                entry.result = transform(c, p);
                entry.verification = verify(*entry.result);
                entry.distance = detection_distance(entry.result->output, p, max_weight);
                if (src && entry.distance->distance()) entry.distance_preserved = *entry.distance->distance() >= *src;
            } catch (const Error &e) {
                entry.error = e;
            }
            return entry;
        }));
    }
    for (auto &job : jobs) report.entries.push_back(job.get());
    return report;
}

}  // namespace ldi
