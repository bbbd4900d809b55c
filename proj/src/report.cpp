#include "ldi/report.hpp"

namespace ldi::report {

namespace {

template <class T>
Json opt(const std::optional<T> &v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json matrix(const IntMatrix &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(Json(std::vector<std::int64_t>(m.row(r).begin(), m.row(r).end())));
    return rows;
}

Json step(const TransformStep &s) {
    return std::visit(
        [](const auto &o) -> Json {
            using T = std::decay_t<decltype(o)>;
            Json j;
            if constexpr (std::is_same_v<T, RowScale>) {
                j["op"] = "row_scale";
                j["row"] = o.row;
                j["factor"] = o.factor;
            } else if constexpr (std::is_same_v<T, RowAdd>) {
                j["op"] = "row_add";
                j["target"] = o.target;
                j["source"] = o.source;
                j["factor"] = o.factor;
            } else if constexpr (std::is_same_v<T, RowSwap>) {
                j["op"] = "row_swap";
                j["a"] = o.a;
                j["b"] = o.b;
            } else if constexpr (std::is_same_v<T, RegisterSwap>) {
                j["op"] = "register_swap";
                j["i"] = o.i;
                j["j"] = o.j;
            } else {
                j["op"] = "hadamard_swap";
                j["register"] = o.reg;
            }
            return j;
        },
        s);
}

Json log(const TransformLog &l) {
    Json out = Json::array();
    for (const auto &s : l) out.push_back(step(s));
    return out;
}

Json phi(const PhiVector &v) {
    Json j;
    j["vector"] = std::vector<std::int64_t>(v.entries().begin(), v.entries().end());
    j["pauli"] = format_pauli_string(v);
    j["weight"] = weight(v);
    return j;
}

Json info(const CodeSpec &c) {
    Json j;
    j["q"] = c.q().value();
    j["n"] = c.n();
    j["k"] = c.k();
    j["entries"] = c.unbounded_entries() ? "unbounded" : "reduced";
    j["declared"] = {{"c", opt(c.declared().c)}, {"d", opt(c.declared().d)}};
    const std::size_t rank = rank_mod(c.generators(), c.q());
    j["rank_mod_q"] = rank;
    j["independent"] = rank == c.k();
    if (rank == c.k()) {
        const EntanglementReport e = min_entanglement(c);
        j["c"] = e.c;
        j["s"] = e.s;
        j["logical_qudits"] = static_cast<std::int64_t>(c.n() + e.c) - static_cast<std::int64_t>(c.k());
        Json pairs = Json::array();
        for (const auto &p : e.noncommuting_pairs) pairs.push_back({{"i", p.i}, {"j", p.j}, {"value", p.value}});
        j["noncommuting_pairs"] = pairs;
    } else {
        j["c"] = nullptr;
        j["s"] = nullptr;
        j["logical_qudits"] = nullptr;
        j["noncommuting_pairs"] = nullptr;
    }
    j["commutator_mod_q"] = matrix(commutator_matrix(c, Modulus::finite(c.q())).entries);
    j["generators"] = matrix(c.generators());
    return j;
}

Json canonical(const CanonicalForm &cf) {
    Json j;
    j["q"] = cf.code.q().value();
    j["n"] = cf.code.n();
    j["k"] = cf.code.k();
    j["hadamard_convention"] = "(x, z) -> (-z, x)";
    j["log"] = log(cf.log);
    j["canonical"] = matrix(cf.code.generators());
    j["blocks"] = {{"X2", matrix(cf.x2())}, {"Z1", matrix(cf.z1())}, {"Z2", matrix(cf.z2())}};
    return j;
}

Json verification(const VerificationReport &v) {
    Json j;
    j["matches_source_mod_q"] = v.matches_source_mod_q;
    j["commutes_mod_p"] = v.commutes_mod_p;
    j["l_lower_and_q_divisible"] = v.l_lower_and_q_divisible;
    j["max_entry_observed"] = v.max_entry_observed;
    j["passed"] = v.passed();
    return j;
}

Json transform(const TransformResult &r, NRepresentative rep) {
    Json j;
    j["source_q"] = r.source.code.q().value();
    j["target_p"] = r.target_p.value();
    j["label"] = r.label();
    j["n_representative"] = rep == NRepresentative::Exact ? "exact" : "centered";
    j["nu"] = r.decomposition.nu;
    j["nu_inverse"] = r.decomposition.nu_inv;
    j["canonical"] = canonical(r.source);
    Json pairs = Json::array();
    for (const auto &p : r.decomposition.pairs) {
        pairs.push_back({{"i", p.i}, {"j", p.j}, {"c", p.c}, {"alpha", p.alpha}, {"m", p.m}, {"n", p.n}, {"L", p.l}});
    }
    j["decomposition"] = pairs;
    j["L"] = matrix(r.l);
    j["output"] = matrix(r.output);
    j["verification"] = verification(verify(r));
    if (r.source.code.k() <= r.source.code.n()) j["B"] = entry_bound(r.source.code).to_string();
    return j;
}

Json distance(const DistanceReport &d) {
    Json j;
    j["p"] = d.p.value();
    j["distance"] = opt(d.distance());
    j["d_pure"] = opt(d.d_pure);
    j["d"] = opt(d.d);
    j["witness"] = d.witness ? phi(*d.witness) : Json(nullptr);
    j["pure_witness"] = d.pure_witness ? phi(*d.pure_witness) : Json(nullptr);
    j["kernel_is_isotropic"] = d.kernel_is_isotropic;
    j["degenerate"] = d.degenerate;
    j["cap_hit"] = d.cap_hit;
    j["candidates_per_weight"] = d.candidates_per_weight;
    return j;
}

Json bounds(const CodeSpec &c, const BoundsReport &b) {
    Json j;
    j["q"] = c.q().value();
    j["n"] = c.n();
    j["k"] = c.k();
    j["B"] = b.b.to_string();
    j["d"] = b.d_used;
    j["p_star"] = b.p_star.to_string();
    j["d_one_convention"] = b.d_used == 1;
    j["max_entry_observed"] = opt(b.max_entry_observed);
    return j;
}

Json rates(const RatesReport &r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["c"] = r.c;
    j["entanglement_assisted"] = r.entanglement_assisted.to_string();
    j["tradeoff"] = {r.tradeoff_rate.to_string(), r.tradeoff_entanglement.to_string()};
    j["catalytic"] = r.catalytic.to_string();
    return j;
}

Json scan(const ScanReport &s) {
    Json j;
    j["source_distance"] = opt(s.source_distance);
    j["source_distance_declared"] = s.source_distance_declared;
    Json entries = Json::array();
    for (const auto &e : s.entries) {
        Json x;
        x["p"] = e.p.value();
        x["error"] = e.error ? Json(e.error->what()) : Json(nullptr);
        x["label"] = e.result ? Json(e.result->label()) : Json(nullptr);
        x["verification"] = e.verification ? verification(*e.verification) : Json(nullptr);
        x["distance"] = e.distance ? distance(*e.distance) : Json(nullptr);
        x["distance_preserved"] = opt(e.distance_preserved);
        x["output"] = e.result ? matrix(e.result->output) : Json(nullptr);
        entries.push_back(x);
    }
    j["entries"] = entries;
    return j;
}

}  // namespace ldi::report
