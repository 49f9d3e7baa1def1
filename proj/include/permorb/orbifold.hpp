#pragma once

// Irreducible modules of the cyclic permutation orbifold (V^{(x)k})^<g> and
// its S-matrix, assembled either from closed-form case formulas or from the
// general orbit-sum formula over twisted sectors.

#include "permorb/modular_data.hpp"
#include "permorb/permutation.hpp"
#include "permorb/tensor_sector.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace permorb {

/// W^{i1..ik} for a non-constant necklace.
struct UntwistedNecklace {
    LabelTuple tuple;
    friend bool operator==(const UntwistedNecklace&, const UntwistedNecklace&) = default;
};
/// (W^{j..j})^n: eigenspace of g with eigenvalue e^{-2 pi i n/k}.
struct UntwistedDiagonal {
    int label = 0;
    int eigen = 0;
    friend bool operator==(const UntwistedDiagonal&, const UntwistedDiagonal&) = default;
};
/// (T_{g^s}^{j..j})^n
struct TwistedConstant {
    int sector = 1;
    int label = 0;
    int eigen = 0;
    friend bool operator==(const TwistedConstant&, const TwistedConstant&) = default;
};
/// (T_{g^s}^{j1..jd})^t for a non-constant necklace, t in [0, l).
struct TwistedNecklace {
    int sector = 1;
    LabelTuple tuple;
    int eigen = 0;
    friend bool operator==(const TwistedNecklace&, const TwistedNecklace&) = default;
};

struct OrbifoldModule {
    using Variant = std::variant<UntwistedNecklace, UntwistedDiagonal, TwistedConstant, TwistedNecklace>;
    Variant data;
    Rational weight{0};
    std::string label;

    int family() const { return static_cast<int>(data.index()) + 1; }
    bool twisted() const { return family() >= 3; }

    int sector() const {
        if (auto* c = std::get_if<TwistedConstant>(&data)) return c->sector;
        if (auto* n = std::get_if<TwistedNecklace>(&data)) return n->sector;
        return 0;
    }

    int eigen() const {
        return std::visit(
            [](const auto& m) {
                if constexpr (std::is_same_v<std::decay_t<decltype(m)>, UntwistedNecklace>)
                    return 0;
                else
                    return m.eigen;
            },
            data);
    }

    /// The underlying V^{(x)k}-module: length-k tuple for sector 0, length
    /// gcd(s, k) otherwise.
    TwistedLabel tensor_label(int k) const {
        return std::visit(
            [k](const auto& m) -> TwistedLabel {
                using M = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<M, UntwistedNecklace>)
                    return {0, m.tuple};
                else if constexpr (std::is_same_v<M, UntwistedDiagonal>)
                    return {0, LabelTuple(k, m.label)};
                else if constexpr (std::is_same_v<M, TwistedConstant>)
                    return {m.sector, LabelTuple(std::gcd(m.sector, k), m.label)};
                else
                    return {m.sector, m.tuple};
            },
            data);
    }

    friend bool operator==(const OrbifoldModule& a, const OrbifoldModule& b) {
        return a.data == b.data && a.weight == b.weight && a.label == b.label;
    }
};

struct OrbifoldOptions {
    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
    int max_k = kDefaultMaxK;
    std::size_t max_modules = 2000;
    TwistedNormalization normalization = TwistedNormalization::unitary;
    unsigned threads = 0;  ///< 0: hardware concurrency
};

/// Minimal conformal weight of an orbifold module.
inline Rational compute_orbifold_weight(const ModularData& md, int k, const OrbifoldModule& m) {
    return std::visit(
        [&](const auto& v) -> Rational {
            using M = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<M, UntwistedNecklace>) {
                return twisted_weight(md, {0, v.tuple}, k);
            } else if constexpr (std::is_same_v<M, UntwistedDiagonal>) {
                return md.weights.at(v.label) * k + Rational(detail::mod(-v.eigen, k));
            } else {
                const auto lbl = m.tensor_label(k);
                const auto cc = cycle_constants(lbl.sector, 0, k);
                const auto n0 = detail::mod(-static_cast<std::int64_t>(v.eigen) * cc.m, cc.l);
                return twisted_weight(md, lbl, k) + Rational(n0, cc.l);
            }
        },
        m.data);
}

namespace detail {

inline std::string join_labels(const ModularData& md, const LabelTuple& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + md.labels.at(t[i]);
    return out;
}

inline std::string module_label(const ModularData& md, int k, const OrbifoldModule& m) {
    return std::visit(
        [&](const auto& v) -> std::string {
            using M = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<M, UntwistedNecklace>)
                return "W(" + join_labels(md, v.tuple) + ")";
            else if constexpr (std::is_same_v<M, UntwistedDiagonal>)
                return "W(" + md.labels.at(v.label) + "^" + std::to_string(k) + ")^" + std::to_string(v.eigen);
            else if constexpr (std::is_same_v<M, TwistedConstant>)
                return "T[g^" + std::to_string(v.sector) + "](" + md.labels.at(v.label) + "^" +
                       std::to_string(std::gcd(v.sector, k)) + ")^" + std::to_string(v.eigen);
            else
                return "T[g^" + std::to_string(v.sector) + "](" + join_labels(md, v.tuple) + ")^" +
                       std::to_string(v.eigen);
        },
        m.data);
}

}  // namespace detail

/// All irreducible modules in catalog order: family 1 (sorted necklaces),
/// family 2 (by label, then eigen), then per sector s family 3 and family 4.
inline std::vector<OrbifoldModule> catalog(const ModularData& md, int k, const OrbifoldOptions& opt = {}) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (k > opt.max_k) throw BudgetExceeded("k = " + std::to_string(k) + " exceeds the limit " + std::to_string(opt.max_k));
    const int rank = static_cast<int>(md.rank());
    if (rank < 1) throw std::invalid_argument("modular data must have rank >= 1");
    std::vector<OrbifoldModule> out;
    auto add = [&](auto v) {
        OrbifoldModule m{std::move(v), Rational(0), {}};
        m.weight = compute_orbifold_weight(md, k, m);
        m.label = detail::module_label(md, k, m);
        out.push_back(std::move(m));
    };
    for (auto& t : necklaces(rank, k, true, opt.enumeration_budget)) add(UntwistedNecklace{std::move(t)});
    for (int j = 0; j < rank; ++j)
        for (int n = 0; n < k; ++n) add(UntwistedDiagonal{j, n});
    for (int s = 1; s < k; ++s) {
        const auto cc = cycle_constants(s, 0, k);
        for (int j = 0; j < rank; ++j)
            for (int n = 0; n < k; ++n) add(TwistedConstant{s, j, n});
        for (auto& t : necklaces(rank, cc.d, true, opt.enumeration_budget))
            for (int e = 0; e < cc.l; ++e) add(TwistedNecklace{s, t, e});
    }
    return out;
}

/// Exponent e with G_M = <g^e> as claimed for each family (e = k: trivial).
inline int stabilizer_step(const OrbifoldModule& m, int k) {
    switch (m.family()) {
        case 1: return k;
        case 4: return std::gcd(m.sector(), k);
        default: return 1;
    }
}

namespace detail {

inline ComplexHP s_product(const CMatrix& s, const LabelTuple& a, const LabelTuple& b, std::size_t count) {
    ComplexHP v(1);
    for (std::size_t t = 0; t < count; ++t) v *= s(a[t], b[t]);
    return v;
}

inline LabelTuple prefix(const LabelTuple& t, int n) { return LabelTuple(t.begin(), t.begin() + n); }

}  // namespace detail

/// Closed-form entry S(a, b). Pairs with an untwisted first argument and a
/// twisted second argument are filled by symmetry.
inline ComplexHP closed_form_entry(const TensorSector& ts, const OrbifoldModule& a, const OrbifoldModule& b) {
    const int k = ts.k();
    const auto& md = ts.data();
    const auto& s_mat = md.s_matrix;
    if (!a.twisted() && b.twisted()) return closed_form_entry(ts, b, a);

    if (!a.twisted()) {
        const auto* an = std::get_if<UntwistedNecklace>(&a.data);
        const auto* bn = std::get_if<UntwistedNecklace>(&b.data);
        const auto* ad = std::get_if<UntwistedDiagonal>(&a.data);
        const auto* bd = std::get_if<UntwistedDiagonal>(&b.data);
        if (ad && bd) {
            ComplexHP v(1);
            for (int t = 0; t < k; ++t) v *= s_mat(ad->label, bd->label);
            return v * (Real(1) / k);
        }
        if (an && bn) {
            ComplexHP sum;
            for (int n = 0; n < k; ++n) {
                ComplexHP v(1);
                for (int t = 0; t < k; ++t) v *= s_mat(an->tuple[t], bn->tuple[(t + n) % k]);
                sum += v;
            }
            return sum;
        }
        const auto& tuple = an ? an->tuple : bn->tuple;
        const int j = ad ? ad->label : bd->label;
        ComplexHP v(1);
        for (int i : tuple) v *= s_mat(i, j);
        return v;
    }

    // a is twisted: sector r, d1-tuple I, eigen t.
    const auto la = a.tensor_label(k);
    const int r = la.sector, t = a.eigen();
    const int d1 = std::gcd(r, k), l1 = k / d1;
    const Real pref = Real(1) / (a.family() == 3 ? k : l1);

    if (const auto* bd = std::get_if<UntwistedDiagonal>(&b.data)) {
        ComplexHP v = phase_to_complex(make_phase(static_cast<std::int64_t>(r) * bd->eigen, k));
        for (int i : la.tuple) v *= s_mat(i, bd->label);
        return v * pref;
    }
    if (const auto* bn = std::get_if<UntwistedNecklace>(&b.data)) {
        if (d1 <= 1 || d1 % minimal_period(bn->tuple) != 0) return ComplexHP();
        ComplexHP sum;
        for (int i = 0; i < r; ++i) sum += detail::s_product(s_mat, rotate_tuple(bn->tuple, i), la.tuple, d1);
        return sum * pref;
    }

    // both twisted: b in sector s with d-tuple J and eigen t1.
    const auto lb = b.tensor_label(k);
    const int s = lb.sector, t1 = b.eigen();
    if (a.family() == 4 && s % d1 != 0) return ComplexHP();
    const auto cc = cycle_constants(s, r, k);
    if (cc.f % minimal_period(lb.tuple) != 0 || cc.f % minimal_period(la.tuple) != 0) return ComplexHP();
    const auto i_pre = detail::prefix(la.tuple, cc.f);
    ComplexHP sum;
    if (b.family() == 3) {
        sum = ts.twisted_twisted(r, s, i_pre, detail::prefix(lb.tuple, cc.f));
    } else {
        for (int i = 0; i < cc.d; ++i) sum += ts.twisted_twisted(r, s, i_pre, detail::prefix(rotate_tuple(lb.tuple, i), cc.f));
    }
    const auto ph = make_phase(static_cast<std::int64_t>(s) * t + static_cast<std::int64_t>(r) * t1, k);
    return phase_to_complex(ph) * sum * pref;
}

/// General orbit-sum entry: (1/|G_i|) sum over N in C_ij of S_{M^i, N}
/// times conj(lambda_i(g_j)) mu_j(g_i^{-1}), where C_ij collects the distinct
/// members of the orbit of M^j whose sector lies in G_i and which are
/// g_i^{-1}-stable.
inline ComplexHP generic_entry(const TensorSector& ts, const OrbifoldModule& mi, const OrbifoldModule& mj) {
    const int k = ts.k();
    const auto li = mi.tensor_label(k), lj = mj.tensor_label(k);
    const int r = li.sector, s = lj.sector;
    const int step = stabilizer_step(mi, k);
    if (s % step != 0) return ComplexHP();
    const int len = static_cast<int>(lj.tuple.size());
    const int fix = std::gcd(r, len);
    std::set<LabelTuple> orbit;
    for (int u = 0; u < len; ++u) orbit.insert(rotate_tuple(lj.tuple, u));
    ComplexHP sum;
    bool any = false;
    for (const auto& n : orbit) {
        if (fix % minimal_period(n) != 0) continue;
        auto v = ts.entry(li, {s, n});
        if (!v) continue;
        sum += *v;
        any = true;
    }
    if (!any) return ComplexHP();
    const int order = k / step;
    const auto ph = make_phase(static_cast<std::int64_t>(mi.eigen()) * s + static_cast<std::int64_t>(mj.eigen()) * r, k);
    return phase_to_complex(ph) * sum * (Real(1) / order);
}

inline ComplexHP closed_form_entry(const ModularData& md, int k, const OrbifoldModule& a, const OrbifoldModule& b) {
    return closed_form_entry(TensorSector(md, k), a, b);
}

inline ComplexHP generic_entry(const ModularData& md, int k, const OrbifoldModule& a, const OrbifoldModule& b) {
    return generic_entry(TensorSector(md, k), a, b);
}

enum class Engine { theorem, generic, both };

inline std::string to_string(Engine e) {
    switch (e) {
        case Engine::theorem: return "theorem";
        case Engine::generic: return "generic";
        case Engine::both: return "both";
    }
    return "?";
}

inline Engine parse_engine(const std::string& s) {
    if (s == "theorem") return Engine::theorem;
    if (s == "generic") return Engine::generic;
    if (s == "both") return Engine::both;
    throw std::invalid_argument("unknown engine '" + s + "' (expected theorem, generic or both)");
}

struct OrbifoldResult {
    int k = 1;
    std::vector<OrbifoldModule> modules;
    CMatrix s_matrix;
    std::vector<Phase> t_phases;
    Rational central_charge{0};
    std::size_t vacuum = 0;
    std::optional<Real> engine_diff;  ///< set when both engines ran
};

namespace detail {

template <class F>
CMatrix fill_matrix(std::size_t n, unsigned threads, F entry) {
    CMatrix m(n, n);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(i, j);
    };
    if (threads <= 1) {
        work();
        return m;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            try {
                work();
            } catch (...) {
                errors[w] = std::current_exception();
                next = n;
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return m;
}

}  // namespace detail

inline std::size_t find_vacuum(const std::vector<OrbifoldModule>& modules) {
    for (std::size_t i = 0; i < modules.size(); ++i)
        if (modules[i].data == OrbifoldModule::Variant(UntwistedDiagonal{0, 0})) return i;
    throw std::logic_error("catalog has no vacuum module");
}

inline OrbifoldResult orbifold_s_matrix(const ModularData& md, int k, Engine engine = Engine::theorem,
                                        const OrbifoldOptions& opt = {}) {
    check_shape(md);
    OrbifoldResult res;
    res.k = k;
    res.modules = catalog(md, k, opt);
    res.central_charge = md.central_charge * k;
    if (k == 1) {
        for (std::size_t i = 0; i < res.modules.size(); ++i) res.modules[i].label = md.labels[i];
        res.s_matrix = md.s_matrix;
        res.t_phases = t_matrix(md);
        res.vacuum = 0;
        if (engine == Engine::both) res.engine_diff = Real(0);
        return res;
    }
    const auto n = res.modules.size();
    if (n > opt.max_modules)
        throw BudgetExceeded("catalog has " + std::to_string(n) + " modules, above the limit " +
                             std::to_string(opt.max_modules));
    res.vacuum = find_vacuum(res.modules);
    for (const auto& m : res.modules) res.t_phases.emplace_back(m.weight - res.central_charge / 24);

    const TensorSector ts(md, k, opt.normalization);
    const auto& mods = res.modules;
    auto theorem = [&] {
        return detail::fill_matrix(n, opt.threads, [&](std::size_t i, std::size_t j) { return closed_form_entry(ts, mods[i], mods[j]); });
    };
    auto generic = [&] {
        return detail::fill_matrix(n, opt.threads, [&](std::size_t i, std::size_t j) { return generic_entry(ts, mods[i], mods[j]); });
    };
    switch (engine) {
        case Engine::theorem: res.s_matrix = theorem(); break;
        case Engine::generic: res.s_matrix = generic(); break;
        case Engine::both: {
            res.s_matrix = theorem();
            res.engine_diff = max_abs_diff(res.s_matrix, generic());
            break;
        }
    }
    return res;
}

}  // namespace permorb
