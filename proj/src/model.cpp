#include "dcrit/model.hpp"

#include <sstream>

namespace dcrit {

std::string model_kind_str(ModelKind k) {
    switch (k) {
        case ModelKind::ZeroLocus: return "O(mu^-1(0))";
        case ModelKind::CriticalLocus: return "O(Z)";
        case ModelKind::BV: return "O(BV)";
    }
    return "?";
}

namespace {

// Rebuilds p over a (possibly larger) variable table whose leading
// variables match p's context by name.
Polynomial transfer_poly(const Polynomial& p, const VarTable* to) {
    const VarTable* from = p.ctx();
    if (from->size() > to->size()) throw std::logic_error("transfer_poly: shrinking table");
    for (int i = 0; i < from->size(); ++i)
        if (from->var(i).name != to->var(i).name)
            throw std::logic_error("transfer_poly: table mismatch");
    Polynomial out(to);
    for (const auto& [e, c] : p.terms()) {
        Expo ee(static_cast<size_t>(to->size()), 0);
        std::copy(e.begin(), e.end(), ee.begin());
        out.add_term(ee, c);
    }
    return out;
}

using ATensorH = std::map<HKey, Polynomial>;

ATensorH ath_mul(const HopfAlgebra& H, const ATensorH& a, const ATensorH& b) {
    ATensorH out;
    for (const auto& [ka, pa] : a)
        for (const auto& [kb, pb] : b) {
            auto pr = H.product(ka, kb);
            if (!pr) continue;
            Polynomial p = (pa * pb).scaled(pr->second);
            if (p.is_zero()) continue;
            auto it = out.find(pr->first);
            if (it == out.end()) {
                out.emplace(pr->first, p);
            } else {
                it->second = it->second + p;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

ATensorH ath_pow(const HopfAlgebra& H, const ATensorH& base, int n, const VarTable* ring) {
    ATensorH unit{{H.unit_key(), Polynomial::constant(ring, Rat(1))}};
    if (n == 0) return unit;
    if (n > 0) {
        ATensorH acc = unit;
        for (int i = 0; i < n; ++i) acc = ath_mul(H, acc, base);
        return acc;
    }
    // Negative powers: the coaction of a Laurent variable must be a single
    // invertible term.
    if (base.size() != 1)
        throw std::invalid_argument("coaction of a Laurent variable must be a single term");
    const auto& [k, p] = *base.begin();
    auto [sk, sc] = H.antipode(k); // inversion on the basis of every supported class
    ATensorH inv{{sk, p.pow(-1).scaled(sc)}};
    ATensorH acc = unit;
    for (int i = 0; i < -n; ++i) acc = ath_mul(H, acc, inv);
    return acc;
}

// Multiplicative extension of the variable coactions to polynomials.
ATensorH coact_poly(const HopfAlgebra& H, const std::vector<ATensorH>& on_var,
                    const Polynomial& p) {
    const VarTable* ring = p.ctx();
    ATensorH out;
    for (const auto& [e, c] : p.terms()) {
        ATensorH term{{H.unit_key(), Polynomial::constant(ring, c)}};
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            term = ath_mul(H, term, ath_pow(H, on_var[i], e[i], ring));
        }
        for (const auto& [k, q] : term) {
            auto it = out.find(k);
            if (it == out.end()) {
                out.emplace(k, q);
            } else {
                it->second = it->second + q;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

// delta(dx_j) = sum_i dx_i (x) q[j][i]; entries must be constant for the
// induced coaction on the frame of vector fields to stay in H.
std::vector<std::vector<HElt>> frame_coaction_matrix(const ModelInput& in) {
    const int n = static_cast<int>(in.coaction.size());
    std::vector<std::vector<HElt>> q(static_cast<size_t>(n), std::vector<HElt>(static_cast<size_t>(n)));
    for (int j = 0; j < n; ++j) {
        for (const auto& [k, p] : in.coaction[static_cast<size_t>(j)]) {
            for (int i = 0; i < n; ++i) {
                Polynomial dp = p.derivative(i);
                if (dp.is_zero()) continue;
                if (!dp.is_constant())
                    throw std::invalid_argument(
                        "coaction on vector fields leaves H: the action must be affine-linear "
                        "in the variables (offending variable: " + in.ring->var(j).name + ")");
                helt_add(q[static_cast<size_t>(j)][static_cast<size_t>(i)], k, dp.constant_value());
            }
        }
    }
    return q;
}

} // namespace

Derivation DgModel::differential() const {
    return Derivation(&ctx(), 1, d_var, d_gen, false);
}

Derivation DgModel::rho(int a) const {
    std::vector<GradedElement> ov, og;
    for (int v = 0; v < ctx().vars.size(); ++v) {
        GradedElement val(&ctx());
        for (const auto& [k, p] : var_coaction[static_cast<size_t>(v)]) {
            Rat x = H->xi_eval(a, k);
            if (x != 0) val = val + GradedElement::from_poly(&ctx(), p.scaled(x));
        }
        ov.push_back(val);
    }
    for (int g = 0; g < ctx().gen_count(); ++g) {
        GradedElement val(&ctx());
        for (const auto& [k, e] : gen_coaction[static_cast<size_t>(g)]) {
            Rat x = H->xi_eval(a, k);
            if (x != 0) val = val + e.scaled(x);
        }
        og.push_back(val);
    }
    return Derivation(&ctx(), 0, std::move(ov), std::move(og), false);
}

GradedElement DgModel::moment_map(int a) const {
    GradedElement out(&ctx());
    Derivation r = rho(a);
    for (int i = 0; i < num_x; ++i) {
        GradedElement rx = r.value_on_var(i);
        if (rx.is_zero()) continue;
        GradedElement v = (kind == ModelKind::ZeroLocus)
                              ? var_elem(antifield[static_cast<size_t>(i)])
                              : gen_elem(antifield[static_cast<size_t>(i)]);
        out = out - rx * v;
    }
    return out;
}

std::map<HKey, GradedElement> DgModel::coact(const GradedElement& e) const {
    std::map<HKey, GradedElement> acc{{H->unit_key(), GradedElement::constant(&ctx(), Rat(1))}};
    auto mul_in = [&](const std::map<HKey, GradedElement>& fac) {
        std::map<HKey, GradedElement> next;
        for (const auto& [k1, e1] : acc)
            for (const auto& [k2, e2] : fac) {
                auto pr = H->product(k1, k2);
                if (!pr) continue;
                GradedElement prod = (e1 * e2).scaled(pr->second);
                if (prod.is_zero()) continue;
                auto it = next.find(pr->first);
                if (it == next.end())
                    next.emplace(pr->first, prod);
                else {
                    it->second = it->second + prod;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        acc = std::move(next);
    };

    std::map<HKey, GradedElement> out;
    for (const auto& [w, p] : e.terms()) {
        for (const auto& [expo, c] : p.terms()) {
            acc = {{H->unit_key(), GradedElement::constant(&ctx(), c)}};
            for (size_t i = 0; i < expo.size(); ++i) {
                if (expo[i] == 0) continue;
                ATensorH powed = ath_pow(*H, var_coaction[i], expo[i], &ctx().vars);
                std::map<HKey, GradedElement> fac;
                for (const auto& [k, q] : powed)
                    fac.emplace(k, GradedElement::from_poly(&ctx(), q));
                mul_in(fac);
            }
            for (auto [g, ee] : w)
                for (int rep = 0; rep < ee; ++rep) mul_in(gen_coaction[static_cast<size_t>(g)]);
            for (const auto& [k, val] : acc) {
                auto it = out.find(k);
                if (it == out.end())
                    out.emplace(k, val);
                else {
                    it->second = it->second + val;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
    }
    return out;
}

bool DgModel::exact_mode_ok(std::string* why) const {
    for (int v = 0; v < ctx().vars.size(); ++v) {
        const Variable& var = ctx().vars.var(v);
        if (var.laurent) {
            if (why) *why = "Laurent variable " + var.name + " makes weight components infinite";
            return false;
        }
        if (var.weight <= 0) {
            if (why) *why = "variable " + var.name + " has non-positive weight";
            return false;
        }
    }
    for (int g = 0; g < ctx().gen_count(); ++g) {
        if (!ctx().gen_odd(g) && ctx().gen(g).weight <= 0) {
            if (why) *why = "even generator " + ctx().gen(g).name + " has non-positive weight";
            return false;
        }
    }
    return true;
}

namespace {

struct CommonBuild {
    int weight_f = 0;
    bool f_zero = false;
    std::vector<int> v_weight;
};

CommonBuild resolve_weights(const ModelInput& in) {
    CommonBuild out;
    out.f_zero = in.f.is_zero();
    auto wf = in.f.weight();
    if (!wf) throw std::invalid_argument("f must be weight-homogeneous");
    out.weight_f = *wf;
    int n = in.ring->size();
    for (int i = 0; i < n; ++i) {
        const std::string& name = in.ring->var(i).name;
        auto it = in.antifield_weight.find(name);
        if (out.f_zero) {
            if (it == in.antifield_weight.end())
                throw std::invalid_argument(
                    "f = 0: antifield weight for " + name + " must be supplied");
            out.v_weight.push_back(it->second);
        } else {
            int forced = out.weight_f - in.ring->var(i).weight;
            if (it != in.antifield_weight.end() && it->second != forced)
                throw std::invalid_argument("antifield weight for " + name +
                                            " contradicts homogeneity of f");
            out.v_weight.push_back(forced);
        }
    }
    return out;
}

void attach_coactions(DgModel& m, const ModelInput& in,
                      const std::vector<std::vector<HElt>>& frame_q) {
    const HopfAlgebra& H = *in.H;
    int n = in.ring->size();
    // variables of the model: x_i first, possibly v-variables afterwards
    m.var_coaction.assign(static_cast<size_t>(m.ctx().vars.size()), {});
    for (int i = 0; i < n; ++i)
        for (const auto& [k, p] : in.coaction[static_cast<size_t>(i)])
            m.var_coaction[static_cast<size_t>(i)][k] = transfer_poly(p, &m.ctx().vars);

    // delta(dx_j) = sum_i dx_i (x) q[j][i]; the dual frame picks up the
    // antipode of the transpose: delta(v_j) = sum_i v_i (x) S(q[i][j]).
    auto antifield_coaction = [&](int j) {
        std::map<HKey, GradedElement> out;
        for (int i = 0; i < n; ++i) {
            HElt s = H.antipode_elt(frame_q[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            for (const auto& [k, c] : s) {
                GradedElement v = (m.kind == ModelKind::ZeroLocus)
                                      ? m.var_elem(m.antifield[static_cast<size_t>(i)])
                                      : m.gen_elem(m.antifield[static_cast<size_t>(i)]);
                auto it = out.find(k);
                GradedElement add = v.scaled(c);
                if (it == out.end())
                    out.emplace(k, add);
                else {
                    it->second = it->second + add;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return out;
    };

    m.gen_coaction.assign(static_cast<size_t>(m.ctx().gen_count()), {});
    if (m.kind == ModelKind::ZeroLocus) {
        for (int j = 0; j < n; ++j) {
            auto co = antifield_coaction(j);
            // v_j is a variable here; its coaction entries are polynomials
            auto& slot = m.var_coaction[static_cast<size_t>(m.antifield[static_cast<size_t>(j)])];
            for (const auto& [k, e] : co) {
                Polynomial p(&m.ctx().vars);
                for (const auto& [w, q] : e.terms()) {
                    if (!w.empty()) throw std::logic_error("antifield coaction left degree 0");
                    p = p + q;
                }
                slot[k] = p;
            }
        }
    } else {
        for (int j = 0; j < n; ++j)
            m.gen_coaction[static_cast<size_t>(m.antifield[static_cast<size_t>(j)])] =
                antifield_coaction(j);
    }

    // ghost-antifields: dual of the adjoint coaction on g*
    int d = H.lie_dim();
    if (d > 0) {
        auto M = H.adjoint_coaction_gstar();
        for (int a = 0; a < d; ++a) {
            std::map<HKey, GradedElement> out;
            for (int b = 0; b < d; ++b) {
                HElt s = H.antipode_elt(M[static_cast<size_t>(b)][static_cast<size_t>(a)]);
                for (const auto& [k, c] : s) {
                    GradedElement xi = m.gen_elem(m.ghost_antifield[static_cast<size_t>(b)]);
                    auto it = out.find(k);
                    GradedElement add = xi.scaled(c);
                    if (it == out.end())
                        out.emplace(k, add);
                    else {
                        it->second = it->second + add;
                        if (it->second.is_zero()) out.erase(it);
                    }
                }
            }
            m.gen_coaction[static_cast<size_t>(m.ghost_antifield[static_cast<size_t>(a)])] = out;
        }
        // ghosts carry the adjoint coaction on g* itself
        if (m.kind == ModelKind::BV) {
            for (int a = 0; a < d; ++a) {
                std::map<HKey, GradedElement> out;
                for (int b = 0; b < d; ++b) {
                    for (const auto& [k, c] : M[static_cast<size_t>(a)][static_cast<size_t>(b)]) {
                        GradedElement th = m.gen_elem(m.ghost[static_cast<size_t>(b)]);
                        auto it = out.find(k);
                        GradedElement add = th.scaled(c);
                        if (it == out.end())
                            out.emplace(k, add);
                        else {
                            it->second = it->second + add;
                            if (it->second.is_zero()) out.erase(it);
                        }
                    }
                }
                m.gen_coaction[static_cast<size_t>(m.ghost[static_cast<size_t>(a)])] = out;
            }
        }
    }
}

int ghost_antifield_weight(const DgModel& m, const ModelInput& in, int a, int shifted_degree) {
    (void)shifted_degree;
    GradedElement mu = m.moment_map(a);
    if (!mu.is_zero()) {
        auto w = mu.weight();
        if (!w)
            throw std::invalid_argument("moment map of xi_" + std::to_string(a + 1) +
                                        " is not weight-homogeneous");
        auto it = in.ghost_weight.find(a);
        if (it != in.ghost_weight.end() && it->second != *w)
            throw std::invalid_argument("ghost-antifield weight override contradicts mu*");
        return *w;
    }
    auto it = in.ghost_weight.find(a);
    if (it == in.ghost_weight.end())
        throw std::invalid_argument("mu*(xi_" + std::to_string(a + 1) +
                                    ") = 0: ghost-antifield weight must be supplied");
    return it->second;
}

} // namespace

DgModel build_critical_locus(const ModelInput& in) {
    auto inv = check_invariance(in);
    if (!inv.ok) throw std::invalid_argument("f is not invariant: " + inv.detail);
    CommonBuild cb = resolve_weights(in);
    const int n = in.ring->size();
    const int d = in.H->lie_dim();

    DgModel m;
    m.kind = ModelKind::CriticalLocus;
    m.H = in.H;
    m.num_x = n;
    for (int i = 0; i < n; ++i) m.ctx().vars.add(in.ring->var(i));
    m.f = transfer_poly(in.f, &m.ctx().vars);
    for (int i = 0; i < n; ++i)
        m.antifield.push_back(m.ctx().add_gen({"v_" + in.ring->var(i).name, -1,
                                               cb.v_weight[static_cast<size_t>(i)],
                                               GenKind::Antifield}));
    auto frame_q = frame_coaction_matrix(in);
    // ghost-antifields need rho, which needs the variable coactions; add
    // the generators in two passes.
    m.var_coaction.assign(static_cast<size_t>(m.ctx().vars.size()), {});
    for (int i = 0; i < n; ++i)
        for (const auto& [k, p] : in.coaction[static_cast<size_t>(i)])
            m.var_coaction[static_cast<size_t>(i)][k] = transfer_poly(p, &m.ctx().vars);
    m.gen_coaction.assign(static_cast<size_t>(m.ctx().gen_count()), {});

    for (int a = 0; a < d; ++a) {
        int w = ghost_antifield_weight(m, in, a, -2);
        m.ghost_antifield.push_back(
            m.ctx().add_gen({"xi_" + std::to_string(a + 1), -2, w, GenKind::GhostAntifield}));
    }
    attach_coactions(m, in, frame_q);

    m.d_var.assign(static_cast<size_t>(m.ctx().vars.size()), GradedElement(&m.ctx()));
    m.d_gen.assign(static_cast<size_t>(m.ctx().gen_count()), GradedElement(&m.ctx()));
    for (int i = 0; i < n; ++i)
        m.d_gen[static_cast<size_t>(m.antifield[static_cast<size_t>(i)])] =
            GradedElement::from_poly(&m.ctx(), m.f.derivative(i));
    for (int a = 0; a < d; ++a)
        m.d_gen[static_cast<size_t>(m.ghost_antifield[static_cast<size_t>(a)])] = m.moment_map(a);

    auto wh = check_weight_homogeneity(m);
    if (!wh.ok)
        throw std::invalid_argument("differential is not weight-homogeneous: " + wh.detail);
    return m;
}

DgModel build_zero_locus(const ModelInput& in) {
    auto inv = check_invariance(in);
    if (!inv.ok) throw std::invalid_argument("f is not invariant: " + inv.detail);
    CommonBuild cb = resolve_weights(in);
    const int n = in.ring->size();
    const int d = in.H->lie_dim();

    DgModel m;
    m.kind = ModelKind::ZeroLocus;
    m.H = in.H;
    m.num_x = n;
    for (int i = 0; i < n; ++i) m.ctx().vars.add(in.ring->var(i));
    for (int i = 0; i < n; ++i)
        m.antifield.push_back(m.ctx().vars.add(
            {"v_" + in.ring->var(i).name, cb.v_weight[static_cast<size_t>(i)], false}));
    m.f = transfer_poly(in.f, &m.ctx().vars);
    auto frame_q = frame_coaction_matrix(in);

    m.var_coaction.assign(static_cast<size_t>(m.ctx().vars.size()), {});
    for (int i = 0; i < n; ++i)
        for (const auto& [k, p] : in.coaction[static_cast<size_t>(i)])
            m.var_coaction[static_cast<size_t>(i)][k] = transfer_poly(p, &m.ctx().vars);
    m.gen_coaction.assign(static_cast<size_t>(m.ctx().gen_count()), {});

    for (int a = 0; a < d; ++a) {
        int w = ghost_antifield_weight(m, in, a, -1);
        m.ghost_antifield.push_back(
            m.ctx().add_gen({"xi_" + std::to_string(a + 1), -1, w, GenKind::GhostAntifield}));
    }
    attach_coactions(m, in, frame_q);

    m.d_var.assign(static_cast<size_t>(m.ctx().vars.size()), GradedElement(&m.ctx()));
    m.d_gen.assign(static_cast<size_t>(m.ctx().gen_count()), GradedElement(&m.ctx()));
    for (int a = 0; a < d; ++a)
        m.d_gen[static_cast<size_t>(m.ghost_antifield[static_cast<size_t>(a)])] = m.moment_map(a);

    auto wh = check_weight_homogeneity(m);
    if (!wh.ok)
        throw std::invalid_argument("differential is not weight-homogeneous: " + wh.detail);
    return m;
}

DgModel build_bv(const ModelInput& in) {
    auto inv = check_invariance(in);
    if (!inv.ok) throw std::invalid_argument("f is not invariant: " + inv.detail);
    CommonBuild cb = resolve_weights(in);
    const int n = in.ring->size();
    const int d = in.H->lie_dim();

    DgModel m;
    m.kind = ModelKind::BV;
    m.H = in.H;
    m.num_x = n;
    for (int i = 0; i < n; ++i) m.ctx().vars.add(in.ring->var(i));
    m.f = transfer_poly(in.f, &m.ctx().vars);
    for (int i = 0; i < n; ++i)
        m.antifield.push_back(m.ctx().add_gen({"v_" + in.ring->var(i).name, -1,
                                               cb.v_weight[static_cast<size_t>(i)],
                                               GenKind::Antifield}));
    auto frame_q = frame_coaction_matrix(in);
    m.var_coaction.assign(static_cast<size_t>(m.ctx().vars.size()), {});
    for (int i = 0; i < n; ++i)
        for (const auto& [k, p] : in.coaction[static_cast<size_t>(i)])
            m.var_coaction[static_cast<size_t>(i)][k] = transfer_poly(p, &m.ctx().vars);
    m.gen_coaction.assign(static_cast<size_t>(m.ctx().gen_count()), {});

    for (int a = 0; a < d; ++a) {
        int w = ghost_antifield_weight(m, in, a, -2);
        m.ghost_antifield.push_back(
            m.ctx().add_gen({"xi_" + std::to_string(a + 1), -2, w, GenKind::GhostAntifield}));
    }
    for (int a = 0; a < d; ++a)
        m.ghost.push_back(
            m.ctx().add_gen({"theta_" + std::to_string(a + 1), 1, 0, GenKind::Ghost}));
    attach_coactions(m, in, frame_q);

    m.d_var.assign(static_cast<size_t>(m.ctx().vars.size()), GradedElement(&m.ctx()));
    m.d_gen.assign(static_cast<size_t>(m.ctx().gen_count()), GradedElement(&m.ctx()));
    for (int i = 0; i < n; ++i)
        m.d_gen[static_cast<size_t>(m.antifield[static_cast<size_t>(i)])] =
            GradedElement::from_poly(&m.ctx(), m.f.derivative(i));
    for (int a = 0; a < d; ++a)
        m.d_gen[static_cast<size_t>(m.ghost_antifield[static_cast<size_t>(a)])] = m.moment_map(a);

    auto wh = check_weight_homogeneity(m);
    if (!wh.ok)
        throw std::invalid_argument("differential is not weight-homogeneous: " + wh.detail);
    return m;
}

CheckResult check_invariance(const ModelInput& in) {
    const HopfAlgebra& H = *in.H;
    ATensorH df = coact_poly(H, in.coaction, in.f);
    ATensorH expect;
    if (!in.f.is_zero()) expect[H.unit_key()] = in.f;
    if (df != expect) {
        // report the offending coaction term
        for (const auto& [k, p] : df) {
            Polynomial want = H.is_unit_key(k) ? in.f : Polynomial(in.ring.get());
            if (!(p == want)) {
                Polynomial witness = p - want;
                return {false, "delta(f) - f(x)1 has term (" + witness.str() + ") (x) " +
                                   H.key_str(k)};
            }
        }
        return {false, "delta(f) != f (x) 1"};
    }
    // infinitesimal check
    for (int a = 0; a < H.lie_dim(); ++a) {
        Polynomial r(in.ring.get());
        for (const auto& [k, p] : df) r = r + p.scaled(H.xi_eval(a, k));
        if (!r.is_zero())
            return {false, "rho(xi_" + std::to_string(a + 1) + ")(f) = " + r.str()};
    }
    return {true, ""};
}

CheckResult check_coaction_axioms(const ModelInput& in) {
    const HopfAlgebra& H = *in.H;
    int n = in.ring->size();
    for (int i = 0; i < n; ++i) {
        const ATensorH& ci = in.coaction[static_cast<size_t>(i)];
        // counit law
        Polynomial back(in.ring.get());
        for (const auto& [k, p] : ci) back = back + p.scaled(H.counit(k));
        if (!(back == Polynomial::variable(in.ring.get(), i)))
            return {false, "(id (x) eps) delta != id on " + in.ring->var(i).name};
        // coassociativity
        std::map<std::pair<HKey, HKey>, Polynomial> lhs, rhs;
        for (const auto& [k, p] : ci) {
            ATensorH dp = coact_poly(H, in.coaction, p);
            for (const auto& [k2, p2] : dp) {
                auto key = std::make_pair(k2, k);
                auto it = lhs.find(key);
                if (it == lhs.end())
                    lhs.emplace(key, p2);
                else {
                    it->second = it->second + p2;
                    if (it->second.is_zero()) lhs.erase(it);
                }
            }
            for (const auto& [h1, h2, c] : H.coproduct(k)) {
                auto key = std::make_pair(h1, h2);
                Polynomial add = p.scaled(c);
                auto it = rhs.find(key);
                if (it == rhs.end()) {
                    if (!add.is_zero()) rhs.emplace(key, add);
                } else {
                    it->second = it->second + add;
                    if (it->second.is_zero()) rhs.erase(it);
                }
            }
        }
        if (lhs != rhs)
            return {false, "coaction coassociativity fails on " + in.ring->var(i).name};
    }
    return {true, ""};
}

CheckResult verify_d_squared(const DgModel& m) {
    Derivation d = m.differential();
    for (int v = 0; v < m.ctx().vars.size(); ++v) {
        GradedElement r = d.apply(m.d_var[static_cast<size_t>(v)]);
        if (!r.is_zero())
            return {false, "d^2(" + m.ctx().vars.var(v).name + ") = " + r.str()};
    }
    for (int g = 0; g < m.ctx().gen_count(); ++g) {
        GradedElement r = d.apply(m.d_gen[static_cast<size_t>(g)]);
        if (!r.is_zero()) return {false, "d^2(" + m.ctx().gen(g).name + ") = " + r.str()};
    }
    return {true, ""};
}

CheckResult check_weight_homogeneity(const DgModel& m) {
    for (int v = 0; v < m.ctx().vars.size(); ++v) {
        const GradedElement& val = m.d_var[static_cast<size_t>(v)];
        if (val.is_zero()) continue;
        auto w = val.weight();
        if (!w || *w != m.ctx().vars.var(v).weight)
            return {false, "weight(d " + m.ctx().vars.var(v).name + ") != weight(" +
                               m.ctx().vars.var(v).name + ")"};
    }
    for (int g = 0; g < m.ctx().gen_count(); ++g) {
        const GradedElement& val = m.d_gen[static_cast<size_t>(g)];
        if (val.is_zero()) continue;
        auto w = val.weight();
        if (!w || *w != m.ctx().gen(g).weight)
            return {false,
                    "weight(d " + m.ctx().gen(g).name + ") != weight(" + m.ctx().gen(g).name + ")"};
        if (!val.is_homogeneous(m.ctx().gen(g).degree + 1))
            return {false, "d " + m.ctx().gen(g).name + " is not of degree " +
                               std::to_string(m.ctx().gen(g).degree + 1)};
    }
    return {true, ""};
}

CheckResult check_equivariance(const DgModel& m) {
    Derivation d = m.differential();
    auto check_one = [&](const GradedElement& gen_elem, const GradedElement& d_val,
                         const std::string& name) -> CheckResult {
        auto lhs = m.coact(d_val);
        auto rhs_src = m.coact(gen_elem);
        std::map<HKey, GradedElement> rhs;
        for (const auto& [k, e] : rhs_src) {
            GradedElement de = d.apply(e);
            if (!de.is_zero()) rhs.emplace(k, de);
        }
        if (lhs != rhs) return {false, "delta(d " + name + ") != (d (x) id) delta(" + name + ")"};
        return {true, ""};
    };
    for (int v = 0; v < m.ctx().vars.size(); ++v) {
        auto r = check_one(m.var_elem(v), m.d_var[static_cast<size_t>(v)], m.ctx().vars.var(v).name);
        if (!r.ok) return r;
    }
    for (int g = 0; g < m.ctx().gen_count(); ++g) {
        auto r = check_one(m.gen_elem(g), m.d_gen[static_cast<size_t>(g)], m.ctx().gen(g).name);
        if (!r.ok) return r;
    }
    return {true, ""};
}

} // namespace dcrit
