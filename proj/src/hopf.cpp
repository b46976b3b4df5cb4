#include "dcrit/hopf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dcrit/linalg.hpp"

namespace dcrit {

std::string group_class_str(GroupClass c) {
    switch (c) {
        case GroupClass::FiniteGroup: return "finite-group";
        case GroupClass::Torus: return "torus";
        case GroupClass::Multiplicative: return "multiplicative";
        case GroupClass::Additive: return "additive";
    }
    return "?";
}

void helt_add(HElt& a, const HKey& k, const Rat& c) {
    if (c == 0) return;
    auto it = a.find(k);
    if (it == a.end()) {
        a.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) a.erase(it);
    }
}

HElt helt_mul(const HopfAlgebra& H, const HElt& a, const HElt& b) {
    HElt out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            auto p = H.product(ka, kb);
            if (!p) continue;
            Rat c = ca * cb * p->second;
            helt_add(out, p->first, c);
        }
    return out;
}

HopfAlgebra HopfAlgebra::finite_group(
    std::vector<std::string> names,
    const std::map<std::pair<std::string, std::string>, std::string>& products) {
    HopfAlgebra H;
    H.cls_ = GroupClass::FiniteGroup;
    H.rank_ = 0;
    H.names_ = std::move(names);
    int n = static_cast<int>(H.names_.size());
    if (n == 0) throw std::invalid_argument("finite group needs at least one element");
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) {
        if (idx.count(H.names_[static_cast<size_t>(i)]))
            throw std::invalid_argument("duplicate group element name");
        idx[H.names_[static_cast<size_t>(i)]] = i;
    }
    H.table_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (const auto& [ab, c] : products) {
        auto ia = idx.find(ab.first), ib = idx.find(ab.second), ic = idx.find(c);
        if (ia == idx.end() || ib == idx.end() || ic == idx.end())
            throw std::invalid_argument("group table references unknown element");
        H.table_[static_cast<size_t>(ia->second)][static_cast<size_t>(ib->second)] = ic->second;
    }
    // The first listed element is the identity; fill the implied products.
    H.identity_ = 0;
    for (int i = 0; i < n; ++i) {
        auto& row_e = H.table_[0][static_cast<size_t>(i)];
        if (row_e == -1) row_e = i;
        auto& col_e = H.table_[static_cast<size_t>(i)][0];
        if (col_e == -1) col_e = i;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (H.table_[static_cast<size_t>(a)][static_cast<size_t>(b)] < 0)
                throw std::invalid_argument("incomplete group table: " +
                                            H.names_[static_cast<size_t>(a)] + "*" +
                                            H.names_[static_cast<size_t>(b)]);
    H.finite_validate_table();
    H.compute_lie();
    return H;
}

HopfAlgebra HopfAlgebra::torus(int rank) {
    if (rank < 1) throw std::invalid_argument("torus rank must be >= 1");
    HopfAlgebra H;
    H.cls_ = GroupClass::Torus;
    H.rank_ = rank;
    H.compute_lie();
    return H;
}

HopfAlgebra HopfAlgebra::multiplicative() {
    HopfAlgebra H;
    H.cls_ = GroupClass::Multiplicative;
    H.rank_ = 1;
    H.compute_lie();
    return H;
}

HopfAlgebra HopfAlgebra::additive() {
    HopfAlgebra H;
    H.cls_ = GroupClass::Additive;
    H.rank_ = 1;
    H.compute_lie();
    return H;
}

void HopfAlgebra::finite_validate_table() const {
    int n = order();
    // identity
    for (int a = 0; a < n; ++a)
        if (table_[static_cast<size_t>(identity_)][static_cast<size_t>(a)] != a ||
            table_[static_cast<size_t>(a)][static_cast<size_t>(identity_)] != a)
            throw std::invalid_argument("first listed element is not a unit of the table");
    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int ab = table_[static_cast<size_t>(a)][static_cast<size_t>(b)];
                int bc = table_[static_cast<size_t>(b)][static_cast<size_t>(c)];
                if (table_[static_cast<size_t>(ab)][static_cast<size_t>(c)] !=
                    table_[static_cast<size_t>(a)][static_cast<size_t>(bc)])
                    throw std::invalid_argument("non-associative group table");
            }
    // inverses
    auto& self = const_cast<HopfAlgebra&>(*this);
    self.inverse_.assign(static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table_[static_cast<size_t>(a)][static_cast<size_t>(b)] == identity_ &&
                table_[static_cast<size_t>(b)][static_cast<size_t>(a)] == identity_)
                self.inverse_[static_cast<size_t>(a)] = b;
        if (self.inverse_[static_cast<size_t>(a)] < 0)
            throw std::invalid_argument("group table is missing an inverse for " +
                                        names_[static_cast<size_t>(a)]);
    }
}

HKey HopfAlgebra::unit_key() const {
    switch (cls_) {
        case GroupClass::FiniteGroup: return {identity_};
        case GroupClass::Torus:
        case GroupClass::Multiplicative: return HKey(static_cast<size_t>(rank_), 0);
        case GroupClass::Additive: return {0};
    }
    return {};
}

std::string HopfAlgebra::key_str(const HKey& k) const {
    if (cls_ == GroupClass::FiniteGroup) return names_.at(static_cast<size_t>(k.at(0)));
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank_; ++i) {
        int e = k.at(static_cast<size_t>(i));
        if (e == 0) continue;
        if (!first) os << "*";
        os << hvar_name(i);
        if (e != 1) os << "^" << e;
        first = false;
    }
    if (first) return "1";
    return os.str();
}

Rat HopfAlgebra::counit(const HKey& k) const {
    switch (cls_) {
        case GroupClass::FiniteGroup: return Rat(k.at(0) == identity_ ? 1 : 0);
        case GroupClass::Torus:
        case GroupClass::Multiplicative: return Rat(1);
        case GroupClass::Additive: return Rat(k.at(0) == 0 ? 1 : 0);
    }
    return Rat(0);
}

std::pair<HKey, Rat> HopfAlgebra::antipode(const HKey& k) const {
    switch (cls_) {
        case GroupClass::FiniteGroup:
            return {{inverse_.at(static_cast<size_t>(k.at(0)))}, Rat(1)};
        case GroupClass::Torus:
        case GroupClass::Multiplicative: {
            HKey inv(k);
            for (int& e : inv) e = -e;
            return {inv, Rat(1)};
        }
        case GroupClass::Additive:
            return {k, Rat(k.at(0) % 2 == 0 ? 1 : -1)};
    }
    return {k, Rat(0)};
}

std::vector<std::tuple<HKey, HKey, Rat>> HopfAlgebra::coproduct(const HKey& k) const {
    std::vector<std::tuple<HKey, HKey, Rat>> out;
    switch (cls_) {
        case GroupClass::FiniteGroup: {
            int g = k.at(0);
            int n = order();
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (table_[static_cast<size_t>(a)][static_cast<size_t>(b)] == g)
                        out.emplace_back(HKey{a}, HKey{b}, Rat(1));
            break;
        }
        case GroupClass::Torus:
        case GroupClass::Multiplicative:
            out.emplace_back(k, k, Rat(1));
            break;
        case GroupClass::Additive: {
            int n = k.at(0);
            for (int j = 0; j <= n; ++j) {
                mpz_class binom;
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                             static_cast<unsigned long>(j));
                out.emplace_back(HKey{j}, HKey{n - j}, Rat(binom));
            }
            break;
        }
    }
    return out;
}

std::optional<std::pair<HKey, Rat>> HopfAlgebra::product(const HKey& a, const HKey& b) const {
    switch (cls_) {
        case GroupClass::FiniteGroup:
            // Pointwise product of indicator functions on the group.
            if (a.at(0) != b.at(0)) return std::nullopt;
            return std::make_pair(a, Rat(1));
        case GroupClass::Torus:
        case GroupClass::Multiplicative:
        case GroupClass::Additive: {
            HKey k(a);
            for (size_t i = 0; i < k.size(); ++i) k[i] += b.at(i);
            return std::make_pair(k, Rat(1));
        }
    }
    return std::nullopt;
}

HElt HopfAlgebra::counit_kernel_projection(const HElt& h) const {
    HElt out = h;
    Rat eps = counit_elt(h);
    helt_add(out, unit_key(), -eps);
    return out;
}

HElt HopfAlgebra::antipode_elt(const HElt& h) const {
    HElt out;
    for (const auto& [k, c] : h) {
        auto [sk, sc] = antipode(k);
        Rat v = c * sc;
        helt_add(out, sk, v);
    }
    return out;
}

Rat HopfAlgebra::counit_elt(const HElt& h) const {
    Rat out(0);
    for (const auto& [k, c] : h) out += c * counit(k);
    return out;
}

namespace {

// Exhaustive for finite groups; a window of basis monomials otherwise.
std::vector<HKey> validation_keys(const HopfAlgebra& H) {
    std::vector<HKey> keys;
    switch (H.cls()) {
        case GroupClass::FiniteGroup:
            for (int g = 0; g < H.order(); ++g) keys.push_back({g});
            break;
        case GroupClass::Torus:
        case GroupClass::Multiplicative: {
            std::vector<HKey> acc{HKey(static_cast<size_t>(H.rank()), 0)};
            for (int i = 0; i < H.rank(); ++i) {
                std::vector<HKey> next;
                for (const auto& k : acc)
                    for (int e = -2; e <= 2; ++e) {
                        HKey kk = k;
                        kk[static_cast<size_t>(i)] = e;
                        next.push_back(kk);
                    }
                acc = next;
            }
            keys = acc;
            break;
        }
        case GroupClass::Additive:
            for (int n = 0; n <= 6; ++n) keys.push_back({n});
            break;
    }
    return keys;
}

} // namespace

void HopfAlgebra::validate() const {
    auto keys = validation_keys(*this);
    for (const auto& k : keys) {
        auto dk = coproduct(k);
        // coassociativity
        std::map<std::vector<HKey>, Rat> left, right;
        for (const auto& [h1, h2, c] : dk) {
            for (const auto& [a, b, c2] : coproduct(h1)) {
                Rat v = c * c2;
                auto& slot = left[{a, b, h2}];
                slot += v;
                if (slot == 0) left.erase({a, b, h2});
            }
            for (const auto& [a, b, c2] : coproduct(h2)) {
                Rat v = c * c2;
                auto& slot = right[{h1, a, b}];
                slot += v;
                if (slot == 0) right.erase({h1, a, b});
            }
        }
        if (left != right)
            throw std::runtime_error("Hopf validation: coassociativity fails on " + key_str(k));
        // counit laws
        HElt lk, rk;
        for (const auto& [h1, h2, c] : dk) {
            Rat cl = c * counit(h1);
            helt_add(lk, h2, cl);
            Rat cr = c * counit(h2);
            helt_add(rk, h1, cr);
        }
        HElt self{{k, Rat(1)}};
        if (lk != self || rk != self)
            throw std::runtime_error("Hopf validation: counit law fails on " + key_str(k));
        // antipode: m(S (x) id) Delta = eta eps = m(id (x) S) Delta
        HElt s_left, s_right;
        for (const auto& [h1, h2, c] : dk) {
            auto [sk, sc] = antipode(h1);
            auto p = product(sk, h2);
            if (p) {
                Rat v = c * sc * p->second;
                helt_add(s_left, p->first, v);
            }
            auto [sk2, sc2] = antipode(h2);
            auto p2 = product(h1, sk2);
            if (p2) {
                Rat v = c * sc2 * p2->second;
                helt_add(s_right, p2->first, v);
            }
        }
        HElt eta_eps;
        helt_add(eta_eps, unit_key(), counit(k));
        if (s_left != eta_eps || s_right != eta_eps)
            throw std::runtime_error("Hopf validation: antipode law fails on " + key_str(k));
    }
}

void HopfAlgebra::compute_lie() {
    switch (cls_) {
        case GroupClass::FiniteGroup: {
            // Solve the relative-derivation system on the basis:
            //   xi(e_a e_b) = xi(e_a) eps(e_b) + eps(e_a) xi(e_b).
            int n = order();
            SparseMat sys(n * n, n);
            int row = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    // lhs: e_a e_b = [a==b] e_a
                    if (a == b) sys.add(row, a, Rat(1));
                    sys.add(row, a, -counit(HKey{b}));
                    sys.add(row, b, -counit(HKey{a}));
                    ++row;
                }
            auto res = kernel_and_rank(sys);
            lie_dim_ = static_cast<int>(res.kernel.size());
            finite_xi_.clear();
            for (const auto& kv : res.kernel) {
                std::vector<Rat> dense(static_cast<size_t>(n), Rat(0));
                for (const auto& [i, c] : kv) dense[static_cast<size_t>(i)] = c;
                finite_xi_.push_back(std::move(dense));
            }
            break;
        }
        case GroupClass::Torus:
        case GroupClass::Multiplicative:
            lie_dim_ = rank_;
            break;
        case GroupClass::Additive:
            lie_dim_ = 1;
            break;
    }
}

Rat HopfAlgebra::xi_eval(int a, const HKey& k) const {
    if (a < 0 || a >= lie_dim_) throw std::out_of_range("xi index");
    switch (cls_) {
        case GroupClass::FiniteGroup:
            return finite_xi_.at(static_cast<size_t>(a)).at(static_cast<size_t>(k.at(0)));
        case GroupClass::Torus:
        case GroupClass::Multiplicative:
            return Rat(k.at(static_cast<size_t>(a)));
        case GroupClass::Additive:
            return Rat(k.at(0) == 1 ? 1 : 0);
    }
    return Rat(0);
}

Rat HopfAlgebra::xi_eval_elt(int a, const HElt& h) const {
    Rat out(0);
    for (const auto& [k, c] : h) out += c * xi_eval(a, k);
    return out;
}

Rat HopfAlgebra::bracket_eval(int a, int b, const HKey& k) const {
    Rat out(0);
    for (const auto& [h1, h2, c] : coproduct(k)) {
        out += c * (xi_eval(a, h1) * xi_eval(b, h2) - xi_eval(b, h1) * xi_eval(a, h2));
    }
    return out;
}

Rat HopfAlgebra::structure_constant(int c, int a, int b) const {
    // f^c_{ab} = [xi_a, xi_b](rep_c)
    Rat out(0);
    for (const auto& [k, coeff] : gstar_rep(c)) out += coeff * bracket_eval(a, b, k);
    return out;
}

HElt HopfAlgebra::gstar_rep(int a) const {
    if (a < 0 || a >= lie_dim_) throw std::out_of_range("g* index");
    HElt out;
    switch (cls_) {
        case GroupClass::FiniteGroup:
            break; // g* = 0
        case GroupClass::Torus:
        case GroupClass::Multiplicative: {
            HKey k(static_cast<size_t>(rank_), 0);
            k[static_cast<size_t>(a)] = 1;
            helt_add(out, k, Rat(1));
            helt_add(out, unit_key(), Rat(-1));
            break;
        }
        case GroupClass::Additive:
            helt_add(out, HKey{1}, Rat(1));
            break;
    }
    return out;
}

std::vector<std::vector<HElt>> HopfAlgebra::adjoint_coaction_gstar() const {
    int d = lie_dim_;
    std::vector<std::vector<HElt>> m(static_cast<size_t>(d), std::vector<HElt>(static_cast<size_t>(d)));
    for (int a = 0; a < d; ++a) {
        HElt rep = gstar_rep(a);
        for (const auto& [k, coeff] : rep) {
            // h -> h2 (x) S(h1) h3, first leg projected to g* coordinates.
            for (const auto& [h1, h2, c1] : coproduct(k)) {
                for (const auto& [h2a, h3, c2] : coproduct(h2)) {
                    auto [sk, sc] = antipode(h1);
                    auto p = product(sk, h3);
                    if (!p) continue;
                    Rat base = coeff * c1 * c2 * sc * p->second;
                    if (base == 0) continue;
                    for (int b = 0; b < d; ++b) {
                        Rat v = base * xi_eval(b, h2a);
                        helt_add(m[static_cast<size_t>(a)][static_cast<size_t>(b)], p->first, v);
                    }
                }
            }
        }
    }
    return m;
}

int HopfAlgebra::hvar_count() const {
    switch (cls_) {
        case GroupClass::FiniteGroup: return 0;
        case GroupClass::Torus:
        case GroupClass::Multiplicative: return rank_;
        case GroupClass::Additive: return 1;
    }
    return 0;
}

std::string HopfAlgebra::hvar_name(int i) const {
    if (cls_ == GroupClass::Additive) return "t";
    if (rank_ == 1) return "t";
    return "t" + std::to_string(i + 1);
}

std::vector<std::tuple<int, HKey, Rat>> HopfAlgebra::key_derham(const HKey& k) const {
    std::vector<std::tuple<int, HKey, Rat>> out;
    if (cls_ == GroupClass::FiniteGroup) return out;
    for (int i = 0; i < hvar_count(); ++i) {
        int e = k.at(static_cast<size_t>(i));
        if (e == 0) continue;
        HKey nk = k;
        nk[static_cast<size_t>(i)] = e - 1;
        out.emplace_back(i, nk, Rat(e));
    }
    return out;
}

bool HopfAlgebra::is_plus_key(const HKey& k) const {
    switch (cls_) {
        case GroupClass::FiniteGroup: return k.at(0) != identity_;
        case GroupClass::Torus:
        case GroupClass::Multiplicative: return !is_unit_key(k);
        case GroupClass::Additive: return k.at(0) >= 1;
    }
    return false;
}

std::vector<std::pair<HKey, Rat>> HopfAlgebra::project_plus_key(const HKey& k) const {
    std::vector<std::pair<HKey, Rat>> out;
    switch (cls_) {
        case GroupClass::FiniteGroup:
            if (k.at(0) != identity_) {
                out.emplace_back(k, Rat(1));
            } else {
                for (int g = 0; g < order(); ++g)
                    if (g != identity_) out.emplace_back(HKey{g}, Rat(-1));
            }
            break;
        case GroupClass::Torus:
        case GroupClass::Multiplicative:
        case GroupClass::Additive:
            if (is_plus_key(k)) out.emplace_back(k, Rat(1));
            break;
    }
    return out;
}

HElt HopfAlgebra::lift_plus_key(const HKey& k) const {
    if (!is_plus_key(k)) throw std::invalid_argument("not a normalized H+ basis key");
    HElt out{{k, Rat(1)}};
    if (cls_ == GroupClass::Torus || cls_ == GroupClass::Multiplicative)
        helt_add(out, unit_key(), Rat(-1));
    return out;
}

std::string HopfAlgebra::plus_key_str(const HKey& k) const {
    if (cls_ == GroupClass::Torus || cls_ == GroupClass::Multiplicative)
        return "(" + key_str(k) + " - 1)";
    return key_str(k);
}

std::vector<HKey> HopfAlgebra::plus_basis() const {
    if (cls_ != GroupClass::FiniteGroup)
        throw std::logic_error("complete H+ basis is only available for finite groups");
    std::vector<HKey> out;
    for (int g = 0; g < order(); ++g)
        if (g != identity_) out.push_back({g});
    return out;
}

HTensor sweedler_iterate(const HopfAlgebra& H, const HElt& h, int n) {
    if (n < 0) throw std::invalid_argument("sweedler_iterate needs n >= 0");
    HTensor out;
    for (const auto& [k, c] : h) {
        auto& slot = out[{k}];
        slot += c;
        if (slot == 0) out.erase({k});
    }
    for (int step = 0; step < n; ++step) {
        HTensor next;
        for (const auto& [keys, c] : out) {
            // coassociativity makes the expansion slot irrelevant; expand
            // the last factor.
            HKey last = keys.back();
            for (const auto& [h1, h2, c2] : H.coproduct(last)) {
                std::vector<HKey> nk(keys.begin(), keys.end() - 1);
                nk.push_back(h1);
                nk.push_back(h2);
                Rat v = c * c2;
                auto& slot = next[nk];
                slot += v;
                if (slot == 0) next.erase(nk);
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace dcrit
