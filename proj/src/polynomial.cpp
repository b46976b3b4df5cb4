#include "dcrit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dcrit {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

} // namespace

int VarTable::add(const Variable& v) {
    if (!valid_identifier(v.name)) throw std::invalid_argument("bad variable name: " + v.name);
    if (index_.count(v.name)) throw std::invalid_argument("duplicate variable: " + v.name);
    vars_.push_back(v);
    index_[v.name] = static_cast<int>(vars_.size()) - 1;
    return index_[v.name];
}

int VarTable::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int expo_weight(const VarTable& t, const Expo& e) {
    int w = 0;
    for (size_t i = 0; i < e.size(); ++i) w += e[i] * t.var(static_cast<int>(i)).weight;
    return w;
}

std::string expo_str(const VarTable& t, const Expo& e) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << t.var(static_cast<int>(i)).name;
        if (e[i] != 1) os << "^" << e[i];
        first = false;
    }
    if (first) return "1";
    return os.str();
}

Polynomial Polynomial::constant(const VarTable* ctx, const Rat& c) {
    Polynomial p(ctx);
    if (c != 0) p.terms_[Expo(static_cast<size_t>(ctx->size()), 0)] = c;
    return p;
}

Polynomial Polynomial::variable(const VarTable* ctx, int idx, int exp) {
    Expo e(static_cast<size_t>(ctx->size()), 0);
    e.at(static_cast<size_t>(idx)) = exp;
    return monomial(ctx, e, Rat(1));
}

Polynomial Polynomial::monomial(const VarTable* ctx, const Expo& e, const Rat& c) {
    Polynomial p(ctx);
    p.add_term(e, c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expo& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rat Polynomial::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("constant_value of non-constant polynomial");
    return terms_.begin()->second;
}

void Polynomial::check_ctx(const Polynomial& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("mismatched variable contexts");
}

void Polynomial::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != ctx_->size())
        throw std::invalid_argument("exponent arity mismatch");
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !ctx_->var(static_cast<int>(i)).laurent)
            throw std::invalid_argument("negative exponent on non-Laurent variable " +
                                        ctx_->var(static_cast<int>(i)).name);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_ctx(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_ctx(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) {
        Rat neg = -c;
        r.add_term(e, neg);
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r(ctx_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) {
        Rat v = k * c;
        r.terms_[e] = v;
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ctx(o);
    Polynomial r(ctx_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Expo e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            Rat c = c1 * c2;
            r.add_term(e, c);
        }
    }
    return r;
}

Polynomial Polynomial::pow(int n) const {
    if (n == 0) return constant(ctx_, Rat(1));
    if (n > 0) {
        Polynomial r = constant(ctx_, Rat(1));
        for (int i = 0; i < n; ++i) r = r * (*this);
        return r;
    }
    // Negative powers exist only for single invertible monomials.
    if (terms_.size() != 1)
        throw std::invalid_argument("negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    Expo inv(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
        inv[i] = n * e[i];
        if (inv[i] < 0 && !ctx_->var(static_cast<int>(i)).laurent)
            throw std::invalid_argument("monomial not invertible in this ring");
    }
    Rat cc = c;
    Rat cpow(1);
    for (int i = 0; i < -n; ++i) cpow *= cc;
    Rat r = 1 / cpow;
    return monomial(ctx_, inv, r);
}

bool Polynomial::operator==(const Polynomial& o) const {
    return ctx_ == o.ctx_ && terms_ == o.terms_;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= ctx_->size()) throw std::invalid_argument("unknown variable");
    Polynomial r(ctx_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        Expo d = e;
        d[static_cast<size_t>(var)] = k - 1;
        Rat cc = c * k;
        r.add_term(d, cc);
    }
    return r;
}

std::optional<int> Polynomial::weight() const {
    if (terms_.empty()) return 0;
    std::optional<int> w;
    for (const auto& [e, c] : terms_) {
        int tw = expo_weight(*ctx_, e);
        if (!w) w = tw;
        else if (*w != tw) return std::nullopt;
    }
    return w;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += std::abs(k);
        d = std::max(d, s);
    }
    return d;
}

Rat Polynomial::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != ctx_->size())
        throw std::invalid_argument("eval point arity mismatch");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat m = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] > 0) {
                for (int k = 0; k < e[i]; ++k) m *= point[i];
            } else {
                if (point[i] == 0) throw std::domain_error("pole at evaluation point");
                for (int k = 0; k < -e[i]; ++k) m /= point[i];
            }
        }
        total += m;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mono = expo_str(*ctx_, e);
        if (mono == "1") {
            os << rat_str(a);
        } else if (a == 1) {
            os << mono;
        } else {
            os << rat_str(a) << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

} // namespace dcrit
