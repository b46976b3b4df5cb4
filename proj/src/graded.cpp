#include "dcrit/graded.hpp"

#include <sstream>

namespace dcrit {

int kind_default_degree(GenKind k) {
    switch (k) {
        case GenKind::FieldVariable: return 0;
        case GenKind::Antifield: return -1;
        case GenKind::GhostAntifield: return -2;
        case GenKind::Ghost: return 1;
    }
    return 0;
}

std::string kind_str(GenKind k) {
    switch (k) {
        case GenKind::FieldVariable: return "field-variable";
        case GenKind::Antifield: return "antifield";
        case GenKind::GhostAntifield: return "ghost-antifield";
        case GenKind::Ghost: return "ghost";
    }
    return "?";
}

int ModelContext::add_gen(const GeneratorSpec& g) {
    if (g.name.empty()) throw std::invalid_argument("empty generator name");
    if (gen_index_.count(g.name) || vars.index_of(g.name) >= 0)
        throw std::invalid_argument("duplicate generator name: " + g.name);
    if (g.degree == 0)
        throw std::invalid_argument("degree-0 generators belong to the variable table");
    gens_.push_back(g);
    gen_index_[g.name] = static_cast<int>(gens_.size()) - 1;
    return gen_index_[g.name];
}

int ModelContext::gen_index(const std::string& name) const {
    auto it = gen_index_.find(name);
    return it == gen_index_.end() ? -1 : it->second;
}

int word_degree(const ModelContext& c, const Word& w) {
    int d = 0;
    for (auto [g, e] : w) d += c.gen(g).degree * e;
    return d;
}

int word_weight(const ModelContext& c, const Word& w) {
    int d = 0;
    for (auto [g, e] : w) d += c.gen(g).weight * e;
    return d;
}

int word_parity(const ModelContext& c, const Word& w) {
    int p = 0;
    for (auto [g, e] : w)
        if (c.gen_odd(g)) p += e;
    return p & 1;
}

std::string word_str(const ModelContext& c, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto [g, e] : w) {
        if (!first) os << "*";
        os << c.gen(g).name;
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

WordMerge merge_words(const ModelContext& c, const Word& a, const Word& b) {
    WordMerge out{{}, 1};
    out.word.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    // Count of odd letters of `a` not yet emitted; letters of `b` emitted
    // before them must cross all of these.
    int odd_rest = 0;
    for (auto [g, e] : a)
        if (c.gen_odd(g)) odd_rest += e;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
            if (c.gen_odd(a[i].first)) odd_rest -= a[i].second;
            out.word.push_back(a[i]);
            ++i;
        } else if (i >= a.size() || b[j].first < a[i].first) {
            if (c.gen_odd(b[j].first) && (odd_rest & 1) && (b[j].second & 1)) out.sign = -out.sign;
            out.word.push_back(b[j]);
            ++j;
        } else {
            // same generator
            if (c.gen_odd(a[i].first)) {
                out.sign = 0;
                out.word.clear();
                return out;
            }
            out.word.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

GradedElement GradedElement::from_poly(const ModelContext* ctx, const Polynomial& p) {
    GradedElement e(ctx);
    if (!p.is_zero()) e.terms_[Word{}] = p;
    return e;
}

GradedElement GradedElement::constant(const ModelContext* ctx, const Rat& c) {
    return from_poly(ctx, Polynomial::constant(&ctx->vars, c));
}

GradedElement GradedElement::generator(const ModelContext* ctx, int gen) {
    GradedElement e(ctx);
    e.terms_[Word{{gen, 1}}] = Polynomial::constant(&ctx->vars, Rat(1));
    return e;
}

GradedElement GradedElement::from_word(const ModelContext* ctx, const Word& w,
                                       const Polynomial& coeff) {
    GradedElement e(ctx);
    e.add(w, coeff);
    return e;
}

void GradedElement::add(const Word& w, const Polynomial& p) {
    if (p.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, p);
    } else {
        it->second = it->second + p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("mismatched generator contexts");
    GradedElement r = *this;
    for (const auto& [w, p] : o.terms_) r.add(w, p);
    return r;
}

GradedElement GradedElement::operator-(const GradedElement& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("mismatched generator contexts");
    GradedElement r = *this;
    for (const auto& [w, p] : o.terms_) r.add(w, -p);
    return r;
}

GradedElement GradedElement::operator-() const {
    GradedElement r(ctx_);
    for (const auto& [w, p] : terms_) r.terms_[w] = -p;
    return r;
}

GradedElement GradedElement::scaled(const Rat& c) const {
    GradedElement r(ctx_);
    if (c == 0) return r;
    for (const auto& [w, p] : terms_) r.terms_[w] = p.scaled(c);
    return r;
}

GradedElement GradedElement::operator*(const GradedElement& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("mismatched generator contexts");
    GradedElement r(ctx_);
    for (const auto& [w1, p1] : terms_) {
        for (const auto& [w2, p2] : o.terms_) {
            WordMerge m = merge_words(*ctx_, w1, w2);
            if (m.sign == 0) continue;
            Polynomial p = p1 * p2;
            if (m.sign < 0) p = -p;
            r.add(m.word, p);
        }
    }
    return r;
}

bool GradedElement::operator==(const GradedElement& o) const {
    return ctx_ == o.ctx_ && terms_ == o.terms_;
}

std::optional<int> GradedElement::degree() const {
    if (terms_.empty()) return 0;
    std::optional<int> d;
    for (const auto& [w, p] : terms_) {
        int wd = word_degree(*ctx_, w);
        if (!d) d = wd;
        else if (*d != wd) return std::nullopt;
    }
    return d;
}

std::optional<int> GradedElement::weight() const {
    if (terms_.empty()) return 0;
    std::optional<int> total;
    for (const auto& [w, p] : terms_) {
        auto pw = p.weight();
        if (!pw) return std::nullopt;
        int tw = word_weight(*ctx_, w) + *pw;
        if (!total) total = tw;
        else if (*total != tw) return std::nullopt;
    }
    return total;
}

bool GradedElement::is_homogeneous(int expected_degree) const {
    auto d = degree();
    return is_zero() || (d && *d == expected_degree);
}

std::string GradedElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, p] : terms_) {
        std::string ws = word_str(*ctx_, w);
        std::string ps = p.str();
        if (!first) os << " + ";
        if (w.empty()) {
            os << ps;
        } else if (ps == "1") {
            os << ws;
        } else if (p.terms().size() == 1) {
            os << ps << "*" << ws;
        } else {
            os << "(" << ps << ")*" << ws;
        }
        first = false;
    }
    return os.str();
}

Derivation::Derivation(const ModelContext* ctx, int deg, std::vector<GradedElement> on_var,
                       std::vector<GradedElement> on_gen, bool check)
    : ctx_(ctx), deg_(deg), on_var_(std::move(on_var)), on_gen_(std::move(on_gen)) {
    if (static_cast<int>(on_var_.size()) != ctx->vars.size() ||
        static_cast<int>(on_gen_.size()) != ctx->gen_count())
        throw std::invalid_argument("derivation assignment arity mismatch");
    if (!check) return;
    for (int v = 0; v < ctx->vars.size(); ++v) {
        const GradedElement& val = on_var_[static_cast<size_t>(v)];
        if (val.is_zero()) continue;
        if (!val.is_homogeneous(deg))
            throw std::invalid_argument("degree-inhomogeneous derivation value on " +
                                        ctx->vars.var(v).name);
        auto w = val.weight();
        if (!w || *w != ctx->vars.var(v).weight)
            throw std::invalid_argument("weight-inhomogeneous derivation value on " +
                                        ctx->vars.var(v).name);
    }
    for (int g = 0; g < ctx->gen_count(); ++g) {
        const GradedElement& val = on_gen_[static_cast<size_t>(g)];
        if (val.is_zero()) continue;
        if (!val.is_homogeneous(ctx->gen(g).degree + deg))
            throw std::invalid_argument("degree-inhomogeneous derivation value on " +
                                        ctx->gen(g).name);
        auto w = val.weight();
        if (!w || *w != ctx->gen(g).weight)
            throw std::invalid_argument("weight-inhomogeneous derivation value on " +
                                        ctx->gen(g).name);
    }
}

Derivation Derivation::zero(const ModelContext* ctx, int deg) {
    std::vector<GradedElement> ov(static_cast<size_t>(ctx->vars.size()), GradedElement(ctx));
    std::vector<GradedElement> og(static_cast<size_t>(ctx->gen_count()), GradedElement(ctx));
    return Derivation(ctx, deg, std::move(ov), std::move(og), false);
}

GradedElement Derivation::apply(const GradedElement& a) const {
    if (a.ctx() != ctx_) throw std::invalid_argument("mismatched generator contexts");
    GradedElement out(ctx_);
    const int op_parity = deg_ & 1;
    for (const auto& [w, p] : a.terms()) {
        // Variable part: D(p) * w. The polynomial coefficient is even, so
        // no Koszul sign appears in front.
        for (int v = 0; v < ctx_->vars.size(); ++v) {
            const GradedElement& val = on_var_[static_cast<size_t>(v)];
            if (val.is_zero()) continue;
            Polynomial dp = p.derivative(v);
            if (dp.is_zero()) continue;
            GradedElement piece =
                GradedElement::from_poly(ctx_, dp) * val * GradedElement::from_word(ctx_, w, Polynomial::constant(&ctx_->vars, Rat(1)));
            out = out + piece;
        }
        // Word part: walk the letters, tracking the parity of the prefix
        // the operator crosses.
        int prefix_parity = 0;
        for (size_t j = 0; j < w.size(); ++j) {
            auto [g, e] = w[j];
            const GradedElement& val = on_gen_[static_cast<size_t>(g)];
            int gpar = ctx_->gen_odd(g) ? 1 : 0;
            if (!val.is_zero()) {
                Word prefix(w.begin(), w.begin() + static_cast<long>(j));
                Word suffix(w.begin() + static_cast<long>(j) + 1, w.end());
                Rat factor(1);
                if (gpar == 0) {
                    // D hits each of the e copies identically.
                    factor = e;
                    if (e > 1) prefix.emplace_back(g, e - 1);
                }
                if (op_parity && (prefix_parity & 1)) factor = -factor;
                if (factor != 0) {
                    GradedElement piece =
                        GradedElement::from_word(ctx_, prefix, p.scaled(factor)) * val *
                        GradedElement::from_word(ctx_, suffix,
                                                 Polynomial::constant(&ctx_->vars, Rat(1)));
                    out = out + piece;
                }
            }
            prefix_parity += gpar * e;
        }
    }
    return out;
}

} // namespace dcrit
