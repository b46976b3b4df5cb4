#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcrit/polynomial.hpp"

namespace dcrit {

enum class GenKind { FieldVariable, Antifield, GhostAntifield, Ghost };

// Degree is determined by the kind for the standard BV-type generators:
// field-variable 0, antifield -1, ghost-antifield -2, ghost +1. Auxiliary
// models (e.g. the zero locus of the moment map) use other degrees.
int kind_default_degree(GenKind k);
std::string kind_str(GenKind k);

struct GeneratorSpec {
    std::string name;
    int degree = 0;
    int weight = 0;
    GenKind kind = GenKind::FieldVariable;
};

// Base variables plus the word generators, with a fixed total order that
// pins the Koszul normal form. Field variables live in the polynomial
// coefficients; only nonzero-degree generators enter words.
class ModelContext {
public:
    VarTable vars;

    int add_gen(const GeneratorSpec& g);
    const GeneratorSpec& gen(int i) const { return gens_.at(static_cast<size_t>(i)); }
    int gen_count() const { return static_cast<int>(gens_.size()); }
    int gen_index(const std::string& name) const; // -1 if absent
    bool gen_odd(int i) const { return gen(i).degree & 1; }
    const std::vector<GeneratorSpec>& gens() const { return gens_; }

private:
    std::vector<GeneratorSpec> gens_;
    std::map<std::string, int> gen_index_;
};

// Normal-form generator word: (generator index, exponent) pairs sorted by
// index; odd generators never repeat.
using Word = std::vector<std::pair<int, int>>;

int word_degree(const ModelContext& c, const Word& w);
int word_weight(const ModelContext& c, const Word& w);
int word_parity(const ModelContext& c, const Word& w);
std::string word_str(const ModelContext& c, const Word& w);

// Koszul merge of two normal-form words. sign == 0 means an odd generator
// squared; otherwise sign is the (-1)-count of odd transpositions.
struct WordMerge {
    Word word;
    int sign;
};
WordMerge merge_words(const ModelContext& c, const Word& a, const Word& b);

// Element of the free graded-commutative algebra over the polynomial base.
class GradedElement {
public:
    GradedElement() : ctx_(nullptr) {}
    explicit GradedElement(const ModelContext* ctx) : ctx_(ctx) {}

    static GradedElement from_poly(const ModelContext* ctx, const Polynomial& p);
    static GradedElement constant(const ModelContext* ctx, const Rat& c);
    static GradedElement generator(const ModelContext* ctx, int gen);
    static GradedElement from_word(const ModelContext* ctx, const Word& w,
                                   const Polynomial& coeff);

    const ModelContext* ctx() const { return ctx_; }
    const std::map<Word, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GradedElement operator+(const GradedElement& o) const;
    GradedElement operator-(const GradedElement& o) const;
    GradedElement operator-() const;
    GradedElement operator*(const GradedElement& o) const;
    GradedElement scaled(const Rat& c) const;
    bool operator==(const GradedElement& o) const;

    void add(const Word& w, const Polynomial& p);

    // Homogeneity queries. degree() is nullopt for inhomogeneous elements;
    // the zero element reports degree 0 / weight 0.
    std::optional<int> degree() const;
    std::optional<int> weight() const; // inspects polynomial parts too
    bool is_homogeneous(int expected_degree) const;

    std::string str() const;

private:
    const ModelContext* ctx_;
    std::map<Word, Polynomial> terms_;
};

// A graded derivation of fixed degree, determined by its values on the
// variables and generators and extended by the graded Leibniz rule
//   D(ab) = D(a) b + (-1)^{deg(D)|a|} a D(b).
class Derivation {
public:
    Derivation(const ModelContext* ctx, int deg, std::vector<GradedElement> on_var,
               std::vector<GradedElement> on_gen, bool check = true);

    static Derivation zero(const ModelContext* ctx, int deg);

    const ModelContext* ctx() const { return ctx_; }
    int deg() const { return deg_; }
    const GradedElement& value_on_var(int v) const { return on_var_.at(static_cast<size_t>(v)); }
    const GradedElement& value_on_gen(int g) const { return on_gen_.at(static_cast<size_t>(g)); }

    GradedElement apply(const GradedElement& a) const;

private:
    const ModelContext* ctx_;
    int deg_;
    std::vector<GradedElement> on_var_;
    std::vector<GradedElement> on_gen_;
};

} // namespace dcrit
