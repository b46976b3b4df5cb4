#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcrit/rational.hpp"

namespace dcrit {

// A ring variable. Laurent variables may carry negative exponents.
struct Variable {
    std::string name;
    int weight = 0;
    bool laurent = false;
};

class VarTable {
public:
    int add(const Variable& v);
    int index_of(const std::string& name) const; // -1 if absent
    const Variable& var(int i) const { return vars_.at(static_cast<size_t>(i)); }
    int size() const { return static_cast<int>(vars_.size()); }
    const std::vector<Variable>& vars() const { return vars_; }

private:
    std::vector<Variable> vars_;
    std::map<std::string, int> index_;
};

// Exponent vector; size always equals the table arity.
using Expo = std::vector<int>;

int expo_weight(const VarTable& t, const Expo& e);
std::string expo_str(const VarTable& t, const Expo& e); // "x^2*y", "1" for the unit

// Sparse exact-rational multivariate (optionally Laurent) polynomial.
// Terms are kept normalized: no zero coefficients, exponents legal for
// their variables.
class Polynomial {
public:
    Polynomial() : ctx_(nullptr) {}
    explicit Polynomial(const VarTable* ctx) : ctx_(ctx) {}

    static Polynomial constant(const VarTable* ctx, const Rat& c);
    static Polynomial variable(const VarTable* ctx, int idx, int exp = 1);
    static Polynomial monomial(const VarTable* ctx, const Expo& e, const Rat& c);

    const VarTable* ctx() const { return ctx_; }
    const std::map<Expo, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // 0 if zero, throws if non-constant

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    Polynomial pow(int n) const; // n < 0 only for invertible monomials
    bool operator==(const Polynomial& o) const;

    Polynomial derivative(int var) const;

    // Homogeneous weight of all terms, nullopt if mixed. Zero has every
    // weight; by convention returns 0.
    std::optional<int> weight() const;
    int total_degree() const; // max sum of |exponents|, 0 for zero

    Rat eval(const std::vector<Rat>& point) const;

    void add_term(const Expo& e, const Rat& c); // accumulate + normalize

    std::string str() const;

private:
    const VarTable* ctx_;
    std::map<Expo, Rat> terms_;

    void check_ctx(const Polynomial& o) const;
};

} // namespace dcrit
