#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dynqg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exponent vector of a monomial. Trailing zeros are kept; all monomials of a
/// polynomial share the same length (the ambient variable count).
using Expo = std::vector<int>;

/// Graded-lex comparison on exponent vectors of equal length.
int cmp_expo(const Expo& a, const Expo& b);

struct ExpoLess {
    bool operator()(const Expo& a, const Expo& b) const { return cmp_expo(a, b) < 0; }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in a map ordered by graded-lex, zero coefficients dropped.
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}
    Poly(int nvars, const Rat& c);

    static Poly variable(int nvars, int index, int power = 1);
    static Poly constant(int nvars, const Rat& c) { return Poly(nvars, c); }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()

    const std::map<Expo, Rat, ExpoLess>& terms() const { return terms_; }
    void set_term(const Expo& e, const Rat& c);

    int degree_in(int var) const;
    int total_degree() const;
    bool depends_on(int var) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const;

    /// Leading term under graded-lex.
    std::pair<Expo, Rat> leading() const;

    /// Exact division; returns nullopt when o does not divide *this.
    std::optional<Poly> divided_by(const Poly& o) const;

    /// Extend/permute to a new variable layout: var i becomes var map[i].
    Poly remap(int new_nvars, const std::vector<int>& map) const;

private:
    int nvars_;
    std::map<Expo, Rat, ExpoLess> terms_;
};

Poly poly_gcd(const Poly& a, const Poly& b);

/// Normalized quotient of polynomials: gcd(num, den) = 1 and den monic under
/// graded-lex, so structural equality is mathematical equality.
class RatFunc {
public:
    RatFunc() : num_(0), den_(0, 1) {}
    explicit RatFunc(int nvars) : num_(nvars), den_(nvars, 1) {}
    RatFunc(Poly num, Poly den);
    RatFunc(int nvars, const Rat& c) : RatFunc(Poly(nvars, c), Poly(nvars, 1)) {}

    static RatFunc variable(int nvars, int index) {
        return RatFunc(Poly::variable(nvars, index), Poly(nvars, 1));
    }

    int nvars() const { return num_.nvars(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // throws on division by zero
    RatFunc inverse() const;
    RatFunc pow(long e) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const;

    bool depends_on(int var) const { return num_.depends_on(var) || den_.depends_on(var); }

    RatFunc remap(int new_nvars, const std::vector<int>& map) const;

private:
    Poly num_, den_;
    void normalize();
};

/// Substitute variables simultaneously: var i := images[i].
/// Images must share one ambient variable layout. Throws on a vanishing
/// denominator (the substitution hits a pole).
RatFunc subst(const Poly& p, const std::vector<RatFunc>& images);
RatFunc subst(const RatFunc& f, const std::vector<RatFunc>& images);

}  // namespace dynqg
