#pragma once

#include "dynqg/rational.hpp"

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace dynqg {

/// Element of Gamma = Z^d.
using GVec = std::vector<long>;

GVec gv_zero(int d);
GVec gv_add(const GVec& a, const GVec& b);
GVec gv_neg(const GVec& a);
bool gv_is_zero(const GVec& a);
std::string gv_print(const GVec& a);

struct VarSpec {
    std::string name;
    bool dynamical = true;  // dynamical vars get per-leg copies, shared get one
    // Star image over the base's own single-copy field; empty = the variable.
    std::optional<RatFunc> star_image;
};

/// A commutative base ring B: rational functions in the declared variables,
/// with a Z^d shift action given per generator by a substitution (plus its
/// inverse), and an involution given per variable.
class BaseSpec {
public:
    BaseSpec(std::string name, std::vector<VarSpec> vars, int gamma_rank,
             std::vector<std::vector<RatFunc>> action,
             std::vector<std::vector<RatFunc>> action_inverse);

    const std::string& name() const { return name_; }
    int nvars() const { return (int)vars_.size(); }
    int gamma_rank() const { return rank_; }
    const std::vector<VarSpec>& vars() const { return vars_; }
    int var_index(const std::string& name) const;  // -1 if absent

    RatFunc var(int i) const { return RatFunc::variable(nvars(), i); }
    RatFunc constant(const Rat& c) const { return RatFunc(nvars(), c); }
    RatFunc one() const { return constant(1); }

    const std::vector<RatFunc>& action_of(int gen) const { return action_[gen]; }
    const std::vector<RatFunc>& action_inv_of(int gen) const { return action_inv_[gen]; }

    /// b_(g): the action of g on b. Throws on rank mismatch.
    RatFunc act(const GVec& g, const RatFunc& b) const;
    RatFunc star(const RatFunc& b) const;

    /// Validates the declared invariants: inverses compose to the identity,
    /// generator substitutions commute, the action commutes with the
    /// involution, star is involutive, shared variables are fixed by the
    /// action and by star. Returns human-readable violations.
    std::vector<std::string> check() const;

    bool operator==(const BaseSpec& o) const;

private:
    std::string name_;
    std::vector<VarSpec> vars_;
    int rank_;
    std::vector<std::vector<RatFunc>> action_, action_inv_;
};

using BasePtr = std::shared_ptr<const BaseSpec>;

/// Coefficient field for algebra elements and fiber chains: one copy of every
/// shared variable and `legs` copies of every dynamical variable.
///
/// Layout: shared variables first (base order), then leg 0 copies of the
/// dynamical variables, then leg 1, and so on.
class CoeffField {
public:
    CoeffField() = default;
    CoeffField(BasePtr base, int legs);

    const BasePtr& base() const { return base_; }
    int legs() const { return legs_; }
    int nvars() const { return nvars_; }

    RatFunc zero() const { return RatFunc(nvars_); }
    RatFunc one() const { return RatFunc(nvars_, 1); }
    RatFunc constant(const Rat& c) const { return RatFunc(nvars_, c); }

    /// Embedding of a base element at the given leg.
    RatFunc embed(const RatFunc& b, int leg) const;

    /// Twist a single leg by a group element (other legs untouched).
    RatFunc act_leg(const GVec& g, int leg, const RatFunc& c) const;

    /// Involution applied on every leg.
    RatFunc star(const RatFunc& c) const;

    bool depends_on_leg(const RatFunc& c, int leg) const;

    /// Index of a variable copy: shared vars by base index; dynamical copy of
    /// base var i at leg l.
    int shared_index(int base_var) const;
    int dyn_index(int base_var, int leg) const;
    /// Reverse lookup: (base_var, leg) with leg = -1 for shared.
    std::pair<int, int> var_origin(int field_var) const;

    /// Move a coefficient between fields over the same base via a leg map
    /// (leg l of *this goes to leg_map[l] of `to`).
    RatFunc transfer(const RatFunc& c, const CoeffField& to,
                     const std::vector<int>& leg_map) const;

private:
    BasePtr base_;
    int legs_ = 0;
    int nvars_ = 0;
    std::vector<int> shared_idx_;           // base var -> field var (shared only)
    std::vector<std::vector<int>> dyn_idx_; // [leg][base var] -> field var
    std::vector<RatFunc> leg_subst(int leg, const std::vector<RatFunc>& base_images) const;
};

/// A Gamma-equivariant homomorphism between bases, given by per-variable
/// substitution. Partial: application can hit poles.
struct SubstHom {
    std::vector<RatFunc> images;  // over target base variables
};

/// A hom defined only on the shift-ratio subring of a sud-shaped base
/// (shared Q, dynamical pair X, Y with X_(k) = Q^-k X, Y_(k) = Q^k Y).
/// It is determined by the image of Q and the family
///   (X-Y)_(k)  |->  rho^k * w0_(k),
/// with rho and phi(Q) Gamma-fixed in the target. Elements are mapped by
/// expanding into powers of the ratios Z_{a,k} at each pole t = Q^{2k}
/// (t = X/Y), which is exactly the subring the paper's limit homs live on.
struct RatioFamilyHom {
    int q_var;            // source index of Q
    int x_var, y_var;     // source indices of X, Y
    RatFunc q_image;      // over target
    RatFunc w0;           // over target; the image of X - Y
    RatFunc rho;          // over target, Gamma-fixed
};

class BaseHom;
using HomPtr = std::shared_ptr<const BaseHom>;

class BaseHom {
public:
    BaseHom(std::string name, BasePtr source, BasePtr target, SubstHom h);
    BaseHom(std::string name, BasePtr source, BasePtr target, RatioFamilyHom h);
    /// Composite: apply `first`, then `second`.
    BaseHom(std::string name, HomPtr first, HomPtr second);

    const std::string& name() const { return name_; }
    const BasePtr& source() const { return source_; }
    const BasePtr& target() const { return target_; }

    /// Image of a base element. Throws std::domain_error on poles or on
    /// elements outside a ratio-family hom's domain.
    RatFunc apply(const RatFunc& b) const;

    /// Image of a coefficient-field element, leg by leg.
    RatFunc apply_field(const CoeffField& from, const CoeffField& to, const RatFunc& c) const;

    /// Equivariance and involution compatibility. For substitution homs the
    /// checks run on every variable/generator pair; for ratio-family homs on
    /// the defining family. Violations are returned as report lines.
    std::vector<std::string> check() const;

private:
    std::string name_;
    BasePtr source_, target_;
    std::variant<SubstHom, RatioFamilyHom, std::pair<HomPtr, HomPtr>> data_;

    RatFunc apply_ratio_family(const RatioFamilyHom& h, const RatFunc& b) const;
    RatFunc apply_ratio_family_field(const RatioFamilyHom& h, const CoeffField& from,
                                     const CoeffField& to, const RatFunc& c, int leg) const;
};

}  // namespace dynqg
