#include "dynqg/base.hpp"

#include <sstream>
#include <stdexcept>

namespace dynqg {

GVec gv_zero(int d) { return GVec(d, 0); }

GVec gv_add(const GVec& a, const GVec& b) {
    if (a.size() != b.size()) throw std::logic_error("gamma rank mismatch");
    GVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

GVec gv_neg(const GVec& a) {
    GVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool gv_is_zero(const GVec& a) {
    for (long x : a)
        if (x) return false;
    return true;
}

std::string gv_print(const GVec& a) {
    std::ostringstream os;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    return os.str();
}

BaseSpec::BaseSpec(std::string name, std::vector<VarSpec> vars, int gamma_rank,
                   std::vector<std::vector<RatFunc>> action,
                   std::vector<std::vector<RatFunc>> action_inverse)
    : name_(std::move(name)),
      vars_(std::move(vars)),
      rank_(gamma_rank),
      action_(std::move(action)),
      action_inv_(std::move(action_inverse)) {
    if ((int)action_.size() != rank_ || (int)action_inv_.size() != rank_)
        throw std::invalid_argument("BaseSpec: one substitution per gamma generator required");
    for (auto& sub : action_)
        if (sub.size() != vars_.size()) throw std::invalid_argument("BaseSpec: bad action arity");
    for (auto& sub : action_inv_)
        if (sub.size() != vars_.size()) throw std::invalid_argument("BaseSpec: bad inverse arity");
}

int BaseSpec::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return (int)i;
    return -1;
}

RatFunc BaseSpec::act(const GVec& g, const RatFunc& b) const {
    if ((int)g.size() != rank_) throw std::invalid_argument("gamma rank mismatch");
    RatFunc r = b;
    for (int i = 0; i < rank_; ++i) {
        const auto& sub = g[i] >= 0 ? action_[i] : action_inv_[i];
        for (long k = 0; k < (g[i] >= 0 ? g[i] : -g[i]); ++k) r = subst(r, sub);
    }
    return r;
}

RatFunc BaseSpec::star(const RatFunc& b) const {
    std::vector<RatFunc> images;
    images.reserve(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i)
        images.push_back(vars_[i].star_image ? *vars_[i].star_image : var((int)i));
    return subst(b, images);
}

std::vector<std::string> BaseSpec::check() const {
    std::vector<std::string> bad;
    auto note = [&](const std::string& s) { bad.push_back(name_ + ": " + s); };
    for (int gi = 0; gi < rank_; ++gi) {
        for (int v = 0; v < nvars(); ++v) {
            RatFunc x = var(v);
            if (subst(subst(x, action_[gi]), action_inv_[gi]) != x ||
                subst(subst(x, action_inv_[gi]), action_[gi]) != x)
                note("generator " + std::to_string(gi) + " inverse fails on " + vars_[v].name);
        }
        for (int gj = gi + 1; gj < rank_; ++gj)
            for (int v = 0; v < nvars(); ++v) {
                RatFunc x = var(v);
                if (subst(subst(x, action_[gi]), action_[gj]) !=
                    subst(subst(x, action_[gj]), action_[gi]))
                    note("generators " + std::to_string(gi) + "," + std::to_string(gj) +
                         " do not commute on " + vars_[v].name);
            }
        for (int v = 0; v < nvars(); ++v) {
            RatFunc x = var(v);
            if (star(subst(x, action_[gi])) != subst(star(x), action_[gi]))
                note("action does not commute with star on " + vars_[v].name);
        }
    }
    for (int v = 0; v < nvars(); ++v) {
        RatFunc x = var(v);
        if (star(star(x)) != x) note("star not involutive on " + vars_[v].name);
        if (!vars_[v].dynamical) {
            for (int gi = 0; gi < rank_; ++gi)
                if (subst(x, action_[gi]) != x)
                    note("shared variable " + vars_[v].name + " moved by generator " +
                         std::to_string(gi));
            for (int w = 0; w < nvars(); ++w)
                if (vars_[w].dynamical && star(x).depends_on(w))
                    note("star image of shared variable " + vars_[v].name + " is not shared");
        }
    }
    return bad;
}

bool BaseSpec::operator==(const BaseSpec& o) const {
    if (rank_ != o.rank_ || vars_.size() != o.vars_.size()) return false;
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name != o.vars_[i].name || vars_[i].dynamical != o.vars_[i].dynamical)
            return false;
        RatFunc a = vars_[i].star_image ? *vars_[i].star_image : var((int)i);
        RatFunc b = o.vars_[i].star_image ? *o.vars_[i].star_image : var((int)i);
        if (a != b) return false;
    }
    return action_ == o.action_ && action_inv_ == o.action_inv_;
}

CoeffField::CoeffField(BasePtr base, int legs) : base_(std::move(base)), legs_(legs) {
    int nb = base_->nvars();
    shared_idx_.assign(nb, -1);
    dyn_idx_.assign(legs_, std::vector<int>(nb, -1));
    int next = 0;
    for (int i = 0; i < nb; ++i)
        if (!base_->vars()[i].dynamical) shared_idx_[i] = next++;
    for (int l = 0; l < legs_; ++l)
        for (int i = 0; i < nb; ++i)
            if (base_->vars()[i].dynamical) dyn_idx_[l][i] = next++;
    nvars_ = next;
}

int CoeffField::shared_index(int base_var) const {
    int i = shared_idx_[base_var];
    if (i < 0) throw std::logic_error("not a shared variable");
    return i;
}

int CoeffField::dyn_index(int base_var, int leg) const {
    int i = dyn_idx_.at(leg)[base_var];
    if (i < 0) throw std::logic_error("not a dynamical variable");
    return i;
}

std::pair<int, int> CoeffField::var_origin(int field_var) const {
    for (int i = 0; i < base_->nvars(); ++i)
        if (shared_idx_[i] == field_var) return {i, -1};
    for (int l = 0; l < legs_; ++l)
        for (int i = 0; i < base_->nvars(); ++i)
            if (dyn_idx_[l][i] == field_var) return {i, l};
    throw std::logic_error("var_origin: bad index");
}

RatFunc CoeffField::embed(const RatFunc& b, int leg) const {
    std::vector<int> map(base_->nvars());
    for (int i = 0; i < base_->nvars(); ++i)
        map[i] = base_->vars()[i].dynamical ? dyn_idx_[leg][i] : shared_idx_[i];
    return b.remap(nvars_, map);
}

std::vector<RatFunc> CoeffField::leg_subst(int leg, const std::vector<RatFunc>& base_images) const {
    std::vector<RatFunc> images;
    images.reserve(nvars_);
    for (int v = 0; v < nvars_; ++v) images.push_back(RatFunc::variable(nvars_, v));
    for (int i = 0; i < base_->nvars(); ++i)
        if (base_->vars()[i].dynamical) images[dyn_idx_[leg][i]] = embed(base_images[i], leg);
    return images;
}

RatFunc CoeffField::act_leg(const GVec& g, int leg, const RatFunc& c) const {
    if ((int)g.size() != base_->gamma_rank()) throw std::invalid_argument("gamma rank mismatch");
    RatFunc r = c;
    for (int i = 0; i < base_->gamma_rank(); ++i) {
        const auto& sub = g[i] >= 0 ? base_->action_of(i) : base_->action_inv_of(i);
        auto images = leg_subst(leg, sub);
        for (long k = 0; k < (g[i] >= 0 ? g[i] : -g[i]); ++k) r = subst(r, images);
    }
    return r;
}

RatFunc CoeffField::star(const RatFunc& c) const {
    std::vector<RatFunc> images;
    images.reserve(nvars_);
    for (int v = 0; v < nvars_; ++v) {
        auto [bi, leg] = var_origin(v);
        RatFunc si =
            base_->vars()[bi].star_image ? *base_->vars()[bi].star_image : base_->var(bi);
        images.push_back(embed(si, leg < 0 ? 0 : leg));
    }
    return subst(c, images);
}

bool CoeffField::depends_on_leg(const RatFunc& c, int leg) const {
    for (int i = 0; i < base_->nvars(); ++i)
        if (base_->vars()[i].dynamical && c.depends_on(dyn_idx_[leg][i])) return true;
    return false;
}

RatFunc CoeffField::transfer(const RatFunc& c, const CoeffField& to,
                             const std::vector<int>& leg_map) const {
    std::vector<int> map(nvars_, -1);
    for (int i = 0; i < base_->nvars(); ++i) {
        if (!base_->vars()[i].dynamical) {
            map[shared_idx_[i]] = to.shared_index(i);
        } else {
            for (int l = 0; l < legs_; ++l) map[dyn_idx_[l][i]] = to.dyn_index(i, leg_map[l]);
        }
    }
    return c.remap(to.nvars(), map);
}

BaseHom::BaseHom(std::string name, BasePtr source, BasePtr target, SubstHom h)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      data_(std::move(h)) {
    if ((int)std::get<SubstHom>(data_).images.size() != source_->nvars())
        throw std::invalid_argument("BaseHom: one image per source variable required");
}

BaseHom::BaseHom(std::string name, BasePtr source, BasePtr target, RatioFamilyHom h)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      data_(std::move(h)) {
    if (source_->gamma_rank() != 1)
        throw std::invalid_argument("ratio-family hom requires gamma rank 1");
}

BaseHom::BaseHom(std::string name, HomPtr first, HomPtr second)
    : name_(std::move(name)),
      source_(first->source()),
      target_(second->target()),
      data_(std::make_pair(std::move(first), std::move(second))) {}

RatFunc BaseHom::apply(const RatFunc& b) const {
    if (auto* s = std::get_if<SubstHom>(&data_)) return subst(b, s->images);
    if (auto* r = std::get_if<RatioFamilyHom>(&data_)) return apply_ratio_family(*r, b);
    auto& [f, g] = std::get<std::pair<HomPtr, HomPtr>>(data_);
    return g->apply(f->apply(b));
}

RatFunc BaseHom::apply_field(const CoeffField& from, const CoeffField& to,
                             const RatFunc& c) const {
    if (from.legs() != to.legs()) throw std::invalid_argument("apply_field: leg mismatch");
    if (auto* s = std::get_if<SubstHom>(&data_)) {
        std::vector<RatFunc> images;
        images.reserve(from.nvars());
        for (int v = 0; v < from.nvars(); ++v) {
            auto [bi, leg] = from.var_origin(v);
            images.push_back(to.embed(s->images[bi], leg < 0 ? 0 : leg));
        }
        return subst(c, images);
    }
    if (auto* r = std::get_if<RatioFamilyHom>(&data_))
        return apply_ratio_family_field(*r, from, to, c, 0);
    auto& [f, g] = std::get<std::pair<HomPtr, HomPtr>>(data_);
    CoeffField mid(f->target(), from.legs());
    return g->apply_field(mid, to, f->apply_field(from, mid, c));
}

namespace {

// Joint degree in two designated variables; -1 when not homogeneous in them.
int joint_degree(const Poly& p, int x, int y) {
    int d = -2;
    for (auto& [e, c] : p.terms()) {
        int t = e[x] + e[y];
        if (d == -2)
            d = t;
        else if (d != t)
            return -1;
    }
    return d == -2 ? 0 : d;
}

}  // namespace

RatFunc BaseHom::apply_ratio_family(const RatioFamilyHom& h, const RatFunc& b) const {
    CoeffField from(source_, 1), to(target_, 1);
    RatFunc c = from.embed(b, 0);
    RatFunc img = apply_ratio_family_field(h, from, to, c, 0);
    std::vector<int> map(to.nvars());
    for (int v = 0; v < to.nvars(); ++v) map[v] = to.var_origin(v).first;
    return img.remap(target_->nvars(), map);
}

RatFunc BaseHom::apply_ratio_family_field(const RatioFamilyHom& h, const CoeffField& from,
                                          const CoeffField& to, const RatFunc& c,
                                          int leg) const {
    if (leg == from.legs()) {
        for (int ll = 0; ll < from.legs(); ++ll)
            if (from.depends_on_leg(c, ll))
                throw std::domain_error(name_ + ": element outside the shift-ratio subring");
        std::vector<RatFunc> images;
        images.reserve(from.nvars());
        for (int v = 0; v < from.nvars(); ++v) {
            auto [bi, l] = from.var_origin(v);
            if (bi == h.q_var)
                images.push_back(to.embed(h.q_image, 0));
            else
                images.push_back(to.zero());
        }
        return subst(c, images);
    }

    int xv = from.dyn_index(h.x_var, leg), yv = from.dyn_index(h.y_var, leg);
    int qv = from.shared_index(h.q_var);

    int dn = joint_degree(c.num(), xv, yv), dd = joint_degree(c.den(), xv, yv);
    if (dn < 0 || dd < 0 || dn != dd)
        throw std::domain_error(name_ + ": element outside the shift-ratio subring");

    auto L = [&](long k) {
        RatFunc q = RatFunc::variable(from.nvars(), qv);
        return q.pow(-k) * RatFunc::variable(from.nvars(), xv) -
               q.pow(k) * RatFunc::variable(from.nvars(), yv);
    };
    auto eval_at = [&](const RatFunc& f, long k) {
        std::vector<RatFunc> images;
        images.reserve(from.nvars());
        for (int v = 0; v < from.nvars(); ++v) images.push_back(RatFunc::variable(from.nvars(), v));
        RatFunc q = RatFunc::variable(from.nvars(), qv);
        images[xv] = q.pow(2 * k) * RatFunc::variable(from.nvars(), yv);
        return subst(f, images);
    };
    auto den_vanishes = [&](const RatFunc& f, long k) {
        return eval_at(RatFunc(f.den(), Poly(from.nvars(), 1)), k).is_zero();
    };

    long range = c.den().degree_in(qv) + c.den().degree_in(xv) + c.den().degree_in(yv) + 2;
    auto find_pole = [&](const RatFunc& f) -> std::optional<long> {
        for (long k = 0; k <= range; ++k)
            for (long s : {k, -k}) {
                if (den_vanishes(f, s)) return s;
                if (k == 0) break;
            }
        return std::nullopt;
    };

    long anchor = 0;
    for (long k = 0; k <= range + 1; ++k) {
        bool found = false;
        for (long s : {k, -k}) {
            if (!den_vanishes(c, s)) {
                anchor = s;
                found = true;
                break;
            }
            if (k == 0) break;
        }
        if (found) break;
    }

    auto Z = [&](long a, long k) { return L(a) / L(k); };

    struct Term {
        long k;
        int j;
        RatFunc coeff;
    };
    std::vector<Term> expansion;
    RatFunc rem = c;
    int guard = 0;
    while (auto k = find_pole(rem)) {
        if (++guard > 200) throw std::domain_error(name_ + ": ratio expansion did not terminate");
        int j = 1;
        RatFunc zinv = Z(*k, anchor);  // reciprocal of Z_{anchor,k}
        RatFunc probe = rem * zinv;
        while (den_vanishes(probe, *k)) {
            probe = probe * zinv;
            if (++j > 100) throw std::domain_error(name_ + ": pole order too large");
        }
        RatFunc coeff = eval_at(probe, *k);
        if (coeff.depends_on(xv) || coeff.depends_on(yv))
            throw std::domain_error(name_ + ": element outside the shift-ratio subring");
        expansion.push_back({*k, j, coeff});
        rem = rem - coeff * Z(anchor, *k).pow(j);
    }
    if (rem.depends_on(xv) || rem.depends_on(yv))
        throw std::domain_error(name_ + ": element outside the shift-ratio subring");

    RatFunc img = apply_ratio_family_field(h, from, to, rem, leg + 1);
    auto omega = [&](long k) {
        RatFunc w = target_->act(GVec{k}, h.w0);
        return to.embed(h.rho, 0).pow(k) * to.embed(w, leg);
    };
    for (auto& t : expansion) {
        RatFunc ci = apply_ratio_family_field(h, from, to, t.coeff, leg + 1);
        img = img + ci * (omega(anchor) / omega(t.k)).pow(t.j);
    }
    return img;
}

std::vector<std::string> BaseHom::check() const {
    std::vector<std::string> bad;
    auto note = [&](const std::string& s) { bad.push_back(name_ + ": " + s); };
    if (std::get_if<SubstHom>(&data_)) {
        for (int v = 0; v < source_->nvars(); ++v) {
            RatFunc x = source_->var(v);
            for (int gi = 0; gi < source_->gamma_rank(); ++gi) {
                GVec g = gv_zero(source_->gamma_rank());
                g[gi] = 1;
                try {
                    if (apply(source_->act(g, x)) != target_->act(g, apply(x)))
                        note("not equivariant on " + source_->vars()[v].name + "/generator " +
                             std::to_string(gi));
                } catch (const std::domain_error& e) {
                    note(std::string("pole while checking ") + source_->vars()[v].name + ": " +
                         e.what());
                }
            }
            if (apply(source_->star(x)) != target_->star(apply(x)))
                note("star incompatible on " + source_->vars()[v].name);
        }
        return bad;
    }
    if (auto* r = std::get_if<RatioFamilyHom>(&data_)) {
        GVec one{1};
        if (target_->act(one, r->q_image) != r->q_image) note("image of Q is not Gamma-fixed");
        if (target_->act(one, r->rho) != r->rho) note("rho is not Gamma-fixed");
        if (target_->star(r->q_image) != r->q_image) note("image of Q is not star-fixed");
        if (target_->star(r->rho) != r->rho) note("rho is not star-fixed");
        if (target_->star(r->w0) != r->w0) note("w0 is not star-fixed");
        auto Zsrc = [&](long k, long l) {
            RatFunc d = source_->var(r->x_var) - source_->var(r->y_var);
            return source_->act(GVec{k}, d) / source_->act(GVec{l}, d);
        };
        for (long k = -2; k <= 2; ++k)
            for (long l = -2; l <= 2; ++l) {
                if (k == l) continue;
                try {
                    RatFunc z = Zsrc(k, l);
                    if (apply(source_->act(one, z)) != target_->act(one, apply(z)))
                        note("not equivariant on Z[" + std::to_string(k) + "," +
                             std::to_string(l) + "]");
                    if (apply(source_->star(z)) != target_->star(apply(z)))
                        note("star incompatible on Z[" + std::to_string(k) + "," +
                             std::to_string(l) + "]");
                } catch (const std::domain_error& e) {
                    note(std::string("pole on Z-generator: ") + e.what());
                }
            }
        return bad;
    }
    auto& [f, g] = std::get<std::pair<HomPtr, HomPtr>>(data_);
    auto b1 = f->check();
    auto b2 = g->check();
    bad.insert(bad.end(), b1.begin(), b1.end());
    bad.insert(bad.end(), b2.begin(), b2.end());
    if (!(*f->target() == *g->source())) note("composite endpoints do not match");
    return bad;
}

}  // namespace dynqg
