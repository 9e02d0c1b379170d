#include "dynqg/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace dynqg {

int cmp_expo(const Expo& a, const Expo& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db ? -1 : 1;
    if (a.size() != b.size()) throw std::logic_error("cmp_expo: mixed variable layouts");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

Poly::Poly(int nvars, const Rat& c) : nvars_(nvars) {
    if (c != 0) terms_[Expo(nvars, 0)] = c;
}

Poly Poly::variable(int nvars, int index, int power) {
    Poly p(nvars);
    Expo e(nvars, 0);
    e.at(index) = power;
    p.terms_[e] = 1;
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Expo(nvars_, 0);
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("Poly::constant_value on non-constant");
    return terms_.begin()->second;
}

void Poly::set_term(const Expo& e, const Rat& c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int Poly::total_degree() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool Poly::depends_on(int var) const {
    for (auto& [e, c] : terms_)
        if (e[var] > 0) return true;
    return false;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            Expo e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = c1 * c2;
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
        [](const auto& a, const auto& b) {
            int c = cmp_expo(a.first, b.first);
            if (c != 0) return c < 0;
            return a.second < b.second;
        });
}

std::pair<Expo, Rat> Poly::leading() const {
    if (terms_.empty()) throw std::logic_error("Poly::leading of zero");
    return *terms_.rbegin();
}

std::optional<Poly> Poly::divided_by(const Poly& o) const {
    if (o.is_zero()) throw std::logic_error("division by zero polynomial");
    Poly rem = *this, quot(nvars_);
    auto [le, lc] = o.leading();
    while (!rem.is_zero()) {
        auto [re, rc] = rem.leading();
        Expo qe(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            qe[i] = re[i] - le[i];
            if (qe[i] < 0) return std::nullopt;
        }
        Poly t(nvars_);
        t.terms_[qe] = rc / lc;
        quot = quot + t;
        rem = rem - t * o;
        if (!rem.is_zero() && cmp_expo(rem.leading().first, re) >= 0) return std::nullopt;
    }
    return quot;
}

Poly Poly::remap(int new_nvars, const std::vector<int>& map) const {
    Poly r(new_nvars);
    for (auto& [e, c] : terms_) {
        Expo ne(new_nvars, 0);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            ne.at(map.at(i)) += e[i];
        }
        auto it = r.terms_.find(ne);
        if (it == r.terms_.end())
            r.terms_[ne] = c;
        else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

namespace {

// Integer-primitive representation: p = content * pp with pp having integer
// coefficients, positive leading coefficient and integer content 1.
Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    Int lcm_den = 1;
    for (auto& [e, c] : p.terms()) lcm_den = lcm(lcm_den, denominator(c));
    Int gcd_num = 0;
    for (auto& [e, c] : p.terms()) gcd_num = gcd(gcd_num, numerator(c) * (lcm_den / denominator(c)));
    Rat scale = Rat(lcm_den) / Rat(gcd_num);
    Poly r = p * scale;
    if (r.leading().second < 0) r = -r;
    return r;
}

// Collects p as a univariate polynomial in `var` with Poly coefficients.
std::vector<Poly> coeffs_in(const Poly& p, int var) {
    std::vector<Poly> cs(p.degree_in(var) + 1, Poly(p.nvars()));
    for (auto& [e, c] : p.terms()) {
        Expo r = e;
        int d = r[var];
        r[var] = 0;
        Poly t(p.nvars());
        t.set_term(r, c);
        cs[d] = cs[d] + t;
    }
    return cs;
}

Poly from_coeffs(const std::vector<Poly>& cs, int var, int nvars) {
    Poly r(nvars);
    Poly x = Poly::variable(nvars, var);
    Poly xp(nvars, 1);
    for (size_t d = 0; d < cs.size(); ++d) {
        r = r + cs[d] * xp;
        xp = xp * x;
    }
    return r;
}

// Pseudo-remainder of a by b in variable `var`.
Poly prem(Poly a, const Poly& b, int var) {
    int db = b.degree_in(var);
    auto bc = coeffs_in(b, var);
    Poly lb = bc[db];
    while (!a.is_zero() && a.degree_in(var) >= db) {
        int da = a.degree_in(var);
        auto ac = coeffs_in(a, var);
        Poly la = ac[da];
        Poly shift = Poly::variable(a.nvars(), var, da - db);
        a = a * lb - b * (la * shift);
        if (!a.is_zero() && a.degree_in(var) >= da)
            throw std::logic_error("prem: leading term did not cancel");
    }
    return a;
}

// Splits off the largest monomial factor, returned as an exponent vector.
Expo monomial_content(const Poly& p) {
    Expo m;
    for (auto& [e, c] : p.terms()) {
        if (m.empty())
            m = e;
        else
            for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
    if (m.empty()) m = Expo(p.nvars(), 0);
    return m;
}

Poly shift_out(const Poly& p, const Expo& m) {
    Poly r(p.nvars());
    for (auto& [e, c] : p.terms()) {
        Expo ne = e;
        for (size_t i = 0; i < ne.size(); ++i) ne[i] -= m[i];
        r.set_term(ne, c);
    }
    return r;
}

int pick_main_var(const Poly& a, const Poly& b) {
    // Prefer a shared variable of minimal combined degree.
    int best = -1, best_deg = 1 << 30;
    for (int v = 0; v < a.nvars(); ++v)
        if (a.depends_on(v) && b.depends_on(v)) {
            int d = a.degree_in(v) + b.degree_in(v);
            if (d < best_deg) best = v, best_deg = d;
        }
    return best;
}

Poly gcd_impl(Poly a, Poly b);

Poly content_in(const Poly& p, int var) {
    auto cs = coeffs_in(p, var);
    Poly g(p.nvars());
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? primitive_part(c) : gcd_impl(g, c);
        if (g.is_constant()) return Poly(p.nvars(), 1);
    }
    return g;
}

Poly pow_poly(Poly base, int e) {
    Poly r(base.nvars(), 1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

Int max_coeff_norm(const Poly& p) {
    Int m = 0;
    for (auto& [e, c] : p.terms()) {
        Int n = abs(numerator(c));
        if (n > m) m = n;
    }
    return m;
}

std::optional<Poly> subst_int(const Poly& p, int var, const Int& xi) {
    // p(var := xi) for integer-coefficient p; exact cpp_int arithmetic.
    Poly r(p.nvars());
    for (auto& [e, c] : p.terms()) {
        Expo ne = e;
        ne[var] = 0;
        Int scale = 1;
        for (int i = 0; i < e[var]; ++i) scale *= xi;
        Poly t(p.nvars());
        t.set_term(ne, c * Rat(scale));
        r = r + t;
    }
    return r.is_zero() ? std::nullopt : std::optional<Poly>(r);
}

// Symmetric remainder in (-xi/2, xi/2].
Int smod(const Int& a, const Int& xi) {
    Int r = a % xi;
    if (r * 2 > xi) r -= xi;
    if (r * 2 <= -xi) r += xi;
    return r;
}

int last_var(const Poly& a, const Poly& b) {
    for (int v = a.nvars() - 1; v >= 0; --v)
        if (a.depends_on(v) && b.depends_on(v)) return v;
    return -1;
}

// Heuristic gcd on primitive integer polynomials; nullopt when unlucky.
std::optional<Poly> gcd_heu(const Poly& a, const Poly& b, int depth = 0) {
    if (depth > 12) return std::nullopt;
    int v = last_var(a, b);
    if (v < 0) {
        // No shared variable: gcd of primitives is the integer gcd = 1 here,
        // times any common... primitive parts have unit content, so 1.
        return Poly(a.nvars(), 1);
    }
    Int xi = 2 * std::min(max_coeff_norm(a), max_coeff_norm(b)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        auto fa = subst_int(a, v, xi);
        auto fb = subst_int(b, v, xi);
        if (fa && fb) {
            std::optional<Poly> gamma;
            if (!fa->depends_on(v) && !fb->depends_on(v)) {
                if (fa->is_constant() && fb->is_constant()) {
                    Int g = gcd(numerator(fa->constant_value()), numerator(fb->constant_value()));
                    gamma = Poly(a.nvars(), Rat(g));
                } else {
                    gamma = gcd_heu(primitive_part(*fa), primitive_part(*fb), depth + 1);
                    if (gamma) {
                        // Restore the integer content lost by primitive_part:
                        // scale candidate by gcd of contents.
                        Int ca = 0, cb = 0;
                        for (auto& [e, c] : fa->terms()) ca = gcd(ca, numerator(c));
                        for (auto& [e, c] : fb->terms()) cb = gcd(cb, numerator(c));
                        gamma = *gamma * Rat(gcd(ca, cb));
                    }
                }
            }
            if (gamma) {
                // xi-adic reconstruction of the candidate in variable v.
                Poly h(a.nvars());
                Poly g = *gamma;
                int i = 0;
                while (!g.is_zero() && i < 200) {
                    Poly c(a.nvars());
                    for (auto& [e, k] : g.terms()) {
                        Poly t(a.nvars());
                        t.set_term(e, Rat(smod(numerator(k), xi)));
                        c = c + t;
                    }
                    Poly xv = Poly::variable(a.nvars(), v, i);
                    h = h + c * xv;
                    g = (g - c) * (Rat(1) / Rat(xi));
                    // g now has coefficients divisible exactly; re-verify integrality.
                    for (auto& [e, k] : g.terms())
                        if (denominator(k) != 1) return std::nullopt;
                    ++i;
                }
                if (g.is_zero()) {
                    h = primitive_part(h);
                    if (a.divided_by(h) && b.divided_by(h)) return h;
                }
            }
        }
        xi = (xi * 73794) / 27011 + 37;
    }
    return std::nullopt;
}

Poly gcd_impl(Poly a, Poly b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    Expo ma = monomial_content(a), mb = monomial_content(b);
    Expo mg(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) mg[i] = std::min(ma[i], mb[i]);
    a = shift_out(a, ma);
    b = shift_out(b, mb);
    Poly mono(a.nvars());
    mono.set_term(mg, 1);

    a = primitive_part(a);
    b = primitive_part(b);
    Poly result(a.nvars(), 1);
    if (!a.is_constant() && !b.is_constant()) {
        if (auto h = gcd_heu(a, b)) return *h * mono;
        int v = pick_main_var(a, b);
        if (v >= 0) {
            Poly ca = content_in(a, v), cb = content_in(b, v);
            Poly cg = gcd_impl(ca, cb);
            Poly pa = *a.divided_by(ca), pb = *b.divided_by(cb);
            if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
            // Subresultant PRS.
            Poly g(a.nvars(), 1), h(a.nvars(), 1);
            while (true) {
                int delta = pa.degree_in(v) - pb.degree_in(v);
                Poly r = prem(pa, pb, v);
                if (r.is_zero()) {
                    Poly pp = *pb.divided_by(content_in(pb, v));
                    result = primitive_part(cg * pp);
                    break;
                }
                if (!r.depends_on(v)) {
                    result = cg;
                    break;
                }
                pa = pb;
                Poly divisor = g * pow_poly(h, delta);
                auto q = r.divided_by(divisor);
                pb = q ? *q : primitive_part(r);
                g = coeffs_in(pa, v)[pa.degree_in(v)];
                if (delta == 0) {
                    // h unchanged
                } else if (delta == 1) {
                    h = g;
                } else {
                    auto hq = pow_poly(g, delta).divided_by(pow_poly(h, delta - 1));
                    h = hq ? *hq : g;
                }
            }
        }
    }
    return result * mono;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(num_.nvars(), 1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant() || g.constant_value() != 1) {
        num_ = *num_.divided_by(g);
        den_ = *den_.divided_by(g);
    }
    Rat lc = den_.leading().second;
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool RatFunc::is_one() const { return den_.is_constant() && num_ == Poly(num_.nvars(), 1); }

Rat RatFunc::constant_value() const {
    if (!is_constant()) throw std::logic_error("RatFunc::constant_value on non-constant");
    if (num_.is_zero()) return 0;
    return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    RatFunc base = e < 0 ? inverse() : *this;
    long n = e < 0 ? -e : e;
    RatFunc r(nvars(), Rat(1));
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool RatFunc::operator<(const RatFunc& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

RatFunc RatFunc::remap(int new_nvars, const std::vector<int>& map) const {
    return RatFunc(num_.remap(new_nvars, map), den_.remap(new_nvars, map));
}

RatFunc subst(const Poly& p, const std::vector<RatFunc>& images) {
    if (p.is_zero()) return RatFunc(images.empty() ? 0 : images[0].nvars());
    int out_nvars = images.empty() ? 0 : images[0].nvars();
    RatFunc acc(out_nvars);
    for (auto& [e, c] : p.terms()) {
        RatFunc t(out_nvars, c);
        for (int i = 0; i < p.nvars(); ++i)
            if (e[i] != 0) t = t * images[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

RatFunc subst(const RatFunc& f, const std::vector<RatFunc>& images) {
    RatFunc n = subst(f.num(), images);
    RatFunc d = subst(f.den(), images);
    if (d.is_zero()) throw std::domain_error("subst: denominator maps to zero");
    return n / d;
}

}  // namespace dynqg
