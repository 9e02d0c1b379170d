#include "dynqg/bases.hpp"

#include <stdexcept>

namespace dynqg::bases {

namespace {
RatFunc v(int n, int i) { return RatFunc::variable(n, i); }
RatFunc c(int n, const Rat& x) { return RatFunc(n, x); }
}  // namespace

BasePtr sudq() {
    static BasePtr p = std::make_shared<BaseSpec>(
        "B_sudQ",
        std::vector<VarSpec>{{"Q", false, {}}, {"X", true, {}}, {"Y", true, {}}},
        1,
        // X -> Q^-1 X, Y -> Q Y
        std::vector<std::vector<RatFunc>>{{v(3, 0), v(3, 1) / v(3, 0), v(3, 2) * v(3, 0)}},
        std::vector<std::vector<RatFunc>>{{v(3, 0), v(3, 1) * v(3, 0), v(3, 2) / v(3, 0)}});
    return p;
}

BasePtr mq(std::optional<Rat> q) {
    if (!q) {
        static BasePtr p = std::make_shared<BaseSpec>(
            "B_Mq", std::vector<VarSpec>{{"q", false, {}}, {"x", true, {}}},
            1, std::vector<std::vector<RatFunc>>{{v(2, 0), v(2, 1) / v(2, 0)}},
            std::vector<std::vector<RatFunc>>{{v(2, 0), v(2, 1) * v(2, 0)}});
        return p;
    }
    if (*q == 0) throw std::invalid_argument("mq: q must be nonzero");
    return std::make_shared<BaseSpec>(
        "B_Mq[q=" + q->str() + "]", std::vector<VarSpec>{{"x", true, {}}}, 1,
        std::vector<std::vector<RatFunc>>{{v(1, 0) / c(1, *q)}},
        std::vector<std::vector<RatFunc>>{{v(1, 0) * c(1, *q)}});
}

BasePtr lambda() {
    static BasePtr p = std::make_shared<BaseSpec>(
        "B_lambda", std::vector<VarSpec>{{"lambda", true, {}}}, 1,
        std::vector<std::vector<RatFunc>>{{v(1, 0) - c(1, 1)}},
        std::vector<std::vector<RatFunc>>{{v(1, 0) + c(1, 1)}});
    return p;
}

BasePtr r_base() {
    static BasePtr p = std::make_shared<BaseSpec>(
        "B_R", std::vector<VarSpec>{{"Q", false, {}}}, 1,
        std::vector<std::vector<RatFunc>>{{v(1, 0)}},
        std::vector<std::vector<RatFunc>>{{v(1, 0)}});
    return p;
}

BasePtr cx() {
    static BasePtr p = std::make_shared<BaseSpec>(
        "B_CX", std::vector<VarSpec>{{"X", true, {}}}, 1,
        std::vector<std::vector<RatFunc>>{{v(1, 0) - c(1, 1)}},
        std::vector<std::vector<RatFunc>>{{v(1, 0) + c(1, 1)}});
    return p;
}

BasePtr trivial() {
    static BasePtr p = std::make_shared<BaseSpec>(
        "B_triv", std::vector<VarSpec>{}, 1, std::vector<std::vector<RatFunc>>{{}},
        std::vector<std::vector<RatFunc>>{{}});
    return p;
}

std::vector<BasePtr> standard_bases() { return {sudq(), mq(), lambda(), r_base(), cx()}; }

RatFunc Z(const BasePtr& b, long k, long l) {
    RatFunc d = b->var(b->var_index("X")) - b->var(b->var_index("Y"));
    return b->act(GVec{k}, d) / b->act(GVec{l}, d);
}

HomPtr pi_q_m(const Rat& q) {
    if (q == 0 || q == 1 || q == -1) throw std::invalid_argument("pi_q_m: q must avoid 0, 1, -1");
    BasePtr tgt = mq(q);
    return std::make_shared<BaseHom>(
        "pi-q-m[q=" + q.str() + "]", sudq(), tgt,
        SubstHom{{c(1, q), v(1, 0), v(1, 0).inverse()}});
}

HomPtr pi_m_symbolic() {
    BasePtr tgt = mq();
    return std::make_shared<BaseHom>(
        "pi-m", sudq(), tgt, SubstHom{{v(2, 0), v(2, 1), v(2, 1).inverse()}});
}

HomPtr pi_1() {
    BasePtr src = sudq(), tgt = lambda();
    RatioFamilyHom h;
    h.q_var = src->var_index("Q");
    h.x_var = src->var_index("X");
    h.y_var = src->var_index("Y");
    h.q_image = tgt->constant(1);
    h.w0 = tgt->var(0);  // (X-Y)_(k) -> lambda - k
    h.rho = tgt->constant(1);
    return std::make_shared<BaseHom>("pi-1", src, tgt, h);
}

namespace {
HomPtr pi_inf(bool plus) {
    BasePtr src = sudq(), tgt = r_base();
    RatioFamilyHom h;
    h.q_var = src->var_index("Q");
    h.x_var = src->var_index("X");
    h.y_var = src->var_index("Y");
    h.q_image = tgt->var(0);
    h.w0 = tgt->constant(1);  // (X-Y)_(k) -> Q^{-+k}
    h.rho = plus ? tgt->var(0) : tgt->var(0).inverse();
    return std::make_shared<BaseHom>(plus ? "pi-plus-inf" : "pi-minus-inf", src, tgt, h);
}

HomPtr specialize_q(const Rat& q) {
    // r_base -> trivial, Q -> q.
    return std::make_shared<BaseHom>("q=" + q.str(), r_base(), trivial(),
                                     SubstHom{{c(0, q)}});
}
}  // namespace

HomPtr pi_minus_inf() { return pi_inf(false); }
HomPtr pi_plus_inf() { return pi_inf(true); }

HomPtr pi_q_minus_inf(const Rat& q) {
    if (q == 0) throw std::invalid_argument("pi_q_minus_inf: q must be nonzero");
    return std::make_shared<BaseHom>("pi-q-minus-inf[q=" + q.str() + "]", pi_minus_inf(),
                                     specialize_q(q));
}

HomPtr pi_q_plus_inf(const Rat& q) {
    if (q == 0) throw std::invalid_argument("pi_q_plus_inf: q must be nonzero");
    return std::make_shared<BaseHom>("pi-q-plus-inf[q=" + q.str() + "]", pi_plus_inf(),
                                     specialize_q(q));
}

HomPtr pi_1_cx() {
    BasePtr tgt = cx();
    // Q -> 1, X -> 1, Y -> 0: every Z[k,l] goes to 1, landing in constants.
    return std::make_shared<BaseHom>("pi-1-cx", sudq(), tgt,
                                     SubstHom{{c(1, 1), c(1, 1), c(1, 0)}});
}

HomPtr identity(const BasePtr& b) {
    std::vector<RatFunc> images;
    for (int i = 0; i < b->nvars(); ++i) images.push_back(b->var(i));
    return std::make_shared<BaseHom>("id", b, b, SubstHom{std::move(images)});
}

HomPtr hom_by_name(const std::string& name, std::optional<Rat> q) {
    auto need_q = [&]() -> Rat {
        if (!q) throw std::invalid_argument(name + " requires --param q=VALUE");
        return *q;
    };
    if (name == "pi-q-m") return pi_q_m(need_q());
    if (name == "pi-1") return pi_1();
    if (name == "pi-minus-inf") return pi_minus_inf();
    if (name == "pi-plus-inf") return pi_plus_inf();
    if (name == "pi-q-minus-inf") return pi_q_minus_inf(need_q());
    if (name == "pi-q-plus-inf") return pi_q_plus_inf(need_q());
    if (name == "pi-1-cx") return pi_1_cx();
    throw std::invalid_argument("unknown base hom: " + name);
}

}  // namespace dynqg::bases
