#pragma once

#include "dynqg/base.hpp"

#include <optional>

namespace dynqg::bases {

/// Base of the full dynamical quantum group: Q shared, X, Y dynamical,
/// X_(k) = Q^-k X, Y_(k) = Q^k Y, star fixing all three.
BasePtr sudq();

/// Rational model of the meromorphic base: x stands for q^lambda, so
/// x_(k) = q^-k x and z = x - 1/x. With no argument q is a shared variable;
/// with a rational q0 the base is Q(x) and the action uses the number.
BasePtr mq(std::optional<Rat> q = std::nullopt);

/// Q(lambda) with lambda_(k) = lambda - k.
BasePtr lambda();

/// Q(Q) with the trivial action.
BasePtr r_base();

/// Q(X) with X_(k) = X - k (the polynomial example base).
BasePtr cx();

/// The rationals with a rank-1 trivial action.
BasePtr trivial();

std::vector<BasePtr> standard_bases();

/// Z[k,l] over the sud base: (X-Y)_(k) / (X-Y)_(l).
RatFunc Z(const BasePtr& b, long k, long l);

// The base-change web. Homs with a q parameter take it exactly.
HomPtr pi_q_m(const Rat& q);          // sudq -> mq(q):  Q -> q, X -> x, Y -> 1/x
HomPtr pi_m_symbolic();               // sudq -> mq():   Q -> q variable
HomPtr pi_1();                        // sudq -> lambda: Z[k,l] -> (lambda-k)/(lambda-l)
HomPtr pi_minus_inf();                // sudq -> r_base: Z[k,l] -> Q^(l-k)
HomPtr pi_plus_inf();                 // sudq -> r_base: Z[k,l] -> Q^(k-l)
HomPtr pi_q_minus_inf(const Rat& q);  // sudq -> trivial
HomPtr pi_q_plus_inf(const Rat& q);   // sudq -> trivial
HomPtr pi_1_cx();                     // sudq -> cx: Q, Z[k,l] -> 1
HomPtr identity(const BasePtr& b);

/// Named lookup used by the command line: pi-q-m, pi-1, pi-minus-inf,
/// pi-plus-inf, pi-q-minus-inf, pi-q-plus-inf, pi-1-cx.
HomPtr hom_by_name(const std::string& name, std::optional<Rat> q);

}  // namespace dynqg::bases
