#pragma once

#include "bga/strmod.hpp"

namespace bga {

// Named string families over a star presentation in normal form. Subscripts
// outside the defining ranges raise IndexOutOfFamily; words that would leave
// the string conditions raise WordError as usual.
//
// x_{l,p} = a_l ... a_{p-1} (trivial when l = p), indices mod n+1.
StringWord star_x(const Presentation& p, int l, int pfin);
// y_l = (d_l^{-(m_{l+1}-1)} a_l) ... (d_{i-1}^{-(m_i-1)} a_{i-1}), 0 <= l <= i-1.
StringWord star_y(const Presentation& p, int l);
// z_j = (d_j^- a_j) ... (d_{n-1}^- a_{n-1}) d_n^{-(m_{n+1}-1)}, all outer
// multiplicities > 1 (i = n+1), 0 <= j <= n.
StringWord star_z(const Presentation& p, int j);
// A_l: the full special cycle a_l ... a_{l-1} around the center.
StringWord star_A(const Presentation& p, int l);
// mu_{l,r} = A_l x_{l,r}; mu_l = mu_{l,l-1}.
StringWord star_mu(const Presentation& p, int l, int r);
StringWord star_mu(const Presentation& p, int l);
// rho_{l,r} = (d_l^{-1} mu_l) ... (d_1^{-1} mu_1)(d_0^{-1} mu_{0,r}),
// 0 <= l <= i-1; rho_l = rho_{l,l}.
StringWord star_rho(const Presentation& p, int l, int r);
StringWord star_rho(const Presentation& p, int l);
// gamma_{a,b} = (d_a^{-1} a_a) ... (d_b^{-1} a_b), 0 <= a <= b <= i-1.
StringWord star_gamma(const Presentation& p, int a, int b);

}  // namespace bga
