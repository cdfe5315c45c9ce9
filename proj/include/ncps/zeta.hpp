#ifndef NCPS_ZETA_HPP
#define NCPS_ZETA_HPP

namespace ncps {

/// Signed partial sum sum_{i=p+1}^{q} 1/sqrt(i) for q >= p, antisymmetric in
/// (p, q). Equals the difference of Hurwitz zeta values at s = 1/2, but the
/// indices used here never warrant more than direct summation.
double zeta_partial(int p, int q);

}  // namespace ncps

#endif
