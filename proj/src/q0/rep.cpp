#include "mutwb/q0/rep.hpp"

namespace mutwb {

template class Q0RepT<Rational>;
template Decomposition<Rational> decompose(const Q0RepT<Rational>&);
template Q0RepT<Rational> mutate_rep(const Q0RepT<Rational>&);

}  // namespace mutwb
