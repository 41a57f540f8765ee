#include "mutwb/local/local_system.hpp"

#include "mutwb/error.hpp"

namespace mutwb {

Character::Character(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == 0 || b_ == 0) fail(ErrorKind::InvalidArgument, "holonomies of a local system are nonzero");
}

Rational Character::value(const LatticeVector& cls) const {
  if (cls.size() != 2) fail(ErrorKind::InvalidArgument, "torus classes live in Z^2");
  return pow(a_, cls[0]) * pow(b_, cls[1]);
}

Integer crossing_sign(const LatticeVector& vk, const LatticeVector& g) { return det2(vk, g); }

Character mutate_character(const Character& ch, const GeodesicConfig& cfg, std::size_t k) {
  check_index(k, cfg.size(), "mutate_character");
  const LatticeVector& vk = cfg.cls(k);
  const Rational t = ch.value(vk);
  const Rational factor = 1 - t;
  if (factor == 0) {
    fail(ErrorKind::NotRegular, "holonomy around curve " + std::to_string(k + 1) + " equals 1");
  }
  return Character(ch.a() * pow(factor, crossing_sign(vk, {1, 0})), ch.b() * pow(factor, crossing_sign(vk, {0, 1})));
}

CommutingPair::CommutingPair(RationalMatrix a, RationalMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.is_square() || !b_.is_square() || a_.rows() != b_.rows()) {
    fail(ErrorKind::InvalidArgument, "holonomies must be square matrices of equal size");
  }
  if (a_ * b_ != b_ * a_) fail(ErrorKind::InvalidArgument, "torus holonomies must commute");
  if (a_.det() == 0 || b_.det() == 0) fail(ErrorKind::InvalidArgument, "holonomies must be invertible");
}

RationalMatrix holonomy(const CommutingPair& sys, const LatticeVector& cls) {
  if (cls.size() != 2) fail(ErrorKind::InvalidArgument, "torus classes live in Z^2");
  return matrix_power(sys.a(), cls[0]) * matrix_power(sys.b(), cls[1]);
}

CommutingPair mutate_rank_n(const CommutingPair& sys, const GeodesicConfig& cfg, std::size_t k) {
  check_index(k, cfg.size(), "mutate_rank_n");
  const LatticeVector& v = cfg.cls(k);
  const LatticeVector u = unimodular_partner(v);
  const RationalMatrix hv = holonomy(sys, v);
  const RationalMatrix twist = RationalMatrix::identity(sys.rank()) - hv;
  if (!twist.is_invertible()) {
    fail(ErrorKind::NotRegular, "Id - holonomy around curve " + std::to_string(k + 1) + " is singular");
  }
  const RationalMatrix hu = holonomy(sys, u) * matrix_power(twist, crossing_sign(v, u));
  // [u v] has determinant 1; a = v_1 u - u_1 v and b = -v_0 u + u_0 v
  auto combine = [&](const Integer& cu, const Integer& cv) { return matrix_power(hu, cu) * matrix_power(hv, cv); };
  return CommutingPair(combine(v[1], -u[1]), combine(-v[0], u[0]));
}

}  // namespace mutwb
