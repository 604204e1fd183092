#include "lenard/equivariant.hpp"

namespace lenard::equivariant {

Example3 example3_fixture() {
  const double sigma2 = -1.0 / 8.0;
  return {FamilyParams::solved(2.0, 1.0, sigma2), wdvv::VeselovPotential(3, 1.0, 1.0 / 16.0)};
}

namespace closed_forms {

namespace {

Vector v3(double x, double y, double z) { return (Vector(3) << x, y, z).finished(); }

}  // namespace

Vector dA(const Point& a) {
  const double a1 = a(0), a2 = a(1), a3 = a(2);
  return v3(2 * a1 + a2 + a3, a1 + 2 * a2 + a3, a1 + a2 + 2 * a3);
}

Vector dQ(const Point& a) { return -0.25 * v3(1, -1, 0) / (a(0) - a(1)); }
Vector dR(const Point& a) { return -0.25 * v3(1, 0, -1) / (a(0) - a(2)); }
Vector dT(const Point& a) { return -0.25 * v3(0, 1, -1) / (a(1) - a(2)); }

namespace {

Vector dp_with(const Point& a, double numerator1) {
  const double a1 = a(0), a2 = a(1), a3 = a(2);
  const double den = 4 * (2 * a1 + a2 + a3);
  return v3(numerator1 / (den * (a1 - a2) * (a1 - a3)), -(2 * a2 + a1 + a3) / (den * (a1 - a2)),
            -(2 * a3 + a1 + a2) / (den * (a1 - a3)));
}

}  // namespace

Vector dP(const Point& a) {
  const double a1 = a(0), a2 = a(1), a3 = a(2);
  return dp_with(a, 6 * a1 * a1 - 2 * a1 * a2 - 2 * a1 * a3 - a2 * a2 - a3 * a3);
}

Vector dP_literal(const Point& a) {
  const double a1 = a(0), a2 = a(1), a3 = a(2);
  return dp_with(a, 6 * a1 * a1 - 2 * a1 * a2 - 2 * a2 * a3 - a2 * a2 - a3 * a3);
}

Vector dS(const Point& a) {
  const double a1 = a(0), a2 = a(1), a3 = a(2);
  const double den = 4 * (2 * a2 + a1 + a3);
  return v3(-(2 * a1 + a2 + a3) / (den * (a2 - a1)),
            (6 * a2 * a2 - 2 * a2 * a3 - 2 * a2 * a1 - a3 * a3 - a1 * a1) / (den * (a2 - a1) * (a2 - a3)),
            -(2 * a3 + a2 + a1) / (den * (a2 - a3)));
}

Vector dV_literal(const Point& a) {
  const double a1 = a(0), a2 = a(1), a3 = a(2);
  const double den = 4 * (2 * a3 + a2 + a1);
  return v3(-(2 * a1 + a2 + a3) / (den * (a3 - a1)), -(2 * a2 + a1 + a3) / (den * (a3 - a2)),
            (6 * a3 * a3 - 2 * a1 * a3 - 2 * a2 * a3 - a1 * a1 - a3 * a3) / (den * (a3 - a1) * (a3 - a2)));
}

Vector chain_field(std::size_t j) {
  Vector v = Vector::Constant(3, -0.25);
  v(static_cast<Eigen::Index>(j)) = 0.75;
  return v;
}

}  // namespace closed_forms

}  // namespace lenard::equivariant
