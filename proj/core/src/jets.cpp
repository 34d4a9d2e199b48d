#include "pdlab/jets.hpp"

namespace pdlab {

std::vector<MultiIndex> multi_indices(int max_order) {
  std::vector<MultiIndex> out;
  out.reserve(jet_size(max_order));
  for (int d = 0; d <= max_order; ++d)
    for (int a2 = 0; a2 <= d; ++a2) out.push_back({d - a2, a2});
  return out;
}

RealJet real_part(const ComplexJet& j) {
  RealJet r(j.base(), j.order());
  for (const auto a : multi_indices(j.order())) r[a] = j[a].real();
  return r;
}

RealJet imag_part(const ComplexJet& j) {
  RealJet r(j.base(), j.order());
  for (const auto a : multi_indices(j.order())) r[a] = j[a].imag();
  return r;
}

ComplexJet to_complex(const RealJet& j) {
  ComplexJet c(j.base(), j.order());
  for (const auto a : multi_indices(j.order())) c[a] = j[a];
  return c;
}

ComplexJet complex_coordinate(Point base, int order) {
  ComplexJet z(base, order);
  z[{0, 0}] = {base.x, base.y};
  if (order >= 1) {
    z[{1, 0}] = {1.0, 0.0};
    z[{0, 1}] = {0.0, 1.0};
  }
  return z;
}

UniJet<double> sqrt_unijet(double q0, int order) {
  UniJet<double> u;
  u.center = q0;
  u.c.resize(order + 1);
  // binom(1/2, i) q0^{1/2 - i}, built by the ratio of consecutive terms.
  double term = std::sqrt(q0);
  for (int i = 0; i <= order; ++i) {
    u.c[i] = term;
    term *= (0.5 - i) / ((i + 1) * q0);
  }
  return u;
}

RealJet jet_norm(Point x, int order) {
  if (x.x == 0.0 && x.y == 0.0) throw DomainError("|x| is not differentiable at the origin");
  const auto x1 = RealJet::coordinate(x, order, 0);
  const auto x2 = RealJet::coordinate(x, order, 1);
  const RealJet q = x1 * x1 + x2 * x2;
  auto outer = sqrt_unijet(q.value(), order);
  RealJet r = jet_compose_1d(outer, q);
  // Exact value avoids the rounding of x1^2 + x2^2.
  r[{0, 0}] = norm(x);
  return r;
}

ComplexJet compose_plane(const ComplexJet& outer, const ComplexJet& inner) {
  const int K = inner.order();
  if (outer.order() < K) throw UsageError("outer jet order below inner jet order");
  const Point base = inner.base();
  const ComplexJet d1 = to_complex(real_part(inner).increment());
  const ComplexJet d2 = to_complex(imag_part(inner).increment());

  // Powers of the two increments, index i -> d^i.
  std::vector<ComplexJet> p1{ComplexJet::constant(base, K, 1.0)};
  std::vector<ComplexJet> p2{ComplexJet::constant(base, K, 1.0)};
  for (int i = 1; i <= K; ++i) {
    p1.push_back(p1.back() * d1);
    p2.push_back(p2.back() * d2);
  }

  ComplexJet out(base, K);
  for (const auto b : multi_indices(K)) {
    const auto coeff = outer[b];
    if (coeff == std::complex<double>{}) continue;
    out += coeff * (p1[b.a1] * p2[b.a2]);
  }
  return out;
}

double jacobian_det(const ComplexJet& map) {
  if (map.order() < 1) throw UsageError("Jacobian needs a jet of order >= 1");
  const auto d1 = map[{1, 0}];
  const auto d2 = map[{0, 1}];
  return d1.real() * d2.imag() - d2.real() * d1.imag();
}

}  // namespace pdlab
