#include "pdlab/diffeo.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace pdlab {

BitWord::BitWord(int start, std::vector<std::uint8_t> bits) : start_(start), bits_(std::move(bits)) {
  if (start_ < kMinLevel) throw UsageError("word start must be >= 4");
  if (end() - 1 > kMaxLevel) throw UsageError("word exceeds level 62");
  for (auto b : bits_)
    if (b > 1) throw UsageError("word bits must be 0 or 1");
}

BitWord BitWord::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("word must look like start:bits, e.g. 4:101");
  int start = 0;
  try {
    std::size_t used = 0;
    start = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw UsageError("bad word start");
  } catch (const std::logic_error&) {
    throw UsageError("bad word start in '" + text + "'");
  }
  std::vector<std::uint8_t> bits;
  for (char c : text.substr(colon + 1)) {
    if (c != '0' && c != '1') throw UsageError("word bits must be 0 or 1 in '" + text + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitWord(start, std::move(bits));
}

BitWord BitWord::from_levels(const std::vector<int>& levels) {
  if (levels.empty()) return BitWord(kMinLevel, {});
  const int lo = *std::min_element(levels.begin(), levels.end());
  const int hi = *std::max_element(levels.begin(), levels.end());
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(hi - lo + 1), 0);
  for (int n : levels) bits[n - lo] = 1;
  return BitWord(lo, std::move(bits));
}

bool BitWord::active(int n) const {
  if (n < start_ || n >= end()) return false;
  return bits_[n - start_] == 1;
}

std::vector<int> BitWord::active_levels() const {
  std::vector<int> out;
  for (int n = start_; n < end(); ++n)
    if (active(n)) out.push_back(n);
  return out;
}

std::string BitWord::to_string() const {
  std::string s = std::to_string(start_) + ":";
  for (auto b : bits_) s += static_cast<char>('0' + b);
  return s;
}

RotationFamily::RotationFamily(Cutoff chi, TwistSchedule schedule) : chi_(chi), schedule_(schedule) {
  for (int n = kMinLevel; n <= kMaxLevel; ++n) bands_.push_back(twist_bands(n, schedule_));
}

double RotationFamily::twist_angle(int n, double r) const {
  check_level(n);
  return kTwoPi / std::ldexp(1.0, n) * chi_(twist_argument(n, r, schedule_));
}

namespace {
Point rotate(Point x, double angle) {
  if (angle == 0.0) return x;
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * x.x - s * x.y, s * x.x + c * x.y};
}
}  // namespace

Point RotationFamily::phi_eval(int n, Point x) const { return rotate(x, twist_angle(n, norm(x))); }

Point RotationFamily::phi_inverse_eval(int n, Point x) const {
  return rotate(x, -twist_angle(n, norm(x)));
}

ComplexJet RotationFamily::exp_twist_jet(int n, Point x, int order) const {
  const ComplexJet f = f_n_jet(x, n, order, schedule_, chi_);
  ComplexJet e = jet_compose_1d(exp_unijet(f.value(), order), f);
  e.add_constant(-1.0);
  // exp(i theta) - 1 without cancellation in the constant term.
  const double theta = f.value().imag();
  e[{0, 0}] = {-2.0 * std::sin(theta / 2) * std::sin(theta / 2), std::sin(theta)};
  return e;
}

ComplexJet RotationFamily::phi_deviation_jet(int n, Point x, int order) const {
  return complex_coordinate(x, order) * exp_twist_jet(n, x, order);
}

ComplexJet RotationFamily::phi_jet(int n, Point x, int order) const {
  return phi_deviation_jet(n, x, order) + complex_coordinate(x, order);
}

double RotationFamily::jacobian(int n, Point x) const { return jacobian_det(phi_jet(n, x, 1)); }

double RotationFamily::pushforward_coeff(const Arrangement& arrangement, int n, Point x) const {
  return jacobian(n, x) * arrangement.u_eval(x);
}

double RotationFamily::invariance_residual(const Arrangement& arrangement, int n, Point x) const {
  return std::abs(arrangement.u_eval(phi_eval(n, x)) - pushforward_coeff(arrangement, n, x));
}

int RotationFamily::word_active_level(const BitWord& w, Point x) const {
  const double r = norm(x);
  if (r == 0.0) return 0;
  const int lo = std::max(w.start(), static_cast<int>(std::floor(1.0 / r)) - 1);
  const int hi = std::min(w.end() - 1, static_cast<int>(std::ceil(1.0 / r)) + 1);
  for (int n = lo; n <= hi; ++n) {
    if (!w.active(n)) continue;
    const auto& b = bands_[n - kMinLevel];
    if (radial_side(x, b.support_inner) == Side::outside && radial_side(x, b.support_outer) == Side::inside)
      return n;
  }
  return 0;
}

Point RotationFamily::word_eval(const BitWord& w, Point x) const {
  const int n = word_active_level(w, x);
  return n == 0 ? x : phi_eval(n, x);
}

Point RotationFamily::word_eval_naive(const BitWord& w, Point x) const {
  Point y = x;
  for (int n = w.start(); n < w.end(); ++n)
    if (w.active(n)) y = phi_eval(n, y);
  return y;
}

ComplexJet RotationFamily::word_deviation_jet(const BitWord& w, Point x, int order) const {
  ComplexJet map = complex_coordinate(x, order);
  for (int n = w.start(); n < w.end(); ++n) {
    if (!w.active(n)) continue;
    const auto v = map.value();
    map = compose_plane(phi_jet(n, {v.real(), v.imag()}, order), map);
  }
  return map - complex_coordinate(x, order);
}

ComplexJet RotationFamily::word_deviation_sum_jet(const BitWord& w, Point x, int order) const {
  ComplexJet sum(x, order);
  for (int n = w.start(); n < w.end(); ++n)
    if (w.active(n)) sum += phi_deviation_jet(n, x, order);
  return sum;
}

}  // namespace pdlab
