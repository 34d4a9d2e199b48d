#pragma once

// The radial twists
//
//   phi_n(x) = x exp(i (2 pi / 2^n) chi(kappa_n n (n|x| - 1))),   n >= 4,
//
// their jets, inverses, the pushforward law for u dx1 ^ dx2 and finite
// compositions selected by 0/1 words.

#include <cstdint>
#include <string>
#include <vector>

#include "pdlab/arrangement.hpp"

namespace pdlab {

/// Finite 0/1 word u_start, u_start+1, ... selecting a composition of twists.
class BitWord {
 public:
  BitWord() = default;
  BitWord(int start, std::vector<std::uint8_t> bits);

  /// Parses "start:bits", e.g. "4:1011" (u_4 = 1, u_5 = 0, u_6 = 1, u_7 = 1).
  static BitWord parse(const std::string& text);
  /// Word with exactly the listed levels active.
  static BitWord from_levels(const std::vector<int>& levels);

  int start() const { return start_; }
  /// One past the last level covered by the word.
  int end() const { return start_ + static_cast<int>(bits_.size()); }
  bool active(int n) const;
  std::vector<int> active_levels() const;
  bool empty() const { return active_levels().empty(); }
  std::string to_string() const;

  /// Same map (trailing/leading zeros ignored).
  friend bool operator==(const BitWord& a, const BitWord& b) {
    return a.active_levels() == b.active_levels();
  }

 private:
  int start_ = kMinLevel;
  std::vector<std::uint8_t> bits_;
};

class RotationFamily {
 public:
  explicit RotationFamily(Cutoff chi = Cutoff{}, TwistSchedule schedule = {});

  const Cutoff& cutoff() const { return chi_; }
  TwistSchedule schedule() const { return schedule_; }

  /// Rotation angle (2 pi / 2^n) chi(...) at radius r.
  double twist_angle(int n, double r) const;

  Point phi_eval(int n, Point x) const;
  Point phi_inverse_eval(int n, Point x) const;

  /// Jet of phi_n as a complex-valued map.
  ComplexJet phi_jet(int n, Point x, int order) const;
  /// Jet of phi_n - id.
  ComplexJet phi_deviation_jet(int n, Point x, int order) const;
  /// Jet of exp(f_n) - 1.
  ComplexJet exp_twist_jet(int n, Point x, int order) const;

  double jacobian(int n, Point x) const;

  /// det D phi_n(x) * u(x): the coefficient of (phi_n)_* pi at phi_n(x).
  double pushforward_coeff(const Arrangement& arrangement, int n, Point x) const;
  /// |u(phi_n(x)) - det D phi_n(x) u(x)|.
  double invariance_residual(const Arrangement& arrangement, int n, Point x) const;

  /// Composition by dispatch: supports are disjoint, so at most one active
  /// factor moves x; found by exact radial classification.
  Point word_eval(const BitWord& w, Point x) const;
  /// Left-to-right composition phi_m^{u_m} o ... o phi_start^{u_start}.
  Point word_eval_naive(const BitWord& w, Point x) const;
  /// Active level whose twist support contains x, 0 if none.
  int word_active_level(const BitWord& w, Point x) const;

  /// Jet of (word - id) by composing the factor jets.
  ComplexJet word_deviation_jet(const BitWord& w, Point x, int order) const;
  /// Jet of sum_n u_n (phi_n - id).
  ComplexJet word_deviation_sum_jet(const BitWord& w, Point x, int order) const;

 private:
  Cutoff chi_;
  TwistSchedule schedule_;
  std::vector<TwistBands> bands_;  // index n - 4
};

}  // namespace pdlab
