// Copyright 2026 The gmsc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace gms {

/**
 * A rotation angle, stored either as an exact rational multiple of pi or as
 * a plain double in radians.
 *
 * Exact phases are kept in lowest terms with the numerator reduced modulo
 * 2*denominator into the range (-den, den], i.e. angles live in (-pi, pi].
 * Only exact phases answer Clifford-ness queries positively; a numeric phase
 * is never treated as a multiple of pi/2 even if it is numerically close.
 */
class Phase {
 public:
  Phase() : exact_(true), num_(0), den_(1), radians_(0.0) {}

  static Phase rational(std::int64_t num, std::int64_t den);
  static Phase radians(double value);
  static Phase zero() { return Phase(); }
  static Phase pi() { return rational(1, 1); }
  static Phase half_pi() { return rational(1, 2); }

  bool is_exact() const { return exact_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Value in radians, in (-pi, pi] for exact phases.
  double value() const;

  bool is_zero() const;
  /// Exact multiple of pi (0 or pi).
  bool is_pauli() const { return exact_ && den_ == 1; }
  /// Exact multiple of pi/2.
  bool is_clifford() const { return exact_ && den_ <= 2; }
  /// Exactly +pi/2 or -pi/2.
  bool is_proper_clifford() const { return exact_ && den_ == 2; }
  bool is_pi() const { return exact_ && den_ == 1 && num_ == 1; }

  Phase operator+(const Phase& o) const;
  Phase operator-(const Phase& o) const;
  Phase operator-() const;
  Phase& operator+=(const Phase& o) { return *this = *this + o; }

  bool operator==(const Phase& o) const;
  bool operator!=(const Phase& o) const { return !(*this == o); }

  /// "pi/4", "-3*pi/4", "0", "pi", or a decimal literal for numeric phases.
  std::string str() const;

  /// Continued-fraction snap of a radian value to a rational multiple of pi.
  /// Returns nullopt if no fraction with denominator <= max_den lies within
  /// tol (absolute, in radians).
  static std::optional<Phase> snap(double radians, double tol = 1e-12,
                                   std::int64_t max_den = 1000000);

 private:
  bool exact_;
  std::int64_t num_;
  std::int64_t den_;
  double radians_;  // only meaningful when !exact_

  void normalize();
};

}  // namespace gms
