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

#include "gms/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gms {

namespace {
constexpr double kPi = std::numbers::pi;
}

Phase Phase::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Phase: zero denominator");
  Phase p;
  p.exact_ = true;
  p.num_ = num;
  p.den_ = den;
  p.normalize();
  return p;
}

Phase Phase::radians(double value) {
  Phase p;
  p.exact_ = false;
  p.num_ = 0;
  p.den_ = 1;
  p.radians_ = std::remainder(value, 2.0 * kPi);
  return p;
}

void Phase::normalize() {
  if (!exact_) return;
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  // Reduce modulo 2*pi into (-pi, pi].
  std::int64_t two_den = 2 * den_;
  num_ %= two_den;
  if (num_ > den_) num_ -= two_den;
  if (num_ <= -den_) num_ += two_den;
}

double Phase::value() const {
  if (exact_) return static_cast<double>(num_) / static_cast<double>(den_) * kPi;
  return radians_;
}

bool Phase::is_zero() const {
  if (exact_) return num_ == 0;
  return radians_ == 0.0;
}

Phase Phase::operator+(const Phase& o) const {
  if (exact_ && o.exact_) {
    std::int64_t g = std::gcd(den_, o.den_);
    std::int64_t d = den_ / g * o.den_;
    return rational(num_ * (o.den_ / g) + o.num_ * (den_ / g), d);
  }
  return radians(value() + o.value());
}

Phase Phase::operator-(const Phase& o) const { return *this + (-o); }

Phase Phase::operator-() const {
  if (exact_) return rational(-num_, den_);
  return radians(-radians_);
}

bool Phase::operator==(const Phase& o) const {
  if (exact_ != o.exact_) return false;
  if (exact_) return num_ == o.num_ && den_ == o.den_;
  return radians_ == o.radians_;
}

std::string Phase::str() const {
  if (!exact_) {
    std::ostringstream os;
    os.precision(17);
    os << radians_;
    return os.str();
  }
  if (num_ == 0) return "0";
  std::ostringstream os;
  if (num_ == -1)
    os << "-pi";
  else if (num_ == 1)
    os << "pi";
  else
    os << num_ << "*pi";
  if (den_ != 1) os << "/" << den_;
  return os.str();
}

std::optional<Phase> Phase::snap(double radians_in, double tol,
                                 std::int64_t max_den) {
  double x = std::remainder(radians_in, 2.0 * kPi) / kPi;  // target in (-1, 1]
  bool neg = x < 0;
  double ax = neg ? -x : x;
  // Continued-fraction convergents of ax.
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = ax;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > 2.0e18) break;
    std::int64_t a = static_cast<std::int64_t>(fl);
    std::int64_t p2 = a * p1 + p0;
    std::int64_t q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - ax) * kPi <= tol) {
      return rational(neg ? -p1 : p1, q1);
    }
    double rem = frac - fl;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  return std::nullopt;
}

}  // namespace gms
