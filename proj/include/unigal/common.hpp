/*
   Copyright 2026 The unigal authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UNIGAL_COMMON_HPP
#define UNIGAL_COMMON_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace unigal {

enum class Errc {
  DivisionByZero,
  FieldMismatch,
  ZeroElement,
  Undecided,
  MissingRootOfUnity,
  WrongCharacteristic,
  TowerMismatch,
  ZeroInverse,
  NotAField,
  MissingImage,
  OverCap,
  CapExceeded,
  BadIndex,
  OrderMismatch,
  NormMismatch,
  NormNotOne,
  ResolventExhausted,
  IdentityViolated,
  NotInBaseField,
  CompatibilityFailed,
  RelationFailed,
  DimensionDeficient,
  SearchExhausted,
  XiAlreadyPresent,
  Unsupported,
  AlbertConditionFailed,
  NotCommuting,
  ProjectorDegenerate,
  GroupMismatch,
  NotACocycle,
  InvalidDefiningSystem,
  SignTableBroken,
  NotSurjective,
  NotWellDefined,
  NotBijective,
  ParseError,
  InvalidArgument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::Undecided: return "Undecided";
    case Errc::MissingRootOfUnity: return "MissingRootOfUnity";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::TowerMismatch: return "TowerMismatch";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::NotAField: return "NotAField";
    case Errc::MissingImage: return "MissingImage";
    case Errc::OverCap: return "OverCap";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::BadIndex: return "BadIndex";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NormMismatch: return "NormMismatch";
    case Errc::NormNotOne: return "NormNotOne";
    case Errc::ResolventExhausted: return "ResolventExhausted";
    case Errc::IdentityViolated: return "IdentityViolated";
    case Errc::NotInBaseField: return "NotInBaseField";
    case Errc::CompatibilityFailed: return "CompatibilityFailed";
    case Errc::RelationFailed: return "RelationFailed";
    case Errc::DimensionDeficient: return "DimensionDeficient";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::XiAlreadyPresent: return "XiAlreadyPresent";
    case Errc::Unsupported: return "Unsupported";
    case Errc::AlbertConditionFailed: return "AlbertConditionFailed";
    case Errc::NotCommuting: return "NotCommuting";
    case Errc::ProjectorDegenerate: return "ProjectorDegenerate";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::InvalidDefiningSystem: return "InvalidDefiningSystem";
    case Errc::SignTableBroken: return "SignTableBroken";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::NotWellDefined: return "NotWellDefined";
    case Errc::NotBijective: return "NotBijective";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

// x^n mod m for small integers, n >= 0
inline long pow_mod_long(long x, long n, long m) {
  long r = 1 % m;
  x %= m;
  if (x < 0) x += m;
  while (n > 0) {
    if (n & 1) r = (r * x) % m;
    x = (x * x) % m;
    n >>= 1;
  }
  return r;
}

inline long mod_long(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

// inverse of x mod m (m prime)
inline long inv_mod_long(long x, long m) {
  x = mod_long(x, m);
  require(x != 0, Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(m));
  return pow_mod_long(x, m - 2, m);
}

// Runs fn(i) for i in [0, n). Sequential when threads <= 1.
inline void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  unsigned workers = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace unigal

#endif  // UNIGAL_COMMON_HPP
