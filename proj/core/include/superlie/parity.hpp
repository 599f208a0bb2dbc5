#pragma once

#include <cstdint>
#include <string_view>

namespace superlie {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr Parity& operator+=(Parity& a, Parity b) { return a = a + b; }

constexpr Parity parity_of(std::uint64_t count) {
  return (count & 1U) ? Parity::Odd : Parity::Even;
}

constexpr bool is_odd(Parity p) { return p == Parity::Odd; }

/// (-1)^{|a||b|}
constexpr int koszul_sign(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

constexpr std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

}  // namespace superlie
