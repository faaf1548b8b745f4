// Dense exponent vectors and the monomial orders used by the Gröbner engine.
#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <functional>

namespace msec {

inline constexpr int kMaxVars = 22;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint16_t deg = 0;

  std::uint8_t operator[](int i) const { return exp[static_cast<std::size_t>(i)]; }

  static Monomial variable(int i, int power = 1) {
    Monomial m;
    m.exp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
  }

  void set(int i, int e) {
    deg = static_cast<std::uint16_t>(deg - exp[static_cast<std::size_t>(i)] + e);
    exp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
  }

  bool is_one() const { return deg == 0; }

  // Exponents and degree stay below 128, so the 24 bytes can be handled as
  // three words with per-byte arithmetic that never carries.
  std::array<std::uint64_t, 3> words() const {
    std::array<std::uint64_t, 3> w;
    std::memcpy(w.data(), this, sizeof(w));
    return w;
  }
  static Monomial from_words(const std::array<std::uint64_t, 3>& w) {
    Monomial m;
    std::memcpy(static_cast<void*>(&m), w.data(), sizeof(w));
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    auto x = a.words(), y = b.words();
    for (int i = 0; i < 3; ++i) x[i] += y[i];
    Monomial r = from_words(x);
    assert(r.deg < 128);
    return r;
  }

  // a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    auto x = a.words(), y = b.words();
    for (int i = 0; i < 3; ++i) x[i] -= y[i];
    return from_words(x);
  }

  bool divides(const Monomial& other) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ull;
    auto x = words(), y = other.words();
    for (int i = 0; i < 3; ++i)
      if ((((y[i] | kHigh) - x[i]) & kHigh) != kHigh) return false;
    return true;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    unsigned d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
      d += r.exp[i];
    }
    r.deg = static_cast<std::uint16_t>(d);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.exp[i] && b.exp[i]) return false;
    return true;
  }

  // One bit per variable with positive exponent; a necessary condition for
  // divisibility is mask(a) ⊆ mask(b).
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i]) m |= 1u << i;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return std::memcmp(&a, &b, sizeof(Monomial)) == 0;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    auto w = m.words();
    std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ull;
    h = (h ^ (h >> 29) ^ w[1]) * 0xBF58476D1CE4E5B9ull;
    h = (h ^ (h >> 32) ^ w[2]) * 0x94D049BB133111EBull;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

static_assert(sizeof(Monomial) == 24, "monomial must pack into three words");

// Monomial order over the first `nvars` variables.  kBlock compares the
// first `block` variables by degrevlex, breaking ties by degrevlex on the
// remaining ones (an elimination order for the first block).
struct MonomialOrder {
  enum class Kind { kDegRevLex, kLex, kBlock };
  Kind kind = Kind::kDegRevLex;
  int block = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::kLex, 0}; }
  static MonomialOrder elimination(int block) { return {Kind::kBlock, block}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

  // Returns >0 when a > b, <0 when a < b, 0 when equal.
  int compare(const Monomial& a, const Monomial& b, int nvars) const {
    switch (kind) {
      case Kind::kDegRevLex:
        return grevlex_range(a, b, 0, nvars, a.deg, b.deg);
      case Kind::kLex:
        for (int i = 0; i < nvars; ++i)
          if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
        return 0;
      case Kind::kBlock: {
        int da = 0, db = 0;
        for (int i = 0; i < block; ++i) {
          da += a.exp[i];
          db += b.exp[i];
        }
        if (int c = grevlex_range(a, b, 0, block, da, db)) return c;
        return grevlex_range(a, b, block, nvars, a.deg - da, b.deg - db);
      }
    }
    return 0;
  }

private:
  static int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi, int da, int db) {
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }
};

}  // namespace msec
