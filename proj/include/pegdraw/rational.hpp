#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pegdraw {

/// Exact rational scalar used for all coordinates and all predicates.
using rat = mpq_class;
using bigint = mpz_class;

/// Error kinds raised by library operations on invalid or unusable input.
enum class errc {
  invalid_instance,
  inconsistent_sharing,
  degenerate_input,
  degenerate_corner,
  eps_too_large,
  invalid_region,
  budget_violation,
  incompatible_embedding,
  not_planar,
  tangency_detected,
  disc_too_large,
  internal,
};

/// Exception carrying an errc; all contract violations are reported this way.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline int sign(const rat& x) { return sgn(x); }

inline rat rat_abs(const rat& x) { return sign(x) < 0 ? rat(-x) : x; }

/// Largest integer <= x.
inline bigint rat_floor(const rat& x) {
  bigint q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

/// Smallest integer >= x.
inline bigint rat_ceil(const rat& x) {
  bigint q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

/// 2^k as a rational (k may be negative).
inline rat pow2(long k) {
  bigint p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return rat(p);
  return rat(1) / rat(p);
}

/// Nearest multiple of 2^-bits not above x (a dyadic rational with short denominator).
inline rat dyadic_floor(const rat& x, unsigned bits) {
  rat scaled = x * pow2(static_cast<long>(bits));
  return rat(rat_floor(scaled)) * pow2(-static_cast<long>(bits));
}

/// Dyadic value within 2^-bits of x (round toward -infinity; exact for dyadics).
inline rat dyadic_snap(const rat& x, unsigned bits) { return dyadic_floor(x, bits); }

/// Largest integer r with r*r <= n. Requires n >= 0.
inline bigint isqrt(const bigint& n) {
  bigint r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// A positive rational lower bound for sqrt(x), within factor (1 - 2^-bits) of it.
/// Requires x > 0.  Returned value L satisfies 0 < L and L*L <= x.
inline rat sqrt_lower_bound(const rat& x, unsigned bits = 32) {
  if (sign(x) <= 0) fail(errc::internal, "sqrt_lower_bound requires positive input");
  // sqrt(p/q) = sqrt(p*q)/q; floor works since we divide by the exact q.
  bigint p = x.get_num(), q = x.get_den();
  bigint scaled;  // floor(sqrt(p*q * 4^bits))
  mpz_mul(scaled.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2UL * bits);
  bigint s = isqrt(scaled);
  rat L = rat(s) / (rat(q) * pow2(static_cast<long>(bits)));
  if (sign(L) <= 0) {
    // x extremely small relative to precision; refine until positive.
    return sqrt_lower_bound(x, bits * 2);
  }
  return L;
}

/// Serialize as "num/den" in lowest terms (den always positive, present even when 1).
inline std::string rat_to_string(const rat& x) {
  rat c = x;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Parse "num/den" or a plain integer string.
inline rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      rat v{bigint(s)};
      return v;
    }
    bigint num(s.substr(0, slash));
    bigint den(s.substr(slash + 1));
    if (sign(rat(den)) == 0) fail(errc::invalid_instance, "zero denominator: " + s);
    rat v = rat(num) / rat(den);
    v.canonicalize();
    return v;
  } catch (const std::invalid_argument&) {
    fail(errc::invalid_instance, "bad rational literal: " + s);
  }
}

}  // namespace pegdraw
