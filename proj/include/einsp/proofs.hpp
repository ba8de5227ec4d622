#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "einsp/groebner.hpp"
#include "einsp/multipoly.hpp"
#include "einsp/unipoly.hpp"

namespace einsp {

// The certificate polynomials behind the two-Einstein-metric existence proof
// for the flag fibration, loaded from the polynomial data directory
// (EINSP_DATA_DIR when dir is empty).  u1 and u2 live over {u1|u2, n, p};
// everything else over {n, p} except u_expansion over {m, p}.
struct TheoremBData {
  MultiPoly u1;            // U1(u1; n, p), degree 8 in u1
  MultiPoly u1_at0;        // printed square-product value of U1(0)
  MultiPoly u1_at1_first;  // printed factorization of U1(1)
  MultiPoly u1_at1_second; // the same grouped in powers of n - p
  MultiPoly u_np;          // u(n, p), with U1(1/5) = -(64/390625) u(n, p)
  MultiPoly u_expansion;   // u(m + 4p/3, p) collected in powers of m
  MultiPoly u2;            // U2(u2; n, p), degree 8 in u2
  std::vector<MultiPoly> b; // b_0 .. b_8, u0-coefficients of U0 over (n, p)

  static TheoremBData load(const std::string& dir = "");
};

// Exact polynomial identities among the printed forms (each an equality of
// expanded polynomials, no tolerance anywhere).
struct IdentityReport {
  bool at0 = false;        // U1(0) == printed square product
  bool at1_first = false;  // U1(1) == first printed factorization
  bool at1_second = false; // U1(1) == (n-p)-grouped factorization
  bool fifth = false;      // -(390625/64) U1(1/5) == u(n, p)
  bool expansion = false;  // u(m + 4p/3, p) == printed m-expansion
  bool all() const { return at0 && at1_first && at1_second && fifth && expansion; }
};
IdentityReport u1_identities(const TheoremBData& data);

// Signs of U1 at u1 = 0, 1, 1/5 for one (n, p); each entry is -1, 0 or +1.
// Recomputes the printed endpoint forms at the same point and throws
// EvalError if they disagree with U1 itself (the identity checks rule this
// out for the shipped data).  Requires 1 <= p <= n.
struct EndpointSigns {
  int at0 = 0;
  int at1 = 0;
  int at_fifth = 0;
};
EndpointSigns endpoint_signs(const TheoremBData& data, long n, long p);

// Recomputes the u1-eliminant of the flag system at (n, p), saturated at
// u0*u1*u2*(u1 - 1), and checks that it is a positive rational multiple of
// the transcribed U1 specialized at (n, p).  Requires 2 <= p < n.
bool verify_u1_against_groebner(const TheoremBData& data, long n, long p,
                                Budget* budget = nullptr);

// Coefficient sign pattern for U2(u2) at one (n, p): degree 8, coefficients
// positive at even and negative at odd degrees.  Requires 1 <= p < n.
bool u2_sign_pattern(const TheoremBData& data, long n, long p);

// Same alternating pattern for the nine U0 coefficients b_j(n, p).
// Requires 2 <= p and 4p <= 3n.
bool b_sign_pattern(const TheoremBData& data, long n, long p);

// Positivity certificate for one coefficient of the m-expansion of
// u(m + 4p/3, p), claiming c(p) > 0 for all real p >= 1.
struct CoefficientCertificate {
  int power = 0;          // exponent of m
  bool positive = false;  // the claim holds (proved, or sampled when flagged)
  bool sampled = false;   // only integer sampling backs the claim
  std::string method;     // which certificate succeeded
};

struct ExpansionReport {
  std::vector<CoefficientCertificate> coefficients;  // ascending power of m
  bool all_positive = true;
  bool fully_certified = true;  // no sampled fallbacks
};

// Certifies every m-expansion coefficient positive for real p >= 1.  First
// tries the shift test at p = 1 + q (all shifted coefficients nonnegative);
// where that is inconclusive, shifts at a larger integer a and closes the
// gap [1, a] with a Sturm root count; only if both fail does it fall back to
// sampling integer p = 1 .. p_max, flagging the certificate as sampled.
ExpansionReport u_expansion_certificate(const TheoremBData& data, long p_max = 40);

// FNV-1a (64-bit) over the canonical text of each loaded polynomial, keyed
// "u1", "u1_at0", "u1_at1_first", "u1_at1_second", "u_np", "u_expansion",
// "u2", "b0" .. "b8".  Pins the transcription byte-for-byte in tests.
std::map<std::string, std::uint64_t> transcription_checksums(const TheoremBData& data);

std::uint64_t fnv1a64(const std::string& text);

}  // namespace einsp
