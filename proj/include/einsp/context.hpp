#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "einsp/errors.hpp"

namespace einsp {

class VarContext;
using VarCtxPtr = std::shared_ptr<const VarContext>;

// Ordered list of variable names.  Polynomials carry a shared pointer to
// their context; two contexts are interchangeable iff the name lists match.
class VarContext {
 public:
  static VarCtxPtr make(std::vector<std::string> names);

  std::size_t arity() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws ContextError

  bool same_names(const VarContext& other) const { return names_ == other.names_; }

  // New context with one more variable appended.
  static VarCtxPtr extended(const VarCtxPtr& base, const std::string& extra);

 private:
  explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

bool same_context(const VarCtxPtr& a, const VarCtxPtr& b);
void require_same_context(const VarCtxPtr& a, const VarCtxPtr& b, const char* where);

// Exponent vector with cached total degree.  Inline storage covers every ring
// in this project (at most seven variables after saturation); larger arities
// spill to the heap transparently.
struct Monomial {
  boost::container::small_vector<std::uint16_t, 8> exps;
  std::uint32_t deg = 0;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps(arity, 0) {}

  static Monomial one(std::size_t arity) { return Monomial(arity); }
  static Monomial var(std::size_t arity, std::size_t idx, std::uint16_t e = 1);

  bool is_one() const { return deg == 0; }
  std::uint16_t operator[](std::size_t i) const { return exps[i]; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Term order: lexicographic or graded reverse lexicographic, with an explicit
// variable precedence (most significant first).  Lets the same polynomial ring
// be ordered z > x2 > x1 > ... regardless of storage order of the variables.
// ElimFirst is the product order that compares the first precedence variable
// alone and falls back to grevlex on the others; a basis under it contains a
// basis of the elimination ideal in the remaining variables, already ordered
// by grevlex.
struct MonomialOrder {
  enum class Kind { Lex, GrevLex, ElimFirst };

  Kind kind = Kind::GrevLex;
  std::vector<std::uint32_t> precedence;

  static MonomialOrder lex(const VarCtxPtr& ctx, const std::vector<std::string>& names);
  static MonomialOrder lex_natural(const VarCtxPtr& ctx);
  static MonomialOrder grevlex_natural(const VarCtxPtr& ctx);
  static MonomialOrder elim_first(const VarCtxPtr& ctx, const std::string& name);

  int cmp(const Monomial& a, const Monomial& b) const;  // -1, 0, +1
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

  std::string kind_name() const {
    if (kind == Kind::Lex) return "lex";
    return kind == Kind::GrevLex ? "grevlex" : "elim1";
  }
};

// Order on monomials used for the canonical storage form of MultiPoly:
// grevlex with natural precedence.
int canonical_mono_cmp(const Monomial& a, const Monomial& b);

}  // namespace einsp
