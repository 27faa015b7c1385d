#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ellsl2/liealg.hpp"

namespace ellsl2 {

using Rational = mpq_class;

// J-^a J0^b J+^c in that left-to-right order; c < 0 stands for (J+^{-1})^{-c}.
struct NCMonomial {
  int a = 0;
  int b = 0;
  int c = 0;

  friend auto operator<=>(const NCMonomial&, const NCMonomial&) = default;
};

enum class Letter : std::uint8_t { Jm, J0, Jp, Jpinv };
using Word = std::vector<Letter>;

Word to_word(const NCMonomial& m);
std::string to_string(Letter l);

// Exact rational combination of PBW monomials in the enveloping algebra of
// sl(2) localized at J+. Always stored in normal form with no zero entries.
class NCPoly {
 public:
  NCPoly() = default;
  static NCPoly constant(const Rational& c);
  static NCPoly monomial(const NCMonomial& m, const Rational& c = 1);
  static NCPoly jp() { return monomial({0, 0, 1}); }
  static NCPoly jm() { return monomial({1, 0, 0}); }
  static NCPoly j0() { return monomial({0, 1, 0}); }
  static NCPoly jpinv() { return monomial({0, 0, -1}); }

  const std::map<NCMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // True when every monomial has c >= 0 (no J+^{-1}).
  bool is_polynomial_in_jp() const;

  void add_term(const NCMonomial& m, const Rational& c);

  NCPoly operator-() const;
  friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Rational& s, const NCPoly& a);
  // Product in the algebra, normal ordered.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  std::map<NCMonomial, Rational> terms_;
};

// Unreduced linear combination of words.
using WordSum = std::map<Word, Rational>;

enum class ReductionOrder { leftmost, rightmost, random };

// Normal form with respect to
//   J0 J- -> J- J0 - J-           J+ J- -> J- J+ + 2 J0
//   J+ J0 -> J0 J+ - J+           J+^{-1} J0 -> J0 J+^{-1} + J+^{-1}
//   J+^{-1} J- -> J- J+^{-1} - 2 J0 J+^{-2} - 2 J+^{-2}
//   J+ J+^{-1} -> 1               J+^{-1} J+ -> 1
// Each step removes one inversion against the order J- < J0 < J+, so the
// system terminates. `seed` only matters for ReductionOrder::random.
NCPoly nf(const WordSum& expr, ReductionOrder order = ReductionOrder::leftmost, std::uint64_t seed = 0);
NCPoly nf(const Word& w, ReductionOrder order = ReductionOrder::leftmost, std::uint64_t seed = 0);

NCPoly commutator(const NCPoly& a, const NCPoly& b);
NCPoly power(const NCPoly& p, int n);
// Inverse of c * J+^n; throws DomainError for anything else.
NCPoly inverse(const NCPoly& p);

// Evaluates an expression without J+^{-1} on a finite-dimensional module.
ComplexMatrix evaluate(const NCPoly& p, const GeneratorTriple& gens);
ComplexMatrix evaluate(const Word& w, const GeneratorTriple& gens);

// Images of (J+, J-, J0).
struct GeneratorMap {
  NCPoly jp;
  NCPoly jm;
  NCPoly j0;
};

GeneratorMap identity_map();
// (J+, J-, J0) -> (-J+, -J-, J0).
GeneratorMap sign_map();
// (J+, J-, J0) -> (eps (1/k) (2/h)^2 J+^{-1}, eps k (h/2)^2 J+ J- J+, -J0).
// k = 1, eps = +1 is the inversion induced by the imaginary half period of tanh.
GeneratorMap inversion_map(const Rational& h, const Rational& k, int epsilon);

// Substitutes the generator images into every monomial and normal orders.
// J+^{-1} maps to the inverse of the image of J+.
NCPoly apply_map(const GeneratorMap& m, const NCPoly& p);

struct MapCheck {
  std::string name;
  NCPoly residual;
};

struct SymbolicReport {
  std::vector<MapCheck> checks;

  bool all_zero() const;
};

// Normal forms of [J0', J+'] - J+', [J0', J-'] + J-', [J+', J-'] - 2 J0'.
SymbolicReport verify_automorphism(const GeneratorMap& m);
// Normal forms of m(m(x)) - x for x in (J+, J-, J0).
SymbolicReport verify_involution(const GeneratorMap& m);

// Parses the operator expression grammar: identifiers Jp, Jm, J0, Jpinv;
// integer or p/q literals; binary + - *; unary -; ^ with an integer
// exponent; commutators [A,B]; parentheses. Throws DomainError on errors.
NCPoly parse_expression(const std::string& text);

}  // namespace ellsl2
