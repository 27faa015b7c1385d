#include "ellsl2/rewrite.hpp"

#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include "ellsl2/errors.hpp"

namespace ellsl2 {

namespace {

int rank(Letter l) {
  switch (l) {
    case Letter::Jm: return 0;
    case Letter::J0: return 1;
    case Letter::Jp:
    case Letter::Jpinv: return 2;
  }
  return 0;
}

bool reducible(Letter x, Letter y) {
  if (rank(x) > rank(y)) return true;
  return (x == Letter::Jp && y == Letter::Jpinv) || (x == Letter::Jpinv && y == Letter::Jp);
}

struct Replacement {
  Rational coeff;
  Word letters;
};

// Right-hand side of the rule for the reducible pair (x, y).
std::vector<Replacement> rule(Letter x, Letter y) {
  using L = Letter;
  if (x == L::J0 && y == L::Jm) return {{1, {L::Jm, L::J0}}, {-1, {L::Jm}}};
  if (x == L::Jp && y == L::Jm) return {{1, {L::Jm, L::Jp}}, {2, {L::J0}}};
  if (x == L::Jp && y == L::J0) return {{1, {L::J0, L::Jp}}, {-1, {L::Jp}}};
  if (x == L::Jpinv && y == L::J0) return {{1, {L::J0, L::Jpinv}}, {1, {L::Jpinv}}};
  if (x == L::Jpinv && y == L::Jm) {
    return {{1, {L::Jm, L::Jpinv}}, {-2, {L::J0, L::Jpinv, L::Jpinv}}, {-2, {L::Jpinv, L::Jpinv}}};
  }
  // J+ J+^{-1} and J+^{-1} J+.
  return {{1, {}}};
}

NCMonomial to_monomial(const Word& w) {
  NCMonomial m;
  for (Letter l : w) {
    switch (l) {
      case Letter::Jm: ++m.a; break;
      case Letter::J0: ++m.b; break;
      case Letter::Jp: ++m.c; break;
      case Letter::Jpinv: --m.c; break;
    }
  }
  return m;
}

void accumulate(WordSum& sum, Word w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = sum.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) sum.erase(it);
  }
}

}  // namespace

Word to_word(const NCMonomial& m) {
  Word w;
  w.insert(w.end(), static_cast<std::size_t>(m.a), Letter::Jm);
  w.insert(w.end(), static_cast<std::size_t>(m.b), Letter::J0);
  if (m.c >= 0) {
    w.insert(w.end(), static_cast<std::size_t>(m.c), Letter::Jp);
  } else {
    w.insert(w.end(), static_cast<std::size_t>(-m.c), Letter::Jpinv);
  }
  return w;
}

std::string to_string(Letter l) {
  switch (l) {
    case Letter::Jm: return "Jm";
    case Letter::J0: return "J0";
    case Letter::Jp: return "Jp";
    case Letter::Jpinv: return "Jpinv";
  }
  return "?";
}

NCPoly NCPoly::constant(const Rational& c) { return monomial({}, c); }

NCPoly NCPoly::monomial(const NCMonomial& m, const Rational& c) {
  NCPoly p;
  p.add_term(m, c);
  return p;
}

bool NCPoly::is_polynomial_in_jp() const {
  for (const auto& [m, c] : terms_) {
    if (m.c < 0) return false;
  }
  return true;
}

void NCPoly::add_term(const NCMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
  NCPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) { return a + (-b); }

NCPoly operator*(const Rational& s, const NCPoly& a) {
  NCPoly out;
  if (s == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, s * c);
  return out;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  WordSum sum;
  for (const auto& [ma, ca] : a.terms_) {
    const Word wa = to_word(ma);
    for (const auto& [mb, cb] : b.terms_) {
      Word w = wa;
      const Word wb = to_word(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      accumulate(sum, std::move(w), ca * cb);
    }
  }
  return nf(sum);
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    const Rational mag = abs(c);
    if (mag != 1) factors.push_back(mag.get_str());
    auto factor = [&factors](const char* name, int e) {
      if (e == 0) return;
      factors.push_back(e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e));
    };
    factor("Jm", m.a);
    factor("J0", m.b);
    factor("Jp", m.c);
    if (factors.empty()) factors.push_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

NCPoly nf(const WordSum& expr, ReductionOrder order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  WordSum pending = expr;
  NCPoly result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Rational& c = node.mapped();

    std::vector<std::size_t> redexes;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (reducible(w[i], w[i + 1])) {
        redexes.push_back(i);
        if (order == ReductionOrder::leftmost) break;
      }
    }
    if (redexes.empty()) {
      result.add_term(to_monomial(w), c);
      continue;
    }
    std::size_t pos = redexes.front();
    if (order == ReductionOrder::rightmost) {
      pos = redexes.back();
    } else if (order == ReductionOrder::random) {
      pos = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
    }
    for (const auto& rep : rule(w[pos], w[pos + 1])) {
      Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      next.insert(next.end(), rep.letters.begin(), rep.letters.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
      accumulate(pending, std::move(next), c * rep.coeff);
    }
  }
  return result;
}

NCPoly nf(const Word& w, ReductionOrder order, std::uint64_t seed) {
  WordSum s;
  s.emplace(w, 1);
  return nf(s, order, seed);
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

NCPoly power(const NCPoly& p, int n) {
  if (n < 0) return power(inverse(p), -n);
  NCPoly out = NCPoly::constant(1);
  for (int i = 0; i < n; ++i) out = out * p;
  return out;
}

NCPoly inverse(const NCPoly& p) {
  if (p.terms().size() != 1) {
    throw DomainError("inverse: '" + p.str() + "' is not a unit times a power of J+");
  }
  const auto& [m, c] = *p.terms().begin();
  if (m.a != 0 || m.b != 0) {
    throw DomainError("inverse: '" + p.str() + "' is not a unit times a power of J+");
  }
  return NCPoly::monomial({0, 0, -m.c}, 1 / c);
}

ComplexMatrix evaluate(const Word& w, const GeneratorTriple& gens) {
  const auto d = gens.dim();
  ComplexMatrix out = ComplexMatrix::Identity(d, d);
  for (Letter l : w) {
    switch (l) {
      case Letter::Jm: out = out * gens.Jm; break;
      case Letter::J0: out = out * gens.J0; break;
      case Letter::Jp: out = out * gens.Jp; break;
      case Letter::Jpinv:
        throw DomainError("evaluate: J+ is not invertible on a finite-dimensional module");
    }
  }
  return out;
}

ComplexMatrix evaluate(const NCPoly& p, const GeneratorTriple& gens) {
  const auto d = gens.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& [m, c] : p.terms()) out += c.get_d() * evaluate(to_word(m), gens);
  return out;
}

GeneratorMap identity_map() { return {NCPoly::jp(), NCPoly::jm(), NCPoly::j0()}; }

GeneratorMap sign_map() { return {-NCPoly::jp(), -NCPoly::jm(), NCPoly::j0()}; }

GeneratorMap inversion_map(const Rational& h, const Rational& k, int epsilon) {
  if (h == 0 || k == 0) throw DomainError("inversion_map: requires nonzero h and k");
  if (epsilon != 1 && epsilon != -1) throw DomainError("inversion_map: epsilon must be +1 or -1");
  const Rational two_over_h = 2 / h;
  const Rational half_h = h / 2;
  const Rational eps = epsilon;
  GeneratorMap m;
  m.jp = (eps / k * two_over_h * two_over_h) * NCPoly::jpinv();
  m.jm = (eps * k * half_h * half_h) * (NCPoly::jp() * NCPoly::jm() * NCPoly::jp());
  m.j0 = -NCPoly::j0();
  return m;
}

NCPoly apply_map(const GeneratorMap& m, const NCPoly& p) {
  std::optional<NCPoly> jp_inverse;
  NCPoly out;
  for (const auto& [mono, c] : p.terms()) {
    NCPoly term = NCPoly::constant(c);
    term = term * power(m.jm, mono.a) * power(m.j0, mono.b);
    if (mono.c >= 0) {
      term = term * power(m.jp, mono.c);
    } else {
      if (!jp_inverse) jp_inverse = inverse(m.jp);
      term = term * power(*jp_inverse, -mono.c);
    }
    out = out + term;
  }
  return out;
}

bool SymbolicReport::all_zero() const {
  for (const auto& c : checks) {
    if (!c.residual.is_zero()) return false;
  }
  return true;
}

SymbolicReport verify_automorphism(const GeneratorMap& m) {
  SymbolicReport r;
  r.checks.push_back({"[J0',J+'] - J+'", commutator(m.j0, m.jp) - m.jp});
  r.checks.push_back({"[J0',J-'] + J-'", commutator(m.j0, m.jm) + m.jm});
  r.checks.push_back({"[J+',J-'] - 2J0'", commutator(m.jp, m.jm) - 2 * m.j0});
  return r;
}

SymbolicReport verify_involution(const GeneratorMap& m) {
  SymbolicReport r;
  r.checks.push_back({"J+'' - J+", apply_map(m, m.jp) - NCPoly::jp()});
  r.checks.push_back({"J-'' - J-", apply_map(m, m.jm) - NCPoly::jm()});
  r.checks.push_back({"J0'' - J0", apply_map(m, m.j0) - NCPoly::j0()});
  return r;
}

}  // namespace ellsl2
