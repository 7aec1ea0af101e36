#include "hkdet/groebner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hkdet {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::uint32_t var, std::uint32_t exp) {
  Monomial out;
  if (exp != 0) out.terms_.emplace_back(var, exp);
  return out;
}

Monomial Monomial::from_dense(const std::vector<std::uint32_t>& exps) {
  Monomial out;
  for (std::uint32_t v = 0; v < exps.size(); ++v)
    if (exps[v] != 0) out.terms_.emplace_back(v, exps[v]);
  return out;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{var, 0});
  return it != terms_.end() && it->first == var ? it->second : 0;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : terms_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.terms_.begin();
  for (const auto& [v, e] : terms_) {
    while (it != other.terms_.end() && it->first < v) ++it;
    if (it == other.terms_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->first == b->first) return false;
    if (a->first < b->first)
      ++a;
    else
      ++b;
  }
  return true;
}

namespace {

template <class Combine>
std::vector<Monomial::Term> merge(const std::vector<Monomial::Term>& x,
                                  const std::vector<Monomial::Term>& y, Combine combine) {
  std::vector<Monomial::Term> out;
  auto a = x.begin();
  auto b = y.begin();
  while (a != x.end() || b != y.end()) {
    std::uint32_t var;
    std::uint32_t ea = 0, eb = 0;
    if (b == y.end() || (a != x.end() && a->first < b->first)) {
      var = a->first;
      ea = (a++)->second;
    } else if (a == x.end() || b->first < a->first) {
      var = b->first;
      eb = (b++)->second;
    } else {
      var = a->first;
      ea = (a++)->second;
      eb = (b++)->second;
    }
    if (std::uint32_t e = combine(ea, eb); e != 0) out.emplace_back(var, e);
  }
  return out;
}

}  // namespace

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  out.terms_ = merge(terms_, other.terms_, [](auto a, auto b) { return std::max(a, b); });
  return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  out.terms_ = merge(terms_, divisor.terms_, [](std::uint32_t a, std::uint32_t b) {
    if (b > a) throw std::logic_error("monomial quotient of non-divisor");
    return a - b;
  });
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.terms_ = merge(terms_, other.terms_, [](auto a, auto b) { return a + b; });
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  for (; a != terms_.end() && b != other.terms_.end(); ++a, ++b) {
    // A smaller index is a larger variable; having it at all wins.
    if (a->first != b->first)
      return a->first < b->first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a->second != b->second) return a->second <=> b->second;
  }
  if (a != terms_.end()) return std::strong_ordering::greater;
  if (b != other.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string(int n) const {
  if (terms_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, e] : terms_) {
    if (!first) out << "*";
    first = false;
    out << "x{" << v / n + 1 << "," << v % n + 1 << "}";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

// -------------------------------------------------------- DiagonalLexOrder

DiagonalLexOrder::DiagonalLexOrder(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
  for (int a = 0; a < m; ++a)
    for (int a2 = a + 1; a2 < m; ++a2)
      for (int b = 0; b < n; ++b)
        for (int b2 = b + 1; b2 < n; ++b2) {
          const Monomial diag = Monomial::variable(var(a, b)) * Monomial::variable(var(a2, b2));
          const Monomial anti = Monomial::variable(var(a2, b)) * Monomial::variable(var(a, b2));
          if (compare(diag, anti) != std::strong_ordering::greater)
            throw std::logic_error("monomial order is not diagonal");
        }
}

// ---------------------------------------------------------- TermPolynomial

TermPolynomial TermPolynomial::from_monomial(const Monomial& mono, const Rational& coeff) {
  TermPolynomial p;
  p.add_term(mono, coeff);
  return p;
}

void TermPolynomial::add_term(const Monomial& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void TermPolynomial::subtract_multiple(const Rational& coeff, const Monomial& mono,
                                       const TermPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m * mono, -coeff * c);
}

std::string TermPolynomial::to_string(int n) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const Rational mag = abs(c);
    if (mag != 1 || mono.is_one()) {
      out << mag.get_str();
      if (!mono.is_one()) out << "*";
    }
    if (!mono.is_one()) out << mono.to_string(n);
  }
  return out.str();
}

// ------------------------------------------------------------- q-stairs

Monomial QStairDescriptor::monomial(const DiagonalLexOrder& order) const {
  Monomial out = Monomial::variable(order.var(c, d), pivot_exponent);
  for (const auto& [cell, e] : arm_exponents) out = out * Monomial::variable(order.var(cell.i, cell.j), e);
  return out;
}

namespace {

// Calls visit(exps) for every weak composition of `total` into `parts`.
void for_each_composition(std::size_t parts, std::uint32_t total,
                          const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> exps(parts, 0);
  if (parts == 0) {
    if (total == 0) visit(exps);
    return;
  }
  std::function<void(std::size_t, std::uint32_t)> go = [&](std::size_t k, std::uint32_t left) {
    if (k + 1 == parts) {
      exps[k] = left;
      visit(exps);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      exps[k] = e;
      go(k + 1, left - e);
    }
  };
  go(0, total);
}

}  // namespace

std::vector<QStairDescriptor> enumerate_q_stair_descriptors(int m, int n, std::int64_t q,
                                                            std::uint64_t budget) {
  if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  std::vector<QStairDescriptor> out;
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < n; ++d)
      for (auto config : {StairConfiguration::ROW_RIGHT_COL_DOWN, StairConfiguration::ROW_LEFT_COL_UP}) {
        std::vector<VarIndex> row_arm, col_arm;
        if (config == StairConfiguration::ROW_RIGHT_COL_DOWN) {
          for (int j = d + 1; j < n; ++j) row_arm.push_back({c, j});
          for (int i = c + 1; i < m; ++i) col_arm.push_back({i, d});
        } else {
          for (int j = 0; j < d; ++j) row_arm.push_back({c, j});
          for (int i = 0; i < c; ++i) col_arm.push_back({i, d});
        }
        // Row c and column d each sum to q: the pivot contributes to both.
        for (std::int64_t t = 0; t <= q; ++t) {
          const auto rest = static_cast<std::uint32_t>(q - t);
          for_each_composition(row_arm.size(), rest, [&](const std::vector<std::uint32_t>& row_exps) {
            for_each_composition(col_arm.size(), rest, [&](const std::vector<std::uint32_t>& col_exps) {
              if (out.size() >= budget)
                throw BudgetExceeded("more than " + std::to_string(budget) + " q-stair descriptors");
              QStairDescriptor desc{c, d, q, config, static_cast<std::uint32_t>(t), {}};
              for (std::size_t k = 0; k < row_arm.size(); ++k)
                if (row_exps[k] != 0) desc.arm_exponents.emplace_back(row_arm[k], row_exps[k]);
              for (std::size_t k = 0; k < col_arm.size(); ++k)
                if (col_exps[k] != 0) desc.arm_exponents.emplace_back(col_arm[k], col_exps[k]);
              out.push_back(std::move(desc));
            });
          });
        }
      }
  return out;
}

std::set<Monomial> generate_q_stairs(int m, int n, std::int64_t q, std::uint64_t budget) {
  const DiagonalLexOrder order(m, n);
  std::set<Monomial> out;
  for (const auto& desc : enumerate_q_stair_descriptors(m, n, q, budget)) out.insert(desc.monomial(order));
  return out;
}

std::set<Monomial> minimal_q_stairs(int m, int n, std::int64_t q, std::uint64_t budget) {
  std::set<Monomial> out;
  for (const auto& mono : generate_q_stairs(m, n, q, budget)) {
    const auto& terms = mono.terms();
    const bool pure_power = terms.size() == 1;
    const bool all_below_q = std::all_of(terms.begin(), terms.end(), [q](const auto& t) {
      return static_cast<std::int64_t>(t.second) < q;
    });
    if (pure_power || all_below_q) out.insert(mono);
  }
  return out;
}

std::vector<TermPolynomial> minors(int m, int n) {
  std::vector<TermPolynomial> out;
  if (m < 2 || n < 2) return out;
  const DiagonalLexOrder order(m, n);
  for (int a = 0; a < m; ++a)
    for (int a2 = a + 1; a2 < m; ++a2)
      for (int b = 0; b < n; ++b)
        for (int b2 = b + 1; b2 < n; ++b2) {
          TermPolynomial p;
          p.add_term(Monomial::variable(order.var(a, b)) * Monomial::variable(order.var(a2, b2)), 1);
          p.add_term(Monomial::variable(order.var(a2, b)) * Monomial::variable(order.var(a, b2)), -1);
          out.push_back(std::move(p));
        }
  return out;
}

std::vector<TermPolynomial> predicted_basis(int m, int n, std::int64_t q, std::uint64_t budget) {
  std::vector<TermPolynomial> basis = minors(m, n);
  const auto stairs = minimal_q_stairs(m, n, q, budget);
  for (auto it = stairs.rbegin(); it != stairs.rend(); ++it)
    basis.push_back(TermPolynomial::from_monomial(*it));
  return basis;
}

// ------------------------------------------------------------- division

TermPolynomial reduce(const TermPolynomial& f, const std::vector<TermPolynomial>& basis,
                      const DiagonalLexOrder& order) {
  TermPolynomial rest = f;
  TermPolynomial remainder;
  while (!rest.is_zero()) {
    const Monomial lead = rest.leading_monomial();
    const Rational coeff = rest.leading_coefficient();
    const TermPolynomial* best = nullptr;
    for (const auto& g : basis) {
      if (g.is_zero()) throw std::invalid_argument("zero polynomial in division basis");
      if (!g.leading_monomial().divides(lead)) continue;
      if (best == nullptr ||
          order.compare(g.leading_monomial(), best->leading_monomial()) == std::strong_ordering::greater)
        best = &g;
    }
    if (best == nullptr) {
      remainder.add_term(lead, coeff);
      rest.add_term(lead, -coeff);
      continue;
    }
    rest.subtract_multiple(coeff / best->leading_coefficient(),
                           lead.quotient(best->leading_monomial()), *best);
  }
  return remainder;
}

TermPolynomial s_polynomial(const TermPolynomial& f, const TermPolynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  TermPolynomial s;
  s.subtract_multiple(Rational(-1) / f.leading_coefficient(), l.quotient(f.leading_monomial()), f);
  s.subtract_multiple(1 / g.leading_coefficient(), l.quotient(g.leading_monomial()), g);
  return s;
}

// ---------------------------------------------------------- verification

GroebnerReport verify_groebner(int m, int n, std::int64_t q, std::uint64_t budget) {
  const DiagonalLexOrder order(m, n);
  GroebnerReport report;
  report.m = m;
  report.n = n;
  report.q = q;

  const auto all_stairs = generate_q_stairs(m, n, q, budget);
  const auto basis = predicted_basis(m, n, q, budget);
  report.q_stairs = all_stairs.size();
  report.minor_count = minors(m, n).size();
  report.basis_stairs = basis.size() - report.minor_count;
  report.redundant_stairs = report.q_stairs - report.basis_stairs;

  std::ostringstream detail;
  for (std::size_t a = 0; a < basis.size() && report.minimal; ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b || !basis[a].leading_monomial().divides(basis[b].leading_monomial())) continue;
      report.minimal = false;
      detail << "not minimal: " << basis[a].leading_monomial().to_string(n) << " divides "
             << basis[b].leading_monomial().to_string(n) << "; ";
      break;
    }

  for (std::size_t a = 0; a < basis.size() && report.reduced; ++a) {
    bool first = true;
    for (const auto& [mono, c] : basis[a].terms()) {
      if (first) {
        first = false;
        if (c != 1) {
          report.reduced = false;
          detail << "not monic: " << basis[a].to_string(n) << "; ";
          break;
        }
        continue;
      }
      auto divisor = std::find_if(basis.begin(), basis.end(), [&mono](const TermPolynomial& g) {
        return g.leading_monomial().divides(mono);
      });
      if (divisor != basis.end()) {
        report.reduced = false;
        detail << "not reduced: " << divisor->leading_monomial().to_string(n) << " divides trailing term "
               << mono.to_string(n) << " of " << basis[a].to_string(n) << "; ";
        break;
      }
    }
  }

  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      if (basis[a].leading_monomial().coprime(basis[b].leading_monomial())) {
        ++report.pairs_coprime;
        continue;
      }
      ++report.pairs_checked;
      const TermPolynomial rem = reduce(s_polynomial(basis[a], basis[b]), basis, order);
      if (!rem.is_zero() && report.s_pairs_ok) {
        report.s_pairs_ok = false;
        report.first_failure = std::make_pair(a, b);
        detail << "S(" << basis[a].to_string(n) << ", " << basis[b].to_string(n) << ") reduces to "
               << rem.to_string(n) << "; ";
      }
    }

  report.detail = detail.str();
  return report;
}

Natural standard_monomial_count(int m, int n, std::int64_t q, std::uint64_t budget) {
  if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  const std::size_t vars = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
  std::uint64_t states = 1;
  for (std::size_t k = 0; k < vars; ++k) {
    if (states > budget / static_cast<std::uint64_t>(q))
      throw BudgetExceeded("standard monomial enumeration exceeds budget " + std::to_string(budget));
    states *= static_cast<std::uint64_t>(q);
  }

  // Dense leading monomials make the divisibility test a flat loop.
  std::vector<std::vector<std::uint32_t>> leads;
  for (const auto& g : predicted_basis(m, n, q)) {
    std::vector<std::uint32_t> dense(vars, 0);
    for (const auto& [v, e] : g.leading_monomial().terms()) dense[v] = e;
    leads.push_back(std::move(dense));
  }

  std::vector<std::uint32_t> exps(vars, 0);
  std::uint64_t standard = 0;
  const auto cap = static_cast<std::uint32_t>(q - 1);
  while (true) {
    const bool divisible = std::any_of(leads.begin(), leads.end(), [&exps, vars](const auto& lead) {
      for (std::size_t v = 0; v < vars; ++v)
        if (lead[v] > exps[v]) return false;
      return true;
    });
    if (!divisible) ++standard;
    std::size_t k = 0;
    while (k < vars && exps[k] == cap) exps[k++] = 0;
    if (k == vars) break;
    ++exps[k];
  }
  return Natural(static_cast<unsigned long>(standard));
}

}  // namespace hkdet
