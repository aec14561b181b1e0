#include "slc/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "slc/error.hpp"

namespace slc {

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  GroupElement out;
  for (int i = 0; i < 4; ++i) {
    const int mid = h.perm[static_cast<std::size_t>(i)];
    out.perm[static_cast<std::size_t>(i)] = g.perm[static_cast<std::size_t>(mid)];
    out.twist[static_cast<std::size_t>(i)] =
        (h.twist[static_cast<std::size_t>(i)] + g.twist[static_cast<std::size_t>(mid)]) % 6;
  }
  return out;
}

std::vector<GroupElement> sextic_group_generators() {
  return {
      {{0, 1, 2, 3}, {1, 5, 0, 0}},
      {{0, 1, 2, 3}, {0, 0, 1, 5}},
      {{2, 3, 0, 1}, {0, 0, 0, 0}},
  };
}

std::vector<GroupElement> generate_group(const std::vector<GroupElement>& generators) {
  std::set<GroupElement> seen{GroupElement{}};
  std::vector<GroupElement> frontier{GroupElement{}};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier) {
      for (const auto& s : generators) {
        GroupElement h = s * g;
        if (seen.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Monomial> monomials(int degree) {
  std::vector<Monomial> out;
  for (int a = degree; a >= 0; --a)
    for (int b = degree - a; b >= 0; --b)
      for (int c = degree - a - b; c >= 0; --c) out.push_back({a, b, c, degree - a - b - c});
  return out;
}

namespace {

void add_term(Polynomial& p, const Monomial& m, const Cyclotomic6& c) {
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

Polynomial multiply(const Polynomial& x, const Polynomial& y) {
  Polynomial out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      Monomial m;
      for (std::size_t i = 0; i < 4; ++i) m[i] = mx[i] + my[i];
      add_term(out, m, cx * cy);
    }
  return out;
}

Polynomial add(Polynomial x, const Polynomial& y, int sign = 1) {
  for (const auto& [m, c] : y) add_term(x, m, sign > 0 ? c : -c);
  return x;
}

Polynomial monomial(const Monomial& m) { return {{m, Cyclotomic6(1)}}; }

// Row reduction over Q(zeta6); returns the nonzero rows of the reduced
// echelon form, each keyed like the input.
template <class Key>
std::vector<std::map<Key, Cyclotomic6>> echelon(const std::vector<std::map<Key, Cyclotomic6>>& vectors) {
  std::set<Key> key_set;
  for (const auto& v : vectors)
    for (const auto& [k, c] : v) key_set.insert(k);
  const std::vector<Key> keys(key_set.begin(), key_set.end());

  std::vector<std::vector<Cyclotomic6>> rows;
  for (const auto& v : vectors) {
    std::vector<Cyclotomic6> row(keys.size());
    for (std::size_t j = 0; j < keys.size(); ++j) {
      if (auto it = v.find(keys[j]); it != v.end()) row[j] = it->second;
    }
    rows.push_back(std::move(row));
  }

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < keys.size() && pivot_row < rows.size(); ++col) {
    std::size_t p = pivot_row;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[pivot_row]);
    const Cyclotomic6 inv = rows[pivot_row][col].inverse();
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      const Cyclotomic6 factor = rows[r][col];
      for (std::size_t j = 0; j < keys.size(); ++j) rows[r][j] -= factor * rows[pivot_row][j];
    }
    ++pivot_row;
  }

  std::vector<std::map<Key, Cyclotomic6>> out;
  for (std::size_t r = 0; r < pivot_row; ++r) {
    std::map<Key, Cyclotomic6> v;
    for (std::size_t j = 0; j < keys.size(); ++j)
      if (!rows[r][j].is_zero()) v.emplace(keys[j], rows[r][j]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

template <class Key>
std::size_t rank(const std::vector<std::map<Key, Cyclotomic6>>& vectors) {
  return echelon(vectors).size();
}
template std::size_t rank(const std::vector<Polynomial>&);
template std::size_t rank(const std::vector<TwoForm>&);

Polynomial act(const GroupElement& g, const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p) {
    Monomial image{0, 0, 0, 0};
    long phase = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      image[static_cast<std::size_t>(g.perm[i])] += m[i];
      phase += static_cast<long>(m[i]) * g.twist[i];
    }
    add_term(out, image, c * Cyclotomic6::zeta_pow(phase));
  }
  return out;
}

Polynomial reynolds(const std::vector<GroupElement>& group, const Polynomial& p) {
  Polynomial sum;
  for (const auto& g : group) sum = add(std::move(sum), act(g, p));
  const Cyclotomic6 scale(mpq_class(1, static_cast<unsigned long>(group.size())));
  for (auto& [m, c] : sum) c *= scale;
  return sum;
}

bool is_invariant(const std::vector<GroupElement>& generators, const Polynomial& p) {
  return std::all_of(generators.begin(), generators.end(),
                     [&](const GroupElement& g) { return act(g, p) == p; });
}

std::string to_string(const Polynomial& p) {
  static const char* const names[4] = {"x1", "y1", "x2", "y2"};
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomials first so x1^6 leads.
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coeff = c.to_string();
    const bool negative = c.is_rational() && c.real_part() < 0;
    if (!first) os << (negative ? "-" : "+");
    else if (negative) os << "-";
    first = false;
    if (negative) coeff = mpq_class(-c.real_part()).get_str();
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < 4; ++i) {
      if (m[i] == 0) continue;
      if (any_var) vars << "*";
      vars << names[i];
      if (m[i] > 1) vars << "^" << m[i];
      any_var = true;
    }
    if (coeff != "1" || !any_var) {
      os << (c.is_rational() ? coeff : "(" + coeff + ")");
      if (any_var) os << "*";
    }
    os << vars.str();
  }
  return os.str();
}

InvariantBasis invariant_sextic_basis() {
  const auto generators = sextic_group_generators();
  const auto group = generate_group(generators);

  std::vector<Polynomial> images;
  for (const auto& m : monomials(6)) {
    Polynomial r = reynolds(group, monomial(m));
    if (!r.empty()) images.push_back(std::move(r));
  }
  const std::size_t dim = rank(images);

  const Polynomial u = monomial({1, 1, 0, 0});
  const Polynomial v = monomial({0, 0, 1, 1});
  const Polynomial q_plus = add(u, v);
  const Polynomial q_minus = add(u, v, -1);

  InvariantBasis out;
  out.dimension = dim;
  out.names = {"x1^6+x2^6", "y1^6+y2^6", "Q+^3", "Q+*Q-^2"};
  out.basis = {add(monomial({6, 0, 0, 0}), monomial({0, 0, 6, 0})),
               add(monomial({0, 6, 0, 0}), monomial({0, 0, 0, 6})),
               multiply(q_plus, multiply(q_plus, q_plus)),
               multiply(q_plus, multiply(q_minus, q_minus))};

  for (const auto& p : out.basis) {
    if (!is_invariant(generators, p)) {
      throw Error(ErrorCode::InvalidArgument, "basis polynomial " + to_string(p) + " is not invariant");
    }
  }
  if (rank(out.basis) != out.basis.size() || out.basis.size() != dim) {
    throw Error(ErrorCode::InvalidArgument, "named sextic basis does not span the invariants");
  }
  return out;
}

TwoForm act(const GroupElement& g, const TwoForm& w) {
  TwoForm out;
  for (const auto& [e, c] : w) {
    int i = g.perm[static_cast<std::size_t>(e[0])];
    int j = g.perm[static_cast<std::size_t>(e[1])];
    Cyclotomic6 coeff =
        c * Cyclotomic6::zeta_pow(g.twist[static_cast<std::size_t>(e[0])] + g.twist[static_cast<std::size_t>(e[1])]);
    if (i > j) {
      std::swap(i, j);
      coeff = -coeff;
    }
    auto [it, inserted] = out.try_emplace(Wedge{i, j}, coeff);
    if (!inserted) it->second += coeff;
    if (it->second.is_zero()) out.erase(it);
  }
  return out;
}

TwoFormInvariants invariant_two_forms(const std::vector<GroupElement>& group) {
  std::vector<TwoForm> images;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      TwoForm sum;
      for (const auto& g : group) {
        for (const auto& [e, c] : act(g, TwoForm{{Wedge{i, j}, Cyclotomic6(1)}})) {
          auto [it, inserted] = sum.try_emplace(e, c);
          if (!inserted) it->second += c;
        }
      }
      std::erase_if(sum, [](const auto& kv) { return kv.second.is_zero(); });
      if (!sum.empty()) images.push_back(std::move(sum));
    }
  }
  TwoFormInvariants out;
  out.basis = echelon(images);
  out.dimension = out.basis.size();
  return out;
}

TwoFormInvariants invariant_two_forms() {
  return invariant_two_forms(generate_group(sextic_group_generators()));
}

std::string to_string(const TwoForm& w) {
  if (w.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : w) {
    if (!first) os << " + ";
    first = false;
    if (!(c == Cyclotomic6(1))) os << "(" << c << ")*";
    os << "e" << e[0] + 1 << "^e" << e[1] + 1;
  }
  return os.str();
}

}  // namespace slc
