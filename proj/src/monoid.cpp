#include "cml/monoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cml/errors.hpp"
#include "cml/finset.hpp"

namespace cml {

Monoid::Monoid(std::vector<std::string> elements, std::size_t unit, std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(elements)), unit_(unit), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw PreconditionError("monoid must be nonempty");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
    throw PreconditionError("monoid element labels must be distinct");
  if (unit_ >= n) throw PreconditionError("monoid unit out of range");
  if (table_.size() != n) throw PreconditionError("monoid table has wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != n) throw PreconditionError("monoid table row has wrong length");
    for (auto v : row)
      if (v >= n) throw PreconditionError("monoid table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[unit_][a] != a || table_[a][unit_] != a) throw PreconditionError("monoid unit law fails");
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] != table_[b][a]) throw PreconditionError("monoid is not commutative");
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw PreconditionError("monoid is not associative");
    }
  }
}

Monoid Monoid::cyclic(std::size_t n) {
  if (n == 0) throw PreconditionError("Z/0 is not finite");
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  Monoid m(std::move(labels), 0, std::move(table));
  m.set_name("Z/" + std::to_string(n));
  return m;
}

Monoid Monoid::join_semilattice() {
  Monoid m({"bot", "top"}, 0, {{0, 1}, {1, 1}});
  m.set_name("2v");
  return m;
}

Monoid Monoid::trivial() {
  Monoid m({"0"}, 0, {{0}});
  m.set_name("1");
  return m;
}

std::size_t Monoid::sum(std::span<const std::size_t> xs) const {
  std::size_t acc = unit_;
  for (auto x : xs) acc = add(acc, x);
  return acc;
}

std::size_t Monoid::index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw PreconditionError("unknown monoid element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<std::size_t> digits(std::size_t code, std::size_t base, std::size_t len) {
  std::vector<std::size_t> d(len);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = code % base;
    code /= base;
  }
  return d;
}

std::size_t undigits(const std::vector<std::size_t>& d, std::size_t base) {
  std::size_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * base + d[i];
  return code;
}

// Column-sum vectors reachable by filling `rows.size()` rows with the given sums.
std::set<std::size_t> reachable_columns(const Monoid& m, std::span<const std::size_t> rows, std::size_t k,
                                        const std::vector<std::vector<std::size_t>>& row_vectors_by_sum) {
  const std::size_t q = m.size();
  std::vector<std::size_t> zero(k, m.zero());
  std::set<std::size_t> reach{undigits(zero, q)};
  for (auto a : rows) {
    std::set<std::size_t> next;
    for (auto cs : reach) {
      auto cd = digits(cs, q, k);
      for (auto rv : row_vectors_by_sum[a]) {
        auto rd = digits(rv, q, k);
        std::vector<std::size_t> sd(k);
        for (std::size_t j = 0; j < k; ++j) sd[j] = m.add(cd[j], rd[j]);
        next.insert(undigits(sd, q));
      }
    }
    reach = std::move(next);
  }
  return reach;
}

std::vector<std::vector<std::size_t>> vectors_by_sum(const Monoid& m, std::size_t k) {
  const std::size_t q = m.size();
  std::vector<std::vector<std::size_t>> by_sum(q);
  const std::size_t total = ipow(q, k);
  for (std::size_t v = 0; v < total; ++v) {
    auto d = digits(v, q, k);
    by_sum[m.sum(d)].push_back(v);
  }
  return by_sum;
}

}  // namespace

RefinabilityVerdict check_refinable(const Monoid& m, std::size_t bound) {
  if (bound < 1) throw PreconditionError("refinability bound must be at least 1");
  RefinabilityVerdict v;
  v.bound = bound;
  const std::size_t q = m.size();
  for (std::size_t n = 1; n <= bound; ++n) {
    for (std::size_t k = 1; k <= bound; ++k) {
      const auto rows_by_sum = vectors_by_sum(m, k);
      const std::size_t na = ipow(q, n), nb = ipow(q, k);
      for (std::size_t ac = 0; ac < na; ++ac) {
        const auto a = digits(ac, q, n);
        const std::size_t total = m.sum(a);
        const auto reach = reachable_columns(m, a, k, rows_by_sum);
        for (std::size_t bc = 0; bc < nb; ++bc) {
          const auto b = digits(bc, q, k);
          if (m.sum(b) != total || reach.count(bc)) continue;
          v.refinable = false;
          v.a = a;
          v.b = b;
          return v;
        }
      }
    }
  }
  return v;
}

std::optional<std::vector<std::vector<std::size_t>>> refine(const Monoid& m, std::span<const std::size_t> rows,
                                                           std::span<const std::size_t> cols) {
  const std::size_t n = rows.size(), k = cols.size();
  std::vector<std::vector<std::size_t>> mat(n, std::vector<std::size_t>(k, m.zero()));
  if (n == 0 || k == 0) {
    // an empty matrix has all row and column sums zero
    for (auto r : rows)
      if (r != m.zero()) return std::nullopt;
    for (auto c : cols)
      if (c != m.zero()) return std::nullopt;
    return mat;
  }
  std::vector<std::size_t> col_acc(k, m.zero());
  std::function<bool(std::size_t, std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j,
                                                                       std::size_t row_acc) -> bool {
    if (i == n) {
      for (std::size_t c = 0; c < k; ++c)
        if (col_acc[c] != cols[c]) return false;
      return true;
    }
    if (j == k) {
      if (row_acc != rows[i]) return false;
      return go(i + 1, 0, m.zero());
    }
    for (std::size_t e = 0; e < m.size(); ++e) {
      const std::size_t saved = col_acc[j];
      mat[i][j] = e;
      col_acc[j] = m.add(saved, e);
      if (go(i, j + 1, m.add(row_acc, e))) return true;
      col_acc[j] = saved;
    }
    return false;
  };
  if (go(0, 0, m.zero())) return mat;
  return std::nullopt;
}

PositivityVerdict check_positive(const Monoid& m) {
  PositivityVerdict v;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      if (m.add(a, b) == m.zero() && (a != m.zero() || b != m.zero())) {
        v.positive = false;
        v.witness = std::make_pair(a, b);
        return v;
      }
  return v;
}

std::vector<Monoid> commutative_monoids(std::size_t max_size) {
  std::vector<Monoid> out;
  static const char* kNames[] = {"0", "a", "b", "c", "d", "e", "f", "g"};
  if (max_size > 8) throw PreconditionError("monoid enumeration is limited to size 8");
  for (std::size_t s = 1; s <= max_size; ++s) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i < s; ++i)
      for (std::size_t j = i; j < s; ++j) cells.emplace_back(i, j);
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> table(s, std::vector<std::size_t>(s));
    for (std::size_t i = 0; i < s; ++i) {
      table[0][i] = i;
      table[i][0] = i;
    }
    const std::size_t combos = ipow(s, cells.size());
    const auto perms = permutations(s - 1);
    for (std::size_t c = 0; c < combos; ++c) {
      auto d = digits(c, s, cells.size());
      for (std::size_t t = 0; t < cells.size(); ++t) {
        table[cells[t].first][cells[t].second] = d[t];
        table[cells[t].second][cells[t].first] = d[t];
      }
      bool assoc = true;
      for (std::size_t a = 1; a < s && assoc; ++a)
        for (std::size_t b = 1; b < s && assoc; ++b)
          for (std::size_t e = 1; e < s && assoc; ++e)
            assoc = table[table[a][b]][e] == table[a][table[b][e]];
      if (!assoc) continue;
      // canonical form: least flattened table over relabelings fixing 0
      std::vector<std::size_t> best;
      for (const auto& p : perms) {
        std::vector<std::size_t> sigma(s);
        sigma[0] = 0;
        for (std::size_t i = 1; i < s; ++i) sigma[i] = p[i - 1] + 1;
        std::vector<std::size_t> inv(s);
        for (std::size_t i = 0; i < s; ++i) inv[sigma[i]] = i;
        std::vector<std::size_t> flat;
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j) flat.push_back(sigma[table[inv[i]][inv[j]]]);
        if (best.empty() || flat < best) best = std::move(flat);
      }
      seen.insert(best);
    }
    std::size_t idx = 0;
    for (const auto& flat : seen) {
      std::vector<std::vector<std::size_t>> t(s, std::vector<std::size_t>(s));
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) t[i][j] = flat[i * s + j];
      std::vector<std::string> labels(kNames, kNames + s);
      Monoid m(std::move(labels), 0, std::move(t));
      m.set_name("C" + std::to_string(s) + "." + std::to_string(idx++));
      out.push_back(std::move(m));
    }
  }
  return out;
}

IndistinguishabilityVerdict monotone_indistinguishable(const Monoid& m, std::size_t a, std::size_t max_arity) {
  if (a >= m.size()) throw PreconditionError("element out of range");
  if (a == m.zero()) throw PreconditionError("monotone_indistinguishable requires a != 0");
  std::optional<std::size_t> inverse;
  for (std::size_t b = 0; b < m.size(); ++b)
    if (m.add(a, b) == m.zero()) {
      inverse = b;
      break;
    }
  if (!inverse) throw PreconditionError("monotone_indistinguishable requires some b with a + b = 0");
  const std::size_t b = *inverse;
  const std::size_t q = m.size();

  IndistinguishabilityVerdict verdict;
  for (std::size_t n = 1; n <= max_arity; ++n) {
    const std::size_t points = std::size_t{1} << n;  // 2^n, ordered pointwise as bit masks
    const std::size_t size = ipow(q, points);
    if (size > 20) throw BudgetExceeded("W_M(2^n) for the closed-set enumeration", size, 20);

    // weight vectors of W_M(2^n) are encoded base q, one digit per point
    auto point_mass = [&](std::size_t point, std::size_t weight) {
      std::vector<std::size_t> d(points, m.zero());
      d[point] = weight;
      return undigits(d, q);
    };
    auto plus = [&](std::size_t u, std::size_t v) {
      auto du = digits(u, q, points), dv = digits(v, q, points);
      for (std::size_t i = 0; i < points; ++i) du[i] = m.add(du[i], dv[i]);
      return undigits(du, q);
    };

    // elementary upward moves c + w·p  ->  c + w·p' with p ⊆ p'
    std::vector<std::vector<bool>> up(size, std::vector<bool>(size, false));
    for (std::size_t c = 0; c < size; ++c)
      for (std::size_t w = 0; w < q; ++w)
        for (std::size_t p = 0; p < points; ++p)
          for (std::size_t p2 = 0; p2 < points; ++p2)
            if ((p & p2) == p) up[plus(c, point_mass(p, w))][plus(c, point_mass(p2, w))] = true;
    for (std::size_t i = 0; i < size; ++i) up[i][i] = true;
    for (std::size_t k = 0; k < size; ++k)
      for (std::size_t i = 0; i < size; ++i)
        if (up[i][k])
          for (std::size_t j = 0; j < size; ++j)
            if (up[k][j]) up[i][j] = true;

    // chain witnesses for every f : {x,y} -> 2^n
    for (std::size_t fx = 0; fx < points; ++fx) {
      for (std::size_t fy = 0; fy < points; ++fy) {
        IndistinguishabilityStep step{fx, fy, false, false};
        const std::size_t ax = point_mass(fx, a), ay = point_mass(fy, a);
        auto chain = [&](std::size_t from, std::size_t to, std::size_t src, std::size_t dst) {
          // src·a = src·a + ⊥·a + ⊥·b  ≲  src·a + dst·a + src·b = dst·a
          const std::size_t lhs = plus(plus(point_mass(src, a), point_mass(0, a)), point_mass(0, b));
          const std::size_t rhs = plus(plus(point_mass(src, a), point_mass(dst, a)), point_mass(src, b));
          return lhs == from && rhs == to && up[from][to];
        };
        step.forward = chain(ax, ay, fx, fy);
        step.backward = chain(ay, ax, fy, fx);
        if (!step.forward || !step.backward) verdict.indistinguishable = false;
        verdict.steps.push_back(step);
      }
    }

    // every ≲-closed subset of W_M(2^n) induces a monotone lifting
    for (std::size_t u = 0; u < (std::size_t{1} << size); ++u) {
      bool closed = true;
      for (std::size_t i = 0; i < size && closed; ++i) {
        if (!has(u, i)) continue;
        for (std::size_t j = 0; j < size; ++j)
          if (up[i][j] && !has(u, j)) {
            closed = false;
            break;
          }
      }
      if (!closed) continue;
      ++verdict.closed_sets_checked;
      for (std::size_t fx = 0; fx < points; ++fx)
        for (std::size_t fy = 0; fy < points; ++fy)
          if (has(u, point_mass(fx, a)) != has(u, point_mass(fy, a))) {
            verdict.indistinguishable = false;
            if (!verdict.separating_arity) verdict.separating_arity = n;
          }
    }
  }
  return verdict;
}

}  // namespace cml
