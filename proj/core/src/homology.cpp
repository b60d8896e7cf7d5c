#include "equichain/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "equichain/errors.hpp"

namespace equichain {

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  IntegerMatrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw InvalidInput("ragged matrix rows");
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix dimensions do not match");
  IntegerMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Integer& v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b.at(k, j) != 0) c.at(i, j) += v * b.at(k, j);
    }
  return c;
}

namespace {

// Elimination state: a is reduced in place, u and v record the row and
// column operations when certifying.
struct Smith {
  IntegerMatrix a;
  std::optional<IntegerMatrix> u;
  std::optional<IntegerMatrix> v;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    if (u)
      for (int c = 0; c < u->cols(); ++c) std::swap(u->at(i, c), u->at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    if (v)
      for (int r = 0; r < v->rows(); ++r) std::swap(v->at(r, i), v->at(r, j));
  }
  // row_i += q row_j, touching only columns >= from in a.
  void add_row(int i, int j, const Integer& q, int from) {
    for (int c = from; c < a.cols(); ++c)
      if (a.at(j, c) != 0) a.at(i, c) += q * a.at(j, c);
    if (u)
      for (int c = 0; c < u->cols(); ++c)
        if (u->at(j, c) != 0) u->at(i, c) += q * u->at(j, c);
  }
  void add_col(int i, int j, const Integer& q, int from) {
    for (int r = from; r < a.rows(); ++r)
      if (a.at(r, j) != 0) a.at(r, i) += q * a.at(r, j);
    if (v)
      for (int r = 0; r < v->rows(); ++r)
        if (v->at(r, j) != 0) v->at(r, i) += q * v->at(r, j);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    if (u)
      for (int c = 0; c < u->cols(); ++c) u->at(i, c) = -u->at(i, c);
  }

  bool place_min_pivot(int t) {
    int bi = -1, bj = -1;
    Integer best;
    for (int i = t; i < a.rows(); ++i)
      for (int j = t; j < a.cols(); ++j) {
        const Integer& x = a.at(i, j);
        if (x == 0) continue;
        if (bi < 0 || abs(x) < best) {
          best = abs(x);
          bi = i;
          bj = j;
          if (best == 1) goto found;
        }
      }
    if (bi < 0) return false;
  found:
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Clears row and column t; returns false when a smaller remainder was
  // moved into the pivot position and the pass must be repeated.
  bool clear_cross(int t) {
    for (int i = t + 1; i < a.rows(); ++i) {
      if (a.at(i, t) == 0) continue;
      Integer q = a.at(i, t) / a.at(t, t);
      add_row(i, t, -q, t);
      if (a.at(i, t) != 0) {
        swap_rows(t, i);
        return false;
      }
    }
    for (int j = t + 1; j < a.cols(); ++j) {
      if (a.at(t, j) == 0) continue;
      Integer q = a.at(t, j) / a.at(t, t);
      add_col(j, t, -q, t);
      if (a.at(t, j) != 0) {
        swap_cols(t, j);
        return false;
      }
    }
    return true;
  }

  // diag(x, y) at positions i, j becomes diag(gcd, lcm) with g = s x + t y through
  // [[s, t], [-y/g, x/g]] on rows and [[1, -t y/g], [1, s x/g]] on columns.
  void gcd_lcm(int i, int j) {
    const Integer x = a.at(i, i), y = a.at(j, j);
    if (x == 0 || y == 0 || y % x == 0) return;
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    const Integer xg = x / g, yg = y / g;
    a.at(i, i) = g;
    a.at(j, j) = xg * y;
    if (u) mix_rows(*u, i, j, s, t, Integer(-yg), xg);
    if (v) mix_cols(*v, i, j, Integer(1), Integer(-t * yg), Integer(1), Integer(s * xg));
  }

  // rows (i, j) <- [[p, q], [r, s]] (rows i, j)
  static void mix_rows(IntegerMatrix& m, int i, int j, const Integer& p, const Integer& q, const Integer& r,
                       const Integer& s) {
    for (int c = 0; c < m.cols(); ++c) {
      Integer ri = m.at(i, c), rj = m.at(j, c);
      m.at(i, c) = p * ri + q * rj;
      m.at(j, c) = r * ri + s * rj;
    }
  }
  // cols (i, j) <- (cols i, j) [[p, q], [r, s]]
  static void mix_cols(IntegerMatrix& m, int i, int j, const Integer& p, const Integer& q, const Integer& r,
                       const Integer& s) {
    for (int k = 0; k < m.rows(); ++k) {
      Integer ci = m.at(k, i), cj = m.at(k, j);
      m.at(k, i) = ci * p + cj * r;
      m.at(k, j) = ci * q + cj * s;
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a, bool certify) {
  Smith s{a, std::nullopt, std::nullopt};
  if (certify) {
    s.u = IntegerMatrix::identity(a.rows());
    s.v = IntegerMatrix::identity(a.cols());
  }
  SmithForm out;
  const int n = std::min(a.rows(), a.cols());
  for (int t = 0; t < n; ++t) {
    if (!s.place_min_pivot(t)) break;
    while (!s.clear_cross(t)) {
    }
    if (s.a.at(t, t) < 0) s.negate_row(t);
    ++out.rank;
  }
  // Diagonal now; enforce d1 | d2 | ... pairwise.
  for (int i = 0; i < out.rank; ++i)
    for (int j = i + 1; j < out.rank; ++j) s.gcd_lcm(i, j);
  for (int i = 0; i < out.rank; ++i) out.factors.push_back(s.a.at(i, i));
  out.left = std::move(s.u);
  out.right = std::move(s.v);
  return out;
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

std::string AbelianGroup::json() const {
  nlohmann::json j;
  j["rank"] = rank;
  j["torsion"] = nlohmann::json::array();
  // Orders can exceed 64 bits; those are emitted as decimal strings.
  for (const auto& t : torsion) {
    if (t.fits_slong_p())
      j["torsion"].push_back(t.get_si());
    else
      j["torsion"].push_back(t.get_str());
  }
  return j.dump();
}

AbelianGroup free_group(int rank) { return {rank, {}}; }

AbelianGroup cyclic_group(const Integer& order) {
  if (order == 0) return free_group(1);
  if (abs(order) == 1) return {};
  return {0, {abs(order)}};
}

std::optional<std::string> ChainMatrices::check_square_zero() const {
  for (int k = 1; k + 1 < static_cast<int>(d.size()); ++k) {
    if (d[k].rows() == 0 || d[k + 1].cols() == 0) continue;
    if (!(d[k] * d[k + 1]).is_zero()) return "d_" + std::to_string(k) + " d_" + std::to_string(k + 1) + " != 0";
  }
  return std::nullopt;
}

namespace {

template <class Basis, class Locate>
ChainMatrices assemble(const ChainComplex& complex, int max_degree, Basis basis_of, Locate locate) {
  if (max_degree < 0) throw InvalidInput("max degree must be non-negative");
  ChainMatrices out;
  std::vector<std::map<Cell, int>> index;
  for (int k = 0; k <= max_degree + 1; ++k) {
    std::vector<Cell> b = basis_of(k);
    std::map<Cell, int> idx;
    for (const auto& c : b) idx.emplace(c, static_cast<int>(idx.size()));
    out.ranks.push_back(static_cast<int>(b.size()));
    if (k == 0) {
      out.d.emplace_back(0, out.ranks[0]);
    } else {
      IntegerMatrix m(out.ranks[k - 1], out.ranks[k]);
      for (const auto& [col_cell, col] : idx)
        for (const auto& [cell, c] : complex.boundary(col_cell)) {
          auto [target, coef] = locate(cell);
          auto it = index[k - 1].find(target);
          if (it == index[k - 1].end()) throw InvalidInput("boundary leaves the enumerated basis");
          m.at(it->second, col) += c * coef;
        }
      out.d.push_back(std::move(m));
    }
    index.push_back(std::move(idx));
  }
  return out;
}

}  // namespace

ChainMatrices quotient_by_group(const ChainComplex& complex, int max_degree) {
  const Dga* ring = complex.ring();
  if (ring == nullptr) throw InvalidInput(complex.name() + " is not a module complex");
  if (!ring->augmented()) throw InvalidInput("quotient needs an augmented ring");
  return assemble(
      complex, max_degree, [&](int k) { return complex.module_basis(k); },
      [&](const Cell& cell) {
        ModuleSplit s = complex.split(cell);
        return std::pair<Cell, Integer>(s.basis, s.sign * ring->augmentation(s.generator));
      });
}

ChainMatrices complex_matrices(const ChainComplex& complex, int max_degree) {
  if (!complex.has_basis()) throw InvalidInput(complex.name() + " has no enumerable basis");
  return assemble(
      complex, max_degree, [&](int k) { return complex.basis(k); },
      [](const Cell& cell) { return std::pair<Cell, Integer>(cell, 1); });
}

namespace {

void check_degree(const ChainMatrices& c, int k) {
  if (k < 0 || k >= c.top()) throw TruncationError("degree " + std::to_string(k) + " outside the computed range");
}

AbelianGroup assemble_group(int free_rank, const std::vector<Integer>& factors) {
  AbelianGroup g;
  g.rank = free_rank;
  for (const auto& f : factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

}  // namespace

AbelianGroup homology_group(const ChainMatrices& c, int k) {
  check_degree(c, k);
  const int rank_in = k == 0 ? 0 : smith_normal_form(c.d[k]).rank;
  SmithForm out = smith_normal_form(c.d[k + 1]);
  return assemble_group(c.ranks[k] - rank_in - out.rank, out.factors);
}

AbelianGroup cohomology_group(const ChainMatrices& c, int k) {
  check_degree(c, k);
  const int rank_out = smith_normal_form(c.d[k + 1]).rank;
  if (k == 0) return assemble_group(c.ranks[0] - rank_out, {});
  SmithForm in = smith_normal_form(c.d[k]);
  return assemble_group(c.ranks[k] - rank_out - in.rank, in.factors);
}

namespace {

std::vector<AbelianGroup> all_groups(const ChainMatrices& c, int max_degree, bool cohomology) {
  if (auto err = c.check_square_zero()) throw InvalidInput(*err);
  if (max_degree >= c.top()) throw TruncationError("degree " + std::to_string(max_degree) + " outside the computed range");
  // One Smith form per differential, shared between neighbouring degrees.
  std::vector<SmithForm> forms;
  for (int k = 0; k <= max_degree + 1; ++k) forms.push_back(k == 0 ? SmithForm{} : smith_normal_form(c.d[k]));
  std::vector<AbelianGroup> out;
  for (int k = 0; k <= max_degree; ++k) {
    const int free_rank = c.ranks[k] - forms[k].rank - forms[k + 1].rank;
    out.push_back(assemble_group(free_rank, cohomology ? forms[k].factors : forms[k + 1].factors));
  }
  return out;
}

}  // namespace

std::vector<AbelianGroup> homology_groups(const ChainMatrices& c, int max_degree) {
  return all_groups(c, max_degree, false);
}

std::vector<AbelianGroup> cohomology_groups(const ChainMatrices& c, int max_degree) {
  return all_groups(c, max_degree, true);
}

}  // namespace equichain
