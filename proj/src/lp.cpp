#include "paretocheck/lp.hpp"

#include <stdexcept>
#include <utility>

namespace paretocheck {

namespace {

// Row of the <=-normal form.  sign relates it to the originating weak row:
// (coeffs, rhs) = sign * (original coeffs, original rhs).
struct LeRow {
  RatVec coeffs;
  Rat rhs;
  std::size_t origin;
  int sign;
};

std::vector<LeRow> le_normal_form(const std::vector<WeakRow>& weak) {
  std::vector<LeRow> rows;
  rows.reserve(weak.size() * 2);
  for (std::size_t i = 0; i < weak.size(); ++i) {
    const WeakRow& row = weak[i];
    RatVec neg(row.coeffs.size());
    for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -row.coeffs[j];
    switch (row.cmp) {
      case Cmp::LessEq:
        rows.push_back({row.coeffs, row.rhs, i, +1});
        break;
      case Cmp::GreaterEq:
        rows.push_back({std::move(neg), -row.rhs, i, -1});
        break;
      case Cmp::Eq:
        rows.push_back({row.coeffs, row.rhs, i, +1});
        rows.push_back({std::move(neg), -row.rhs, i, -1});
        break;
    }
  }
  return rows;
}

// Dense rational two-phase simplex with Bland's least-index rule, so every
// run terminates.  Free variables are split x = p - m; every row carries a
// slack and an artificial.  Column layout: p(n) m(n) s(R) z(R) rhs.
class Tableau {
 public:
  Tableau(std::size_t n, const std::vector<LeRow>& rows)
      : n_(n), init_rows_(rows.size()), rhscol_(2 * n + 2 * rows.size()) {
    T_.reserve(rows.size());
    basis_.resize(rows.size());
    sigma_.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int sigma = rows[i].rhs < 0 ? -1 : 1;
      sigma_[i] = sigma;
      RatVec t(rhscol_ + 1, Rat(0));
      for (std::size_t j = 0; j < n_; ++j) {
        t[j] = sigma * rows[i].coeffs[j];
        t[n_ + j] = -t[j];
      }
      t[2 * n_ + i] = sigma;
      t[2 * n_ + init_rows_ + i] = 1;
      t[rhscol_] = sigma * rows[i].rhs;
      T_.push_back(std::move(t));
      basis_[i] = 2 * n_ + init_rows_ + i;
    }
  }

  // Minimizes the artificial sum; 0 means the row system is satisfiable.
  Rat phase1() {
    obj_.assign(rhscol_ + 1, Rat(0));
    for (std::size_t i = 0; i < init_rows_; ++i) {
      obj_[2 * n_ + init_rows_ + i] = 1;
    }
    for (const RatVec& row : T_) {
      for (std::size_t j = 0; j <= rhscol_; ++j) obj_[j] -= row[j];
    }
    run();
    return -obj_[rhscol_];
  }

  // Valid right after an infeasible phase1: multipliers w >= 0 for the
  // <=-normal rows with sum(w_i coeffs_i) = 0 and sum(w_i rhs_i) < 0.
  // Read off the final duals y_i = 1 - reducedcost(z_i); w_i = -sigma_i y_i.
  std::vector<Rat> farkas_le() const {
    std::vector<Rat> w(init_rows_);
    for (std::size_t i = 0; i < init_rows_; ++i) {
      const Rat y = 1 - obj_[2 * n_ + init_rows_ + i];
      w[i] = -sigma_[i] * y;
    }
    return w;
  }

  // After a feasible phase1: pivots basic artificials out (degenerate, rhs
  // is 0), deletes rows that turn out redundant, then drops the artificial
  // columns so later pivots cannot reactivate them.
  void purge_artificials() {
    const std::size_t zstart = 2 * n_ + init_rows_;
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < T_.size(); ++i) {
      if (basis_[i] < zstart) continue;
      std::size_t pc = zstart;
      for (std::size_t j = 0; j < zstart; ++j) {
        if (T_[i][j] != 0) {
          pc = j;
          break;
        }
      }
      if (pc == zstart) {
        drop.push_back(i);
        continue;
      }
      pivot(i, pc);
    }
    for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
      T_.erase(T_.begin() + static_cast<std::ptrdiff_t>(*it));
      basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(*it));
    }
    for (RatVec& row : T_) {
      row.erase(row.begin() + static_cast<std::ptrdiff_t>(zstart),
                row.begin() + static_cast<std::ptrdiff_t>(zstart + init_rows_));
    }
    obj_.erase(obj_.begin() + static_cast<std::ptrdiff_t>(zstart),
               obj_.begin() + static_cast<std::ptrdiff_t>(zstart + init_rows_));
    rhscol_ = zstart;
  }

  // Maximizes original variable var over the purged tableau.
  Rat maximize_var(std::size_t var) {
    obj_.assign(rhscol_ + 1, Rat(0));
    obj_[var] = -1;
    obj_[n_ + var] = 1;
    for (std::size_t i = 0; i < T_.size(); ++i) {
      Rat f = 0;
      if (basis_[i] == var) f = -1;
      if (basis_[i] == n_ + var) f = 1;
      if (f == 0) continue;
      for (std::size_t j = 0; j <= rhscol_; ++j) obj_[j] -= f * T_[i][j];
    }
    run();
    return obj_[rhscol_];
  }

  RatVec solution() const {
    RatVec value(rhscol_, Rat(0));
    for (std::size_t i = 0; i < T_.size(); ++i) {
      value[basis_[i]] = T_[i][rhscol_];
    }
    RatVec x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = value[j] - value[n_ + j];
    return x;
  }

 private:
  void run() {
    for (;;) {
      std::size_t pc = rhscol_;
      for (std::size_t j = 0; j < rhscol_; ++j) {
        if (obj_[j] < 0) {
          pc = j;
          break;
        }
      }
      if (pc == rhscol_) return;
      std::size_t pr = T_.size();
      Rat best;
      for (std::size_t i = 0; i < T_.size(); ++i) {
        if (T_[i][pc] <= 0) continue;
        const Rat ratio = T_[i][rhscol_] / T_[i][pc];
        if (pr == T_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[pr])) {
          pr = i;
          best = ratio;
        }
      }
      if (pr == T_.size()) {
        throw std::logic_error("simplex: unbounded objective");
      }
      pivot(pr, pc);
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    RatVec& prow = T_[pr];
    const Rat piv = prow[pc];
    for (Rat& v : prow) v /= piv;
    for (std::size_t i = 0; i < T_.size(); ++i) {
      if (i != pr) eliminate(T_[i], prow, pc);
    }
    eliminate(obj_, prow, pc);
    basis_[pr] = pc;
  }

  static void eliminate(RatVec& row, const RatVec& prow, std::size_t pc) {
    const Rat f = row[pc];
    if (f == 0) return;
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
  }

  std::size_t n_;
  std::size_t init_rows_;
  std::size_t rhscol_;
  std::vector<RatVec> T_;
  RatVec obj_;
  std::vector<std::size_t> basis_;
  std::vector<int> sigma_;
};

struct WeakSolve {
  bool feasible = false;
  RatVec x;
  std::vector<Rat> weak_multipliers;
};

WeakSolve solve_weak(std::size_t n, const std::vector<WeakRow>& weak) {
  const std::vector<LeRow> rows = le_normal_form(weak);
  if (rows.empty()) return {true, RatVec(n, Rat(0)), {}};
  Tableau tab(n, rows);
  if (tab.phase1() == 0) return {true, tab.solution(), {}};
  const std::vector<Rat> w = tab.farkas_le();
  std::vector<Rat> mult(weak.size(), Rat(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    mult[rows[i].origin] += rows[i].sign * w[i];
  }
  return {false, {}, std::move(mult)};
}

void check_row_lengths(const LinearSystem& system) {
  for (const WeakRow& row : system.weak) {
    if (row.coeffs.size() != system.num_vars) {
      throw std::invalid_argument("linear system: row length != variable count");
    }
  }
  for (const StrictRow& row : system.strict) {
    if (row.coeffs.size() != system.num_vars) {
      throw std::invalid_argument("linear system: row length != variable count");
    }
  }
}

}  // namespace

void LinearSystem::add_le(RatVec coeffs, Rat rhs) {
  weak.push_back({std::move(coeffs), Cmp::LessEq, std::move(rhs)});
}

void LinearSystem::add_ge(RatVec coeffs, Rat rhs) {
  weak.push_back({std::move(coeffs), Cmp::GreaterEq, std::move(rhs)});
}

void LinearSystem::add_eq(RatVec coeffs, Rat rhs) {
  weak.push_back({std::move(coeffs), Cmp::Eq, std::move(rhs)});
}

void LinearSystem::add_gt(RatVec coeffs, Rat rhs) {
  strict.push_back({std::move(coeffs), StrictCmp::Greater, std::move(rhs)});
}

void LinearSystem::add_lt(RatVec coeffs, Rat rhs) {
  strict.push_back({std::move(coeffs), StrictCmp::Less, std::move(rhs)});
}

bool LinearSystem::homogeneous() const {
  for (const WeakRow& row : weak) {
    if (row.rhs != 0) return false;
  }
  for (const StrictRow& row : strict) {
    if (row.rhs != 0) return false;
  }
  return true;
}

FeasibilityResult solve_feasibility(const LinearSystem& system,
                                    StrictStrategy strategy) {
  check_row_lengths(system);
  FeasibilityResult res;

  if (system.strict.empty()) {
    WeakSolve ws = solve_weak(system.num_vars, system.weak);
    res.feasible = ws.feasible;
    if (ws.feasible) {
      res.witness = std::move(ws.x);
    } else {
      res.farkas = FarkasCertificate{std::move(ws.weak_multipliers)};
    }
    return res;
  }

  if (strategy == StrictStrategy::NormalizeOne) {
    // c.x > 0 and c.x >= 1 have the same solvability over a cone: any
    // solution of the former scales up to one of the latter.
    if (!system.homogeneous()) {
      throw std::invalid_argument(
          "NormalizeOne requires a homogeneous system");
    }
    std::vector<WeakRow> rows = system.weak;
    for (const StrictRow& srow : system.strict) {
      if (srow.cmp == StrictCmp::Greater) {
        rows.push_back({srow.coeffs, Cmp::GreaterEq, Rat(1)});
      } else {
        rows.push_back({srow.coeffs, Cmp::LessEq, Rat(-1)});
      }
    }
    WeakSolve ws = solve_weak(system.num_vars, rows);
    res.feasible = ws.feasible;
    if (ws.feasible) res.witness = std::move(ws.x);
    return res;
  }

  // Slack maximization: tighten every strict row by t, 0 <= t <= 1, and
  // maximize t; the system is feasible iff the optimum has t > 0.
  const std::size_t n = system.num_vars;
  std::vector<WeakRow> rows;
  rows.reserve(system.weak.size() + system.strict.size() + 2);
  for (const WeakRow& wrow : system.weak) {
    WeakRow ext = wrow;
    ext.coeffs.push_back(Rat(0));
    rows.push_back(std::move(ext));
  }
  for (const StrictRow& srow : system.strict) {
    RatVec coeffs = srow.coeffs;
    if (srow.cmp == StrictCmp::Greater) {
      coeffs.push_back(Rat(-1));
      rows.push_back({std::move(coeffs), Cmp::GreaterEq, srow.rhs});
    } else {
      coeffs.push_back(Rat(1));
      rows.push_back({std::move(coeffs), Cmp::LessEq, srow.rhs});
    }
  }
  RatVec tlow(n + 1, Rat(0));
  tlow[n] = 1;
  RatVec tcap = tlow;
  rows.push_back({std::move(tlow), Cmp::GreaterEq, Rat(0)});
  rows.push_back({std::move(tcap), Cmp::LessEq, Rat(1)});

  Tableau tab(n + 1, le_normal_form(rows));
  if (tab.phase1() != 0) return res;
  tab.purge_artificials();
  if (tab.maximize_var(n) <= 0) return res;
  RatVec x = tab.solution();
  x.pop_back();
  res.feasible = true;
  res.witness = std::move(x);
  return res;
}

bool witness_satisfies(const LinearSystem& system, const RatVec& witness) {
  if (witness.size() != system.num_vars) return false;
  for (const WeakRow& row : system.weak) {
    const Rat v = dot(row.coeffs, witness);
    switch (row.cmp) {
      case Cmp::LessEq:
        if (v > row.rhs) return false;
        break;
      case Cmp::Eq:
        if (v != row.rhs) return false;
        break;
      case Cmp::GreaterEq:
        if (v < row.rhs) return false;
        break;
    }
  }
  for (const StrictRow& row : system.strict) {
    const Rat v = dot(row.coeffs, witness);
    if (row.cmp == StrictCmp::Greater ? v <= row.rhs : v >= row.rhs) {
      return false;
    }
  }
  return true;
}

bool farkas_refutes(const LinearSystem& system,
                    const FarkasCertificate& certificate) {
  const std::vector<Rat>& mult = certificate.multipliers;
  if (mult.size() != system.weak.size()) return false;
  RatVec combo(system.num_vars, Rat(0));
  Rat rhs = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    const WeakRow& row = system.weak[i];
    if (row.cmp == Cmp::LessEq && mult[i] < 0) return false;
    if (row.cmp == Cmp::GreaterEq && mult[i] > 0) return false;
    for (std::size_t j = 0; j < combo.size(); ++j) {
      combo[j] += mult[i] * row.coeffs[j];
    }
    rhs += mult[i] * row.rhs;
  }
  for (const Rat& c : combo) {
    if (c != 0) return false;
  }
  return rhs < 0;
}

std::optional<ConeDecomposition> cone_membership(
    const RatVec& target, const std::vector<RatVec>& generators,
    const std::vector<bool>& negated) {
  if (is_constant_vec(target)) {
    throw std::invalid_argument("cone_membership: constant target");
  }
  for (const RatVec& g : generators) {
    if (g.size() != target.size()) {
      throw std::invalid_argument("cone_membership: dimension mismatch");
    }
  }
  if (!negated.empty() && negated.size() != generators.size()) {
    throw std::invalid_argument("cone_membership: negated flag count mismatch");
  }
  const std::size_t g = generators.size();
  LinearSystem sys(g + 1);
  for (std::size_t z = 0; z < target.size(); ++z) {
    RatVec row(g + 1, Rat(0));
    for (std::size_t k = 0; k < g; ++k) {
      row[k] = (!negated.empty() && negated[k]) ? -generators[k][z]
                                                : generators[k][z];
    }
    row[g] = 1;
    sys.add_eq(std::move(row), target[z]);
  }
  for (std::size_t k = 0; k < g; ++k) {
    RatVec row(g + 1, Rat(0));
    row[k] = 1;
    sys.add_ge(std::move(row), Rat(0));
  }
  const FeasibilityResult res = solve_feasibility(sys);
  if (!res.feasible) return std::nullopt;
  ConeDecomposition dec;
  dec.weights.assign(res.witness.begin(),
                     res.witness.begin() + static_cast<std::ptrdiff_t>(g));
  dec.shift = res.witness[g];
  return dec;
}

std::optional<RatVec> polytope_membership(
    const RatVec& point, const std::vector<RatVec>& vertices) {
  if (vertices.empty()) return std::nullopt;
  for (const RatVec& v : vertices) {
    if (v.size() != point.size()) {
      throw std::invalid_argument("polytope_membership: dimension mismatch");
    }
  }
  const std::size_t k = vertices.size();
  LinearSystem sys(k);
  for (std::size_t z = 0; z < point.size(); ++z) {
    RatVec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = vertices[j][z];
    sys.add_eq(std::move(row), point[z]);
  }
  sys.add_eq(RatVec(k, Rat(1)), Rat(1));
  for (std::size_t j = 0; j < k; ++j) {
    RatVec row(k, Rat(0));
    row[j] = 1;
    sys.add_ge(std::move(row), Rat(0));
  }
  const FeasibilityResult res = solve_feasibility(sys);
  if (!res.feasible) return std::nullopt;
  return res.witness;
}

std::size_t rank(const std::vector<RatVec>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  for (const RatVec& v : vectors) {
    if (v.size() != cols) {
      throw std::invalid_argument("rank: ragged rows");
    }
  }
  // Clear denominators row by row; Bareiss elimination then stays in
  // integers, every division below being exact.
  std::vector<std::vector<Int>> M;
  M.reserve(vectors.size());
  for (const RatVec& v : vectors) {
    Int scale = 1;
    for (const Rat& x : v) scale = lcm(scale, denominator(x));
    std::vector<Int> row(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      row[j] = numerator(v[j]) * (scale / denominator(v[j]));
    }
    M.push_back(std::move(row));
  }
  std::size_t rk = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && rk < M.size(); ++col) {
    std::size_t p = rk;
    while (p < M.size() && M[p][col] == 0) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[rk]);
    for (std::size_t i = rk + 1; i < M.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        M[i][j] = (M[rk][col] * M[i][j] - M[i][col] * M[rk][j]) / prev;
      }
      M[i][col] = 0;
    }
    prev = M[rk][col];
    ++rk;
  }
  return rk;
}

}  // namespace paretocheck
