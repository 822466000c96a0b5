#include "chambrier/feasible.hpp"

#include <algorithm>
#include <map>

namespace chambrier {

namespace {

struct Row {
  RatVec v;  // length n + 1, constant last
  bool strict;
};

// Scales to primitive integer entries; the positive scaling keeps meaning.
void normalize(Row& r) { r.v = to_rat(primitive_signed(r.v)); }

bool coeffs_zero(const RatVec& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

}  // namespace

void LinSys::add_eq(const RatVec& a, const Rat& c) {
  RatVec r = a;
  r.push_back(c);
  eq.push_back(std::move(r));
}

void LinSys::add_gt(const RatVec& a, const Rat& c) {
  RatVec r = a;
  r.push_back(c);
  gt.push_back(std::move(r));
}

void LinSys::add_ge(const RatVec& a, const Rat& c) {
  RatVec r = a;
  r.push_back(c);
  ge.push_back(std::move(r));
}

std::optional<RatVec> lin_witness(const LinSys& sys) {
  const size_t n = sys.n;

  // Gaussian elimination on the equalities; pivots restricted to variable
  // columns. A pivot that could only land on the constant column is the
  // inconsistent row 0 = c.
  Mat eqs = sys.eq;
  std::vector<size_t> pivots;  // column of the pivot of eqs[i]
  {
    size_t row = 0;
    for (size_t col = 0; col < n && row < eqs.size(); ++col) {
      size_t sel = row;
      while (sel < eqs.size() && eqs[sel][col] == 0) ++sel;
      if (sel == eqs.size()) continue;
      std::swap(eqs[row], eqs[sel]);
      Rat inv = eqs[row][col];
      for (Rat& x : eqs[row]) x /= inv;
      for (size_t i = 0; i < eqs.size(); ++i) {
        if (i == row || eqs[i][col] == 0) continue;
        Rat f = eqs[i][col];
        for (size_t j = 0; j <= n; ++j) eqs[i][j] -= f * eqs[row][j];
      }
      pivots.push_back(col);
      ++row;
    }
    for (size_t i = row; i < eqs.size(); ++i)
      if (eqs[i][n] != 0) return std::nullopt;
    eqs.resize(row);
  }

  std::vector<bool> is_pivot(n, false);
  for (size_t p : pivots) is_pivot[p] = true;

  // Substitute the pivot expressions into the inequalities.
  std::vector<Row> rows;
  auto substituted = [&](RatVec v, bool strict) {
    for (size_t i = 0; i < eqs.size(); ++i) {
      Rat c = v[pivots[i]];
      if (c == 0) continue;
      for (size_t j = 0; j <= n; ++j) v[j] -= c * eqs[i][j];
    }
    return Row{std::move(v), strict};
  };
  for (const RatVec& v : sys.gt) rows.push_back(substituted(v, true));
  for (const RatVec& v : sys.ge) rows.push_back(substituted(v, false));

  auto check_constant = [](const Row& r) {
    const Rat& c = r.v.back();
    return r.strict ? c > 0 : c >= 0;
  };

  // Fourier-Motzkin over the free variables. For each eliminated variable we
  // keep its lower/upper bound rows for back-substitution.
  struct Stage {
    size_t var;
    std::vector<Row> lowers, uppers;  // rows still containing var
  };
  std::vector<Stage> stages;

  std::vector<Row> active;
  for (Row& r : rows) {
    if (coeffs_zero(r.v)) {
      if (!check_constant(r)) return std::nullopt;
    } else {
      normalize(r);
      active.push_back(std::move(r));
    }
  }

  for (size_t var = 0; var < n; ++var) {
    if (is_pivot[var]) continue;
    std::vector<Row> lowers, uppers, rest;
    for (Row& r : active) {
      if (r.v[var] > 0)
        lowers.push_back(std::move(r));
      else if (r.v[var] < 0)
        uppers.push_back(std::move(r));
      else
        rest.push_back(std::move(r));
    }
    // Combine each lower with each upper; dedup keeps the strictest version.
    std::map<RatVec, bool> dedup;
    for (Row& r : rest) {
      auto [it, inserted] = dedup.try_emplace(r.v, r.strict);
      if (!inserted) it->second = it->second || r.strict;
    }
    for (const Row& lo : lowers)
      for (const Row& up : uppers) {
        Row comb;
        comb.strict = lo.strict || up.strict;
        comb.v = zeros(n + 1);
        const Rat a = lo.v[var], b = -up.v[var];  // a, b > 0
        for (size_t j = 0; j <= n; ++j) comb.v[j] = b * lo.v[j] + a * up.v[j];
        if (coeffs_zero(comb.v)) {
          if (!check_constant(comb)) return std::nullopt;
          continue;
        }
        normalize(comb);
        auto [it, inserted] = dedup.try_emplace(comb.v, comb.strict);
        if (!inserted) it->second = it->second || comb.strict;
      }
    active.clear();
    for (auto& [v, strict] : dedup) active.push_back(Row{v, strict});
    stages.push_back(Stage{var, std::move(lowers), std::move(uppers)});
  }

  // All remaining rows are over pivot-free eliminated space: none should be
  // left with coefficients (every variable was processed).
  for (const Row& r : active)
    if (!check_constant(r)) return std::nullopt;

  // Back-substitution, last eliminated variable first.
  RatVec x = zeros(n);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const Stage& st = *it;
    auto bound_value = [&](const Row& r) {
      // r.v[var] x_var + rest >= 0  ->  x_var >=/<= -(rest)/coeff
      Rat rest = r.v[n];
      for (size_t j = 0; j < n; ++j)
        if (j != st.var && r.v[j] != 0) rest += r.v[j] * x[j];
      return -rest / r.v[st.var];
    };
    bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
    Rat lo = 0, up = 0;
    for (const Row& r : st.lowers) {
      Rat b = bound_value(r);
      if (!has_lo || b > lo) {
        lo = b;
        lo_strict = r.strict;
        has_lo = true;
      } else if (b == lo) {
        lo_strict = lo_strict || r.strict;
      }
    }
    for (const Row& r : st.uppers) {
      Rat b = bound_value(r);
      if (!has_up || b < up) {
        up = b;
        up_strict = r.strict;
        has_up = true;
      } else if (b == up) {
        up_strict = up_strict || r.strict;
      }
    }
    Rat value;
    if (has_lo && has_up) {
      // Elimination certified the interval nonempty; a pinched interval can
      // only be closed on both sides.
      if (lo == up && (lo_strict || up_strict)) return std::nullopt;
      value = (lo == up) ? lo : (lo + up) / 2;
    } else if (has_lo) {
      value = lo + 1;
    } else if (has_up) {
      value = up - 1;
    } else {
      value = 0;
    }
    x[st.var] = value;
  }

  // Pivot variables from the reduced equalities.
  for (size_t i = 0; i < eqs.size(); ++i) {
    Rat rest = eqs[i][n];
    for (size_t j = 0; j < n; ++j)
      if (j != pivots[i] && eqs[i][j] != 0) rest += eqs[i][j] * x[j];
    x[pivots[i]] = -rest;  // pivot coefficient is 1
  }
  return x;
}

bool lin_feasible(const LinSys& sys) { return lin_witness(sys).has_value(); }

bool lin_implies(const LinSys& sys, const RatVec& a, const Rat& c, bool strict) {
  LinSys neg = sys;
  RatVec na = vec_scale(Rat(-1), a);
  if (strict) {
    // negation of a.x + c > 0 is -a.x - c >= 0
    neg.add_ge(na, -c);
  } else {
    neg.add_gt(na, -c);
  }
  return !lin_feasible(neg);
}

LinSys project_out(const LinSys& sys, const std::vector<size_t>& vars) {
  const size_t n = sys.n;
  std::vector<bool> gone(n, false);
  for (size_t v : vars) gone[v] = true;

  Mat eqs = sys.eq;
  struct IRow {
    RatVec v;
    bool strict;
  };
  std::vector<IRow> ineqs;
  for (const RatVec& r : sys.gt) ineqs.push_back({r, true});
  for (const RatVec& r : sys.ge) ineqs.push_back({r, false});

  for (size_t v : vars) {
    // Prefer an equality pivot: substitute and forget the row.
    size_t piv = eqs.size();
    for (size_t i = 0; i < eqs.size(); ++i)
      if (eqs[i][v] != 0) {
        piv = i;
        break;
      }
    if (piv != eqs.size()) {
      RatVec p = eqs[piv];
      eqs.erase(eqs.begin() + piv);
      Rat pc = p[v];
      auto substitute = [&](RatVec& r) {
        if (r[v] == 0) return;
        Rat f = r[v] / pc;
        for (size_t j = 0; j <= n; ++j) r[j] -= f * p[j];
      };
      for (RatVec& r : eqs) substitute(r);
      for (IRow& r : ineqs) substitute(r.v);
      continue;
    }
    // Fourier-Motzkin on the inequalities.
    std::vector<IRow> lowers, uppers, keep;
    for (IRow& r : ineqs) {
      if (r.v[v] > 0)
        lowers.push_back(std::move(r));  // bounds v from below
      else if (r.v[v] < 0)
        uppers.push_back(std::move(r));
      else
        keep.push_back(std::move(r));
    }
    for (const IRow& lo : lowers)
      for (const IRow& up : uppers) {
        RatVec comb(n + 1);
        Rat a = lo.v[v];
        Rat b = -up.v[v];
        for (size_t j = 0; j <= n; ++j) comb[j] = b * lo.v[j] + a * up.v[j];
        keep.push_back({to_rat(primitive_signed(comb)), lo.strict || up.strict});
      }
    ineqs = std::move(keep);
  }

  // Reindex to the surviving variables.
  std::vector<size_t> col;
  for (size_t j = 0; j < n; ++j)
    if (!gone[j]) col.push_back(j);
  LinSys out(col.size());
  auto shrink = [&](const RatVec& r) {
    RatVec s(col.size() + 1);
    for (size_t j = 0; j < col.size(); ++j) s[j] = r[col[j]];
    s[col.size()] = r[n];
    return s;
  };
  for (const RatVec& r : eqs) out.eq.push_back(shrink(r));
  std::map<RatVec, bool> seen;  // row -> strict; keep the strict version
  for (const IRow& r : ineqs) {
    RatVec s = shrink(r.v);
    bool zero = true;
    for (const Rat& x : s) zero = zero && x == 0;
    if (zero && !r.strict) continue;  // trivially true
    auto [it, fresh] = seen.try_emplace(s, r.strict);
    if (!fresh) it->second = it->second || r.strict;
  }
  for (const auto& [row, strict] : seen) {
    if (strict)
      out.gt.push_back(row);
    else
      out.ge.push_back(row);
  }
  return out;
}

}  // namespace chambrier
