#include "nmcg/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "nmcg/error.hpp"

namespace nmcg {

namespace {

int compare_abs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the lower-right block starting at (t, t).
std::optional<Position> smallest_entry(const IntegerMatrix& s, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < s.rows(); ++i) {
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      if (!best || compare_abs(s(i, j), s(best->row, best->col)) < 0) best = Position{i, j};
    }
  }
  return best;
}

// Smallest nonzero |entry| in row t and column t (from the diagonal onwards).
Position smallest_in_cross(const IntegerMatrix& s, std::size_t t) {
  Position best{t, t};
  for (std::size_t i = t + 1; i < s.rows(); ++i) {
    if (s(i, t) != 0 && (s(best.row, best.col) == 0 || compare_abs(s(i, t), s(best.row, best.col)) < 0))
      best = Position{i, t};
  }
  for (std::size_t j = t + 1; j < s.cols(); ++j) {
    if (s(t, j) != 0 && (s(best.row, best.col) == 0 || compare_abs(s(t, j), s(best.row, best.col)) < 0))
      best = Position{t, j};
  }
  return best;
}

class Reducer {
 public:
  explicit Reducer(const IntegerMatrix& a)
      : s_(a), u_(IntegerMatrix::identity(a.rows())), v_(IntegerMatrix::identity(a.cols())) {}

  SmithForm run() && {
    const std::size_t n = std::min(s_.rows(), s_.cols());
    for (std::size_t t = 0; t < n; ++t) {
      const auto pivot = smallest_entry(s_, t);
      if (!pivot) break;
      move_to_diagonal(t, *pivot);
      reduce_cross(t);
      if (s_(t, t) < 0) {
        s_.negate_row(t);
        u_.negate_row(t);
      }
    }
    return SmithForm{std::move(s_), std::move(u_), std::move(v_)};
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    s_.swap_rows(a, b);
    u_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    s_.swap_cols(a, b);
    v_.swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    s_.add_row_multiple(dst, src, q);
    u_.add_row_multiple(dst, src, q);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    s_.add_col_multiple(dst, src, q);
    v_.add_col_multiple(dst, src, q);
  }

  void move_to_diagonal(std::size_t t, Position p) {
    swap_rows(t, p.row);
    swap_cols(t, p.col);
  }

  // Clears row t and column t, then enforces divisibility of the remaining
  // block by the pivot. |pivot| strictly decreases on every restart.
  void reduce_cross(std::size_t t) {
    Integer q;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s_.rows(); ++i) {
        if (s_(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), s_(i, t).get_mpz_t(), s_(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (s_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s_.cols(); ++j) {
        if (s_(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), s_(t, j).get_mpz_t(), s_(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (s_(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_to_diagonal(t, smallest_in_cross(s_, t));
        continue;
      }
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < s_.rows() && !offending; ++i) {
        for (std::size_t j = t + 1; j < s_.cols(); ++j) {
          if (!mpz_divisible_p(s_(i, j).get_mpz_t(), s_(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) return;
      add_row(t, *offending, 1);
    }
  }

  IntegerMatrix s_;
  IntegerMatrix u_;
  IntegerMatrix v_;
};

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  const std::size_t n = std::min(s.rows(), s.cols());
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(s(i, i));
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(s.rows(), s.cols());
  while (r < n && s(r, r) != 0) ++r;
  return r;
}

SmithForm snf(const IntegerMatrix& a) { return Reducer(a).run(); }

Integer AbelianInvariants::order() const {
  if (free_rank > 0) return 0;
  Integer n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::string to_string(const AbelianInvariants& g) {
  if (g.is_trivial()) return "0";
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " x ";
    out += part;
  };
  if (g.free_rank == 1) {
    append("Z");
  } else if (g.free_rank > 1) {
    append("Z^" + std::to_string(g.free_rank));
  }
  for (auto it = g.torsion.rbegin(); it != g.torsion.rend(); ++it) append("Z/" + it->get_str());
  return out;
}

AbelianInvariants invariant_factors(const IntegerMatrix& relations, std::size_t ambient_rank) {
  if (relations.cols() != ambient_rank) {
    throw DimensionError("relation matrix has " + std::to_string(relations.cols()) +
                         " columns but the ambient rank is " + std::to_string(ambient_rank));
  }
  const SmithForm f = snf(relations);
  AbelianInvariants g;
  const std::size_t r = f.rank();
  g.free_rank = ambient_rank - r;
  for (std::size_t i = 0; i < r; ++i)
    if (f.s(i, i) != 1) g.torsion.push_back(f.s(i, i));
  return g;
}

}  // namespace nmcg
