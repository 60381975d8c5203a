#include "csinv/matrix.hpp"

#include <sstream>
#include <utility>

#include "csinv/error.hpp"

namespace csinv {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Matrix<Integer> a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = m(r, c);
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

Rational rational_determinant(RatMatrix a) {
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational f = a(r, k) / a(k, k);
      if (f == 0) continue;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return det;
}

}  // namespace

std::vector<Rational> leading_principal_minors(const RatMatrix& m) {
  std::vector<Rational> minors;
  for (std::size_t size = 1; size <= m.rows(); ++size) {
    RatMatrix sub(size, size);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) sub(r, c) = m(r, c);
    minors.push_back(rational_determinant(std::move(sub)));
  }
  return minors;
}

RatVector solve(const RatMatrix& a_in, const RatVector& b_in) {
  const std::size_t n = a_in.rows();
  if (a_in.cols() != n || b_in.size() != n) throw Error(ErrorKind::InvalidInput, "solve: shape mismatch");
  RatMatrix a = a_in;
  RatVector b = b_in;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw Error(ErrorKind::InvalidInput, "singular system");
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      std::swap(b[k], b[p]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational f = a(r, k) / a(k, k);
      if (f == 0) continue;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      b[r] -= f * b[k];
    }
  }
  RatVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * x[c];
    x[i] = s / a(i, i);
  }
  return x;
}

RatMatrix inverse(const RatMatrix& a) {
  const std::size_t n = a.rows();
  RatMatrix out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RatVector e(n, Rational(0));
    e[c] = 1;
    const RatVector x = solve(a, e);
    for (std::size_t r = 0; r < n; ++r) out(r, c) = x[r];
  }
  return out;
}

Inertia inertia(const RatMatrix& symmetric) {
  const std::size_t n = symmetric.rows();
  RatMatrix m = symmetric;
  Inertia out;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      // zero diagonal: add e_j to e_i for some nonzero off-diagonal entry
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (i != j && m(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        out.zero += n - k;
        return out;
      }
      for (std::size_t c = 0; c < n; ++c) m(pi, c) += m(pj, c);
      for (std::size_t r = 0; r < n; ++r) m(r, pi) += m(r, pj);
      pivot = pi;
    }
    swap_index(k, pivot);
    const Rational d = m(k, k);
    (d > 0 ? out.positive : out.negative) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational f = m(r, k) / d;
      if (f == 0) continue;
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
      for (std::size_t rr = k; rr < n; ++rr) m(rr, r) -= f * m(rr, k);
    }
  }
  return out;
}

std::string to_grid(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix parse_grid(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<IntVector> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    IntVector row;
    std::string token;
    while (ls >> token) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw Error(ErrorKind::InvalidInput, "not an integer: '" + token + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw Error(ErrorKind::InvalidInput, "Gram grid is not square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace csinv
