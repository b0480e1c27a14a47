#include "spinweyl/combinat.hpp"

#include <algorithm>
#include <sstream>

namespace spinweyl {

bool Bipartition::operator<(const Bipartition& o) const {
  if (first != o.first) return first < o.first;
  return second < o.second;
}

namespace {

void partitions_rec(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

void distinct_rec(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    distinct_rec(n - p, p - 1, cur, out);
    cur.pop_back();
  }
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  check(n >= 0, "partitions: negative n");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> distinct_partitions(int n) {
  check(n >= 0, "distinct_partitions: negative n");
  std::vector<Partition> out;
  Partition cur;
  distinct_rec(n, n, cur, out);
  return out;
}

int partition_weight(const Partition& lam) {
  int s = 0;
  for (int p : lam) s += p;
  return s;
}

Partition transpose(const Partition& lam) {
  Partition t;
  if (lam.empty()) return t;
  for (int j = 1; j <= lam[0]; ++j) {
    int h = 0;
    for (int p : lam)
      if (p >= j) ++h;
    t.push_back(h);
  }
  return t;
}

bool partition_even(const Partition& lam) {
  return (partition_weight(lam) - (int)lam.size()) % 2 == 0;
}

bool is_partition(const Partition& lam) {
  for (size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] <= 0) return false;
    if (i && lam[i] > lam[i - 1]) return false;
  }
  return true;
}

bool has_distinct_parts(const Partition& lam) {
  for (size_t i = 1; i < lam.size(); ++i)
    if (lam[i] == lam[i - 1]) return false;
  return is_partition(lam);
}

std::string partition_str(const Partition& lam) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < lam.size(); ++i) {
    if (i) os << ",";
    os << lam[i];
  }
  os << ")";
  return os.str();
}

std::string bipartition_str(const Bipartition& bp) {
  return partition_str(bp.first) + "x" + partition_str(bp.second);
}

Int schur_dimension(const Partition& lam) {
  check(has_distinct_parts(lam), "schur_dimension: parts must be strictly decreasing");
  int n = partition_weight(lam);
  int m = (int)lam.size();
  Rat d = Rat(Int(1) << ((n - m) / 2));
  d *= Rat(factorial(n));
  for (int p : lam) d /= Rat(factorial(p));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      d *= Rat(lam[i] - lam[j], lam[i] + lam[j]);
  check(denominator(d) == 1 && d > 0, "schur_dimension: not a positive integer");
  return numerator(d);
}

Rat spin_char_on_3cycle(const Partition& lam) {
  check(has_distinct_parts(lam), "spin_char_on_3cycle: distinct parts required");
  int n = partition_weight(lam);
  check(n >= 3, "spin_char_on_3cycle: need n >= 3");
  Rat s = 0;
  for (int p : lam) s += Rat(Int(p) * (Int(p) * p - 1), 6);
  s -= Rat(Int(n) * (n - 1), 2);
  Rat csize = Rat(Int(n) * (n - 1) * (n - 2), 3);
  return s / csize;
}

bool verify_partition_fraction_identity(const Partition& lam) {
  check(has_distinct_parts(lam), "partition fraction identity: distinct parts required");
  int m = (int)lam.size();
  Rat lhs = 0;
  for (int i = 0; i < m; ++i) {
    Rat term = Rat(Int(lam[i]) * lam[i] * (lam[i] - 1));
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      // factors can be negative; divide instead of using the (num, den) ctor
      term *= Rat(Int(lam[i] - lam[j] - 1) * (lam[i] + lam[j]));
      term /= Rat(Int(lam[i] - lam[j]) * (lam[i] + lam[j] - 1));
    }
    lhs += term;
  }
  Rat rhs = 0;
  for (int p : lam) rhs += Rat(Int(p) * p * (p - 1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) rhs -= Rat(Int(lam[i]) * lam[j]);
  return lhs == rhs;
}

Rat content_power_sum(const Partition& lam, int k, const Rat& c1, const Rat& c2) {
  check(k == 1 || k == 2, "content_power_sum: k must be 1 or 2");
  check(is_partition(lam), "content_power_sum: bad partition");
  Rat s = 0;
  for (int i = 0; i < (int)lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      Rat c = c1 * Rat(j - i) + c2;  // box (i+1, j+1)
      s += (k == 1) ? c : c * c;
    }
  return s;
}

namespace {

Rat rat_abs(const Rat& r) { return r < 0 ? -r : r; }

// shape holds the remaining rows; local box (i,j) sits at (i+a, j+b) of the
// original diagram, so its content is c1*((j+b)-(i+a))+c2
struct SlootenWalk {
  Rat c1, c2;
  std::vector<Bipartition> out;

  Rat content(int i, int j, int a, int b) const {
    return c1 * Rat((j + b) - (i + a)) + c2;
  }

  void emit(Partition mu, Partition mup) {
    out.push_back({std::move(mu), std::move(mup)});
  }

  void strip_row(std::vector<int> shape, int a, int b, Partition mu, Partition mup) {
    check(mu.empty() || shape[0] <= mu.back(), "slooten: row lengths not decreasing");
    mu.push_back(shape[0]);
    shape.erase(shape.begin());
    go(std::move(shape), a + 1, b, std::move(mu), std::move(mup));
  }

  void strip_col(std::vector<int> shape, int a, int b, Partition mu, Partition mup) {
    int h = (int)shape.size();
    check(mup.empty() || h <= mup.back(), "slooten: column heights not decreasing");
    mup.push_back(h);
    std::vector<int> rest;
    for (int p : shape)
      if (p > 1) rest.push_back(p - 1);
    go(std::move(rest), a, b + 1, std::move(mu), std::move(mup));
  }

  void go(std::vector<int> shape, int a, int b, Partition mu, Partition mup) {
    if (shape.empty()) {
      emit(std::move(mu), std::move(mup));
      return;
    }
    int ell = (int)shape.size();
    if (ell == 1 && shape[0] == 1) {
      Rat c = content(1, 1, a, b);
      if (c >= 0) {
        Partition m2 = mu;
        m2.push_back(1);
        emit(std::move(m2), mup);
      }
      if (c <= 0) {
        Partition p2 = mup;
        p2.push_back(1);
        emit(std::move(mu), std::move(p2));
      }
      return;
    }
    Rat vrow = content(1, shape[0], a, b);
    Rat vcol = content(ell, 1, a, b);
    Rat ar = rat_abs(vrow), ac = rat_abs(vcol);
    if (ar >= ac) strip_row(shape, a, b, mu, mup);
    if (ac >= ar) strip_col(shape, a, b, mu, mup);
  }
};

}  // namespace

std::vector<Bipartition> slooten(const Partition& lam, const Rat& c1, const Rat& c2) {
  check(c1 > 0 && c2 >= 0, "slooten: need c1 > 0, c2 >= 0");
  check(is_partition(lam), "slooten: bad partition");
  SlootenWalk walk{c1, c2, {}};
  walk.go(lam, 0, 0, {}, {});
  std::sort(walk.out.begin(), walk.out.end());
  walk.out.erase(std::unique(walk.out.begin(), walk.out.end()), walk.out.end());
  int n = partition_weight(lam);
  for (const auto& bp : walk.out)
    check(partition_weight(bp.first) + partition_weight(bp.second) == n &&
              is_partition(bp.first) && is_partition(bp.second),
          "slooten: malformed output bipartition");
  return walk.out;
}

}  // namespace spinweyl
