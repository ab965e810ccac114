#pragma once

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "strandtrace/symfun.hpp"

namespace testing_support {

using strandtrace::Basis;
using strandtrace::Partition;
using strandtrace::SymFun;

struct Term {
  std::vector<int> parts;
  mpq_class coeff;
};

inline SymFun sym(Basis b, std::initializer_list<Term> terms) {
  SymFun f(b);
  for (const Term& t : terms) f.add_term(Partition(t.parts), t.coeff);
  return f;
}

inline mpq_class frac(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

/// Random partition of size at most max_size (possibly empty).
inline Partition random_partition(std::mt19937& rng, int max_size) {
  std::uniform_int_distribution<int> size_dist(0, max_size);
  int remaining = size_dist(rng);
  std::vector<int> parts;
  while (remaining > 0) {
    std::uniform_int_distribution<int> part_dist(1, remaining);
    const int p = part_dist(rng);
    parts.push_back(p);
    remaining -= p;
  }
  return Partition(parts);
}

inline SymFun random_symfun(std::mt19937& rng, Basis b, int max_degree, int terms) {
  SymFun f(b);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (int t = 0; t < terms; ++t) f.add_term(random_partition(rng, max_degree), frac(num(rng), den(rng)));
  return f;
}

}  // namespace testing_support
