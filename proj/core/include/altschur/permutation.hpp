#pragma once

/*
 * Permutations of {0,...,n-1} in image form, composition (a∘b)(i) = a(b(i)),
 * cycle types and the generator sets used throughout: adjacent transpositions
 * for S_n and the 3-cycles (1 2 i) for A_n.
 */

#include <vector>

#include "altschur/partition.hpp"

namespace altschur {

struct Perm {
  std::vector<int> img;  // i -> img[i]

  Perm() = default;
  explicit Perm(std::vector<int> images);  // validates bijectivity

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<size_t>(i)]; }
  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

Perm perm_identity(int n);
Perm compose(const Perm& a, const Perm& b);  // (a∘b)(i) = a(b(i))
Perm inverse(const Perm& p);
int perm_sign(const Perm& p);
Partition cycle_type(const Perm& p);
Perm transposition(int n, int i, int j);

enum class GroupKind { S, A };

/* Adjacent transpositions (i,i+1); empty for n < 2. */
std::vector<Perm> coxeter_gens(int n);

/* 3-cycles 0->1->i->0 for i = 2..n-1; empty for n < 3 (A_1, A_2 trivial). */
std::vector<Perm> alternating_gens(int n);

std::vector<Perm> group_gens(int n, GroupKind g);

/* All elements in lexicographic order of image vectors (A_n: filtered). */
std::vector<Perm> enumerate_group(int n, GroupKind g);

}  // namespace altschur
