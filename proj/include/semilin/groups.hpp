#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semilin/fields.hpp"

namespace semilin {

constexpr int kMaxGroupOrder = 128;
constexpr int kMaxPermDegree = 16;

// A finite group as a closed multiplication table. Element 0 is the identity.
struct Group {
  int order = 1;
  std::vector<std::vector<uint16_t>> mul;
  std::vector<uint16_t> inv;
  std::vector<int> element_order;

  int op(int a, int b) const { return mul[a][b]; }
  int inverse(int a) const { return inv[a]; }
  int conj(int g, int h) const { return mul[mul[g][h]][inv[g]]; }  // g h g^-1
  int power(int g, long e) const;
  int exponent() const;
};

struct GroupSpec {
  // Either permutation generators (one-line images, 0-indexed internally) ...
  std::vector<std::vector<int>> generators;
  // ... or an explicit table.
  std::optional<std::vector<std::vector<int>>> table;
  // Indices into the tower's Gamma list, aligned with `generators` (or with
  // every element when a table is given).
  std::vector<int> sigma_images;
};

struct BuiltGroup {
  Group G;
  // For generator-built groups: the index of each generator and, for every
  // element, one word over the generators that produces it (generator indices).
  std::vector<int> generator_elements;
  std::vector<std::vector<int>> words;
};

BuiltGroup build_group(const GroupSpec& spec);

// Subgroup with its own table and the index maps to the parent.
struct Subgroup {
  Group H;
  std::vector<int> to_parent;    // H index -> G index
  std::vector<int> from_parent;  // G index -> H index or -1
};

Subgroup make_subgroup(const Group& G, const std::vector<int>& elements);

struct ConjugacyData {
  std::vector<std::vector<int>> classes;  // each sorted, ordered by least element
  std::vector<int> class_of;              // element -> class index
  std::vector<int> representatives;       // least element of each class
};

ConjugacyData conjugacy_classes(const Group& G);

struct CosetSection {
  std::vector<int> reps;                     // gamma index -> G element, reps[0] = identity
  std::vector<std::vector<int>> cocycle;     // h[g1][g2] as a G element of H
};

struct GaloisSurjection {
  const Group* G = nullptr;
  const FieldTower* tower = nullptr;
  std::vector<int> sigma;   // element -> gamma index
  Subgroup H;               // kernel
  ConjugacyData H_classes;  // conjugacy classes of H (as a group in its own right)
  CosetSection section;

  int sigma_of(int g) const { return sigma[g]; }
};

// Builds sigma from generator images, verifies it is a surjective homomorphism,
// computes the kernel, a deterministic coset section (least element index per
// coset) and the verified cocycle table.
GaloisSurjection kernel_and_cosets(const Group& G, const BuiltGroup* built,
                                   const FieldTower& tower,
                                   const std::vector<int>& sigma_images,
                                   const GroupSpec& spec);

// Convenience: build group + surjection from a spec.
struct GroupWithAction {
  BuiltGroup built;
  GaloisSurjection surj;
};
GroupWithAction build_group_with_action(const GroupSpec& spec, const FieldTower& tower);

// The two-sided action of Gamma x Gamma on Cl(H) under the hypothesis
// L = K(mu_n), exp(H) | n: (g1, g2) * h = g1 h^(eps(sigma_g2)^-1) g1^-1.
struct TwoSidedClassAction {
  int n = 0;
  std::vector<int> epsilon;  // gamma index -> exponent in (Z/n)^x
  // action[g1][g2][class] -> class
  std::vector<std::vector<std::vector<int>>> action;

  std::vector<int> diagonal(int g) const { return action[g][g]; }
};

// epsilon: Gamma -> (Z/n)^x when L = K(mu_n); nullopt when the tower is not of
// that shape for this n.
std::optional<std::vector<int>> mu_n_embedding(const FieldTower& T, int n);

TwoSidedClassAction two_sided_class_action(const GaloisSurjection& s, int n);

// Orbits of a permutation action given as a list of permutations of {0..m-1}.
std::vector<std::vector<int>> permutation_orbits(int m, const std::vector<std::vector<int>>& perms);

}  // namespace semilin
