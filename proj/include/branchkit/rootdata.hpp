// Root data for semisimple types: Cartan matrices, positive root generation
// by root strings, coroots, and the invariant form on weight coordinates.
//
// Conventions. Weights are stored in fundamental-weight coordinates, so
// mu[i] = <mu, alpha_i^vee>; the simple roots are then the columns of the
// Cartan matrix A(i,j) = <alpha_j, alpha_i^vee>, the fundamental weights are
// the standard basis vectors and the Weyl vector is all ones. The normalized
// form gives short roots squared length 2 in each simple factor.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "branchkit/linalg.hpp"

namespace branchkit {

struct SimpleFactor {
  char family = 'A';  // A B C D E F G
  unsigned rank = 1;
};

struct RootDatum {
  std::vector<SimpleFactor> type;
  std::size_t rank = 0;
  QMat cartan;  // A(i,j) = <alpha_j, alpha_i^vee>

  // Positive roots ordered by (height, lex); negatives are implicit mirrors.
  std::vector<std::vector<long>> pos_alpha;    // simple-root coordinates
  std::vector<QVec> pos_weight;                // fundamental-weight coordinates
  std::vector<std::vector<long>> pos_coroot;   // alpha^vee = sum k_i alpha_i^vee
  std::vector<Rat> pos_len2;                   // (alpha, alpha)
  std::vector<std::size_t> factor_of_root;
  std::vector<std::size_t> factor_of_simple;

  QVec d;           // symmetrizers d_i = (alpha_i, alpha_i)/2
  QMat weight_form; // Gram matrix (pi_i, pi_j) of the normalized form

  std::size_t n_pos() const { return pos_alpha.size(); }

  // (index into positives, +1/-1) for a vector in simple-root coordinates.
  std::optional<std::pair<std::size_t, int>> find_root(const std::vector<long>& alpha) const;

  long height(std::size_t pos_index) const;

  // <mu, alpha^vee> for mu in weight coordinates.
  Rat pair_coroot(const QVec& mu, std::size_t pos_index) const;

  Rat form(const QVec& w1, const QVec& w2) const;

  QVec alpha_to_weight(const std::vector<long>& alpha) const;

  QVec rho() const { return QVec(rank, Rat(1)); }

  bool is_dominant(const QVec& mu) const;
  bool is_integral(const QVec& mu) const;

  std::string type_string() const;

 private:
  std::map<std::vector<long>, std::size_t> root_lookup_;
  friend RootDatum build_root_datum(const std::vector<SimpleFactor>& spec);
};

RootDatum build_root_datum(const std::vector<SimpleFactor>& spec);

// Known positive-root counts, used as a construction cross-check.
std::size_t known_positive_count(char family, unsigned rank);

// Dimension of the algebra of the given type without building it.
std::size_t algebra_dimension(const std::vector<SimpleFactor>& spec);

}  // namespace branchkit
