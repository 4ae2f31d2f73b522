#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spechtlab/partition.hpp"
#include "spechtlab/prime.hpp"

namespace spechtlab {

/// (λ | pμ); μ is stored unscaled.
struct SignedLabel {
  Partition lambda;
  Partition mu;
  OddPrime p;

  int n() const noexcept { return lambda.size() + p.value() * mu.size(); }
  PartitionPair pair() const { return {lambda, scale(p.value(), mu)}; }

  friend bool operator==(const SignedLabel&, const SignedLabel&) = default;
};

/// Errc::NotDivisible unless every part of the right component is a multiple of p.
SignedLabel label_from_pair(const PartitionPair& pair, OddPrime p);

/// One factor S_degree ≀ S_multiplicity of N(ρ); degree = p^level.
struct NormalizerFactor {
  int level = 0;
  int degree = 1;
  int multiplicity = 0;

  std::string str() const;
  friend bool operator==(const NormalizerFactor&, const NormalizerFactor&) = default;
};

struct VertexDescriptor {
  Composition rho;
  /// n_0, …, n_r with n_i = |λ(i)| + |μ(i−1)|.
  std::vector<int> multiplicities;
  /// Factors with n_i > 0, lowest level first.
  std::vector<NormalizerFactor> normalizer;

  std::string normalizer_str() const;
};

VertexDescriptor rho(const SignedLabel& label);
/// Σ_{i≥1} n_i p^{i−1}.
int p_rank(const VertexDescriptor& v, OddPrime p);

struct CorrespondentFactor {
  int level = 0;  // p^i
  Partition regular_label;
  /// μ(i−1); absent on level 1 (i = 0).
  std::optional<Partition> restricted_label;

  friend bool operator==(const CorrespondentFactor&, const CorrespondentFactor&) = default;
};

struct CorrespondentDescriptor {
  std::vector<CorrespondentFactor> factors;
};

/// Level i contributes (p^i, λ(i), μ(i−1)); levels with both terms empty are omitted.
CorrespondentDescriptor green_correspondent(const SignedLabel& label);

/// (m(λ(0)) + pμ | λ − λ(0)).
SignedLabel twist(const SignedLabel& label);

struct BlockData {
  Partition core;
  int weight = 0;
  friend bool operator==(const BlockData&, const BlockData&) = default;
};

BlockData block(const SignedLabel& label);

/// |μ| + (|λ| − |λ(0)|)/p.
int complexity(const SignedLabel& label);

enum class ModuleClass { Projective, Periodic, Aperiodic };
std::string_view class_name(ModuleClass c) noexcept;

ModuleClass classify(const SignedLabel& label);
/// 2p − 2 for periodic labels.
std::optional<int> period(const SignedLabel& label);

/// Loewy layers top first, or the module itself.
struct HellerEntry {
  bool self = false;
  std::vector<Partition> layers;
  friend bool operator==(const HellerEntry&, const HellerEntry&) = default;
};

struct ResolutionDescriptor {
  Partition core;
  OddPrime p;
  /// ϱ_0 ▷ ϱ_1 ▷ ⋯ ▷ ϱ_{p−1}.
  std::vector<Partition> labels;
  /// Young labels of P_0, P_1, …, P_{2p−3}; P_0 covers Y(core | p(1)).
  std::vector<Partition> terms;
  /// heller[i − 1] describes Ω^i for 1 ≤ i ≤ 2p − 2.
  std::vector<HellerEntry> heller;
};

/// The p partitions of weight 1 over a p-core and the periodic resolution of
/// Y(core | p(1)). Errc::NotACore otherwise.
ResolutionDescriptor weight1_resolution(const Partition& core, OddPrime p);

}  // namespace spechtlab
