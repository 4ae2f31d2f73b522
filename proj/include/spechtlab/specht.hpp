#pragma once

#include <optional>

#include "spechtlab/labels.hpp"
#include "spechtlab/partition.hpp"
#include "spechtlab/prime.hpp"

namespace spechtlab {

/// S^λ is simple in characteristic p exactly for JM partitions.
bool is_simple_specht(const Partition& lambda, OddPrime p);

/// Φ(λ) as a signed-Young label. Errc::NotSimple unless λ is JM.
SignedLabel signed_label(const Partition& lambda, OddPrime p);

struct SpechtReport {
  Partition lambda;
  OddPrime p;
  bool simple = false;
  std::optional<SignedLabel> label;
  /// λ^R, naming the simple module D^{λ^R} when S^λ is simple.
  Partition regularization;
  std::optional<VertexDescriptor> vertex;
  std::optional<CorrespondentDescriptor> correspondent;
  std::optional<int> complexity;
  std::optional<ModuleClass> classification;
  std::optional<bool> periodic;
  std::optional<int> period;
  BlockData block;
};

SpechtReport report(const Partition& lambda, OddPrime p);

}  // namespace spechtlab
