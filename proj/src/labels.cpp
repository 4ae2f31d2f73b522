#include "spechtlab/labels.hpp"

#include <algorithm>
#include <sstream>

#include "spechtlab/abacus.hpp"
#include "spechtlab/error.hpp"
#include "spechtlab/mullineux.hpp"
#include "spechtlab/padic.hpp"

namespace spechtlab {

SignedLabel label_from_pair(const PartitionPair& pair, OddPrime p) {
  return {pair.left, divide(pair.right, p.value()), p};
}

std::string NormalizerFactor::str() const {
  std::ostringstream os;
  if (degree == 1)
    os << 'S' << multiplicity;
  else if (multiplicity == 1)
    os << 'S' << degree;
  else
    os << "(S" << degree << "≀S" << multiplicity << ')';
  return os.str();
}

std::string VertexDescriptor::normalizer_str() const {
  if (normalizer.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < normalizer.size(); ++k) out += (k ? "×" : "") + normalizer[k].str();
  return out;
}

VertexDescriptor rho(const SignedLabel& label) {
  const PadicExpansion el = expand(label.lambda, label.p);
  const PadicExpansion em = expand(label.mu, label.p);
  const int r = std::max(el.top(), label.mu.empty() ? 0 : em.top() + 1);
  VertexDescriptor v;
  std::vector<int> parts;
  int degree = 1;
  for (int i = 0; i <= r; ++i, degree *= label.p.value()) {
    const int ni = el.term(i).size() + (i > 0 ? em.term(i - 1).size() : 0);
    v.multiplicities.push_back(ni);
    parts.insert(parts.end(), static_cast<std::size_t>(ni), degree);
    if (ni > 0) v.normalizer.push_back({i, degree, ni});
  }
  v.rho = Composition(std::move(parts));
  return v;
}

int p_rank(const VertexDescriptor& v, OddPrime p) {
  int rank = 0;
  int scale = 1;
  for (std::size_t i = 1; i < v.multiplicities.size(); ++i, scale *= p.value())
    rank += v.multiplicities[i] * scale;
  return rank;
}

CorrespondentDescriptor green_correspondent(const SignedLabel& label) {
  const PadicExpansion el = expand(label.lambda, label.p);
  const PadicExpansion em = expand(label.mu, label.p);
  const int r = std::max(el.top(), label.mu.empty() ? 0 : em.top() + 1);
  CorrespondentDescriptor d;
  int level = 1;
  for (int i = 0; i <= r; ++i, level *= label.p.value()) {
    CorrespondentFactor f{level, el.term(i), std::nullopt};
    if (i > 0) f.restricted_label = em.term(i - 1);
    const bool empty = f.regular_label.empty() && (!f.restricted_label || f.restricted_label->empty());
    if (!empty || (i == 0 && label.n() == 0)) d.factors.push_back(std::move(f));
  }
  return d;
}

SignedLabel twist(const SignedLabel& label) {
  const int p = label.p.value();
  const Partition head = restricted_part(label.lambda, label.p);
  return {add(mullineux_restricted(head, label.p), scale(p, label.mu)),
          divide(subtract(label.lambda, head), p), label.p};
}

BlockData block(const SignedLabel& label) {
  Partition core = p_core(label.lambda, label.p);
  const int weight = (label.n() - core.size()) / label.p.value();
  return {std::move(core), weight};
}

int complexity(const SignedLabel& label) {
  const Partition head = restricted_part(label.lambda, label.p);
  return label.mu.size() + (label.lambda.size() - head.size()) / label.p.value();
}

std::string_view class_name(ModuleClass c) noexcept {
  switch (c) {
    case ModuleClass::Projective: return "projective";
    case ModuleClass::Periodic: return "periodic";
    case ModuleClass::Aperiodic: return "aperiodic";
  }
  return "?";
}

ModuleClass classify(const SignedLabel& label) {
  const bool restricted = is_p_restricted(label.lambda, label.p);
  if (label.mu.empty() && restricted) return ModuleClass::Projective;
  if (label.mu == Partition{1} && restricted) return ModuleClass::Periodic;
  if (label.mu.empty() &&
      subtract(label.lambda, restricted_part(label.lambda, label.p)) == Partition{label.p.value()})
    return ModuleClass::Periodic;
  return ModuleClass::Aperiodic;
}

std::optional<int> period(const SignedLabel& label) {
  if (classify(label) != ModuleClass::Periodic) return std::nullopt;
  return 2 * label.p.value() - 2;
}

ResolutionDescriptor weight1_resolution(const Partition& core, OddPrime p) {
  if (!is_p_core(core, p)) throw Error(Errc::NotACore, core.str());
  const int pv = p.value();
  // With an extra full row every runner carries a bead.
  const Abacus display = add_full_row(from_partition(core, p));
  std::vector<int> lowest(static_cast<std::size_t>(pv), -1);
  for (int b : display.beads()) lowest[static_cast<std::size_t>(b % pv)] = b;

  ResolutionDescriptor d{core, p, {}, {}, {}};
  for (int r = 0; r < pv; ++r) {
    std::vector<int> beads = display.beads();
    std::replace(beads.begin(), beads.end(), lowest[static_cast<std::size_t>(r)],
                 lowest[static_cast<std::size_t>(r)] + pv);
    d.labels.push_back(to_partition(Abacus(p, std::move(beads))));
  }
  // Lexicographic order refines dominance, which is total here.
  std::sort(d.labels.begin(), d.labels.end(), std::greater<>());

  const auto& rho = d.labels;
  for (int k = pv - 1; k >= 1; --k) d.terms.push_back(rho[static_cast<std::size_t>(k)]);
  for (int k = 1; k <= pv - 1; ++k) d.terms.push_back(rho[static_cast<std::size_t>(k)]);

  auto at = [&](int k) { return rho[static_cast<std::size_t>(k)]; };
  for (int i = 1; i <= 2 * pv - 2; ++i) {
    HellerEntry h;
    if (i <= pv - 2)
      h.layers = {at(pv - 1 - i), at(pv - i)};
    else if (i == pv - 1)
      h.layers = {at(1)};
    else if (i <= 2 * pv - 3)
      h.layers = {at(i - pv + 2), at(i - pv + 1)};
    else
      h.self = true;
    d.heller.push_back(std::move(h));
  }
  return d;
}

}  // namespace spechtlab
