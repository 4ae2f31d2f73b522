#include "spechtlab/specht.hpp"

#include "spechtlab/abacus.hpp"
#include "spechtlab/error.hpp"
#include "spechtlab/jm.hpp"
#include "spechtlab/mullineux.hpp"

namespace spechtlab {

bool is_simple_specht(const Partition& lambda, OddPrime p) { return is_jm_hook(lambda, p); }

SignedLabel signed_label(const Partition& lambda, OddPrime p) {
  if (!is_simple_specht(lambda, p)) throw Error(Errc::NotSimple, lambda.str());
  return label_from_pair(phi(lambda, p), p);
}

SpechtReport report(const Partition& lambda, OddPrime p) {
  SpechtReport r{lambda, p, false, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  r.simple = is_simple_specht(lambda, p);
  r.regularization = regularize(lambda, p);
  r.block = {p_core(lambda, p), p_weight(lambda, p)};
  if (!r.simple) return r;
  const SignedLabel label = signed_label(lambda, p);
  r.label = label;
  r.vertex = rho(label);
  r.correspondent = green_correspondent(label);
  r.complexity = complexity(label);
  r.classification = classify(label);
  r.periodic = *r.classification == ModuleClass::Periodic;
  r.period = period(label);
  return r;
}

}  // namespace spechtlab
