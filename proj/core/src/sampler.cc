// Copyright 2025 The zxcult Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zxcult/sampler.h"

#include <algorithm>
#include <cmath>

#include "zxcult/simplify.h"

namespace zxcult {
namespace {

// Replaces a degree-1 spider by a fresh output on the same edge kind.
int strip_to_output(ZxDiagram& d, int v) {
  const Edge e = d.edge(d.incident(v).at(0));
  const int u = e.other(v);
  d.remove_spider(v);
  const int o = d.add_output();
  d.connect(u, o, e.kind);
  return static_cast<int>(d.outputs().size()) - 1;
}

// Replaces boundary b by an identity Z spider on the same edge kind.
int detach_boundary(ZxDiagram& d, int b) {
  const Edge e = d.edge(d.incident(b).at(0));
  const int u = e.other(b);
  d.remove_spider(b);
  const int s = d.add_spider(Color::Z, Phase());
  d.connect(u, s, e.kind);
  return s;
}

// Caps the outputs at the given indices with (colour, phase) effects.
ZxDiagram cap_outputs(const ZxDiagram& d, const std::vector<std::pair<int, MeasurementSite>>& caps,
                      const std::vector<int>& bits) {
  ZxDiagram out = d;
  std::vector<int> drop;
  for (size_t i = 0; i < bits.size(); ++i) {
    const int b = d.outputs()[caps[i].first];
    const Edge e = out.edge(out.incident(b).at(0));
    const int u = e.other(b);
    out.remove_spider(b);
    const int cap = out.add_spider(caps[i].second.color, Phase(4 * bits[i]));
    out.connect(u, cap, e.kind);
    drop.push_back(b);
  }
  out.mul_scalar(CliffordScalar::sqrt2_pow(-static_cast<int>(bits.size())));
  auto& outs = out.mutable_outputs();
  outs.erase(std::remove_if(outs.begin(), outs.end(),
                            [&](int v) { return std::find(drop.begin(), drop.end(), v) != drop.end(); }),
             outs.end());
  return out;
}

}  // namespace

ZxDiagram inner_product_diagram(const ZxDiagram& bra, const ZxDiagram& ket) {
  if (!bra.inputs().empty() || !ket.inputs().empty()) {
    throw DomainError("inner_product_diagram: both sides must be states");
  }
  if (bra.outputs().size() != ket.outputs().size()) {
    throw DomainError("inner_product_diagram: output counts differ");
  }
  ZxDiagram d = ket;
  const int off = d.append(bra.adjoint());
  const size_t n = ket.outputs().size();
  for (size_t i = 0; i < n; ++i) {
    const int o = ket.outputs()[i];
    const int q = bra.outputs()[i] + off;  // an input after the adjoint
    d.connect(detach_boundary(d, o), detach_boundary(d, q));
  }
  d.mutable_inputs().clear();
  d.mutable_outputs().clear();
  return d;
}

BornSampler::BornSampler(const ZxDiagram& d, DecompositionStrategy strategy) {
  if (!d.inputs().empty()) throw DomainError("BornSampler: the diagram must be a state (no inputs)");
  ZxDiagram open = d;
  for (int v : d.measurement_spiders()) {
    const Spider& s = d.spider(v);
    if (d.degree(v) != 1) throw DomainError("BornSampler: measurement spiders must have degree 1");
    sites_.push_back(MeasurementSite{v, s.timeslice, s.color});
  }
  std::stable_sort(sites_.begin(), sites_.end(), [](const MeasurementSite& a, const MeasurementSite& b) {
    return a.timeslice != b.timeslice ? a.timeslice < b.timeslice : a.spider < b.spider;
  });
  for (const MeasurementSite& s : sites_) site_outputs_.push_back(strip_to_output(open, s.spider));

  strategy.target = Target::kPureClifford;
  DecompositionResult res = decompose_full(open, strategy);
  if (!res.complete) throw DomainError("BornSampler: decomposition exceeded the chi cap");
  for (Term& t : res.sum.terms) {
    coeffs_.push_back(t.coeff.to_complex());
    terms_.push_back(std::move(t.diagram));
  }
}

double BornSampler::weight(const std::vector<int>& prefix) {
  if (prefix.size() > sites_.size()) throw DomainError("BornSampler: prefix longer than the site list");
  auto it = cache_.find(prefix);
  if (it != cache_.end()) return it->second;
  std::vector<std::pair<int, MeasurementSite>> caps;
  for (size_t i = 0; i < prefix.size(); ++i) caps.emplace_back(site_outputs_[i], sites_[i]);
  std::vector<ZxDiagram> capped;
  capped.reserve(terms_.size());
  for (const ZxDiagram& t : terms_) capped.push_back(cap_outputs(t, caps, prefix));
  std::complex<double> w = 0;
  for (size_t j = 0; j < capped.size(); ++j) {
    for (size_t k = j; k < capped.size(); ++k) {
      const std::complex<double> g = reduce_to_scalar(inner_product_diagram(capped[j], capped[k])).to_complex();
      const std::complex<double> c = std::conj(coeffs_[j]) * coeffs_[k] * g;
      w += (j == k) ? c : 2.0 * std::complex<double>(c.real(), 0);
    }
  }
  const double value = std::max(0.0, w.real());
  cache_.emplace(prefix, value);
  return value;
}

void BornSampler::check_split(const std::vector<int>& prefix, double w0, double w1) {
  const double w = weight(prefix);
  if (w > 0) max_norm_error_ = std::max(max_norm_error_, std::abs(w0 + w1 - w) / w);
}

double BornSampler::probability(const std::vector<int>& outcomes) {
  if (outcomes.size() != sites_.size()) throw DomainError("BornSampler: outcome count mismatch");
  std::vector<int> prefix;
  double p = 1;
  for (int bit : outcomes) {
    std::vector<int> p0 = prefix, p1 = prefix;
    p0.push_back(0);
    p1.push_back(1);
    const double w0 = weight(p0), w1 = weight(p1);
    check_split(prefix, w0, w1);
    if (w0 + w1 <= 0) return 0;
    p *= (bit ? w1 : w0) / (w0 + w1);
    prefix.push_back(bit);
  }
  return p;
}

std::vector<int> BornSampler::sample(std::mt19937_64& rng) {
  std::vector<int> prefix;
  const double total = weight({});
  if (!(total > 1e-300)) throw DomainError("inconsistent post-selection: the diagram has zero norm");
  for (size_t i = 0; i < sites_.size(); ++i) {
    std::vector<int> p0 = prefix, p1 = prefix;
    p0.push_back(0);
    p1.push_back(1);
    const double w0 = weight(p0), w1 = weight(p1);
    check_split(prefix, w0, w1);
    if (!(w0 + w1 > 1e-12 * total)) throw DomainError("inconsistent post-selection at measurement " +
                                                      std::to_string(sites_[i].spider));
    prefix.push_back(uniform01(rng) < w0 / (w0 + w1) ? 0 : 1);
  }
  return prefix;
}

SampleResult sample_measurements(const ZxDiagram& d, double p, const DecompositionStrategy& strategy,
                                 uint64_t seed, const std::vector<PauliWeb>* webs, ViolationPolicy policy) {
  SampleResult out;
  out.realization = sample_errors(d, p, seed);
  out.diagram = apply_errors(d, out.realization);
  if (webs) {
    const PostselectResult ps = postselect(*webs, out.realization);
    if (!ps.accepted) {
      out.violated_web = ps.first_violated;
      if (policy == ViolationPolicy::kAbortShot) {
        out.aborted = true;
        return out;
      }
      out.flagged = true;
    }
  }
  BornSampler sampler(out.diagram, strategy);
  auto rng = make_rng(derive_seed(seed, 2));
  out.outcomes = sampler.sample(rng);
  out.sites = sampler.sites();
  out.probability = sampler.probability(out.outcomes);
  out.normalisation_error = sampler.max_normalisation_error();
  for (size_t i = 0; i < out.sites.size(); ++i) {
    out.diagram.set_phase(out.sites[i].spider, Phase(4 * out.outcomes[i]));
  }
  return out;
}

}  // namespace zxcult
