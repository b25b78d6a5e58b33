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

#ifndef ZXCULT_SAMPLER_H_
#define ZXCULT_SAMPLER_H_

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "zxcult/decomposition.h"
#include "zxcult/diagram.h"
#include "zxcult/noise.h"
#include "zxcult/pauliweb.h"

namespace zxcult {

struct MeasurementSite {
  int spider = -1;
  int timeslice = -1;
  Color color = Color::X;  // X-coloured sites measure Z, Z-coloured measure X
};

// Chain-rule Born sampler for the measurement spiders of a state diagram.
//
// The diagram is decomposed once with every measurement leg left open; the
// weight of an outcome prefix is c^† G c, where G holds the Clifford
// overlaps of the terms with the prefix's projectors applied. Legs that
// are not yet fixed (later measurements, ordinary outputs) are traced,
// which is exact when the part after each layer is an isometry up to a
// constant -- the case for translated circuits.
class BornSampler {
 public:
  explicit BornSampler(const ZxDiagram& d, DecompositionStrategy strategy = {});

  // Sites ordered by timeslice, then spider id.
  const std::vector<MeasurementSite>& sites() const { return sites_; }
  int chi() const { return static_cast<int>(terms_.size()); }

  // Unnormalised Born weight of the first prefix.size() outcomes (memoised).
  double weight(const std::vector<int>& prefix);
  // Chain-rule probability of a full outcome vector.
  double probability(const std::vector<int>& outcomes);
  std::vector<int> sample(std::mt19937_64& rng);

  // Largest |w(x0) + w(x1) - w(x)| / w(x) seen so far.
  double max_normalisation_error() const { return max_norm_error_; }

 private:
  std::vector<MeasurementSite> sites_;
  std::vector<int> site_outputs_;  // output index of each site's open leg
  std::vector<std::complex<double>> coeffs_;
  std::vector<ZxDiagram> terms_;
  std::map<std::vector<int>, double> cache_;
  double max_norm_error_ = 0;
  void check_split(const std::vector<int>& prefix, double w0, double w1);
};

// Closed diagram <bra|ket> for two states with matching outputs.
ZxDiagram inner_product_diagram(const ZxDiagram& bra, const ZxDiagram& ket);

// What to do when a sampled error realisation violates a detecting region.
enum class ViolationPolicy { kAbortShot, kContinueAndFlag };

struct SampleResult {
  ErrorRealization realization;
  ZxDiagram diagram;  // errors applied, outcomes written back as phases
  bool aborted = false;   // violated region under kAbortShot: nothing sampled
  bool flagged = false;   // violated region under kContinueAndFlag
  int violated_web = -1;
  std::vector<MeasurementSite> sites;
  std::vector<int> outcomes;
  double probability = 0;
  double normalisation_error = 0;
};

// Samples a noise realisation at rate p, then every measurement outcome.
// With webs, outcomes are only drawn for realisations that leave every
// detecting region un-violated, unless the policy says to continue.
SampleResult sample_measurements(const ZxDiagram& d, double p, const DecompositionStrategy& strategy,
                                 uint64_t seed, const std::vector<PauliWeb>* webs = nullptr,
                                 ViolationPolicy policy = ViolationPolicy::kAbortShot);

}  // namespace zxcult

#endif  // ZXCULT_SAMPLER_H_
