#pragma once
// Shared test corpus: every normalized L-space M(-1; r1, r2, r3) with denominators <= 6,
// classified once per process, plus non-L-space controls.
#include <memory>
#include <vector>

#include "plumbtight/fullpath.hpp"

namespace plumbtight::testing {

/// Normalized triples r1 >= r2 >= r3 with denominators in [2, max_alpha], in sweep order.
std::vector<SeifertData> normalized_triples(int max_alpha);
std::vector<SeifertData> l_space_corpus(int max_alpha = 6);

/// Non-L-spaces with e0 = -1. The first one has e(M) = 0.
std::vector<SeifertData> non_l_space_controls();

struct CorpusEntry {
  std::shared_ptr<const Manifold> manifold;
  ClassificationReport report;
};

/// Classified α <= 6 corpus, computed on first use.
const std::vector<CorpusEntry>& classified_corpus();

/// M(-1; 1/2, 1/2, 1/2).
SeifertData d4();

}  // namespace plumbtight::testing
